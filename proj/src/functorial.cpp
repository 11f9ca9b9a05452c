#include "wreathlab/functorial.hpp"

#include <algorithm>

#include "wreathlab/catalog.hpp"

namespace wreathlab {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw DomainError(msg);
}

GroupAction make_action(GroupAction::Kind kind, const GroupPtr& g) {
    return kind == GroupAction::Kind::natural ? GroupAction::natural(g) : GroupAction::regular(g);
}

/// Left-fold direct product of standard cyclic groups; DP association does
/// not change the generator list, so any fold shape gives the same
/// realization.
GroupPtr abelian_model(const std::vector<std::uint64_t>& invariants, const Budget& budget) {
    if (invariants.empty()) return trivial_group(budget);
    GroupPtr acc = cyclic(invariants[0], budget);
    for (std::size_t i = 1; i < invariants.size(); ++i)
        acc = direct_product(acc, cyclic(invariants[i], budget));
    return acc;
}

}  // namespace

std::vector<int> fiber_product_table(const GMap& phi, const GroupPtr& A,
                                     const std::vector<int>& table) {
    require(A->is_abelian(), "fiber product needs an abelian entry group");
    require(table.size() == phi.map.size(), "fiber product: table size mismatch");
    std::vector<int> out(static_cast<std::size_t>(phi.target.num_points()), 0);
    for (std::size_t x = 0; x < table.size(); ++x) {
        int& slot = out[static_cast<std::size_t>(phi.map[x])];
        slot = A->index_of(compose(A->element(slot), A->element(table[x])));
    }
    return out;
}

InducedFromGmap induced_from_gmap(const GroupPtr& A, const GMap& phi, const Budget& budget) {
    require(A->is_abelian(), "induced_from_gmap: entry group must be abelian");
    WreathGroup dom(GroupAction::natural(A), phi.source, budget);
    WreathGroup cod(GroupAction::natural(A), phi.target, budget);
    std::vector<Perm> images;
    for (const Perm& g : dom.carrier()->generators()) {
        WreathElement w = dom.decode(g);
        images.push_back(cod.encode(WreathElement{fiber_product_table(phi, A, w.table), w.top}));
    }
    Homomorphism hom = certify_construction(dom.carrier(), cod.carrier(), std::move(images),
                                            "gmap-induced(" + phi.label + ")", budget);
    if (phi.surjective() && !hom.surjective())
        throw ConstructionDefect("induced map of a surjective gmap is not surjective");
    return InducedFromGmap{std::move(dom), std::move(cod), std::move(hom)};
}

CanonicalGmap canonical_gmap_to_product(const GroupPtr& B, const GroupPtr& C,
                                        const Budget& budget) {
    WreathGroup W = regular_wreath(B, C, budget);
    const std::uint64_t n = W.carrier()->order();
    std::vector<int> map(static_cast<std::size_t>(n));
    for (std::uint64_t i = 0; i < n; ++i) {
        WreathElement w = W.decode(W.carrier()->element(static_cast<int>(i)));
        map[static_cast<std::size_t>(i)] = W.point(w.table[0], w.top);
    }
    GMap gm = make_gmap(GroupAction::regular(W.carrier()), GroupAction::natural(W.carrier()),
                        std::move(map), "product-gmap(" + B->label() + "," + C->label() + ")");
    if (!gm.surjective()) throw ConstructionDefect("canonical gmap onto the product is not onto");
    return CanonicalGmap{std::move(W), std::move(gm)};
}

WreathArgumentMap map_first_argument(const Homomorphism& h, const GroupPtr& G,
                                     GroupAction::Kind domain_base, GroupAction::Kind codomain_base,
                                     const Budget& budget) {
    require(h.verified(), "map_first_argument: the base map must be verified");
    WreathGroup dom(make_action(domain_base, h.domain()), GroupAction::regular(G), budget);
    WreathGroup cod(make_action(codomain_base, h.codomain()), GroupAction::regular(G), budget);
    std::vector<Perm> images;
    for (const Perm& g : dom.carrier()->generators()) {
        WreathElement w = dom.decode(g);
        WreathElement out{std::vector<int>(w.table.size()), w.top};
        for (std::size_t x = 0; x < w.table.size(); ++x) {
            const Perm img = h.image_of(h.domain()->element(w.table[x]));
            out.table[x] = h.codomain()->index_of(img);
        }
        images.push_back(cod.encode(out));
    }
    Homomorphism hom = certify_construction(dom.carrier(), cod.carrier(), std::move(images),
                                            "first-argument(" + h.anchor() + ")", budget);
    if (h.surjective() && !hom.surjective())
        throw ConstructionDefect("first-argument lift of an epimorphism is not surjective");
    return WreathArgumentMap{std::move(dom), std::move(cod), std::move(hom)};
}

WreathArgumentMap map_second_argument(const GroupPtr& A, const Homomorphism& psi,
                                      const Budget& budget) {
    require(A->is_abelian(), "map_second_argument: entry group must be abelian");
    require(psi.verified(), "map_second_argument: the top map must be verified");
    const GroupPtr& G = psi.domain();
    const GroupPtr& H = psi.codomain();
    WreathGroup dom(GroupAction::natural(A), GroupAction::regular(G), budget);
    WreathGroup cod(GroupAction::natural(A), GroupAction::regular(H), budget);

    std::vector<int> psi_eval(G->order());
    for (std::uint64_t k = 0; k < G->order(); ++k)
        psi_eval[static_cast<std::size_t>(k)] =
            H->index_of(psi.image_of(G->element(static_cast<int>(k))));

    std::vector<Perm> images;
    for (const Perm& g : dom.carrier()->generators()) {
        WreathElement w = dom.decode(g);
        WreathElement out{std::vector<int>(H->order(), 0), psi_eval[static_cast<std::size_t>(w.top)]};
        for (std::size_t k = 0; k < w.table.size(); ++k) {
            int& slot = out.table[static_cast<std::size_t>(psi_eval[k])];
            slot = A->index_of(compose(A->element(slot), A->element(w.table[k])));
        }
        images.push_back(cod.encode(out));
    }
    Homomorphism hom = certify_construction(dom.carrier(), cod.carrier(), std::move(images),
                                            "second-argument(" + psi.anchor() + ")", budget);
    if (psi.surjective() && !hom.surjective())
        throw ConstructionDefect("second-argument lift of an epimorphism is not surjective");
    return WreathArgumentMap{std::move(dom), std::move(cod), std::move(hom)};
}

Homomorphism product_squash(const WreathGroup& W, const Budget& budget) {
    const GroupPtr& A = W.base_group();
    const GroupPtr& B = W.top_group();
    require(A->is_abelian(), "product_squash: base must be abelian");
    GroupPtr AxB = direct_product(A, B);
    std::vector<Perm> images;
    for (const Perm& g : W.carrier()->generators()) {
        WreathElement w = W.decode(g);
        Perm prod = Perm::identity(A->degree());
        for (int e : w.table) prod = compose(prod, A->element(e));
        images.push_back(direct_sum(prod, B->element(w.top)));
    }
    Homomorphism hom =
        certify_construction(W.carrier(), AxB, std::move(images), "product-squash", budget);
    if (!hom.surjective()) throw ConstructionDefect("product squash is not surjective");
    return hom;
}

Homomorphism fold_to_base(const WreathGroup& W, const Budget& budget) {
    const GroupPtr& A = W.base_group();
    require(A->is_abelian(), "fold_to_base: base must be abelian");
    std::vector<Perm> images;
    for (const Perm& g : W.carrier()->generators()) {
        WreathElement w = W.decode(g);
        Perm prod = Perm::identity(A->degree());
        for (int e : w.table) prod = compose(prod, A->element(e));
        images.push_back(prod);
    }
    Homomorphism hom = certify_construction(W.carrier(), A, std::move(images), "fold-to-base", budget);
    if (!hom.surjective()) throw ConstructionDefect("fold_to_base is not surjective");
    return hom;
}

Homomorphism top_projection(const WreathGroup& W, const Budget& budget) {
    std::vector<Perm> images;
    for (const Perm& g : W.carrier()->generators())
        images.push_back(W.top_group()->element(W.decode(g).top));
    return certify_construction(W.carrier(), W.top_group(), std::move(images), "top-projection",
                                budget);
}

Homomorphism cyclic_quotient_hom(std::uint64_t n, std::uint64_t m, const Budget& budget) {
    require(m >= 1 && n % m == 0, "cyclic_quotient_hom: target order must divide source order");
    GroupPtr Cn = cyclic(n, budget);
    GroupPtr Cm = cyclic(m, budget);
    std::vector<Perm> images{m == 1 ? Perm::identity(1) : Cm->generators()[0]};
    return certify_construction(Cn, Cm, std::move(images), "cyclic-quotient", budget);
}

Homomorphism rebase_domain(const Homomorphism& h, const GroupPtr& dom, const Budget& budget) {
    require(h.verified(), "rebase_domain: map must be verified");
    require(dom->degree() == h.domain()->degree() && dom->elements() == h.domain()->elements(),
            "rebase_domain: same element set required");
    std::vector<Perm> images;
    for (const Perm& g : dom->generators()) images.push_back(h.image_of(g));
    return certify_construction(dom, h.codomain(), std::move(images), h.anchor(), budget);
}

BracketingChain induction_step_epis(const GroupPtr& A, const GroupPtr& B, const GroupPtr& C,
                                    const Budget& budget) {
    require(A->is_abelian(), "induction_step_epis: first factor must be abelian");
    CanonicalGmap cg = canonical_gmap_to_product(B, C, budget);
    InducedFromGmap ind = induced_from_gmap(A, cg.gmap, budget);

    WreathGroup w_ab(GroupAction::natural(A), GroupAction::regular(B), budget);
    WreathGroup asc(GroupAction::natural(w_ab.carrier()), GroupAction::regular(C), budget);

    // Concrete associativity identification A wr_{BxC} (B wr C) -> (A wr B) wr C:
    // (f, (h, c)) -> (c' -> (b -> f(b, c'), h(c')), c). Certified below as an
    // isomorphism rather than assumed.
    const WreathGroup& mid = ind.codomain;
    const int nb = cg.wreath.num_base_points();
    std::vector<Perm> assoc_images;
    for (const Perm& g : mid.carrier()->generators()) {
        WreathElement w = mid.decode(g);
        WreathElement inner_w = cg.wreath.decode(cg.wreath.carrier()->element(w.top));
        WreathElement out{std::vector<int>(static_cast<std::size_t>(cg.wreath.num_top_points())),
                          inner_w.top};
        for (int cpt = 0; cpt < cg.wreath.num_top_points(); ++cpt) {
            WreathElement cell{std::vector<int>(static_cast<std::size_t>(nb)),
                               inner_w.table[static_cast<std::size_t>(cpt)]};
            for (int b = 0; b < nb; ++b)
                cell.table[static_cast<std::size_t>(b)] =
                    w.table[static_cast<std::size_t>(cg.wreath.point(b, cpt))];
            const int idx = w_ab.carrier()->index_of(w_ab.encode(cell));
            if (idx < 0) throw ConstructionDefect("associativity cell is not a wreath element");
            out.table[static_cast<std::size_t>(cpt)] = idx;
        }
        assoc_images.push_back(asc.encode(out));
    }
    Homomorphism assoc = certify_construction(mid.carrier(), asc.carrier(), std::move(assoc_images),
                                              "wreath-associativity", budget);
    if (!assoc.isomorphism())
        throw ConstructionDefect("associativity identification is not an isomorphism");

    Homomorphism first = compose_homs(ind.hom, assoc, "bracketing-shift", budget);
    if (!first.surjective()) throw ConstructionDefect("bracketing shift is not surjective");

    Homomorphism squash = product_squash(w_ab, budget);
    WreathArgumentMap second = map_first_argument(squash, C, GroupAction::Kind::natural,
                                                  GroupAction::Kind::natural, budget);
    if (!same_realization(second.domain.carrier(), asc.carrier()))
        throw ConstructionDefect("bracketing chain realizations diverged");
    Homomorphism composite = compose_homs(first, second.hom, "bracketing-chain", budget);
    if (!composite.surjective()) throw ConstructionDefect("bracketing chain is not surjective");

    return BracketingChain{std::move(cg.wreath), std::move(ind.domain),  std::move(ind.codomain),
                           std::move(asc),       std::move(w_ab),        std::move(second.codomain),
                           std::move(ind.hom),   std::move(assoc),       std::move(first),
                           std::move(squash),    std::move(second.hom),  std::move(composite)};
}

DescendingToAscending descending_to_ascending(const std::vector<std::uint64_t>& orders,
                                              const Budget& budget) {
    for (std::uint64_t n : orders) require(n >= 2, "descending_to_ascending: factors must be >= 2");
    Tower desc = build_tower(TowerSpec{orders, Bracketing::descending}, budget);
    Tower asc = build_tower(TowerSpec{orders, Bracketing::ascending}, budget);

    const int r = static_cast<int>(orders.size());
    if (r <= 2) {
        // The two bracketings coincide; the identity map is the epimorphism.
        Homomorphism hom = verify_homomorphism(desc.carrier, asc.carrier,
                                               desc.carrier->generators(),
                                               "descending-to-ascending(identity)", budget);
        if (!hom.isomorphism())
            throw ConstructionDefect("short towers should coincide across bracketings");
        return DescendingToAscending{std::move(desc), std::move(asc), std::move(hom)};
    }
    // Any descending tower of length >= 4 over nontrivial factors has order
    // at least 2^(2^11), far past any representable cap, so the projection
    // check in build_tower has already rejected it; only r == 3 reaches here.
    BracketingChain chain =
        induction_step_epis(cyclic(orders[0], budget), cyclic(orders[1], budget),
                            cyclic(orders[2], budget), budget);
    if (!same_realization(chain.domain.carrier(), desc.carrier) ||
        !same_realization(chain.ascending.carrier(), asc.carrier))
        throw ConstructionDefect("tower realizations diverged from the bracketing chain");
    Homomorphism hom = verify_homomorphism(desc.carrier, asc.carrier, chain.first.gen_images(),
                                           "descending-to-ascending", budget);
    if (!hom.verified() || !hom.surjective())
        throw ConstructionDefect("descending-to-ascending map failed verification");
    return DescendingToAscending{std::move(desc), std::move(asc), std::move(hom)};
}

AbelianizationProjection abelianization_projection(const GroupPtr& H, const GroupPtr& G,
                                                   const Budget& budget) {
    WreathGroup W = regular_wreath(H, G, budget);
    Abelianization abH = abelianization(H);
    Abelianization abG = abelianization(G);
    GroupPtr image = direct_product(abH.quotient.quotient, abG.quotient.quotient);

    std::vector<Perm> images;
    for (const Perm& g : W.carrier()->generators()) {
        WreathElement w = W.decode(g);
        Perm prod = Perm::identity(H->degree());
        for (int e : w.table) prod = compose(prod, H->element(e));
        const Perm hq = abH.quotient.quotient->element(
            abH.quotient.map(H->index_of(prod)));
        const Perm gq = abG.quotient.quotient->element(abG.quotient.map(w.top));
        images.push_back(direct_sum(hq, gq));
    }
    Homomorphism hom = certify_construction(W.carrier(), image, std::move(images),
                                            "abelianization-projection", budget);
    if (!hom.surjective()) throw ConstructionDefect("abelianization projection is not surjective");

    const std::uint64_t expected_kernel =
        W.carrier()->order() / (abH.quotient.quotient->order() * abG.quotient.quotient->order());
    if (hom.kernel_order() != expected_kernel)
        throw ConstructionDefect("abelianization projection kernel has wrong order");
    if (hom.kernel() != commutator_subgroup(*W.carrier()))
        throw ConstructionDefect(
            "abelianization projection kernel differs from the commutator subgroup");

    std::vector<std::uint64_t> inv = abelian_invariants(*image);
    return AbelianizationProjection{std::move(W), std::move(image), std::move(hom), std::move(inv)};
}

GroupPtr descending_group_tower(const std::vector<GroupPtr>& factors, const Budget& budget) {
    std::vector<GroupPtr> fs;
    for (const GroupPtr& f : factors)
        if (f->order() > 1) fs.push_back(f);
    if (fs.empty()) return trivial_group(budget);
    GroupPtr acc = fs.back();
    for (std::size_t i = fs.size() - 1; i-- > 0;)
        acc = WreathGroup(GroupAction::regular(fs[i]), GroupAction::regular(acc), budget).carrier();
    return acc;
}

namespace {

/// build_tower(ds).carrier -> abelian_model(ds): squash a cyclic tower onto
/// the direct product of its layers.
Homomorphism flatten_cyclic_tower(const std::vector<std::uint64_t>& ds, const Budget& budget) {
    Tower t = build_tower(TowerSpec{ds, Bracketing::descending}, budget);
    if (ds.size() == 1) return identity_hom(t.carrier, "cyclic-refinement(identity)");
    std::vector<std::uint64_t> rest(ds.begin() + 1, ds.end());
    Homomorphism inner = flatten_cyclic_tower(rest, budget);
    WreathArgumentMap lifted = map_second_argument(cyclic(ds[0], budget), inner, budget);
    Homomorphism squash = product_squash(lifted.codomain, budget);
    // DP association keeps generator lists identical, so squash's codomain
    // DP(C, model(rest)) is the model of ds as-is.
    Homomorphism out = compose_homs(lifted.hom, squash, "tower-flatten", budget);
    if (!same_realization(out.domain(), t.carrier))
        throw ConstructionDefect("flatten: domain realization diverged");
    return out;
}

struct RefineResult {
    std::vector<std::uint64_t> refined;  // concatenated invariant factors
    Homomorphism hom;                    // build_tower(refined) -> descending_group_tower(factors)
};

RefineResult refine_factors(const std::vector<GroupPtr>& factors, const Budget& budget) {
    std::vector<GroupPtr> fs;
    for (const GroupPtr& f : factors)
        if (f->order() > 1) fs.push_back(f);

    if (fs.empty()) {
        GroupPtr e = trivial_group(budget);
        return RefineResult{{}, identity_hom(e, "cyclic-refinement(trivial)")};
    }

    const GroupPtr& A1 = fs[0];
    require(A1->is_abelian(), "cyclic_refinement: all factors must be abelian");
    std::vector<std::uint64_t> inv = abelian_invariants(*A1);
    std::vector<GroupPtr> rest(fs.begin() + 1, fs.end());

    if (rest.empty()) {
        // Single block: flatten the cyclic tower onto the model, then carry
        // the model onto the given group by an isomorphism witness.
        Homomorphism flat = flatten_cyclic_tower(inv, budget);
        GroupPtr model = abelian_model(inv, budget);
        if (same_realization(model, A1)) return RefineResult{inv, std::move(flat)};
        std::optional<Homomorphism> iso = is_isomorphic(model, A1, budget);
        if (!iso) throw ConstructionDefect("abelian model is not isomorphic to its group");
        Homomorphism onto = rebase_domain(*iso, model, budget);
        return RefineResult{inv, compose_homs(flat, onto, "cyclic-refinement", budget)};
    }

    GroupPtr G2 = descending_group_tower(rest, budget);

    if (inv.size() == 1) {
        RefineResult tail = refine_factors(rest, budget);
        GroupPtr model = cyclic(inv[0], budget);
        WreathArgumentMap lifted = map_second_argument(model, tail.hom, budget);
        Homomorphism hom = lifted.hom;
        if (!same_realization(model, A1)) {
            std::optional<Homomorphism> iso = is_isomorphic(model, A1, budget);
            if (!iso) throw ConstructionDefect("cyclic model is not isomorphic to its factor");
            WreathArgumentMap carried =
                map_first_argument(rebase_domain(*iso, model, budget), G2,
                                   GroupAction::Kind::natural, GroupAction::Kind::regular, budget);
            hom = compose_homs(hom, carried.hom, "cyclic-refinement", budget);
        }
        std::vector<std::uint64_t> refined{inv[0]};
        refined.insert(refined.end(), tail.refined.begin(), tail.refined.end());
        return RefineResult{std::move(refined), std::move(hom)};
    }

    // A1 = C x A1' with C its smallest invariant factor: push the refined
    // tail through the second argument, shift brackets, and recombine.
    GroupPtr Cmodel = cyclic(inv[0], budget);
    std::vector<std::uint64_t> inv_rest(inv.begin() + 1, inv.end());
    GroupPtr Mrest = abelian_model(inv_rest, budget);

    std::vector<GroupPtr> inner_factors{Mrest};
    inner_factors.insert(inner_factors.end(), rest.begin(), rest.end());
    RefineResult inner = refine_factors(inner_factors, budget);

    WreathArgumentMap lifted = map_second_argument(Cmodel, inner.hom, budget);
    BracketingChain chain = induction_step_epis(Cmodel, Mrest, G2, budget);
    if (!same_realization(lifted.codomain.carrier(), chain.domain.carrier()))
        throw ConstructionDefect("refinement: bracketing-chain domain diverged");
    Homomorphism hom = compose_homs(lifted.hom, chain.composite, "cyclic-refinement", budget);

    GroupPtr DP = direct_product(Cmodel, Mrest);
    std::optional<Homomorphism> iso = is_isomorphic(DP, A1, budget);
    if (!iso) throw ConstructionDefect("invariant-factor model is not isomorphic to its group");
    WreathArgumentMap carried =
        map_first_argument(rebase_domain(*iso, DP, budget), G2, GroupAction::Kind::natural,
                           GroupAction::Kind::regular, budget);
    hom = compose_homs(hom, carried.hom, "cyclic-refinement", budget);

    std::vector<std::uint64_t> refined{inv[0]};
    refined.insert(refined.end(), inner.refined.begin(), inner.refined.end());
    return RefineResult{std::move(refined), std::move(hom)};
}

}  // namespace

CyclicRefinement cyclic_refinement(const std::vector<GroupPtr>& abelian_factors,
                                   const Budget& budget) {
    for (const GroupPtr& f : abelian_factors)
        require(f->is_abelian(), "cyclic_refinement: factor '" + f->label() + "' is not abelian");
    RefineResult r = refine_factors(abelian_factors, budget);
    if (!r.hom.verified() || !r.hom.surjective())
        throw ConstructionDefect("cyclic refinement failed to produce an epimorphism");
    TowerSpec spec{r.refined, Bracketing::descending};
    return CyclicRefinement{spec, r.hom.domain(), r.hom.codomain(), std::move(r.hom)};
}

SemidirectQuotient semidirect_quotient(const GroupPtr& G, const std::vector<Perm>& A_in,
                                       const std::vector<Perm>& H_in, const Budget& budget) {
    std::vector<Perm> A = A_in, H = H_in;
    std::sort(A.begin(), A.end());
    std::sort(H.begin(), H.end());
    for (const Perm& a : A) require(G->contains(a), "semidirect_quotient: A outside the group");
    for (const Perm& h : H) require(G->contains(h), "semidirect_quotient: H outside the group");

    GroupPtr A_grp = FiniteGroup::from_elements(
        G->degree(), small_generating_set(G->degree(), A), A, G->label() + ".kernel");
    GroupPtr H_grp = FiniteGroup::from_elements(
        G->degree(), small_generating_set(G->degree(), H), H, G->label() + ".complement");
    require(A_grp->is_abelian(), "semidirect_quotient: A must be abelian");
    for (const Perm& a : A)
        for (const Perm& g : G->generators())
            require(std::binary_search(A.begin(), A.end(), a.conjugated_by(g)),
                    "semidirect_quotient: A must be normal in G");
    std::uint64_t meet = 0;
    for (const Perm& a : A)
        if (std::binary_search(H.begin(), H.end(), a)) ++meet;
    require(A.size() * H.size() == G->order() * meet,
            "semidirect_quotient: the set product A·H must be all of G");

    WreathGroup dom(GroupAction::natural(A_grp), GroupAction::regular(H_grp), budget);
    std::vector<Perm> images;
    for (const Perm& g : dom.carrier()->generators()) {
        WreathElement w = dom.decode(g);
        // prod_k k^{-1} f(k) k, then times the top element; factors commute
        // inside the abelian normal subgroup, so the order over k is free.
        Perm acc = Perm::identity(G->degree());
        for (std::size_t k = 0; k < w.table.size(); ++k) {
            const Perm& conj = H_grp->element(static_cast<int>(k));
            acc = compose(acc, A_grp->element(w.table[k]).conjugated_by(conj));
        }
        images.push_back(compose(acc, H_grp->element(w.top)));
    }
    Homomorphism hom =
        certify_construction(dom.carrier(), G, std::move(images), "semidirect-quotient", budget);
    if (!hom.surjective())
        throw ConstructionDefect("semidirect quotient map is not surjective despite A·H = G");
    return SemidirectQuotient{std::move(dom), std::move(hom)};
}

}  // namespace wreathlab

