#include "wreathlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "wreathlab/catalog.hpp"
#include "wreathlab/expr.hpp"
#include "wreathlab/invariants.hpp"

namespace wreathlab {

namespace {

struct Failure {
    std::string what;
};

void expect(bool cond, const std::string& what) {
    if (!cond) throw Failure{what};
}

/// Runs one named check, translating cap/budget trouble into a skip.
template <typename Fn>
void run_check(std::vector<CheckResult>& out, const std::string& name, Fn&& fn) {
    CheckResult r;
    r.name = name;
    try {
        r.detail = fn();
        r.status = CheckStatus::pass;
    } catch (const Failure& f) {
        r.status = CheckStatus::fail;
        r.detail = f.what;
    } catch (const CapExceeded& e) {
        r.status = CheckStatus::skip;
        r.detail = std::string("cap: ") + e.what();
    } catch (const BudgetExhausted& e) {
        r.status = CheckStatus::skip;
        r.detail = std::string("budget: ") + e.what();
    } catch (const Cancelled&) {
        throw;  // a fired deadline aborts the whole suite (exit code 3)
    } catch (const std::exception& e) {
        r.status = CheckStatus::fail;
        r.detail = std::string("unexpected error: ") + e.what();
    }
    out.push_back(std::move(r));
}

std::string cases(std::uint64_t n) { return std::to_string(n) + " cases"; }

// Word-propagation oracle for the graph criterion (independent route: build
// the full image table from generator words, then check every product).
bool naive_extension_oracle(const GroupPtr& G, const GroupPtr& H, const std::vector<Perm>& images) {
    const auto& els = G->elements();
    std::vector<std::optional<Perm>> image(els.size());
    image[0] = Perm::identity(H->degree());
    std::vector<int> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        for (std::size_t gi = 0; gi < G->generators().size(); ++gi) {
            const int nxt = G->index_of(
                compose(els[static_cast<std::size_t>(queue[qi])], G->generators()[gi]));
            Perm cand = compose(*image[static_cast<std::size_t>(queue[qi])], images[gi]);
            if (!image[static_cast<std::size_t>(nxt)].has_value()) {
                image[static_cast<std::size_t>(nxt)] = cand;
                queue.push_back(nxt);
            } else if (!(*image[static_cast<std::size_t>(nxt)] == cand)) {
                return false;
            }
        }
    }
    for (std::size_t i = 0; i < els.size(); ++i)
        for (std::size_t j = 0; j < els.size(); ++j)
            if (!(*image[static_cast<std::size_t>(G->index_of(compose(els[i], els[j])))] ==
                  compose(*image[i], *image[j])))
                return false;
    return true;
}

std::vector<int> twist_table(const GroupAction& act, const std::vector<int>& f, const Perm& g) {
    const Perm ginv = g.inverse();
    std::vector<int> out(f.size());
    for (std::size_t x = 0; x < f.size(); ++x)
        out[x] = f[static_cast<std::size_t>(act.act(static_cast<int>(x), ginv))];
    return out;
}

std::vector<int> pointwise_product(const GroupPtr& A, const std::vector<int>& f,
                                   const std::vector<int>& g) {
    std::vector<int> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        out[i] = A->index_of(compose(A->element(f[i]), A->element(g[i])));
    return out;
}

struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

std::vector<int> random_table(SplitMix& rng, int len, std::uint64_t a_order) {
    std::vector<int> t(static_cast<std::size_t>(len));
    for (int x = 0; x < len; ++x)
        t[static_cast<std::size_t>(x)] = static_cast<int>(rng.below(a_order));
    return t;
}

std::vector<TowerSpec> qualifying_specs(const std::vector<std::uint64_t>& factors, int max_len,
                                        Bracketing b, double log2_cap) {
    std::vector<TowerSpec> out;
    for (int r = 1; r <= max_len; ++r) {
        std::vector<std::size_t> pick(static_cast<std::size_t>(r), 0);
        for (;;) {
            TowerSpec spec;
            spec.bracketing = b;
            for (std::size_t i : pick) spec.orders.push_back(factors[i]);
            if (projected_log2_order(spec) <= log2_cap + 1e-9) out.push_back(spec);
            int i = r - 1;
            while (i >= 0 && ++pick[static_cast<std::size_t>(i)] == factors.size()) {
                pick[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
        }
    }
    return out;
}

}  // namespace

// --- functorial suite ---------------------------------------------------------------

std::vector<CheckResult> verify_functorial(const Budget& budget) {
    std::vector<CheckResult> out;

    run_check(out, "gmap-induced-instances", [&] {
        GroupPtr C3 = cyclic(3, budget);
        GroupAction nat = GroupAction::natural(C3);
        GMap idmap = make_gmap(nat, nat, {0, 1, 2}, "identity");
        expect(induced_from_gmap(cyclic(2, budget), idmap, budget).hom.isomorphism(),
               "identity gmap must induce the identity");

        CanonicalGmap cg = canonical_gmap_to_product(cyclic(2, budget), cyclic(2, budget), budget);
        InducedFromGmap ind = induced_from_gmap(cyclic(2, budget), cg.gmap, budget);
        expect(ind.domain.carrier()->order() == 2048, "domain order 2048");
        expect(ind.codomain.carrier()->order() == 128, "codomain order 128");
        expect(ind.hom.surjective() && ind.hom.kernel_order() == 16, "kernel 2^4");
        return std::string("3 instances");
    });

    run_check(out, "gmap-induced-internals-exhaustive", [&] {
        // entry group C2 over the canonical gmap of (C2, C2): wreath order
        // 2048 <= 4096, so every table pair and every (table, mover) pair.
        CanonicalGmap cg = canonical_gmap_to_product(cyclic(2, budget), cyclic(2, budget), budget);
        GroupPtr A = cyclic(2, budget);
        const int nx = cg.gmap.source.num_points();
        std::vector<std::vector<int>> tables;
        for (int mask = 0; mask < (1 << nx); ++mask) {
            std::vector<int> f(static_cast<std::size_t>(nx));
            for (int x = 0; x < nx; ++x) f[static_cast<std::size_t>(x)] = (mask >> x) & 1;
            tables.push_back(std::move(f));
        }
        std::uint64_t checked = 0;
        for (const auto& f1 : tables)
            for (const auto& f2 : tables) {
                budget.token.poll();
                auto lhs = fiber_product_table(cg.gmap, A, pointwise_product(A, f1, f2));
                auto rhs = pointwise_product(A, fiber_product_table(cg.gmap, A, f1),
                                             fiber_product_table(cg.gmap, A, f2));
                expect(lhs == rhs, "fiber product is not multiplicative");
                ++checked;
            }
        for (const auto& f : tables)
            for (const Perm& g : cg.wreath.carrier()->elements()) {
                auto lhs = fiber_product_table(cg.gmap, A, twist_table(cg.gmap.source, f, g));
                auto rhs = twist_table(cg.gmap.target, fiber_product_table(cg.gmap, A, f), g);
                expect(lhs == rhs, "fiber product is not equivariant");
                ++checked;
            }
        return cases(checked);
    });

    run_check(out, "gmap-induced-internals-sampled", [&] {
        // entry group C3 over the same gmap: wreath order 52488 > 4096, so
        // >= 1000 seeded samples for each identity.
        CanonicalGmap cg = canonical_gmap_to_product(cyclic(2, budget), cyclic(2, budget), budget);
        GroupPtr A = cyclic(3, budget);
        const int nx = cg.gmap.source.num_points();
        SplitMix rng{budget.seed};
        std::uint64_t checked = 0;
        for (int t = 0; t < 1000; ++t) {
            auto f1 = random_table(rng, nx, A->order());
            auto f2 = random_table(rng, nx, A->order());
            auto lhs = fiber_product_table(cg.gmap, A, pointwise_product(A, f1, f2));
            auto rhs = pointwise_product(A, fiber_product_table(cg.gmap, A, f1),
                                         fiber_product_table(cg.gmap, A, f2));
            expect(lhs == rhs, "sampled multiplicativity failed");
            const Perm& g = cg.wreath.carrier()->element(
                static_cast<int>(rng.below(cg.wreath.carrier()->order())));
            auto l2 = fiber_product_table(cg.gmap, A, twist_table(cg.gmap.source, f1, g));
            auto r2 = twist_table(cg.gmap.target, fiber_product_table(cg.gmap, A, f1), g);
            expect(l2 == r2, "sampled equivariance failed");
            checked += 2;
        }
        return cases(checked);
    });

    run_check(out, "product-gmap", [&] {
        std::uint64_t checked = 0;
        for (auto [b, c] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 2}, {2, 3}, {3, 2}}) {
            CanonicalGmap cg = canonical_gmap_to_product(cyclic(b, budget), cyclic(c, budget), budget);
            expect(cg.gmap.surjective(), "canonical gmap must be onto");
            const std::uint64_t fiber = cg.wreath.carrier()->order() / (b * c);
            for (const auto& f : cg.gmap.fibers())
                expect(f.size() == fiber, "fibers must have equal size");
            ++checked;
        }
        return cases(checked);
    });

    run_check(out, "first-argument", [&] {
        GroupPtr C4 = cyclic(4, budget), C2 = cyclic(2, budget);
        Homomorphism q = verify_homomorphism(C4, C2, {C2->generators()[0]}, "quotient", budget);
        WreathArgumentMap m = map_first_argument(q, C2, GroupAction::Kind::natural,
                                                 GroupAction::Kind::natural, budget);
        expect(m.domain.carrier()->order() == 32 && m.codomain.carrier()->order() == 8,
               "orders 32 -> 8");
        expect(m.hom.surjective() && m.hom.kernel_order() == 4, "kernel 4");
        expect(map_first_argument(identity_hom(C2), C2, GroupAction::Kind::natural,
                                  GroupAction::Kind::natural, budget)
                   .hom.isomorphism(),
               "identity lift");
        Homomorphism triv = verify_homomorphism(C4, C2, {Perm::identity(2)}, "trivial", budget);
        expect(map_first_argument(triv, C2, GroupAction::Kind::natural, GroupAction::Kind::natural,
                                  budget)
                   .hom.image_order() == 2,
               "trivial base map leaves the top group");
        return std::string("3 instances");
    });

    run_check(out, "second-argument", [&] {
        GroupPtr C4 = cyclic(4, budget), C2 = cyclic(2, budget);
        Homomorphism psi = verify_homomorphism(C4, C2, {C2->generators()[0]}, "quotient", budget);
        WreathArgumentMap m = map_second_argument(C2, psi, budget);
        expect(m.domain.carrier()->order() == 64 && m.codomain.carrier()->order() == 8,
               "orders 64 -> 8");
        expect(m.hom.surjective() && m.hom.kernel_order() == 8, "kernel 8");
        expect(map_second_argument(C2, identity_hom(C4), budget).hom.isomorphism(),
               "identity lift");
        Perm sq = compose(C4->generators()[0], C4->generators()[0]);
        Homomorphism inj = verify_homomorphism(C2, C4, {sq}, "inclusion", budget);
        WreathArgumentMap mi = map_second_argument(C2, inj, budget);
        expect(mi.hom.verified() && !mi.hom.surjective(),
               "non-surjective top maps lift to non-surjective maps");
        return std::string("3 instances");
    });

    run_check(out, "bracketing-chain", [&] {
        BracketingChain chain =
            induction_step_epis(cyclic(2, budget), cyclic(2, budget), cyclic(2, budget), budget);
        expect(chain.domain.carrier()->order() == 2048, "domain 2048");
        expect(chain.ascending.carrier()->order() == 128, "middle 128");
        expect(chain.product_side.carrier()->order() == 32, "target 32");
        expect(chain.assoc.isomorphism(), "associativity identification is an isomorphism");
        expect(chain.first.surjective() && chain.second.surjective(), "both maps onto");
        for (const GroupPtr& g :
             {chain.domain.carrier(), chain.ascending.carrier(), chain.product_side.carrier()})
            expect(dg_p(g, 2) == 3, "dg_2 = 3 preserved along the chain");
        BracketingChain degenerate =
            induction_step_epis(cyclic(2, budget), cyclic(2, budget), trivial_group(budget), budget);
        expect(degenerate.composite.surjective() &&
                   degenerate.product_side.carrier()->order() == 4,
               "trivial third factor reduces to the product squash");
        return std::string("2 chains");
    });

    run_check(out, "descending-to-ascending", [&] {
        expect(descending_to_ascending({5}, budget).hom.isomorphism(), "length 1 is the identity");
        expect(descending_to_ascending({3, 2}, budget).hom.isomorphism(),
               "length 2 is the identity");
        DescendingToAscending d = descending_to_ascending({2, 2, 2}, budget);
        expect(d.descending.carrier->order() == 2048 && d.ascending.carrier->order() == 128,
               "orders 2048 -> 128");
        expect(d.hom.surjective(), "the bracketing change is onto");
        expect(dg_p(d.descending.carrier, 2) == 3 && dg_p(d.ascending.carrier, 2) == 3,
               "dg_2 = 3 on both sides");
        return std::string("3 instances");
    });

    run_check(out, "abelianization-projection", [&] {
        struct Case {
            const char* h;
            const char* g;
            std::vector<std::uint64_t> expected;
            std::uint64_t kernel;
        };
        for (const Case& c : {Case{"C2", "C2", {2, 2}, 2}, Case{"C4", "C2", {2, 4}, 4},
                              Case{"C3", "C2", {6}, 3}, Case{"S3", "C2", {2, 2}, 18}}) {
            AbelianizationProjection p = abelianization_projection(
                parse_group_expression(c.h, budget), parse_group_expression(c.g, budget), budget);
            expect(p.image_invariants == c.expected, std::string(c.h) + " wr " + c.g +
                                                         ": image invariants mismatch");
            expect(p.hom.kernel_order() == c.kernel,
                   std::string(c.h) + " wr " + c.g + ": kernel order mismatch");
            // kernel-equals-commutator is re-checked inside the construction
        }
        return std::string("4 pairs");
    });

    run_check(out, "cyclic-refinement", [&] {
        GroupPtr v4 = parse_group_expression("C2*C2", budget);
        CyclicRefinement r1 = cyclic_refinement({v4}, budget);
        expect(r1.refined.orders == std::vector<std::uint64_t>{2, 2} && r1.hom.surjective(),
               "Klein block refines through the length-2 tower");
        CyclicRefinement r2 = cyclic_refinement({v4, cyclic(2, budget)}, budget);
        expect(r2.hom.surjective(), "refinement over a tail");
        std::uint64_t checked = 0;
        for (const CyclicRefinement* r : {&r1, &r2})
            for (std::uint64_t p : prime_factors(r->tower_domain->order())) {
                expect(dg_p(r->tower_domain, p) == dg_p(r->tower_codomain, p),
                       "refinement must preserve dg_p");
                ++checked;
            }
        return cases(checked);
    });

    run_check(out, "semidirect-quotient", [&] {
        GroupPtr S3 = symmetric3(budget);
        auto A = normal_closure(*S3, {Perm::cycle(3, std::vector<int>{0, 1, 2})});
        std::vector<Perm> H{Perm::identity(3), Perm::cycle(3, std::vector<int>{0, 1})};
        SemidirectQuotient sq = semidirect_quotient(S3, A, H, budget);
        expect(sq.domain.carrier()->order() == 18 && sq.hom.kernel_order() == 3, "C3 wr C2 -> S3");

        GroupPtr D4 = dihedral(4, budget);
        auto rot = normal_closure(*D4, {D4->generators()[0]});
        SemidirectQuotient sq2 =
            semidirect_quotient(D4, rot, {Perm::identity(4), D4->generators()[1]}, budget);
        expect(sq2.domain.carrier()->order() == 32 && sq2.hom.kernel_order() == 4, "C4 wr C2 -> D4");
        return std::string("2 instances");
    });

    run_check(out, "graph-criterion-fuzz", [&] {
        SplitMix rng{budget.seed};
        std::vector<GroupPtr> groups{cyclic(4, budget),  cyclic(6, budget),   symmetric3(budget),
                                     dihedral(4, budget), quaternion8(budget), alternating4(budget)};
        std::uint64_t agreements = 0, homs_seen = 0;
        for (int t = 0; t < 150; ++t) {
            const GroupPtr& G = groups[t % groups.size()];
            const GroupPtr& H = groups[static_cast<std::size_t>(rng.below(groups.size()))];
            std::vector<Perm> images;
            for (std::size_t i = 0; i < G->generators().size(); ++i)
                images.push_back(H->element(static_cast<int>(rng.below(H->order()))));
            bool graph = verify_homomorphism(G, H, images, "fuzz", budget).verified();
            bool oracle = naive_extension_oracle(G, H, images);
            expect(graph == oracle, "graph criterion disagrees with the word-propagation oracle");
            ++agreements;
            if (graph) ++homs_seen;
        }
        expect(homs_seen > 0, "fuzz corpus produced no homomorphisms at all");
        return cases(agreements);
    });

    return out;
}

// --- towers suite ----------------------------------------------------------------------

std::vector<CheckResult> verify_towers(const Budget& budget) {
    std::vector<CheckResult> out;

    run_check(out, "wreath-order-formula", [&] {
        expect(regular_wreath(cyclic(2, budget), cyclic(2, budget), budget).carrier()->order() == 8,
               "2^2*2");
        expect(regular_wreath(cyclic(2, budget), cyclic(3, budget), budget).carrier()->order() == 24,
               "2^3*3");
        expect(regular_wreath(cyclic(3, budget), cyclic(2, budget), budget).carrier()->order() == 18,
               "3^2*2");
        expect(regular_wreath(symmetric3(budget), trivial_group(budget), budget)
                       .carrier()
                       ->order() == 6,
               "H wr E = H");
        expect(tower_order(TowerSpec{{2, 2, 2}, Bracketing::descending}) == 2048, "desc formula");
        expect(tower_order(TowerSpec{{2, 2, 2}, Bracketing::ascending}) == 128, "asc formula");
        return std::string("6 instances");
    });

    run_check(out, "right-action-laws", [&] {
        std::uint64_t checked = 0;
        for (const GroupPtr& G : {symmetric3(budget), quaternion8(budget), cyclic(6, budget)})
            for (auto kind : {GroupAction::Kind::natural, GroupAction::Kind::regular}) {
                GroupAction a(G, kind);
                const Perm id = Perm::identity(G->degree());
                for (int x = 0; x < a.num_points(); ++x) {
                    expect(a.act(x, id) == x, "x*1 = x fails");
                    for (const Perm& g : G->generators())
                        for (const Perm& h : G->generators()) {
                            expect(a.act(x, compose(g, h)) == a.act(a.act(x, g), h),
                                   "x*(gh) = (x*g)*h fails");
                            ++checked;
                        }
                }
            }
        return cases(checked);
    });

    run_check(out, "encode-is-a-homomorphism", [&] {
        WreathGroup W = regular_wreath(cyclic(3, budget), cyclic(2, budget), budget);
        SplitMix rng{budget.seed};
        std::uint64_t checked = 0;
        for (int t = 0; t < 500; ++t) {
            WreathElement a = W.identity_element(), b = W.identity_element();
            for (int& e : a.table) e = static_cast<int>(rng.below(3));
            for (int& e : b.table) e = static_cast<int>(rng.below(3));
            a.top = static_cast<int>(rng.below(2));
            b.top = static_cast<int>(rng.below(2));
            expect(W.encode(W.multiply(a, b)) == compose(W.encode(a), W.encode(b)),
                   "encode breaks multiplication");
            expect(W.decode(W.encode(a)) == a, "decode round-trip");
            ++checked;
        }
        return cases(checked);
    });

    run_check(out, "tower-generators", [&] {
        std::uint64_t checked = 0;
        for (TowerSpec spec : {TowerSpec{{2, 2}, Bracketing::descending},
                               TowerSpec{{3, 2}, Bracketing::descending},
                               TowerSpec{{2, 2, 2}, Bracketing::ascending},
                               TowerSpec{{4, 2}, Bracketing::descending}}) {
            Tower t = build_tower(spec, budget);
            expect(closure(t.carrier->degree(), t.generators).size() == t.carrier->order(),
                   "layer generators must generate the carrier");
            for (std::size_t i = 0; i < spec.orders.size(); ++i)
                expect(t.generators[i].order() == spec.orders[i], "layer generator order");
            ++checked;
        }
        return cases(checked);
    });

    run_check(out, "tower-dg-additivity", [&] {
        // dg_p is additive over one wreath step, and over whole towers it
        // counts the layers with p-divisible order.
        std::uint64_t checked = 0;
        for (auto [h, g] : std::vector<std::pair<const char*, const char*>>{{"C2", "C2"},
                                                                            {"C4", "C2"},
                                                                            {"C2", "C4"},
                                                                            {"C3", "C2"},
                                                                            {"C6", "C2"},
                                                                            {"S3", "C2"},
                                                                            {"D4", "C2"},
                                                                            {"C2", "C3"}}) {
            GroupPtr H = parse_group_expression(h, budget);
            GroupPtr G = parse_group_expression(g, budget);
            GroupPtr W = regular_wreath(H, G, budget).carrier();
            for (std::uint64_t p : prime_factors(W->order())) {
                expect(dg_p(W, p) == dg_p(H, p) + dg_p(G, p), std::string(h) + " wr " + g +
                                                                  ": dg_p additivity fails");
                ++checked;
            }
        }
        for (TowerSpec spec : {TowerSpec{{2, 2, 2}, Bracketing::descending},
                               TowerSpec{{2, 2, 2}, Bracketing::ascending},
                               TowerSpec{{6, 2}, Bracketing::descending},
                               TowerSpec{{4, 2}, Bracketing::descending}}) {
            GroupPtr T = build_tower(spec, budget).carrier;
            for (std::uint64_t p : prime_factors(T->order())) {
                int expected = 0;
                for (std::uint64_t n : spec.orders)
                    if (n % p == 0) ++expected;
                expect(dg_p(T, p) == expected, "tower dg_p must count p-divisible layers");
                ++checked;
            }
        }
        return cases(checked);
    });

    run_check(out, "tower-derived-length", [&] {
        // dl(tower) = number of layers, for every {2,3,4}-spec and bracketing
        // whose order fits the cap.
        const double log2_cap = std::log2(static_cast<double>(budget.element_cap));
        std::uint64_t checked = 0;
        for (Bracketing b : {Bracketing::descending, Bracketing::ascending})
            for (const TowerSpec& spec : qualifying_specs({2, 3, 4}, 5, b, log2_cap)) {
                Tower t = build_tower(spec, budget);
                expect(derived_length(*t.carrier) == spec.length(),
                       "dl(" + spec.to_string() + ") != " + std::to_string(spec.length()));
                ++checked;
            }
        expect(checked >= 12, "the qualifying spec list is unexpectedly small");
        return cases(checked);
    });

    run_check(out, "quotient-canonical-map", [&] {
        // exhaustive multiplicativity for orders <= 4096, sampled above
        std::uint64_t checked = 0;
        auto check_quotient = [&](const GroupPtr& G, const std::vector<Perm>& N, bool exhaustive) {
            CosetQuotient q = quotient_group(G, N);
            const auto& els = G->elements();
            if (exhaustive) {
                for (std::size_t i = 0; i < els.size(); ++i)
                    for (std::size_t j = 0; j < els.size(); ++j) {
                        int lhs = q.canonical[static_cast<std::size_t>(
                            G->index_of(compose(els[i], els[j])))];
                        Perm rhs = compose(q.quotient->element(q.canonical[i]),
                                           q.quotient->element(q.canonical[j]));
                        expect(lhs == q.quotient->index_of(rhs), "canonical map not multiplicative");
                        ++checked;
                    }
            } else {
                SplitMix rng{budget.seed};
                for (int t = 0; t < 4096; ++t) {
                    std::size_t i = rng.below(els.size()), j = rng.below(els.size());
                    int lhs =
                        q.canonical[static_cast<std::size_t>(G->index_of(compose(els[i], els[j])))];
                    Perm rhs = compose(q.quotient->element(q.canonical[i]),
                                       q.quotient->element(q.canonical[j]));
                    expect(lhs == q.quotient->index_of(rhs), "canonical map not multiplicative");
                    ++checked;
                }
            }
        };
        GroupPtr S3 = symmetric3(budget);
        check_quotient(S3, normal_closure(*S3, {Perm::cycle(3, std::vector<int>{0, 1, 2})}), true);
        GroupPtr T = build_tower(TowerSpec{{2, 2, 2}, Bracketing::descending}, budget).carrier;
        check_quotient(T, commutator_subgroup(*T), true);  // order 2048 <= 4096
        GroupPtr big = build_tower(TowerSpec{{2, 2, 2, 2}, Bracketing::ascending}, budget).carrier;
        check_quotient(big, commutator_subgroup(*big), false);  // order 32768, sampled
        return cases(checked);
    });

    return out;
}

// --- invariants suite ----------------------------------------------------------------------

std::vector<CheckResult> verify_invariants(const Budget& budget) {
    std::vector<CheckResult> out;

    run_check(out, "dg-equals-normal-generation", [&] {
        std::uint64_t checked = 0;
        for (const GroupPtr& G : catalog_groups(budget.brute_cap, budget)) {
            if (G->order() > budget.brute_cap) continue;
            expect(dg(G) == dg_brute(G, budget), "dg mismatch for " + G->label());
            ++checked;
        }
        expect(checked >= 25, "catalog has fewer than 25 groups inside the brute cap");
        return cases(checked);
    });

    run_check(out, "semiabelian-chains", [&] {
        SemiabelianClassifier cls(budget);
        std::uint64_t checked = 0;
        std::vector<std::string> exprs{"S3", "D4", "D5",           "D6",
                                       "Q8", "A4", "wr(C2,C2;desc)", "wr(C3,C2;desc)"};
        for (const GroupPtr& G : catalog_groups(24, budget))
            if (G->is_abelian()) exprs.push_back(G->label());
        for (const std::string& e : exprs) {
            GroupPtr G = parse_group_expression(e, budget);
            SemiabelianCertificate c = cls.classify(G);
            expect(c.verdict, e + " must be semiabelian");
            std::string err = validate_semiabelian_chain(G, c);
            expect(err.empty(), e + ": invalid chain: " + err);
            ++checked;
        }
        return cases(checked);
    });

    run_check(out, "wreath-length-facts", [&] {
        SemiabelianClassifier cls(budget);
        WlCertificate s3 = wl_bounds(symmetric3(budget), cls, budget);
        expect(s3.exact == 2 && s3.dg_value == 1, "wl(S3) = 2 with dg 1");
        WlCertificate d4 = wl_bounds(dihedral(4, budget), cls, budget);
        expect(d4.exact == 2 && d4.dg_value == 2, "wl(D4) = dg(D4) = 2");
        WlCertificate q8 = wl_bounds(quaternion8(budget), cls, budget);
        expect(q8.exact == 2 && q8.method == "nilpotent-combination", "wl(Q8) = 2 via Sylow towers");
        std::uint64_t checked = 3;
        for (std::uint64_t n = 2; n <= 12; ++n) {
            expect(wl_bounds(cyclic(n, budget), cls, budget).exact == 1,
                   "wl(C" + std::to_string(n) + ") = 1");
            ++checked;
        }
        return cases(checked);
    });

    run_check(out, "wl-eq-dg-characterization", [&] {
        SemiabelianClassifier cls(budget);
        std::uint64_t eq_side = 0, neq_side = 0;
        for (const GroupPtr& G : catalog_groups(64, budget)) {
            budget.token.poll();
            if (!cls.verdict(G)) continue;
            WlCertificate cert = wl_bounds(G, cls, budget);
            WlEqDgCheck chk = check_wl_eq_dg_characterization(G, cert, budget);
            expect(chk.decided, G->label() + ": wl vs dg undecided within budgets");
            expect(!chk.discrepancy, G->label() + ": " + chk.note);
            if (chk.wl_equals_dg) {
                expect(chk.witness_prime.has_value() && chk.witness_hom.has_value(),
                       G->label() + ": wl = dg but no witness");
                ++eq_side;
            } else {
                expect(chk.refuted_at_dg && chk.search_complete,
                       G->label() + ": wl != dg but the length-dg refutation is incomplete");
                ++neq_side;
            }
        }
        expect(eq_side > 0 && neq_side > 0, "both directions must be exercised");
        return std::to_string(eq_side) + " with wl=dg, " + std::to_string(neq_side) + " without";
    });

    run_check(out, "nilpotent-towers", [&] {
        SemiabelianClassifier cls(budget);
        std::uint64_t checked = 0;
        for (const GroupPtr& G : catalog_groups(64, budget)) {
            if (G->order() == 1 || !is_nilpotent(*G)) continue;
            if (!cls.verdict(G)) continue;
            NilpotentTower nt = nilpotent_tower(G, cls, budget);
            expect(nt.spec.length() == dg(G),
                   G->label() + ": nilpotent tower length differs from dg");
            expect(nt.hom.surjective(), G->label() + ": nilpotent tower map not onto");
            ++checked;
        }
        return cases(checked);
    });

    run_check(out, "semiabelian-witness-towers", [&] {
        // Every semiabelian catalog group admits a witness tower inside the
        // budget (the wl machinery records one), matching the family's
        // characterization through descending cyclic towers.
        SemiabelianClassifier cls(budget);
        std::uint64_t checked = 0;
        for (const GroupPtr& G : catalog_groups(64, budget)) {
            if (!cls.verdict(G)) continue;
            WlCertificate cert = wl_bounds(G, cls, budget);
            expect(cert.witness.has_value() || cert.caps_interfered || cert.budget_hit,
                   G->label() + ": no witness tower and no recorded exhaustion");
            expect(cert.witness.has_value(), G->label() + ": witness tower search did not finish");
            expect(*cert.exact <= cert.lower + 1,
                   G->label() + ": witness tower unexpectedly long");
            ++checked;
        }
        return cases(checked);
    });

    run_check(out, "wl-monotonicity", [&] {
        SemiabelianClassifier cls(budget);
        std::uint64_t checked = 0;
        for (const GroupPtr& G : catalog_groups(64, budget)) {
            if (!cls.verdict(G)) continue;
            WlCertificate cert = wl_bounds(G, cls, budget);
            expect(cert.dg_value <= cert.lower, G->label() + ": dg exceeds the lower bound");
            if (cert.exact) {
                expect(cert.lower <= *cert.exact, G->label() + ": lower bound above exact value");
                expect(*cert.upper == *cert.exact, G->label() + ": exact without matching upper");
            }
            ++checked;
        }
        // quotients never increase wl: confirm each epimorphism, then compare
        struct QuotientCase {
            TowerSpec tower;
            const char* image;
        };
        for (const auto& [spec, image] :
             {QuotientCase{TowerSpec{{3, 2}, Bracketing::descending}, "S3"},
              QuotientCase{TowerSpec{{2, 2}, Bracketing::descending}, "C2*C2"},
              QuotientCase{TowerSpec{{2, 3}, Bracketing::descending}, "A4"}}) {
            GroupPtr img = parse_group_expression(image, budget);
            expect(epi_exists(spec, img, budget).status == SearchStatus::found,
                   std::string(image) + " is not a quotient of " + spec.to_string());
            WlCertificate t = wl_bounds(build_tower(spec, budget).carrier, cls, budget);
            WlCertificate i = wl_bounds(img, cls, budget);
            expect(t.exact && i.exact && *i.exact <= *t.exact,
                   std::string(image) + ": wl grew along a quotient of " + spec.to_string());
            ++checked;
        }
        return cases(checked);
    });

    run_check(out, "tower-wl-is-length", [&] {
        // wl(build_tower(spec)) = spec length for descending towers small
        // enough to classify (the brute cap bounds the classifier).
        SemiabelianClassifier cls(budget);
        std::uint64_t checked = 0;
        for (TowerSpec spec :
             {TowerSpec{{2, 2}, Bracketing::descending}, TowerSpec{{3, 2}, Bracketing::descending},
              TowerSpec{{2, 3}, Bracketing::descending}, TowerSpec{{4, 2}, Bracketing::descending},
              TowerSpec{{2, 4}, Bracketing::descending}}) {
            GroupPtr T = build_tower(spec, budget).carrier;
            if (T->order() > budget.brute_cap) continue;
            WlCertificate cert = wl_bounds(T, cls, budget);
            expect(cert.exact == spec.length(), spec.to_string() + ": wl != layer count");
            int expected_dg = 0;
            for (std::uint64_t p : prime_factors(T->order())) {
                int count = 0;
                for (std::uint64_t n : spec.orders)
                    if (n % p == 0) ++count;
                expected_dg = std::max(expected_dg, count);
            }
            expect(dg(T) == expected_dg, spec.to_string() + ": dg formula mismatch");
            ++checked;
        }
        return cases(checked);
    });

    run_check(out, "cyclic-conductors", [&] {
        struct Case {
            std::uint64_t n, p;
        };
        for (const Case& c : {Case{3, 7}, Case{4, 5}, Case{5, 11}, Case{8, 17}, Case{12, 13}})
            expect(cyclic_conductor(c.n).prime == c.p,
                   "conductor for C" + std::to_string(c.n) + " must be " + std::to_string(c.p));
        return std::string("5 instances");
    });

    return out;
}

std::vector<CheckResult> verify_suite(const std::string& name, const Budget& budget) {
    if (name == "functorial") return verify_functorial(budget);
    if (name == "towers") return verify_towers(budget);
    if (name == "invariants") return verify_invariants(budget);
    if (name == "all") {
        std::vector<CheckResult> out = verify_functorial(budget);
        auto t = verify_towers(budget);
        out.insert(out.end(), t.begin(), t.end());
        auto i = verify_invariants(budget);
        out.insert(out.end(), i.begin(), i.end());
        return out;
    }
    throw DomainError("unknown suite '" + name + "' (expected functorial|towers|invariants|all)");
}

int count_failures(const std::vector<CheckResult>& results) {
    int n = 0;
    for (const CheckResult& r : results)
        if (r.status == CheckStatus::fail) ++n;
    return n;
}

int count_skips(const std::vector<CheckResult>& results) {
    int n = 0;
    for (const CheckResult& r : results)
        if (r.status == CheckStatus::skip) ++n;
    return n;
}

}  // namespace wreathlab

