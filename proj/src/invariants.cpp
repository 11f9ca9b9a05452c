#include "wreathlab/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "wreathlab/catalog.hpp"

namespace wreathlab {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw DomainError(msg);
}

/// Index arithmetic over a small group's sorted element list.
struct IndexCalc {
    const FiniteGroup* G;
    std::vector<std::int32_t> mult;  // n*n multiplication table
    std::vector<std::int32_t> inv;
    int n;

    explicit IndexCalc(const FiniteGroup& group) : G(&group), n(static_cast<int>(group.order())) {
        mult.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        inv.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            inv[static_cast<std::size_t>(i)] = group.index_of(group.element(i).inverse());
            for (int j = 0; j < n; ++j)
                mult[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                     static_cast<std::size_t>(j)] =
                    group.index_of(compose(group.element(i), group.element(j)));
        }
    }

    int mul(int a, int b) const {
        return mult[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(b)];
    }
    int conj(int x, int by) const { return mul(mul(inv[static_cast<std::size_t>(by)], x), by); }

    std::vector<int> subgroup_closure(std::vector<int> gens) const {
        std::vector<char> in(static_cast<std::size_t>(n), 0);
        std::vector<int> bfs{0};
        in[0] = 1;
        gens.erase(std::remove(gens.begin(), gens.end(), 0), gens.end());
        for (std::size_t i = 0; i < bfs.size(); ++i)
            for (int g : gens) {
                int t = mul(bfs[i], g);
                if (!in[static_cast<std::size_t>(t)]) {
                    in[static_cast<std::size_t>(t)] = 1;
                    bfs.push_back(t);
                }
            }
        std::sort(bfs.begin(), bfs.end());
        return bfs;
    }
};

std::vector<Perm> indices_to_perms(const FiniteGroup& G, const std::vector<int>& idx) {
    std::vector<Perm> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(G.element(i));
    return out;
}

bool set_is_abelian(const std::vector<Perm>& sorted) {
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if (!(compose(sorted[i], sorted[j]) == compose(sorted[j], sorted[i]))) return false;
    return true;
}

}  // namespace

// --- subgroup lattice ------------------------------------------------------------

std::vector<std::vector<Perm>> all_subgroups(const GroupPtr& G, const Budget& budget) {
    if (G->order() > budget.brute_cap)
        throw CapExceeded("all_subgroups: order " + std::to_string(G->order()) +
                          " exceeds brute cap " + std::to_string(budget.brute_cap));
    IndexCalc calc(*G);
    const int n = calc.n;

    std::set<std::vector<int>> seen;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> queue;  // (elements, gens)
    queue.push_back({{0}, {}});
    seen.insert({0});
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        budget.token.poll();
        auto [elems, gens] = queue[qi];
        for (int g = 1; g < n; ++g) {
            if (std::binary_search(elems.begin(), elems.end(), g)) continue;
            std::vector<int> ngens = gens;
            ngens.push_back(g);
            std::vector<int> closed = calc.subgroup_closure(ngens);
            if (seen.insert(closed).second) queue.push_back({std::move(closed), std::move(ngens)});
        }
    }

    std::vector<std::vector<int>> sorted(seen.begin(), seen.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<std::vector<Perm>> out;
    out.reserve(sorted.size());
    for (const auto& s : sorted) out.push_back(indices_to_perms(*G, s));
    return out;
}

// --- semiabelian classification ------------------------------------------------------

std::optional<bool> SemiabelianClassifier::memo_lookup(
    const GroupPtr& G, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& census,
    const std::vector<std::uint64_t>& derived) {
    std::vector<MemoEntry> candidates;
    {
        std::lock_guard<std::mutex> lock(mu_);
        for (const MemoEntry& e : memo_)
            if (e.census == census && e.derived_orders == derived) candidates.push_back(e);
    }
    for (const MemoEntry& e : candidates) {
        try {
            Budget b = budget_;
            b.tuple_budget = 50'000;
            if (is_isomorphic(G, e.rep, b)) return e.verdict;
        } catch (const BudgetExhausted&) {
            // treat as a miss; correctness does not depend on the memo
        }
    }
    return std::nullopt;
}

void SemiabelianClassifier::memo_store(const GroupPtr& G,
                                       std::vector<std::pair<std::uint64_t, std::uint64_t>> census,
                                       std::vector<std::uint64_t> derived, bool verdict) {
    std::lock_guard<std::mutex> lock(mu_);
    memo_.push_back(MemoEntry{std::move(census), std::move(derived), G, verdict});
}

namespace {

struct LatticeEntry {
    std::vector<int> indices;  // sorted element indices within the stage
    std::uint64_t order;
    bool abelian;
    bool normal;
};

std::vector<LatticeEntry> stage_lattice(const GroupPtr& stage, const Budget& budget) {
    IndexCalc calc(*stage);
    std::vector<std::vector<Perm>> subs = all_subgroups(stage, budget);
    std::vector<LatticeEntry> out;
    out.reserve(subs.size());
    for (const auto& sub : subs) {
        LatticeEntry e;
        e.order = sub.size();
        e.indices.reserve(sub.size());
        for (const Perm& p : sub) e.indices.push_back(stage->index_of(p));
        std::sort(e.indices.begin(), e.indices.end());
        e.abelian = set_is_abelian(sub);
        e.normal = true;
        for (int x : e.indices) {
            for (std::size_t gi = 0; gi < stage->generators().size() && e.normal; ++gi) {
                int g = stage->index_of(stage->generators()[gi]);
                if (!std::binary_search(e.indices.begin(), e.indices.end(), calc.conj(x, g)))
                    e.normal = false;
            }
            if (!e.normal) break;
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::uint64_t sorted_intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    std::uint64_t c = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (a[i] > b[j])
            ++j;
        else
            ++c, ++i, ++j;
    }
    return c;
}

GroupPtr subgroup_as_group(const GroupPtr& ambient, const std::vector<int>& indices,
                           const std::string& label) {
    std::vector<Perm> elems = indices_to_perms(*ambient, indices);
    return FiniteGroup::from_elements(ambient->degree(),
                                      small_generating_set(ambient->degree(), elems), elems, label);
}

}  // namespace

SemiabelianCertificate SemiabelianClassifier::classify(const GroupPtr& G) {
    if (G->order() > budget_.brute_cap)
        throw CapExceeded("is_semiabelian: order " + std::to_string(G->order()) +
                          " exceeds brute cap " + std::to_string(budget_.brute_cap));
    if (G->is_abelian())
        return SemiabelianCertificate{true, {}, "abelian group of order " + std::to_string(G->order()),
                                      ""};

    // Find a decomposition stage = A·H with H semiabelian; the verdict-level
    // recursion is memoized, the chain is then rebuilt natively for G.
    std::vector<LatticeEntry> lattice = stage_lattice(G, budget_);
    for (const LatticeEntry& A : lattice) {
        if (A.order < 2 || !A.abelian || !A.normal) continue;
        for (const LatticeEntry& H : lattice) {
            if (H.order >= G->order()) continue;
            if (A.order * H.order != G->order() * sorted_intersection_size(A.indices, H.indices))
                continue;
            GroupPtr Hgrp = subgroup_as_group(G, H.indices, G->label() + ".sub");
            if (!verdict_memoized(Hgrp)) continue;
            SemiabelianCertificate inner = classify(Hgrp);
            SemiabelianCertificate cert;
            cert.verdict = true;
            cert.chain.push_back(SemiabelianStep{indices_to_perms(*G, A.indices),
                                                 indices_to_perms(*G, H.indices)});
            cert.chain.insert(cert.chain.end(), inner.chain.begin(), inner.chain.end());
            cert.terminal = inner.terminal;
            return cert;
        }
    }
    SemiabelianCertificate cert;
    cert.verdict = false;
    cert.counterexample_note =
        "no pair (nontrivial abelian normal A, proper semiabelian H) with A*H = G exists";
    return cert;
}

bool SemiabelianClassifier::verdict_memoized(const GroupPtr& G) {
    if (G->is_abelian()) return true;
    auto census = order_census(*G);
    auto derived = derived_series_orders(*G);
    if (auto hit = memo_lookup(G, census, derived)) return *hit;

    bool verdict = false;
    std::vector<LatticeEntry> lattice = stage_lattice(G, budget_);
    for (const LatticeEntry& A : lattice) {
        if (A.order < 2 || !A.abelian || !A.normal) continue;
        for (const LatticeEntry& H : lattice) {
            if (H.order >= G->order()) continue;
            if (A.order * H.order != G->order() * sorted_intersection_size(A.indices, H.indices))
                continue;
            if (verdict_memoized(subgroup_as_group(G, H.indices, G->label() + ".sub"))) {
                verdict = true;
                break;
            }
        }
        if (verdict) break;
    }
    memo_store(G, std::move(census), std::move(derived), verdict);
    return verdict;
}

SemiabelianCertificate is_semiabelian(const GroupPtr& G, const Budget& budget) {
    SemiabelianClassifier cls(budget);
    return cls.classify(G);
}

std::string validate_semiabelian_chain(const GroupPtr& G, const SemiabelianCertificate& cert) {
    if (!cert.verdict) return "certificate carries a negative verdict";
    std::vector<Perm> stage = G->elements();
    for (std::size_t si = 0; si < cert.chain.size(); ++si) {
        const auto& step = cert.chain[si];
        const auto& A = step.abelian_normal;
        const auto& H = step.complement;
        auto in_stage = [&stage](const Perm& p) {
            return std::binary_search(stage.begin(), stage.end(), p);
        };
        for (const Perm& a : A)
            if (!in_stage(a)) return "step " + std::to_string(si) + ": A leaves the stage";
        for (const Perm& h : H)
            if (!in_stage(h)) return "step " + std::to_string(si) + ": H leaves the stage";
        if (A.size() < 2) return "step " + std::to_string(si) + ": A is trivial";
        if (H.size() >= stage.size()) return "step " + std::to_string(si) + ": H is not proper";
        if (!set_is_abelian(A)) return "step " + std::to_string(si) + ": A is not abelian";
        // subgroup closure of both sets
        for (const auto* S : {&A, &H})
            for (const Perm& x : *S)
                for (const Perm& y : *S)
                    if (!std::binary_search(S->begin(), S->end(), compose(x, y)))
                        return "step " + std::to_string(si) + ": a factor is not a subgroup";
        for (const Perm& a : A)
            for (const Perm& g : stage)
                if (!std::binary_search(A.begin(), A.end(), a.conjugated_by(g)))
                    return "step " + std::to_string(si) + ": A is not normal in the stage";
        std::uint64_t meet = 0;
        for (const Perm& a : A)
            if (std::binary_search(H.begin(), H.end(), a)) ++meet;
        if (A.size() * H.size() != stage.size() * meet)
            return "step " + std::to_string(si) + ": A*H is not the whole stage";
        stage = H;
    }
    if (!set_is_abelian(stage)) return "terminal stage is not abelian";
    return "";
}

// --- epimorphism existence ------------------------------------------------------------

std::uint64_t tower_order(const TowerSpec& spec) {
    const double lg = projected_log2_order(spec);
    if (lg > 62) throw CapExceeded("tower order exceeds 2^62");
    std::vector<std::uint64_t> ns;
    for (std::uint64_t n : spec.orders)
        if (n > 1) ns.push_back(n);
    if (ns.empty()) return 1;
    std::uint64_t order;
    if (spec.bracketing == Bracketing::ascending) {
        order = ns[0];
        for (std::size_t i = 1; i < ns.size(); ++i) {
            std::uint64_t next = ns[i];
            for (std::uint64_t k = 0; k < ns[i]; ++k) next *= order;
            order = next;
        }
    } else {
        order = ns.back();
        for (std::size_t i = ns.size() - 1; i-- > 0;) {
            std::uint64_t next = order;
            std::uint64_t pw = 1;
            for (std::uint64_t k = 0; k < order; ++k) pw *= ns[i];
            order = pw * next;
        }
    }
    return order;
}

std::vector<std::uint64_t> nontrivial_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

bool tower_relations_hold(const std::vector<std::uint64_t>& orders, const GroupPtr& G,
                          const std::vector<Perm>& images) {
    require(orders.size() == images.size(), "tower_relations_hold: image count mismatch");
    IndexCalc calc(*G);
    std::vector<int> idx;
    for (const Perm& p : images) {
        int i = G->index_of(p);
        require(i >= 0, "tower_relations_hold: image outside the group");
        idx.push_back(i);
    }
    const int r = static_cast<int>(orders.size());
    std::vector<int> suffix{0};  // subgroup generated by deeper layers
    for (int i = r - 1; i >= 0; --i) {
        const Perm& y = images[static_cast<std::size_t>(i)];
        if (orders[static_cast<std::size_t>(i)] % y.order() != 0) return false;
        std::vector<int> orbit;
        for (int s : suffix) orbit.push_back(calc.conj(idx[static_cast<std::size_t>(i)], s));
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        for (std::size_t a = 0; a < orbit.size(); ++a)
            for (std::size_t b = a + 1; b < orbit.size(); ++b)
                if (calc.mul(orbit[a], orbit[b]) != calc.mul(orbit[b], orbit[a])) return false;
        std::vector<int> gens = suffix;
        gens.push_back(idx[static_cast<std::size_t>(i)]);
        suffix = calc.subgroup_closure(gens);
    }
    return true;
}

EpiSearchResult epi_exists(const TowerSpec& spec, const GroupPtr& G, const Budget& budget) {
    require(spec.bracketing == Bracketing::descending,
            "epi_exists searches descending towers (the wreath-length definition)");
    const double lg = projected_log2_order(spec);
    if (lg > std::log2(static_cast<double>(budget.element_cap)) + 1e-9)
        throw CapExceeded("epi_exists: tower " + spec.to_string() + " projected order 2^" +
                          std::to_string(lg) + " exceeds element cap");

    EpiSearchResult res;
    const std::uint64_t torder = tower_order(spec);
    if (torder == 1) {
        if (G->order() == 1) {
            Tower t = build_tower(spec, budget);
            res.status = SearchStatus::found;
            std::vector<Perm> images(t.carrier->generators().size(), G->identity());
            res.hom = verify_homomorphism(t.carrier, G, std::move(images),
                                          "tower-epimorphism " + spec.to_string(), budget);
            return res;
        }
        res.status = SearchStatus::refuted;
        res.note = "a trivial tower cannot cover a nontrivial group";
        return res;
    }
    if (torder % G->order() != 0) {
        res.status = SearchStatus::refuted;
        res.note = "tower order " + std::to_string(torder) + " is not divisible by |G|";
        return res;
    }

    IndexCalc calc(*G);
    const int n = calc.n;
    const int r = spec.length();
    std::vector<std::vector<int>> candidates(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        for (int e = 0; e < n; ++e)
            if (spec.orders[static_cast<std::size_t>(i)] % G->element(e).order() == 0)
                candidates[static_cast<std::size_t>(i)].push_back(e);

    std::optional<Tower> tower;  // built lazily on the first surviving tuple
    std::vector<int> chosen(static_cast<std::size_t>(r));
    struct Exhausted {};

    // Deepest layer first; each partial choice is filtered by the tower's
    // defining relations evaluated inside G.
    auto search = [&](auto&& self, int i, const std::vector<int>& suffix) -> bool {
        if (i < 0) {
            if (suffix.size() != static_cast<std::size_t>(n)) return false;  // not onto
            if (!tower) tower = build_tower(spec, budget);
            std::vector<Perm> images;
            for (int l = 0; l < r; ++l)
                if (spec.orders[static_cast<std::size_t>(l)] > 1)
                    images.push_back(G->element(chosen[static_cast<std::size_t>(l)]));
            Homomorphism h = verify_homomorphism(tower->carrier, G, std::move(images),
                                                 "tower-epimorphism " + spec.to_string(), budget);
            if (!h.verified() || !h.surjective())
                throw ConstructionDefect("relation filter accepted a non-epimorphism for " +
                                         spec.to_string());
            res.hom = std::move(h);
            return true;
        }
        for (int y : candidates[static_cast<std::size_t>(i)]) {
            if (++res.nodes > budget.tuple_budget) throw Exhausted{};
            if ((res.nodes & 255u) == 0) budget.token.poll();
            std::vector<int> orbit;
            for (int s : suffix) orbit.push_back(calc.conj(y, s));
            std::sort(orbit.begin(), orbit.end());
            orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
            bool ok = true;
            for (std::size_t a = 0; a < orbit.size() && ok; ++a)
                for (std::size_t b = a + 1; b < orbit.size() && ok; ++b)
                    if (calc.mul(orbit[a], orbit[b]) != calc.mul(orbit[b], orbit[a])) ok = false;
            if (!ok) continue;
            chosen[static_cast<std::size_t>(i)] = y;
            std::vector<int> gens = suffix;
            gens.push_back(y);
            if (self(self, i - 1, calc.subgroup_closure(gens))) return true;
        }
        return false;
    };

    try {
        if (search(search, r - 1, {0})) {
            res.status = SearchStatus::found;
            return res;
        }
        res.status = SearchStatus::refuted;
        res.note = "image-tuple space exhausted without a surjection";
        return res;
    } catch (Exhausted&) {
        res.status = SearchStatus::exhausted;
        res.note = "tuple budget " + std::to_string(budget.tuple_budget) + " exhausted";
        return res;
    }
}

// --- tower reductions (layerwise quotients) ----------------------------------------

namespace {

/// build_tower(from) -> build_tower(to), where to[i] divides from[i]
/// layerwise; trivial targets are folded or projected away so no degenerate
/// wreath factors appear.
Homomorphism reduce_tower_epi(const std::vector<std::uint64_t>& from,
                              const std::vector<std::uint64_t>& to, const Budget& budget) {
    require(from.size() == to.size(), "reduce_tower_epi: layer count mismatch");
    for (std::size_t i = 0; i < from.size(); ++i)
        require(from[i] % to[i] == 0, "reduce_tower_epi: target layer must divide source layer");

    if (from.empty()) return identity_hom(trivial_group(budget), "tower-reduction");
    std::vector<std::uint64_t> from_rest(from.begin() + 1, from.end());
    std::vector<std::uint64_t> to_rest(to.begin() + 1, to.end());
    if (from[0] == 1) return reduce_tower_epi(from_rest, to_rest, budget);
    if (from.size() == 1) return cyclic_quotient_hom(from[0], to[0], budget);

    Tower inner_from = build_tower(TowerSpec{from_rest, Bracketing::descending}, budget);
    const bool inner_trivial = inner_from.carrier->order() == 1;
    if (inner_trivial) {
        // all deeper layers are padding on both sides
        return cyclic_quotient_hom(from[0], to[0], budget);
    }
    WreathGroup W(GroupAction::natural(cyclic(from[0], budget)),
                  GroupAction::regular(inner_from.carrier), budget);

    if (to[0] == 1) {
        Homomorphism proj = top_projection(W, budget);
        return compose_homs(proj, reduce_tower_epi(from_rest, to_rest, budget), "tower-reduction",
                            budget);
    }
    const bool target_tail_trivial =
        std::all_of(to_rest.begin(), to_rest.end(), [](std::uint64_t t) { return t == 1; });
    if (target_tail_trivial) {
        Homomorphism fold = fold_to_base(W, budget);
        return compose_homs(fold, cyclic_quotient_hom(from[0], to[0], budget), "tower-reduction",
                            budget);
    }
    // Reduce the base layer first: it shrinks the wreath degree before any
    // second-argument lift, keeping the pair closures inside the degree cap.
    Homomorphism inner = reduce_tower_epi(from_rest, to_rest, budget);
    if (to[0] == from[0]) {
        WreathArgumentMap lifted = map_second_argument(cyclic(from[0], budget), inner, budget);
        return lifted.hom;
    }
    WreathArgumentMap base_step =
        map_first_argument(cyclic_quotient_hom(from[0], to[0], budget), inner_from.carrier,
                           GroupAction::Kind::natural, GroupAction::Kind::natural, budget);
    WreathArgumentMap tail_step = map_second_argument(cyclic(to[0], budget), inner, budget);
    return compose_homs(base_step.hom, tail_step.hom, "tower-reduction", budget);
}

std::vector<std::uint64_t> p_power_divisors(std::uint64_t exp, std::uint64_t p) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = p; exp % q == 0; q *= p) out.push_back(q);
    return out;
}

/// Lexicographic enumeration of all length-r tuples over `orders`.
bool next_tuple(std::vector<std::size_t>& pick, std::size_t base) {
    for (std::size_t i = pick.size(); i-- > 0;) {
        if (++pick[i] < base) return true;
        pick[i] = 0;
    }
    return false;
}

}  // namespace

// --- nilpotent construction -----------------------------------------------------------

NilpotentTower nilpotent_tower(const GroupPtr& G, SemiabelianClassifier& classifier,
                               const Budget& budget) {
    require(G->order() > 1, "nilpotent_tower: the trivial group needs no tower");
    require(is_nilpotent(*G), "nilpotent_tower: group '" + G->label() + "' is not nilpotent");
    require(classifier.verdict(G), "nilpotent_tower: group '" + G->label() + "' is not semiabelian");

    const int d = dg(G);
    std::vector<std::pair<std::uint64_t, TowerSpec>> sylow_specs;
    std::vector<std::pair<std::uint64_t, Homomorphism>> sylow_homs;

    for (std::uint64_t p : prime_factors(G->order())) {
        GroupPtr P = sylow_subgroup(G, p);
        const int rp = dg(P);
        if (rp > d) throw ConstructionDefect("Sylow rank exceeds dg of the whole group");
        std::vector<std::uint64_t> divisors = p_power_divisors(exponent(*P), p);

        std::optional<TowerSpec> found_spec;
        std::optional<Homomorphism> found_hom;
        bool capped = false, exhausted = false;
        std::vector<std::size_t> pick(static_cast<std::size_t>(rp), 0);
        do {
            TowerSpec spec;
            spec.bracketing = Bracketing::descending;
            for (std::size_t i : pick) spec.orders.push_back(divisors[i]);
            try {
                EpiSearchResult res = epi_exists(spec, P, budget);
                if (res.status == SearchStatus::found) {
                    found_spec = spec;
                    found_hom = std::move(res.hom);
                    break;
                }
                if (res.status == SearchStatus::exhausted) exhausted = true;
            } catch (const CapExceeded&) {
                capped = true;
            }
        } while (next_tuple(pick, divisors.size()));

        if (!found_spec) {
            if (capped)
                throw CapExceeded("nilpotent_tower: the Sylow-" + std::to_string(p) +
                                  " tower search for '" + G->label() + "' exceeds the caps");
            if (exhausted)
                throw BudgetExhausted("nilpotent_tower: Sylow tower search budget exhausted");
            throw ConstructionDefect(
                "nilpotent_tower: no per-Sylow cyclic tower of length dg exists for p=" +
                std::to_string(p) + " — contradicts the guaranteed decomposition");
        }
        TowerSpec padded = *found_spec;
        while (padded.length() < d) padded.orders.push_back(1);
        sylow_specs.emplace_back(p, padded);
        sylow_homs.emplace_back(p, std::move(*found_hom));
    }

    TowerSpec merged;
    merged.bracketing = Bracketing::descending;
    for (int j = 0; j < d; ++j) {
        std::uint64_t f = 1;
        for (const auto& [p, spec] : sylow_specs) f *= spec.orders[static_cast<std::size_t>(j)];
        merged.orders.push_back(f);
    }

    Tower T = build_tower(merged, budget);
    std::vector<Perm> images(T.carrier->generators().size(), Perm::identity(G->degree()));
    for (std::size_t k = 0; k < sylow_specs.size(); ++k) {
        Homomorphism reduction = reduce_tower_epi(merged.orders, sylow_specs[k].second.orders, budget);
        if (!same_realization(reduction.domain(), T.carrier))
            throw ConstructionDefect("nilpotent_tower: reduction domain diverged");
        Homomorphism component = compose_homs(reduction, sylow_homs[k].second, "sylow-component",
                                              budget);
        for (std::size_t j = 0; j < images.size(); ++j)
            images[j] = compose(images[j], component.gen_images()[j]);
    }
    Homomorphism hom =
        certify_construction(T.carrier, G, std::move(images), "nilpotent-combination", budget);
    if (!hom.surjective())
        throw ConstructionDefect("nilpotent_tower: combined map is not surjective");
    return NilpotentTower{std::move(merged), std::move(hom), std::move(sylow_specs)};
}

// --- wreath length --------------------------------------------------------------------

WlCertificate wl_bounds(const GroupPtr& G, SemiabelianClassifier& classifier,
                        const Budget& budget) {
    WlCertificate cert;
    cert.group_label = G->label();
    cert.order = G->order();

    if (!classifier.verdict(G))
        throw DomainError("wl is defined for semiabelian groups; '" + G->label() + "' is not");

    if (G->order() == 1) {
        cert.dg_value = 0;
        cert.dl_value = 0;
        cert.lower = 1;
        cert.lower_reasons = {"tower lengths are positive"};
        Tower t = build_tower(TowerSpec{{1}, Bracketing::descending}, budget);
        cert.witness_spec = t.spec;
        cert.witness =
            certify_construction(t.carrier, G, {Perm::identity(G->degree())}, "trivial-tower", budget);
        cert.upper = 1;
        cert.exact = 1;
        cert.method = "trivial";
        return cert;
    }

    cert.dg_value = dg(G);
    cert.dl_value = derived_length(*G);
    cert.lower = std::max({1, cert.dg_value, cert.dl_value});
    cert.lower_reasons.push_back("tower lengths are positive");
    if (cert.dg_value == cert.lower)
        cert.lower_reasons.push_back("dg(G) = " + std::to_string(cert.dg_value) +
                                     " bounds wl from below");
    if (cert.dl_value == cert.lower)
        cert.lower_reasons.push_back("dl(G) = " + std::to_string(cert.dl_value) +
                                     " bounds wl from below (towers of length r have dl = r)");

    std::vector<std::uint64_t> abinv =
        G->is_abelian() ? abelian_invariants(*G) : std::vector<std::uint64_t>{};
    if (abinv.size() == 1) {
        TowerSpec spec{{G->order()}, Bracketing::descending};
        EpiSearchResult res = epi_exists(spec, G, budget);
        if (res.status != SearchStatus::found)
            throw ConstructionDefect("cyclic group admits no length-1 tower?");
        cert.witness_spec = spec;
        cert.witness = std::move(res.hom);
        cert.upper = 1;
        cert.exact = 1;
        cert.method = "cyclic";
        cert.nodes = res.nodes;
        return cert;
    }

    if (is_nilpotent(*G)) {
        if (cert.dl_value > cert.dg_value)
            throw ConstructionDefect("nilpotent semiabelian group with dl > dg contradicts wl = dg");
        NilpotentTower nt = nilpotent_tower(G, classifier, budget);
        cert.witness_spec = nt.spec;
        cert.witness = std::move(nt.hom);
        cert.upper = cert.dg_value;
        cert.exact = cert.dg_value;
        cert.method = "nilpotent-combination";
        return cert;
    }

    std::vector<std::uint64_t> divisors = nontrivial_divisors(exponent(*G));
    bool all_shorter_refuted = true;
    for (int r = cert.lower; r <= cert.lower + 3; ++r) {
        bool full_refutation = true;
        std::vector<std::size_t> pick(static_cast<std::size_t>(r), 0);
        do {
            TowerSpec spec;
            spec.bracketing = Bracketing::descending;
            for (std::size_t i : pick) spec.orders.push_back(divisors[i]);
            try {
                EpiSearchResult res = epi_exists(spec, G, budget);
                cert.nodes += res.nodes;
                if (res.status == SearchStatus::found) {
                    cert.witness_spec = spec;
                    cert.witness = std::move(res.hom);
                    cert.upper = r;
                    if (all_shorter_refuted) cert.exact = r;
                    cert.method = "search";
                    return cert;
                }
                if (res.status == SearchStatus::exhausted) {
                    cert.budget_hit = true;
                    full_refutation = false;
                }
            } catch (const CapExceeded&) {
                cert.caps_interfered = true;
                full_refutation = false;
            }
        } while (next_tuple(pick, divisors.size()));
        if (full_refutation)
            cert.refuted_up_to = r;
        else
            all_shorter_refuted = false;
    }
    cert.method = "bounds-only";
    return cert;
}

WlCertificate wl_bounds(const GroupPtr& G, const Budget& budget) {
    SemiabelianClassifier cls(budget);
    return wl_bounds(G, cls, budget);
}

// --- the characterization ---------------------------------------------------------------

WlEqDgCheck check_wl_eq_dg_characterization(const GroupPtr& G, const WlCertificate& cert,
                                            const Budget& budget) {
    WlEqDgCheck out;
    const int dgv = cert.dg_value;

    if (cert.exact) {
        out.decided = true;
        out.wl_equals_dg = (*cert.exact == dgv);
    } else if (cert.lower > dgv) {
        out.decided = true;
        out.wl_equals_dg = false;
    } else {
        out.decided = false;
        out.search_complete = false;
        out.note = "wl bounds too weak to compare with dg";
        return out;
    }

    if (out.wl_equals_dg) {
        // Forward direction: derive (p, tower, dg-preserving epimorphism) from
        // the wl witness itself.
        if (!cert.witness_spec || !cert.witness) {
            out.discrepancy = true;
            out.note = "wl = dg certified without a witness tower";
            return out;
        }
        std::vector<std::uint64_t> orders;
        for (std::uint64_t n : cert.witness_spec->orders)
            if (n > 1) orders.push_back(n);
        std::uint64_t g = 0;
        for (std::uint64_t n : orders) g = std::gcd(g, n);
        std::optional<std::uint64_t> good_p;
        for (std::uint64_t p : prime_factors(g)) {
            if (dg_p(G, p) == dgv) {
                good_p = p;
                break;
            }
        }
        if (!good_p) {
            out.discrepancy = true;
            out.note = "witness tower factors share no prime achieving dg";
            return out;
        }
        const int dg_tower = dg(cert.witness->domain());
        if (dg_tower != dgv) {
            out.discrepancy = true;
            out.note = "witness epimorphism is not dg-preserving: dg(tower) = " +
                       std::to_string(dg_tower);
            return out;
        }
        out.witness_prime = good_p;
        out.witness_spec = cert.witness_spec;
        out.witness_hom = cert.witness;
        return out;
    }

    // Reverse direction: no (p, tower with p | every factor, dg-preserving
    // epimorphism) of length dg may exist.
    if (dgv == 0) {
        out.refuted_at_dg = true;
        out.note = "towers have positive length, so none has length dg = 0";
        return out;
    }
    std::vector<std::uint64_t> divisors = nontrivial_divisors(exponent(*G));
    std::vector<std::size_t> pick(static_cast<std::size_t>(dgv), 0);
    bool complete = true;
    do {
        TowerSpec spec;
        spec.bracketing = Bracketing::descending;
        std::uint64_t g = 0;
        for (std::size_t i : pick) {
            spec.orders.push_back(divisors[i]);
            g = std::gcd(g, divisors[i]);
        }
        if (prime_factors(g).empty()) continue;  // no common prime possible
        try {
            EpiSearchResult res = epi_exists(spec, G, budget);
            if (res.status == SearchStatus::found) {
                if (dg(res.hom->domain()) == dgv) {
                    out.discrepancy = true;
                    out.note = "found a dg-preserving common-prime tower of length dg although wl != dg";
                    return out;
                }
            } else if (res.status == SearchStatus::exhausted) {
                complete = false;
            }
        } catch (const CapExceeded&) {
            complete = false;
        }
    } while (next_tuple(pick, divisors.size()));
    out.search_complete = complete;
    out.refuted_at_dg = complete;
    if (!complete) out.note = "refutation left gaps (caps or budget)";
    return out;
}

// --- assorted ------------------------------------------------------------------------------

DlTowerCheck dl_tower_check(const TowerSpec& spec, const Budget& budget) {
    for (std::uint64_t n : spec.orders)
        require(n >= 2, "dl_tower_check: factors must all be >= 2");
    DlTowerCheck out{spec.length(), 0, 0};
    out.descending_dl = derived_length(
        *build_tower(TowerSpec{spec.orders, Bracketing::descending}, budget).carrier);
    out.ascending_dl =
        derived_length(*build_tower(TowerSpec{spec.orders, Bracketing::ascending}, budget).carrier);
    return out;
}

ConductorRecord cyclic_conductor(std::uint64_t N) {
    require(N >= 2, "cyclic_conductor: need N >= 2 (the trivial group needs no ramification)");
    require(N <= 1'000'000, "cyclic_conductor: N capped at 10^6");
    ConductorRecord rec;
    rec.n = N;
    for (std::uint64_t p = N + 1;; p += N) {
        ++rec.candidates_checked;
        if (is_prime(p)) {
            rec.prime = p;
            break;
        }
        if (p > 1'000'000'000)
            throw Error("cyclic_conductor: no prime = 1 mod " + std::to_string(N) + " below 10^9");
    }
    rec.note = "C" + std::to_string(N) + " realized tamely inside the " + std::to_string(rec.prime) +
               "-th cyclotomic field with exactly 1 ramified prime; primality by trial division";
    return rec;
}

// --- survey -----------------------------------------------------------------------------------

std::vector<SurveyRow> survey(const std::vector<GroupPtr>& selection, const Budget& budget) {
    std::vector<GroupPtr> groups = selection;
    std::sort(groups.begin(), groups.end(), [](const GroupPtr& a, const GroupPtr& b) {
        if (a->order() != b->order()) return a->order() < b->order();
        return a->label() < b->label();
    });

    SemiabelianClassifier classifier(budget);
    std::vector<SurveyRow> rows;
    for (const GroupPtr& G : groups) {
        budget.token.poll();
        SurveyRow row;
        row.label = G->label();
        row.order = G->order();
        row.ab_invariants = abelianization(G).invariants;
        row.dl_value = derived_length(*G);
        row.dg_value = dg(G);
        row.nilpotent = is_nilpotent(*G);
        row.semiabelian = classifier.verdict(G);
        if (row.semiabelian) {
            WlCertificate cert = wl_bounds(G, classifier, budget);
            row.wl_lower = cert.lower;
            row.wl_upper = cert.upper;
            row.wl_exact = cert.exact;
            row.wl_method = cert.method;
            if (cert.budget_hit || cert.caps_interfered) row.notes = "wl search hit caps/budget";
            WlEqDgCheck chk = check_wl_eq_dg_characterization(G, cert, budget);
            row.wl_eq_dg_decided = chk.decided;
            row.wl_eq_dg = chk.decided && chk.wl_equals_dg;
            row.witness_prime = chk.witness_prime;
            row.witness_spec = chk.witness_spec;
            if (chk.discrepancy) row.notes += (row.notes.empty() ? "" : "; ") + chk.note;
        } else {
            row.notes = "wl undefined (not semiabelian)";
        }
        for (const SurveyRow& prev : rows) {
            if (prev.order != row.order) continue;
            GroupPtr other;
            for (const GroupPtr& g2 : groups)
                if (g2->label() == prev.label) other = g2;
            try {
                if (other && is_isomorphic(G, other, budget)) {
                    row.iso_to = prev.label;
                    break;
                }
            } catch (const Error&) {
                // isomorphism testing is best effort in the survey
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace wreathlab

