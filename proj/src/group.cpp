#include "wreathlab/group.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace wreathlab {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw DomainError(msg);
}

bool sorted_contains(const std::vector<Perm>& sorted, const Perm& p) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
    return it != sorted.end() && *it == p;
}

}  // namespace



// --- FiniteGroup -------------------------------------------------------------

GroupPtr FiniteGroup::generated(int degree, std::vector<Perm> gens, std::string label,
                                const Budget& budget) {
    require(degree >= 1, "group degree must be positive");
    if (degree > budget.degree_cap)
        throw CapExceeded("group degree " + std::to_string(degree) + " exceeds cap " +
                          std::to_string(budget.degree_cap));
    require(!gens.empty(), "generator list must be nonempty");
    for (const Perm& g : gens)
        require(g.degree() == degree, "generator degree mismatch in group '" + label + "'");
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->degree_ = degree;
    g->gens_ = std::move(gens);
    g->label_ = std::move(label);
    g->element_cap_ = budget.element_cap;
    g->token_ = budget.token;
    return g;
}

GroupPtr FiniteGroup::from_elements(int degree, std::vector<Perm> gens,
                                    std::vector<Perm> elements, std::string label) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    Budget b = default_budget();
    b.element_cap = elements.size();
    auto g = generated(degree, std::move(gens), std::move(label), b);
    if (g->order() != elements.size() || g->elements() != elements)
        throw DomainError("element set is not the closure of the given generators");
    return g;
}

void FiniteGroup::enumerate() const {
    std::vector<Perm> bfs;
    std::vector<std::int32_t> parent;
    std::vector<std::int16_t> via;
    std::unordered_map<Perm, std::int32_t, PermHash> pos;

    const Perm id = Perm::identity(degree_);
    bfs.push_back(id);
    parent.push_back(-1);
    via.push_back(-1);
    pos.emplace(id, 0);

    for (std::size_t i = 0; i < bfs.size(); ++i) {
        if ((i & 511u) == 0) token_.poll();
        for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
            Perm p = compose(bfs[i], gens_[gi]);
            auto [it, fresh] = pos.emplace(p, static_cast<std::int32_t>(bfs.size()));
            if (fresh) {
                bfs.push_back(std::move(p));
                parent.push_back(static_cast<std::int32_t>(i));
                via.push_back(static_cast<std::int16_t>(gi));
                if (bfs.size() > element_cap_)
                    throw CapExceeded("group order exceeds element cap " +
                                      std::to_string(element_cap_) + " while enumerating '" +
                                      label_ + "'");
            }
        }
    }

    const std::size_t n = bfs.size();
    std::vector<std::int32_t> order_idx(n);
    std::iota(order_idx.begin(), order_idx.end(), 0);
    std::sort(order_idx.begin(), order_idx.end(),
              [&bfs](std::int32_t a, std::int32_t b) { return bfs[static_cast<std::size_t>(a)] < bfs[static_cast<std::size_t>(b)]; });
    std::vector<std::int32_t> bfs_to_sorted(n);
    for (std::size_t s = 0; s < n; ++s) bfs_to_sorted[static_cast<std::size_t>(order_idx[s])] = static_cast<std::int32_t>(s);

    elements_.resize(n);
    tree_parent_.resize(n);
    tree_gen_.resize(n);
    for (std::size_t s = 0; s < n; ++s) {
        const std::size_t b = static_cast<std::size_t>(order_idx[s]);
        elements_[s] = bfs[b];
        tree_parent_[s] = parent[b] < 0 ? -1 : bfs_to_sorted[static_cast<std::size_t>(parent[b])];
        tree_gen_[s] = via[b];
    }
}

const std::vector<Perm>& FiniteGroup::elements() const {
    std::call_once(enum_once_, [this] { enumerate(); });
    return elements_;
}

std::uint64_t FiniteGroup::order() const { return elements().size(); }

int FiniteGroup::index_of(const Perm& p) const {
    const auto& els = elements();
    auto it = std::lower_bound(els.begin(), els.end(), p);
    if (it == els.end() || !(*it == p)) return -1;
    return static_cast<int>(it - els.begin());
}

bool FiniteGroup::is_abelian() const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            if (!(compose(gens_[i], gens_[j]) == compose(gens_[j], gens_[i]))) return false;
    return true;
}

std::vector<int> FiniteGroup::word_of(int idx) const {
    elements();
    std::vector<int> w;
    std::int32_t cur = idx;
    while (tree_parent_[static_cast<std::size_t>(cur)] >= 0) {
        w.push_back(tree_gen_[static_cast<std::size_t>(cur)]);
        cur = tree_parent_[static_cast<std::size_t>(cur)];
    }
    std::reverse(w.begin(), w.end());
    return w;
}

// --- closure machinery -------------------------------------------------------

std::vector<Perm> closure(int degree, const std::vector<Perm>& gens, std::uint64_t cap,
                          const CancelToken& token) {
    require(!gens.empty(), "closure: generator list must be nonempty");
    for (const Perm& g : gens) require(g.degree() == degree, "closure: generator degree mismatch");

    std::vector<Perm> bfs{Perm::identity(degree)};
    std::unordered_set<Perm, PermHash> seen{bfs[0]};
    for (std::size_t i = 0; i < bfs.size(); ++i) {
        if ((i & 511u) == 0) token.poll();
        for (const Perm& g : gens) {
            Perm p = compose(bfs[i], g);
            if (seen.insert(p).second) {
                bfs.push_back(std::move(p));
                if (bfs.size() > cap)
                    throw CapExceeded("closure exceeds element cap " + std::to_string(cap));
            }
        }
    }
    std::sort(bfs.begin(), bfs.end());
    return bfs;
}

bool Subgroup::contains(const Perm& p) const { return sorted_contains(elements, p); }

Subgroup normal_closure_in(int degree, const std::vector<Perm>& ambient_gens,
                           const std::vector<Perm>& seeds, std::uint64_t cap,
                           const CancelToken& token) {
    std::vector<Perm> gens;
    for (const Perm& s : seeds)
        if (!s.is_identity()) gens.push_back(s);
    if (gens.empty()) return Subgroup{{Perm::identity(degree)}, {Perm::identity(degree)}};

    for (;;) {
        token.poll();
        std::vector<Perm> closed = closure(degree, gens, cap, token);
        std::unordered_set<Perm, PermHash> missing;
        for (std::size_t i = 0; i < closed.size(); ++i) {
            if ((i & 511u) == 0) token.poll();
            for (const Perm& g : ambient_gens) {
                Perm c = closed[i].conjugated_by(g);
                if (!sorted_contains(closed, c)) missing.insert(std::move(c));
            }
        }
        if (missing.empty()) return Subgroup{std::move(closed), std::move(gens)};
        gens.insert(gens.end(), missing.begin(), missing.end());
        std::sort(gens.begin(), gens.end());
    }
}

std::vector<Perm> normal_closure(const FiniteGroup& G, const std::vector<Perm>& seeds) {
    for (const Perm& s : seeds)
        require(G.contains(s), "normal_closure: seed outside the group");
    return normal_closure_in(G.degree(), G.generators(), seeds, G.order()).elements;
}

namespace {

constexpr std::uint64_t kAllPairsLimit = 4096;

Subgroup commutator_subgroup_impl(int degree, const std::vector<Perm>& elements,
                                  const std::vector<Perm>& gens, const CancelToken& token) {
    if (elements.size() <= kAllPairsLimit) {
        std::unordered_set<Perm, PermHash> comms;
        for (std::size_t i = 0; i < elements.size(); ++i) {
            if ((i & 63u) == 0) token.poll();
            const Perm xi = elements[i].inverse();
            for (std::size_t j = 0; j < elements.size(); ++j) {
                const Perm& y = elements[j];
                comms.insert(compose(compose(xi, y.inverse()), compose(elements[i], y)));
            }
        }
        std::vector<Perm> cgens(comms.begin(), comms.end());
        std::sort(cgens.begin(), cgens.end());
        std::vector<Perm> closed = closure(degree, cgens, elements.size(), token);
        return Subgroup{std::move(closed), std::move(cgens)};
    }
    // Same subgroup as the all-pairs construction: [G,G] is the normal
    // closure of the commutators of generator pairs.
    std::vector<Perm> seeds;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
            Perm c = compose(compose(gens[i].inverse(), gens[j].inverse()),
                             compose(gens[i], gens[j]));
            if (!c.is_identity()) seeds.push_back(std::move(c));
        }
    return normal_closure_in(degree, gens, seeds, elements.size(), token);
}

}  // namespace

std::vector<Perm> commutator_subgroup(const FiniteGroup& G) {
    return commutator_subgroup_impl(G.degree(), G.elements(), G.generators(), {}).elements;
}

Subgroup commutator_subgroup(int degree, const Subgroup& H, const CancelToken& token) {
    return commutator_subgroup_impl(degree, H.elements, H.gens, token);
}

std::vector<std::uint64_t> derived_series_orders(const FiniteGroup& G) {
    std::vector<std::uint64_t> orders{G.order()};
    Subgroup cur{G.elements(), G.generators()};
    while (cur.elements.size() > 1) {
        Subgroup next = commutator_subgroup(G.degree(), cur);
        if (next.elements.size() == cur.elements.size())
            throw DomainError("derived series stabilizes above the trivial group: '" + G.label() +
                              "' is not solvable");
        orders.push_back(next.elements.size());
        cur = std::move(next);
    }
    return orders;
}

int derived_length(const FiniteGroup& G) {
    return static_cast<int>(derived_series_orders(G).size()) - 1;
}

// --- quotients ---------------------------------------------------------------

CosetQuotient quotient_group(const GroupPtr& G, const std::vector<Perm>& N_in) {
    std::vector<Perm> N = N_in;
    std::sort(N.begin(), N.end());
    N.erase(std::unique(N.begin(), N.end()), N.end());
    require(!N.empty() && N.front() == Perm::identity(G->degree()),
            "quotient: subgroup must contain the identity");
    require(G->order() % N.size() == 0, "quotient: subgroup size does not divide group order");
    for (const Perm& n : N) require(G->contains(n), "quotient: subgroup element outside the group");

    // Subgroup closure: full pairwise check for small N, seeded sample above.
    if (N.size() * N.size() <= (std::uint64_t(1) << 24)) {
        for (const Perm& a : N)
            for (const Perm& b : N)
                require(sorted_contains(N, compose(a, b)), "quotient: subgroup not closed");
    } else {
        std::uint64_t state = default_budget().seed;
        auto next = [&state] {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            return state >> 16;
        };
        for (int t = 0; t < 4096; ++t) {
            const Perm& a = N[static_cast<std::size_t>(next() % N.size())];
            const Perm& b = N[static_cast<std::size_t>(next() % N.size())];
            require(sorted_contains(N, compose(a, b)), "quotient: subgroup not closed");
        }
    }
    for (const Perm& n : N)
        for (const Perm& g : G->generators())
            require(sorted_contains(N, n.conjugated_by(g)), "quotient: subgroup not normal");

    const auto& els = G->elements();
    const std::uint64_t n_cosets64 = G->order() / N.size();
    if (n_cosets64 > static_cast<std::uint64_t>(kMaxDegree))
        throw CapExceeded("quotient degree " + std::to_string(n_cosets64) + " exceeds cap " +
                          std::to_string(kMaxDegree));
    const int n_cosets = static_cast<int>(n_cosets64);

    std::vector<int> coset_of(els.size(), -1);
    std::vector<std::vector<int>> cosets;
    std::vector<int> reps;
    for (std::size_t i = 0; i < els.size(); ++i) {
        if (coset_of[i] >= 0) continue;
        const int cid = static_cast<int>(cosets.size());
        reps.push_back(static_cast<int>(i));
        std::vector<int> members;
        for (const Perm& n : N) {
            int idx = G->index_of(compose(n, els[i]));
            assert(idx >= 0);
            coset_of[static_cast<std::size_t>(idx)] = cid;
            members.push_back(idx);
        }
        std::sort(members.begin(), members.end());
        cosets.push_back(std::move(members));
    }
    assert(static_cast<int>(cosets.size()) == n_cosets);

    auto coset_perm_of = [&](const Perm& x) {
        std::vector<int> im(static_cast<std::size_t>(n_cosets));
        for (int c = 0; c < n_cosets; ++c) {
            int idx = G->index_of(compose(els[static_cast<std::size_t>(reps[static_cast<std::size_t>(c)])], x));
            im[static_cast<std::size_t>(c)] = coset_of[static_cast<std::size_t>(idx)];
        }
        return Perm::from_images(im);
    };

    std::vector<Perm> qgens;
    for (const Perm& g : G->generators()) qgens.push_back(coset_perm_of(g));
    GroupPtr quotient = FiniteGroup::generated(n_cosets, qgens, G->label() + "/N");
    require(quotient->order() == n_cosets64, "quotient: coset action has wrong order");

    std::vector<int> canonical(els.size());
    for (std::size_t i = 0; i < els.size(); ++i) {
        int idx = quotient->index_of(coset_perm_of(els[i]));
        require(idx >= 0, "quotient: canonical image missing");
        canonical[i] = idx;
    }
    // Homomorphism check on (element, generator) pairs; multiplicativity on
    // arbitrary pairs follows by induction over words.
    for (std::size_t i = 0; i < els.size(); ++i)
        for (std::size_t gi = 0; gi < G->generators().size(); ++gi) {
            int lhs = canonical[static_cast<std::size_t>(G->index_of(compose(els[i], G->generators()[gi])))];
            Perm rhs = compose(quotient->element(canonical[i]), qgens[gi]);
            require(lhs == quotient->index_of(rhs), "quotient: canonical map not a homomorphism");
        }

    return CosetQuotient{G, std::move(N), std::move(cosets), std::move(quotient), std::move(canonical)};
}

// --- abelian invariants -------------------------------------------------------

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& A, bool must_be_abelian) {
    if (must_be_abelian) require(A.is_abelian(), "abelian_invariants: group '" + A.label() + "' is not abelian");
    const std::uint64_t n = A.order();
    if (n == 1) return {};

    std::vector<std::uint64_t> orders;
    orders.reserve(n);
    for (const Perm& x : A.elements()) orders.push_back(x.order());

    // For each prime, the census of p^k-torsion gives the exponent profile:
    // with s_k = log_p #{x : x^{p^k}=1}, the difference s_k - s_{k-1} counts
    // cyclic factors of order >= p^k.
    std::map<std::uint64_t, std::vector<int>> exponents_by_prime;  // descending exponent lists
    for (std::uint64_t p : prime_factors(n)) {
        std::vector<int> geq;  // geq[k-1] = number of factors with exponent >= k
        std::uint64_t pk = 1;
        std::uint64_t prev_rank = 0;
        for (;;) {
            pk *= p;
            std::uint64_t count = 0;
            for (std::uint64_t o : orders)
                if (pk % o == 0) ++count;
            std::uint64_t rank = 0;
            for (std::uint64_t c = count; c > 1; c /= p) ++rank;
            require(count == [&] {
                        std::uint64_t v = 1;
                        for (std::uint64_t r = 0; r < rank; ++r) v *= p;
                        return v;
                    }(),
                    "abelian_invariants: torsion count is not a p-power (group not abelian?)");
            if (rank == prev_rank) break;  // profile saturated
            geq.push_back(static_cast<int>(rank - prev_rank));
            prev_rank = rank;
        }
        std::vector<int> exps;
        for (int k = 0; k < static_cast<int>(geq.size()); ++k) {
            int with_this = geq[static_cast<std::size_t>(k)] -
                            (k + 1 < static_cast<int>(geq.size()) ? geq[static_cast<std::size_t>(k) + 1] : 0);
            for (int c = 0; c < with_this; ++c) exps.push_back(k + 1);
        }
        std::sort(exps.rbegin(), exps.rend());
        exponents_by_prime[p] = std::move(exps);
    }

    std::size_t k_max = 0;
    for (const auto& [p, exps] : exponents_by_prime) k_max = std::max(k_max, exps.size());
    std::vector<std::uint64_t> factors;
    for (std::size_t j = 0; j < k_max; ++j) {
        std::uint64_t f = 1;
        for (const auto& [p, exps] : exponents_by_prime) {
            if (j < exps.size()) {
                for (int e = 0; e < exps[j]; ++e) f *= p;
            }
        }
        factors.push_back(f);
    }
    std::reverse(factors.begin(), factors.end());  // ascending, d_i | d_{i+1}

    std::uint64_t prod = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        prod *= factors[i];
        if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
            throw ConstructionDefect("abelian_invariants: divisibility chain broken");
    }
    if (prod != n) throw ConstructionDefect("abelian_invariants: factor product mismatch");
    return factors;
}

Abelianization abelianization(const GroupPtr& G) {
    CosetQuotient q = quotient_group(G, commutator_subgroup(*G));
    std::vector<std::uint64_t> inv = abelian_invariants(*q.quotient);
    return Abelianization{std::move(q), std::move(inv)};
}

int dg_p(const GroupPtr& G, std::uint64_t p) {
    require(is_prime(p), "dg_p: " + std::to_string(p) + " is not prime");
    int count = 0;
    for (std::uint64_t f : abelianization(G).invariants)
        if (f % p == 0) ++count;
    return count;
}

int dg(const GroupPtr& G) {
    Abelianization ab = abelianization(G);
    if (ab.invariants.empty()) {
        if (G->order() == 1) return 0;
        throw DomainError("dg is undefined for the nontrivial perfect group '" + G->label() + "'");
    }
    int best = 0;
    for (std::uint64_t p : prime_factors(ab.quotient.quotient->order())) {
        int count = 0;
        for (std::uint64_t f : ab.invariants)
            if (f % p == 0) ++count;
        best = std::max(best, count);
    }
    return best;
}

std::vector<int> conjugacy_class_reps(const FiniteGroup& G) {
    const auto& els = G.elements();
    std::vector<bool> seen(els.size(), false);
    std::vector<int> reps;
    for (std::size_t i = 0; i < els.size(); ++i) {
        if (seen[i]) continue;
        reps.push_back(static_cast<int>(i));
        std::vector<int> stack{static_cast<int>(i)};
        seen[i] = true;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (const Perm& g : G.generators()) {
                int idx = G.index_of(els[static_cast<std::size_t>(cur)].conjugated_by(g));
                if (!seen[static_cast<std::size_t>(idx)]) {
                    seen[static_cast<std::size_t>(idx)] = true;
                    stack.push_back(idx);
                }
            }
        }
    }
    return reps;
}

int dg_brute(const GroupPtr& G, const Budget& budget) {
    if (G->order() > budget.brute_cap)
        throw CapExceeded("dg_brute: order " + std::to_string(G->order()) + " exceeds brute cap " +
                          std::to_string(budget.brute_cap));
    if (G->order() == 1) return 0;

    const auto& els = G->elements();
    std::vector<int> reps = conjugacy_class_reps(*G);
    std::vector<int> nontrivial;  // all non-identity element indices
    for (std::size_t i = 1; i < els.size(); ++i) nontrivial.push_back(static_cast<int>(i));

    auto generates = [&](const std::vector<Perm>& seeds) {
        return normal_closure(*G, seeds).size() == G->order();
    };

    const int k_limit = 64;
    for (int k = 1; k <= k_limit; ++k) {
        for (int r : reps) {
            if (r == 0) continue;  // identity seed never helps
            budget.token.poll();
            std::vector<Perm> seeds{els[static_cast<std::size_t>(r)]};
            if (k == 1) {
                if (generates(seeds)) return 1;
                continue;
            }
            // remaining k-1 seeds: lexicographic combinations over all elements
            std::vector<int> pick(static_cast<std::size_t>(k - 1));
            std::iota(pick.begin(), pick.end(), 0);
            auto advance = [&]() {
                int i = k - 2;
                while (i >= 0) {
                    ++pick[static_cast<std::size_t>(i)];
                    if (pick[static_cast<std::size_t>(i)] <=
                        static_cast<int>(nontrivial.size()) - (k - 1 - i)) {
                        for (int j = i + 1; j < k - 1; ++j)
                            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
                        return true;
                    }
                    --i;
                }
                return false;
            };
            if (static_cast<int>(nontrivial.size()) < k - 1) continue;
            do {
                budget.token.poll();
                seeds.resize(1);
                bool skip = false;
                for (int j = 0; j < k - 1; ++j) {
                    int idx = nontrivial[static_cast<std::size_t>(pick[static_cast<std::size_t>(j)])];
                    if (idx == r) {
                        skip = true;
                        break;
                    }
                    seeds.push_back(els[static_cast<std::size_t>(idx)]);
                }
                if (!skip && generates(seeds)) return k;
            } while (advance());
        }
    }
    throw ConstructionDefect("dg_brute: no normally generating subset found");
}

// --- nilpotency and friends ---------------------------------------------------

namespace {

bool is_p_power(std::uint64_t n, std::uint64_t p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

std::vector<Perm> p_torsion_elements(const FiniteGroup& G, std::uint64_t p) {
    std::vector<Perm> out;
    for (const Perm& x : G.elements())
        if (x.is_identity() || is_p_power(x.order(), p)) out.push_back(x);
    return out;  // already sorted (subsequence of sorted elements)
}

std::vector<Perm> greedy_gens(int degree, const std::vector<Perm>& sorted_elements) {
    std::vector<Perm> gens;
    std::vector<Perm> closed{Perm::identity(degree)};
    while (closed.size() < sorted_elements.size()) {
        const Perm* pick = nullptr;
        for (const Perm& e : sorted_elements)
            if (!sorted_contains(closed, e)) {
                pick = &e;
                break;
            }
        gens.push_back(*pick);
        closed = closure(degree, gens, sorted_elements.size());
    }
    if (gens.empty()) gens.push_back(Perm::identity(degree));
    return gens;
}

}  // namespace

bool is_nilpotent(const FiniteGroup& G) {
    for (std::uint64_t p : prime_factors(G.order())) {
        std::vector<Perm> P = p_torsion_elements(G, p);
        for (const Perm& a : P)
            for (const Perm& b : P)
                if (!sorted_contains(P, compose(a, b))) return false;
    }
    return true;
}

GroupPtr sylow_subgroup(const GroupPtr& G, std::uint64_t p) {
    require(is_prime(p), "sylow_subgroup: p must be prime");
    require(is_nilpotent(*G), "sylow_subgroup: group '" + G->label() + "' is not nilpotent");
    std::vector<Perm> P = p_torsion_elements(*G, p);
    std::vector<Perm> gens = greedy_gens(G->degree(), P);
    return FiniteGroup::from_elements(G->degree(), std::move(gens), std::move(P),
                                      G->label() + ".sylow" + std::to_string(p));
}

GroupPtr direct_product(const GroupPtr& G, const GroupPtr& H, const std::string& label) {
    const int deg = G->degree() + H->degree();
    std::vector<Perm> gens;
    const Perm idG = Perm::identity(G->degree());
    const Perm idH = Perm::identity(H->degree());
    for (const Perm& g : G->generators()) gens.push_back(direct_sum(g, idH));
    for (const Perm& h : H->generators()) gens.push_back(direct_sum(idG, h));
    std::string l = label.empty() ? G->label() + "*" + H->label() : label;
    Budget b = default_budget();
    return FiniteGroup::generated(deg, std::move(gens), std::move(l), b);
}

std::uint64_t exponent(const FiniteGroup& G) {
    std::uint64_t e = 1;
    for (const Perm& x : G.elements()) e = std::lcm(e, x.order());
    return e;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> order_census(const FiniteGroup& G) {
    std::map<std::uint64_t, std::uint64_t> census;
    for (const Perm& x : G.elements()) ++census[x.order()];
    return {census.begin(), census.end()};
}

std::vector<Perm> small_generating_set(const FiniteGroup& G) {
    return greedy_gens(G.degree(), G.elements());
}

std::vector<Perm> small_generating_set(int degree, const std::vector<Perm>& sorted_elements) {
    return greedy_gens(degree, sorted_elements);
}

}  // namespace wreathlab
