#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "wreathlab/budget.hpp"
#include "wreathlab/perm.hpp"

namespace wreathlab {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite permutation group: a degree, a nonempty generating set, and a
/// lazily enumerated element set. Elements are kept sorted, so the identity
/// is always element(0) and iteration order is deterministic. Instances are
/// immutable after construction and shared by pointer; lazy enumeration is
/// synchronized, so const access from several threads is safe.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
public:
    static GroupPtr generated(int degree, std::vector<Perm> gens, std::string label,
                              const Budget& budget = default_budget());

    /// Wraps an already-closed element set (sorted or not). Generators must
    /// lie in the set; the set is trusted to be a group.
    static GroupPtr from_elements(int degree, std::vector<Perm> gens,
                                  std::vector<Perm> elements, std::string label);

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }
    const std::string& label() const { return label_; }

    std::uint64_t order() const;                 // forces enumeration
    const std::vector<Perm>& elements() const;   // sorted ascending
    const Perm& element(int idx) const { return elements()[static_cast<std::size_t>(idx)]; }
    const Perm& identity() const { return element(0); }

    /// Index in the sorted element list, or -1.
    int index_of(const Perm& p) const;
    bool contains(const Perm& p) const { return index_of(p) >= 0; }

    bool is_trivial() const { return order() == 1; }
    bool is_abelian() const;  // generators pairwise commute

    /// Writes element(idx) as a product of generators (indices into
    /// generators(), applied left to right). Empty word for the identity.
    std::vector<int> word_of(int idx) const;

private:
    FiniteGroup() = default;
    void enumerate() const;

    int degree_ = 0;
    std::vector<Perm> gens_;
    std::string label_;
    std::uint64_t element_cap_ = default_budget().element_cap;
    CancelToken token_;

    mutable std::once_flag enum_once_;
    mutable std::vector<Perm> elements_;
    mutable std::vector<std::int32_t> tree_parent_;  // sorted idx -> sorted idx
    mutable std::vector<std::int16_t> tree_gen_;     // generator applied at that step
};

/// An element subset of some ambient symmetric group, kept sorted, together
/// with a generating set for it. The working currency of the subgroup
/// algorithms below.
struct Subgroup {
    std::vector<Perm> elements;  // sorted
    std::vector<Perm> gens;

    bool contains(const Perm& p) const;
    std::uint64_t order() const { return elements.size(); }
};

// --- closure and subgroup machinery ----------------------------------------

/// Smallest composition-closed set containing the generators and the
/// identity, sorted. Throws CapExceeded past `cap`.
std::vector<Perm> closure(int degree, const std::vector<Perm>& gens,
                          std::uint64_t cap = default_budget().element_cap,
                          const CancelToken& token = {});

/// Smallest normal subgroup of G containing `seeds` (closure of all
/// conjugates), as a sorted element set.
std::vector<Perm> normal_closure(const FiniteGroup& G, const std::vector<Perm>& seeds);

/// Same, but relative to an explicitly given ambient subgroup: conjugators
/// are `ambient_gens`, the result lives inside their closure.
Subgroup normal_closure_in(int degree, const std::vector<Perm>& ambient_gens,
                           const std::vector<Perm>& seeds,
                           std::uint64_t cap = default_budget().element_cap,
                           const CancelToken& token = {});

/// Subgroup generated by all commutators x^{-1}y^{-1}xy. All element pairs
/// are used up to 4096 elements; larger groups switch to the normal closure
/// of generator-pair commutators, which generates the same subgroup.
std::vector<Perm> commutator_subgroup(const FiniteGroup& G);
Subgroup commutator_subgroup(int degree, const Subgroup& H, const CancelToken& token = {});

/// Length of the derived series down to the trivial group (0 for the
/// trivial group, 1 for nontrivial abelian). Throws DomainError when the
/// series stabilizes above the trivial group.
int derived_length(const FiniteGroup& G);

/// Orders of the successive derived subgroups, starting with |G|, ending at 1.
std::vector<std::uint64_t> derived_series_orders(const FiniteGroup& G);

// --- quotients and abelian structure ----------------------------------------

struct CosetQuotient {
    GroupPtr parent;
    std::vector<Perm> normal_subgroup;      // sorted
    std::vector<std::vector<int>> cosets;   // partition of parent element indices
    GroupPtr quotient;                      // faithful on coset points
    std::vector<int> canonical;             // parent element idx -> quotient element idx

    int map(int parent_element_idx) const { return canonical[static_cast<std::size_t>(parent_element_idx)]; }
};

/// Quotient of G by a normal subgroup, acting faithfully on the cosets.
/// Verifies that N is a normal subgroup and that the canonical map is a
/// homomorphism on (element, generator) pairs.
CosetQuotient quotient_group(const GroupPtr& G, const std::vector<Perm>& N);

/// Invariant factors d_1 | d_2 | ... | d_k of an abelian group, computed by
/// the element-order census: for each prime p and each k the number of
/// solutions of x^{p^k}=1 determines the p-rank profile, and the primary
/// factors merge into a divisibility chain. Empty list for the trivial group.
std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& A, bool must_be_abelian = true);

struct Abelianization {
    CosetQuotient quotient;
    std::vector<std::uint64_t> invariants;
};

Abelianization abelianization(const GroupPtr& G);

/// Rank of the p-Sylow subgroup of G/[G,G]: the number of invariant factors
/// of the abelianization divisible by p.
int dg_p(const GroupPtr& G, std::uint64_t p);

/// max over primes p of dg_p(G). Defined through the abelianization, so a
/// nontrivial perfect group is rejected (DomainError); the trivial group
/// gives 0.
int dg(const GroupPtr& G);

/// Minimal size of a subset whose normal closure is all of G, by exhaustive
/// subset search in increasing size. The first subset element ranges over
/// conjugacy class representatives only (normal closure is invariant under
/// conjugating any seed); the rest range over all elements lexicographically.
int dg_brute(const GroupPtr& G, const Budget& budget = default_budget());

/// One representative index per conjugacy class, each the minimal element of
/// its class, listed in ascending order.
std::vector<int> conjugacy_class_reps(const FiniteGroup& G);

// --- nilpotency, Sylow, products --------------------------------------------

/// True iff for every prime p the set of p-power-order elements is closed
/// under multiplication (it is always conjugation-invariant, so it is then a
/// normal Sylow subgroup).
bool is_nilpotent(const FiniteGroup& G);

/// The p-Sylow subgroup of a nilpotent group: all elements of p-power order.
GroupPtr sylow_subgroup(const GroupPtr& G, std::uint64_t p);

GroupPtr direct_product(const GroupPtr& G, const GroupPtr& H, const std::string& label = "");

/// lcm of the element orders.
std::uint64_t exponent(const FiniteGroup& G);

/// Count of elements per multiplicative order (an isomorphism invariant).
std::vector<std::pair<std::uint64_t, std::uint64_t>> order_census(const FiniteGroup& G);

/// Greedy small generating set: repeatedly adjoin the first element outside
/// the closure so far. Deterministic.
std::vector<Perm> small_generating_set(const FiniteGroup& G);
std::vector<Perm> small_generating_set(int degree, const std::vector<Perm>& sorted_elements);

std::vector<std::uint64_t> prime_factors(std::uint64_t n);
bool is_prime(std::uint64_t n);

}  // namespace wreathlab
