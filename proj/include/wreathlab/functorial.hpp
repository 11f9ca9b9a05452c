#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wreathlab/hom.hpp"
#include "wreathlab/wreath.hpp"

namespace wreathlab {

/// The fiber product along a G-map: table' (y) = product over x in phi^-1(y)
/// of table(x), computed in the abelian group A; empty fibers give the
/// identity. Tables hold A element indices.
std::vector<int> fiber_product_table(const GMap& phi, const GroupPtr& A,
                                     const std::vector<int>& table);

/// A wr_X G -> A wr_Y G induced by a G-map phi: (f, g) -> (phi-hat(f), g).
/// Requires A abelian. The map is an epimorphism whenever phi is surjective.
struct InducedFromGmap {
    WreathGroup domain;    // A wr_X G
    WreathGroup codomain;  // A wr_Y G
    Homomorphism hom;
};
InducedFromGmap induced_from_gmap(const GroupPtr& A, const GMap& phi,
                                  const Budget& budget = default_budget());

/// The canonical surjective (B wr C)-map from B wr C (regular action on
/// itself) to B x C (the carrier points of the regular realization, with the
/// defining action): (f, c) -> (f(1), c).
struct CanonicalGmap {
    WreathGroup wreath;  // B wr C, both actions regular, carrier points = B x C
    GMap gmap;
};
CanonicalGmap canonical_gmap_to_product(const GroupPtr& B, const GroupPtr& C,
                                        const Budget& budget = default_budget());

/// h: A -> B lifted to the first argument: A wr G -> B wr G, (f,g) -> (h∘f, g).
struct WreathArgumentMap {
    WreathGroup domain;
    WreathGroup codomain;
    Homomorphism hom;
};
WreathArgumentMap map_first_argument(const Homomorphism& h, const GroupPtr& G,
                                     GroupAction::Kind domain_base = GroupAction::Kind::natural,
                                     GroupAction::Kind codomain_base = GroupAction::Kind::natural,
                                     const Budget& budget = default_budget());

/// psi: G -> H lifted to the second argument (A abelian):
/// (f, g) -> (psi-hat(f), psi(g)) with psi-hat(f)(h) = prod over psi^-1(h).
WreathArgumentMap map_second_argument(const GroupPtr& A, const Homomorphism& psi,
                                      const Budget& budget = default_budget());

/// The bracketing chain A wr (B wr C) -> (A wr B) wr C -> (A x B) wr C with
/// A abelian, assembled from the canonical G-map, the concrete associativity
/// identification (verified to be an isomorphism, never assumed), and the
/// first-argument lift of the squash map A wr B -> A x B.
struct BracketingChain {
    WreathGroup inner;        // B wr C
    WreathGroup domain;       // A wr (B wr C)
    WreathGroup middle;       // A wr_{BxC} (B wr C)
    WreathGroup ascending;    // (A wr B) wr C
    WreathGroup wreath_ab;    // A wr B
    WreathGroup product_side; // (A x B) wr C
    Homomorphism induced;     // domain -> middle
    Homomorphism assoc;       // middle -> ascending, bijective
    Homomorphism first;       // domain -> ascending      (epimorphism)
    Homomorphism squash;      // A wr B -> A x B          (epimorphism)
    Homomorphism second;      // ascending -> product_side (epimorphism)
    Homomorphism composite;   // domain -> product_side
};
BracketingChain induction_step_epis(const GroupPtr& A, const GroupPtr& B, const GroupPtr& C,
                                    const Budget& budget = default_budget());

/// Epimorphism from the descending tower of the given cyclic orders onto the
/// ascending tower, assembled recursively (identity for r <= 2, where the
/// two bracketings coincide). Application order is left to right: the
/// bracketing-chain step first, then the lifted recursive step.
struct DescendingToAscending {
    Tower descending;
    Tower ascending;
    Homomorphism hom;
};
DescendingToAscending descending_to_ascending(const std::vector<std::uint64_t>& orders,
                                              const Budget& budget = default_budget());

/// H wr G -> H_ab x G_ab, (f, g) -> (prod_x f(x)·[H,H], g·[G,G]). Verified
/// epimorphism whose kernel is checked, both by order and as a set, to be
/// the commutator subgroup of the carrier.
struct AbelianizationProjection {
    WreathGroup wreath;  // H wr G, both actions regular
    GroupPtr image;      // H_ab x G_ab
    Homomorphism hom;
    std::vector<std::uint64_t> image_invariants;
};
AbelianizationProjection abelianization_projection(const GroupPtr& H, const GroupPtr& G,
                                                   const Budget& budget = default_budget());

/// Refines a descending tower of abelian groups into a descending tower of
/// their invariant-factor cyclic groups (block order: all factors of A_1,
/// then of A_2, ...), with a verified epimorphism onto the original tower.
/// The map preserves dg_p for every prime.
struct CyclicRefinement {
    TowerSpec refined;
    GroupPtr tower_domain;    // build_tower(refined).carrier realization
    GroupPtr tower_codomain;  // descending wreath of the given factors
    Homomorphism hom;
};
CyclicRefinement cyclic_refinement(const std::vector<GroupPtr>& abelian_factors,
                                   const Budget& budget = default_budget());

/// G = A·H with A abelian normal and H a subgroup: the epimorphism
/// A wr H -> G sending (f, h) to (prod_k k^{-1} f(k) k) · h. Element sets A
/// and H live inside G; hypotheses are verified.
struct SemidirectQuotient {
    WreathGroup domain;  // A wr H
    Homomorphism hom;    // onto G
};
SemidirectQuotient semidirect_quotient(const GroupPtr& G, const std::vector<Perm>& A,
                                       const std::vector<Perm>& H,
                                       const Budget& budget = default_budget());

// --- small building blocks (shared by the constructions above) ---------------

/// (f, g) -> (prod_x f(x), g) from A wr B onto A x B; base must be abelian.
Homomorphism product_squash(const WreathGroup& W, const Budget& budget = default_budget());

/// (f, g) -> prod_x f(x) from A wr B onto A; base must be abelian.
Homomorphism fold_to_base(const WreathGroup& W, const Budget& budget = default_budget());

/// (f, g) -> g, the projection onto the top group.
Homomorphism top_projection(const WreathGroup& W, const Budget& budget = default_budget());

/// Generator-to-generator quotient C_n -> C_m for m | n (standard models).
Homomorphism cyclic_quotient_hom(std::uint64_t n, std::uint64_t m,
                                 const Budget& budget = default_budget());

/// Descending iterated wreath of arbitrary groups with the regular-base
/// realization at every level (single factor: the factor itself; empty: the
/// trivial group). This is the codomain realization of cyclic_refinement.
GroupPtr descending_group_tower(const std::vector<GroupPtr>& factors,
                                const Budget& budget = default_budget());

/// Re-expresses a verified map on a different generating set of the same
/// element set.
Homomorphism rebase_domain(const Homomorphism& h, const GroupPtr& dom,
                           const Budget& budget = default_budget());

}  // namespace wreathlab
