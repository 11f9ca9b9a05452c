#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "wreathlab/functorial.hpp"
#include "wreathlab/hom.hpp"
#include "wreathlab/wreath.hpp"

namespace wreathlab {

// --- semiabelian membership ----------------------------------------------------

/// One descent step G = A·H: A a nontrivial abelian normal subgroup, H a
/// proper subgroup that is itself semiabelian; the next stage is H. All
/// element sets are permutations of the original group's degree.
struct SemiabelianStep {
    std::vector<Perm> abelian_normal;  // sorted
    std::vector<Perm> complement;      // sorted
};

struct SemiabelianCertificate {
    bool verdict = false;
    std::vector<SemiabelianStep> chain;  // empty when the group is abelian
    std::string terminal;                // description of the abelian stage reached
    std::string counterexample_note;     // set when verdict is false
};

/// Recursive decision procedure with verdict memoization by isomorphism
/// class. Chains are always constructed natively in the queried group's
/// coordinates so they can be re-validated. Memoized lookups are guarded by
/// a mutex; concurrent classification is safe.
class SemiabelianClassifier {
public:
    explicit SemiabelianClassifier(const Budget& budget = default_budget()) : budget_(budget) {}

    SemiabelianCertificate classify(const GroupPtr& G);

    /// Verdict only, via the memo table; cheaper than a full classify when
    /// an isomorphic group has been seen before.
    bool verdict(const GroupPtr& G) { return verdict_memoized(G); }

private:
    bool verdict_memoized(const GroupPtr& G);

    struct MemoEntry {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> census;
        std::vector<std::uint64_t> derived_orders;
        GroupPtr rep;
        bool verdict;
    };
    std::optional<bool> memo_lookup(const GroupPtr& G,
                                    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& census,
                                    const std::vector<std::uint64_t>& derived);
    void memo_store(const GroupPtr& G,
                    std::vector<std::pair<std::uint64_t, std::uint64_t>> census,
                    std::vector<std::uint64_t> derived, bool verdict);

    Budget budget_;
    std::mutex mu_;
    std::vector<MemoEntry> memo_;
};

SemiabelianCertificate is_semiabelian(const GroupPtr& G, const Budget& budget = default_budget());

/// Re-validates every step of a positive certificate against the definition
/// (A abelian, A normal in the stage, A·H = stage, H proper, final stage
/// abelian). Returns an explanation for the first violation, empty if valid.
std::string validate_semiabelian_chain(const GroupPtr& G, const SemiabelianCertificate& cert);

// --- subgroup lattice (needed by the classifier, exposed for tests) ------------

/// Every subgroup of G (orders within the brute cap), as sorted element
/// sets, ordered by (order, elementwise). Includes the trivial subgroup and
/// G itself.
std::vector<std::vector<Perm>> all_subgroups(const GroupPtr& G,
                                             const Budget& budget = default_budget());

// --- epimorphism existence ------------------------------------------------------

enum class SearchStatus { found, refuted, exhausted };

struct EpiSearchResult {
    SearchStatus status = SearchStatus::refuted;
    std::optional<Homomorphism> hom;  // domain: build_tower(spec).carrier
    std::uint64_t nodes = 0;          // search-tree nodes visited
    std::string note;                 // e.g. the pruning rule that refuted
};

/// Searches image tuples for the descending tower's layer generators, in
/// ascending element order, deepest layer first. Candidates are pruned by
/// element-order divisibility, and each partial tuple is filtered by the
/// tower's defining relations evaluated inside G (layer orders, and pairwise
/// commuting of the conjugates of each layer generator under the subgroup
/// generated by the deeper layers) -- a sound and complete homomorphism test
/// that never touches the tower's own element set. The first surviving
/// surjection is certified with the graph criterion and returned;
/// `refuted` means the whole space was exhausted, `exhausted` means the node
/// budget ran out first.
EpiSearchResult epi_exists(const TowerSpec& spec, const GroupPtr& G,
                           const Budget& budget = default_budget());

/// The relation filter itself (exposed so tests can play it against the
/// graph criterion): would mapping the layer generators of the descending
/// tower `orders` to `images` define a homomorphism into G?
bool tower_relations_hold(const std::vector<std::uint64_t>& orders, const GroupPtr& G,
                          const std::vector<Perm>& images);

// --- wreath length ---------------------------------------------------------------

struct WlCertificate {
    std::string group_label;
    std::uint64_t order = 0;
    int dg_value = 0;
    int dl_value = 0;

    int lower = 1;
    std::vector<std::string> lower_reasons;

    std::optional<int> upper;
    std::optional<TowerSpec> witness_spec;
    std::optional<Homomorphism> witness;  // tower -> G, verified epimorphism

    std::optional<int> exact;
    std::string method;  // trivial | cyclic | nilpotent-combination | search | bounds-only

    int refuted_up_to = 0;    // largest length fully refuted by search
    bool caps_interfered = false;
    bool budget_hit = false;
    std::uint64_t nodes = 0;
};

WlCertificate wl_bounds(const GroupPtr& G, SemiabelianClassifier& classifier,
                        const Budget& budget = default_budget());
WlCertificate wl_bounds(const GroupPtr& G, const Budget& budget = default_budget());

// --- the wl = dg characterization -----------------------------------------------

struct WlEqDgCheck {
    bool decided = false;       // bounds sufficed to settle wl ? dg
    bool wl_equals_dg = false;  // valid when decided
    std::optional<std::uint64_t> witness_prime;
    std::optional<TowerSpec> witness_spec;
    std::optional<Homomorphism> witness_hom;  // dg-preserving epimorphism
    bool refuted_at_dg = false;               // wl != dg side: no witness of length dg exists
    bool search_complete = true;              // false if caps/budget left gaps
    bool discrepancy = false;                 // a certified verdict contradicts the witness data
    std::string note;
};

/// Exercises both directions: when wl = dg, exhibits (p, tower with p
/// dividing every factor, dg-preserving epimorphism) of length dg; when
/// wl != dg, exhaustively refutes the existence of such data at length dg.
WlEqDgCheck check_wl_eq_dg_characterization(const GroupPtr& G, const WlCertificate& cert,
                                            const Budget& budget = default_budget());

// --- nilpotent construction -------------------------------------------------------

struct NilpotentTower {
    TowerSpec spec;                                           // merged, length dg(G)
    Homomorphism hom;                                         // tower -> G epimorphism
    std::vector<std::pair<std::uint64_t, TowerSpec>> sylow;   // per-prime towers (padded)
};

/// For a nontrivial nilpotent semiabelian group: per-Sylow cyclic towers of
/// length dg(P_i) found by search, padded with trivial factors to length
/// dg(G), merged layerwise into cyclic factors, with the verified
/// epimorphism assembled through the per-layer quotient reductions. This
/// establishes wl(G) = dg(G).
NilpotentTower nilpotent_tower(const GroupPtr& G, SemiabelianClassifier& classifier,
                               const Budget& budget = default_budget());

// --- assorted -----------------------------------------------------------------------

/// dl(tower(spec)) == spec length for both bracketings (factors all >= 2).
struct DlTowerCheck {
    int expected;
    int descending_dl;
    int ascending_dl;
    bool ok() const { return descending_dl == expected && ascending_dl == expected; }
};
DlTowerCheck dl_tower_check(const TowerSpec& spec, const Budget& budget = default_budget());

/// Smallest prime p = 1 (mod N): realizes the cyclic group of order N with a
/// single ramified prime (tame, via the p-th cyclotomic field).
struct ConductorRecord {
    std::uint64_t n = 0;
    std::uint64_t prime = 0;
    std::uint64_t candidates_checked = 0;
    std::string note;
};
ConductorRecord cyclic_conductor(std::uint64_t N);

/// Exact order of the tower (requires the projection to fit the cap).
std::uint64_t tower_order(const TowerSpec& spec);

/// Divisors of n that are >= 2, ascending.
std::vector<std::uint64_t> nontrivial_divisors(std::uint64_t n);

// --- survey ---------------------------------------------------------------------------

struct SurveyRow {
    std::string label;
    std::uint64_t order = 0;
    std::vector<std::uint64_t> ab_invariants;
    int dg_value = 0;
    int dl_value = 0;
    bool nilpotent = false;
    bool semiabelian = false;
    int wl_lower = 0;
    std::optional<int> wl_upper;
    std::optional<int> wl_exact;
    std::string wl_method;
    bool wl_eq_dg_decided = false;
    bool wl_eq_dg = false;
    std::optional<std::uint64_t> witness_prime;
    std::optional<TowerSpec> witness_spec;
    std::string iso_to;  // earliest isomorphic catalog label, if any
    std::string notes;
};

/// Runs every invariant on each group; rows come back sorted by
/// (order, label) and are deterministic for a fixed budget.
std::vector<SurveyRow> survey(const std::vector<GroupPtr>& selection,
                              const Budget& budget = default_budget());

}  // namespace wreathlab
