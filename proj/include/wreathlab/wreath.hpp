#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wreathlab/action.hpp"
#include "wreathlab/budget.hpp"
#include "wreathlab/group.hpp"

namespace wreathlab {

/// Structured element of a wreath product: a table X -> H and a top element
/// of G, both stored as element indices into the respective groups.
struct WreathElement {
    std::vector<int> table;  // length |X|, entries index base group elements
    int top = 0;             // index into top group elements

    friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

/// H wr_X G realized as a permutation group on Y x X, where Y carries the
/// base action of H and X the top action of G. Point layout is row-major
/// with the Y index varying fastest: point(y, x) = x*|Y| + y. The carrier is
/// the faithful image of the pairs (f, g) acting by (y,x) -> (y·f(x), x·g).
class WreathGroup {
public:
    WreathGroup(GroupAction base, GroupAction top, const Budget& budget = default_budget(),
                std::string label = "");

    const GroupAction& base_action() const { return base_; }
    const GroupAction& top_action() const { return top_; }
    const GroupPtr& base_group() const { return base_.group(); }
    const GroupPtr& top_group() const { return top_.group(); }
    const GroupPtr& carrier() const { return carrier_; }

    int num_base_points() const { return base_.num_points(); }
    int num_top_points() const { return top_.num_points(); }
    int point(int y, int x) const { return x * num_base_points() + y; }

    /// |H|^|X| * |G|; the constructor verifies the carrier hits it exactly.
    std::uint64_t full_order() const { return full_order_; }

    Perm encode(const WreathElement& w) const;
    WreathElement decode(const Perm& carrier_perm) const;
    WreathElement identity_element() const;

    /// (f1,g1)(f2,g2) = (f1 * f2^{g1^{-1}}, g1 g2) with f2^{g1^{-1}}(x) = f2(x·g1).
    WreathElement multiply(const WreathElement& a, const WreathElement& b) const;

private:
    GroupAction base_;
    GroupAction top_;
    GroupPtr carrier_;
    std::uint64_t full_order_ = 0;
    std::vector<Perm> base_point_perms_;  // regular base only: element idx -> Y-point perm
};

/// Standard wreath product H wr G: both actions regular (Y = H, X = G), as
/// in the defining construction. The carrier acts on |H|*|G| points.
WreathGroup regular_wreath(const GroupPtr& H, const GroupPtr& G,
                           const Budget& budget = default_budget());

/// Permutational wreath product with explicit actions.
WreathGroup permutational_wreath(GroupAction base, GroupAction top,
                                 const Budget& budget = default_budget(), std::string label = "");

// --- iterated towers ----------------------------------------------------------

enum class Bracketing { descending, ascending };

/// Orders |C_1|,...,|C_r| of cyclic factors plus a bracketing. Order-1
/// factors are legal and skipped during construction (padding).
struct TowerSpec {
    std::vector<std::uint64_t> orders;
    Bracketing bracketing = Bracketing::descending;

    std::string to_string() const;
    int length() const { return static_cast<int>(orders.size()); }
};

/// log2 of the carrier order the spec would produce, computed without
/// building anything; used to refuse oversized towers early.
double projected_log2_order(const TowerSpec& spec);

/// An iterated standard wreath product of cyclic groups, with the layer
/// generating set: generator i is the layer-i cyclic generator placed at the
/// identity position of its layer, trivial everywhere else. Generators come
/// back in spec order (identity perms standing in for order-1 factors) and
/// generate the carrier; generator i has order |C_i|.
struct Tower {
    TowerSpec spec;
    GroupPtr carrier;
    std::vector<Perm> generators;  // length == spec.length()
};

/// Builds the tower. Descending towers nest right-to-left with the regular
/// action of the inner tower on top; ascending towers nest left-to-right
/// with the natural action of the previous carrier as base, so an ascending
/// tower's degree is the product of the factor orders. Throws CapExceeded
/// (reporting the projected order) before building anything oversized.
Tower build_tower(const TowerSpec& spec, const Budget& budget = default_budget());

std::vector<Perm> tower_generators(const TowerSpec& spec, const Budget& budget = default_budget());

/// Iterated standard wreath product of arbitrary groups with the requested
/// bracketing (the mini-language `wr(...)` combinator). Cyclic factors give
/// the same realization as build_tower.
GroupPtr iterated_regular_wreath(const std::vector<GroupPtr>& factors, Bracketing bracketing,
                                 const Budget& budget = default_budget());

}  // namespace wreathlab
