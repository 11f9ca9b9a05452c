#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wreathlab/group.hpp"

namespace wreathlab {

/// A right action of a finite group on a finite point set. Two kinds cover
/// everything the engine needs:
///   natural — the group's own permutation action on its degree points;
///   regular — the group acting on its sorted element list by right
///             multiplication (point i is element(i), so point 0 is the
///             identity).
/// Both are faithful; right-action laws hold by construction and are
/// re-checked exhaustively on generators in tests.
class GroupAction {
public:
    enum class Kind { natural, regular };

    GroupAction() = default;
    GroupAction(GroupPtr group, Kind kind) : group_(std::move(group)), kind_(kind) {}

    static GroupAction natural(GroupPtr group) { return {std::move(group), Kind::natural}; }
    static GroupAction regular(GroupPtr group) { return {std::move(group), Kind::regular}; }

    const GroupPtr& group() const { return group_; }
    Kind kind() const { return kind_; }

    int num_points() const {
        return kind_ == Kind::natural ? group_->degree() : static_cast<int>(group_->order());
    }

    /// point · g, for g an element of the acting group.
    int act(int point, const Perm& g) const {
        if (kind_ == Kind::natural) return g[point];
        int idx = group_->index_of(compose(group_->element(point), g));
        if (idx < 0) throw DomainError("regular action applied to a non-element");
        return idx;
    }

private:
    GroupPtr group_;
    Kind kind_ = Kind::natural;
};

/// An equivariant map between two right G-sets: phi(x·g) = phi(x)·g.
/// Equivariance is checked exhaustively over all points and generators at
/// construction time.
struct GMap {
    GroupAction source;        // G on X
    GroupAction target;        // G on Y
    std::vector<int> map;      // X point -> Y point
    std::string label;

    bool surjective() const;

    /// Fibers phi^{-1}(y) as point lists, indexed by target point.
    std::vector<std::vector<int>> fibers() const;
};

/// Builds and validates a GMap. Throws DomainError if the two actions are of
/// different groups or the map is not equivariant.
GMap make_gmap(GroupAction source, GroupAction target, std::vector<int> map, std::string label);

}  // namespace wreathlab
