#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wreathlab/budget.hpp"
#include "wreathlab/group.hpp"

namespace wreathlab {

// Named constructions. Cyclic groups are single n-cycles, so their natural
// action coincides with the right regular action on sorted elements.
GroupPtr trivial_group(const Budget& budget = default_budget());
GroupPtr cyclic(std::uint64_t n, const Budget& budget = default_budget());
GroupPtr dihedral(std::uint64_t n, const Budget& budget = default_budget());  // order 2n, n >= 2
GroupPtr quaternion8(const Budget& budget = default_budget());
GroupPtr symmetric3(const Budget& budget = default_budget());
GroupPtr alternating4(const Budget& budget = default_budget());

/// The curated catalog: everything named above plus direct products and
/// wreath towers that stay inside the default caps, ordered by
/// (order, label). Labels round-trip through the expression parser.
std::vector<GroupPtr> catalog_groups(std::uint64_t max_order,
                                     const Budget& budget = default_budget());

}  // namespace wreathlab
