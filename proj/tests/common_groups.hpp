#pragma once

// Small groups built directly from permutations, independent of the catalog
// module, so core tests do not depend on the code they help validate.

#include <vector>

#include "wreathlab/group.hpp"

namespace testgroups {

using wreathlab::FiniteGroup;
using wreathlab::GroupPtr;
using wreathlab::Perm;

inline GroupPtr cyclic(int n) {
    std::vector<int> pts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pts[static_cast<std::size_t>(i)] = i;
    return FiniteGroup::generated(n, {Perm::cycle(n, pts)}, "C" + std::to_string(n));
}

inline GroupPtr trivial() { return FiniteGroup::generated(1, {Perm::identity(1)}, "E"); }

inline GroupPtr s3() {
    return FiniteGroup::generated(
        3, {Perm::cycle(3, std::vector<int>{0, 1}), Perm::cycle(3, std::vector<int>{0, 1, 2})}, "S3");
}

inline GroupPtr dihedral(int n) {
    std::vector<int> rot(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rot[static_cast<std::size_t>(i)] = i;
    std::vector<int> refl(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) refl[static_cast<std::size_t>(i)] = (n - i) % n;
    return FiniteGroup::generated(n, {Perm::cycle(n, rot), Perm::from_images(refl)},
                                  "D" + std::to_string(n));
}

inline GroupPtr q8() {
    // Right regular representation on {1,-1,i,-i,j,-j,k,-k}.
    std::vector<int> mul_i{2, 3, 1, 0, 7, 6, 4, 5};
    std::vector<int> mul_j{4, 5, 6, 7, 1, 0, 3, 2};
    return FiniteGroup::generated(8, {Perm::from_images(mul_i), Perm::from_images(mul_j)}, "Q8");
}

inline GroupPtr a4() {
    return FiniteGroup::generated(
        4, {Perm::cycle(4, std::vector<int>{0, 1, 2}), Perm::cycle(4, std::vector<int>{1, 2, 3})}, "A4");
}

inline GroupPtr a5() {
    return FiniteGroup::generated(
        5, {Perm::cycle(5, std::vector<int>{0, 1, 2, 3, 4}), Perm::cycle(5, std::vector<int>{0, 1, 2})},
        "A5");
}

}  // namespace testgroups
