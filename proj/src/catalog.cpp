#include "wreathlab/catalog.hpp"

#include <algorithm>
#include <numeric>

#include "wreathlab/expr.hpp"
#include "wreathlab/wreath.hpp"

namespace wreathlab {

GroupPtr trivial_group(const Budget& budget) {
    return FiniteGroup::generated(1, {Perm::identity(1)}, "E", budget);
}

GroupPtr cyclic(std::uint64_t n, const Budget& budget) {
    if (n < 1) throw DomainError("cyclic: order must be positive");
    if (n == 1) return trivial_group(budget);
    std::vector<int> pts(static_cast<std::size_t>(n));
    std::iota(pts.begin(), pts.end(), 0);
    return FiniteGroup::generated(static_cast<int>(n), {Perm::cycle(static_cast<int>(n), pts)},
                                  "C" + std::to_string(n), budget);
}

GroupPtr dihedral(std::uint64_t n, const Budget& budget) {
    if (n < 2) throw DomainError("dihedral: need n >= 2 (order 2n)");
    std::vector<int> rot(static_cast<std::size_t>(n));
    std::iota(rot.begin(), rot.end(), 0);
    std::vector<int> refl(static_cast<std::size_t>(n));
    for (std::uint64_t i = 0; i < n; ++i)
        refl[static_cast<std::size_t>(i)] = static_cast<int>((n - i) % n);
    return FiniteGroup::generated(static_cast<int>(n),
                                  {Perm::cycle(static_cast<int>(n), rot), Perm::from_images(refl)},
                                  "D" + std::to_string(n), budget);
}

GroupPtr quaternion8(const Budget& budget) {
    // Right regular representation on {1,-1,i,-i,j,-j,k,-k}.
    std::vector<int> mul_i{2, 3, 1, 0, 7, 6, 4, 5};
    std::vector<int> mul_j{4, 5, 6, 7, 1, 0, 3, 2};
    return FiniteGroup::generated(8, {Perm::from_images(mul_i), Perm::from_images(mul_j)}, "Q8",
                                  budget);
}

GroupPtr symmetric3(const Budget& budget) {
    return FiniteGroup::generated(
        3, {Perm::cycle(3, std::vector<int>{0, 1}), Perm::cycle(3, std::vector<int>{0, 1, 2})}, "S3",
        budget);
}

GroupPtr alternating4(const Budget& budget) {
    return FiniteGroup::generated(
        4, {Perm::cycle(4, std::vector<int>{0, 1, 2}), Perm::cycle(4, std::vector<int>{1, 2, 3})},
        "A4", budget);
}

std::vector<GroupPtr> catalog_groups(std::uint64_t max_order, const Budget& budget) {
    // Curated, not exhaustive: all atoms, the small direct products and the
    // wreath towers whose invariants stay computable inside default caps.
    static const char* kExpressions[] = {
        "E",
        "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12",
        "C2*C2", "C2*C4", "C2*C6", "C2*C2*C2", "C2*C2*C3", "C3*C3", "C4*C4",
        "C2*C8", "C2*C10", "C2*C12", "C3*C6", "C5*C5", "C6*C6",
        "D3", "D4", "D5", "D6", "D7", "D8",
        "S3", "A4", "Q8",
        "Q8*C3", "D4*C3", "S3*C3",
        "wr(C2,C2;desc)", "wr(C3,C2;desc)", "wr(C2,C3;desc)",
        "wr(C4,C2;desc)", "wr(C2,C4;desc)",
        "wr(C2,C2,C2;asc)",
    };
    std::vector<GroupPtr> out;
    for (const char* e : kExpressions) {
        GroupPtr g = parse_group_expression(e, budget);
        if (g->order() <= max_order) out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(), [](const GroupPtr& a, const GroupPtr& b) {
        if (a->order() != b->order()) return a->order() < b->order();
        return a->label() < b->label();
    });
    return out;
}

}  // namespace wreathlab
