#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "common_groups.hpp"
#include "wreathlab/group.hpp"

using namespace wreathlab;
using namespace testgroups;

namespace {

// Oracle: every permutation of {0,1,2}, generated independently of closure().
std::vector<Perm> all_perms_deg3() {
    std::vector<Perm> out;
    std::vector<int> im{0, 1, 2};
    std::sort(im.begin(), im.end());
    do {
        out.push_back(Perm::from_images(im));
    } while (std::next_permutation(im.begin(), im.end()));
    std::sort(out.begin(), out.end());
    return out;
}

// Oracle: all subgroups of a tiny group, by subset enumeration.
std::vector<std::vector<Perm>> all_subgroups_brute(const FiniteGroup& G) {
    const auto& els = G.elements();
    const std::size_t n = els.size();
    REQUIRE(n <= 16);
    std::vector<std::vector<Perm>> subgroups;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (!(mask & 1u)) continue;  // must contain the identity (index 0)
        std::vector<Perm> subset;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) subset.push_back(els[i]);
        bool closed = true;
        for (const Perm& a : subset) {
            for (const Perm& b : subset) {
                Perm c = compose(a, b);
                if (!std::binary_search(subset.begin(), subset.end(), c)) {
                    closed = false;
                    break;
                }
            }
            if (!closed) break;
        }
        if (closed) subgroups.push_back(subset);
    }
    return subgroups;
}

bool is_normal_in(const FiniteGroup& G, const std::vector<Perm>& H) {
    for (const Perm& h : H)
        for (const Perm& g : G.elements())
            if (!std::binary_search(H.begin(), H.end(), h.conjugated_by(g))) return false;
    return true;
}

}  // namespace

TEST_CASE("closure: identity generator") {
    auto c = closure(4, {Perm::identity(4)});
    CHECK(c.size() == 1);
}

TEST_CASE("closure: single 4-cycle gives C4") {
    auto c = closure(4, {Perm::cycle(4, std::vector<int>{0, 1, 2, 3})});
    CHECK(c.size() == 4);
}

TEST_CASE("closure: transposition and 3-cycle give all of Sym(3)") {
    auto c = closure(3, {Perm::cycle(3, std::vector<int>{0, 1}), Perm::cycle(3, std::vector<int>{0, 1, 2})});
    CHECK(c == all_perms_deg3());
}

TEST_CASE("closure is idempotent") {
    auto c = closure(4, {Perm::cycle(4, std::vector<int>{0, 1}), Perm::cycle(4, std::vector<int>{0, 1, 2, 3})});
    CHECK(closure(4, c) == c);
}

TEST_CASE("closure respects the element cap") {
    CHECK_THROWS_AS(closure(5, {Perm::cycle(5, std::vector<int>{0, 1}),
                                Perm::cycle(5, std::vector<int>{0, 1, 2, 3, 4})},
                            /*cap=*/30),
                    CapExceeded);
}

TEST_CASE("FiniteGroup basics") {
    auto G = s3();
    CHECK(G->order() == 6);
    CHECK(G->identity().is_identity());
    CHECK(G->index_of(G->identity()) == 0);
    CHECK(G->contains(Perm::cycle(3, std::vector<int>{0, 2})));
    CHECK_FALSE(G->is_abelian());
    CHECK(cyclic(6)->is_abelian());
}

TEST_CASE("FiniteGroup word_of reconstructs elements") {
    auto G = q8();
    for (int i = 0; i < static_cast<int>(G->order()); ++i) {
        Perm acc = Perm::identity(G->degree());
        for (int gi : G->word_of(i)) acc = compose(acc, G->generators()[static_cast<std::size_t>(gi)]);
        CHECK(acc == G->element(i));
    }
}

TEST_CASE("normal_closure: identity seed gives trivial subgroup") {
    auto G = s3();
    auto n = normal_closure(*G, {G->identity()});
    CHECK(n.size() == 1);
}

TEST_CASE("normal_closure in Sym(3) matches brute-force subgroup oracle") {
    auto G = s3();
    auto subgroups = all_subgroups_brute(*G);

    auto smallest_normal_containing = [&](const Perm& s) {
        std::size_t best = 100;
        std::vector<Perm> result;
        for (const auto& H : subgroups) {
            if (!std::binary_search(H.begin(), H.end(), s)) continue;
            if (!is_normal_in(*G, H)) continue;
            if (H.size() < best) {
                best = H.size();
                result = H;
            }
        }
        return result;
    };

    Perm three_cycle = Perm::cycle(3, std::vector<int>{0, 1, 2});
    CHECK(normal_closure(*G, {three_cycle}) == smallest_normal_containing(three_cycle));
    CHECK(normal_closure(*G, {three_cycle}).size() == 3);

    Perm transposition = Perm::cycle(3, std::vector<int>{0, 1});
    CHECK(normal_closure(*G, {transposition}) == smallest_normal_containing(transposition));
    CHECK(normal_closure(*G, {transposition}).size() == 6);
}

TEST_CASE("commutator subgroup: abelian gives trivial") {
    CHECK(commutator_subgroup(*cyclic(12)).size() == 1);
}

TEST_CASE("commutator subgroup of Sym(3) against direct all-pairs oracle") {
    auto G = s3();
    std::set<Perm> comms;
    for (const Perm& x : G->elements())
        for (const Perm& y : G->elements())
            comms.insert(compose(compose(x.inverse(), y.inverse()), compose(x, y)));
    auto oracle = closure(3, std::vector<Perm>(comms.begin(), comms.end()));
    auto got = commutator_subgroup(*G);
    CHECK(got == oracle);
    CHECK(got.size() == 3);
}

TEST_CASE("commutator subgroup: large-group path agrees with all-pairs path") {
    // Compare the normal-closure-of-generator-commutators route against the
    // all-pairs route on a nonabelian example.
    auto G = dihedral(6);
    Subgroup viaNC = normal_closure_in(G->degree(), G->generators(), [&] {
        std::vector<Perm> seeds;
        for (const Perm& a : G->generators())
            for (const Perm& b : G->generators())
                seeds.push_back(compose(compose(a.inverse(), b.inverse()), compose(a, b)));
        return seeds;
    }());
    CHECK(viaNC.elements == commutator_subgroup(*G));
}

TEST_CASE("derived length") {
    CHECK(derived_length(*trivial()) == 0);
    CHECK(derived_length(*cyclic(5)) == 1);
    CHECK(derived_length(*s3()) == 2);
    CHECK(derived_length(*q8()) == 2);
    CHECK(derived_length(*a4()) == 2);  // derived subgroup is the Klein four-group
    CHECK_THROWS_AS(derived_length(*a5()), DomainError);
}

TEST_CASE("derived series is strictly decreasing until trivial") {
    for (const auto& G : {s3(), q8(), a4(), dihedral(6)}) {
        auto orders = derived_series_orders(*G);
        CHECK(orders.front() == G->order());
        CHECK(orders.back() == 1);
        for (std::size_t i = 1; i < orders.size(); ++i) CHECK(orders[i] < orders[i - 1]);
    }
}

TEST_CASE("quotient by trivial subgroup is the group itself") {
    auto G = s3();
    auto q = quotient_group(G, {G->identity()});
    CHECK(q.quotient->order() == 6);
    CHECK(q.cosets.size() == 6);
}

TEST_CASE("quotient of C4 by its order-2 subgroup") {
    auto G = cyclic(4);
    Perm sq = compose(G->generators()[0], G->generators()[0]);
    auto q = quotient_group(G, {G->identity(), sq});
    CHECK(q.quotient->order() == 2);
}

TEST_CASE("quotient of Sym(3) by its 3-element subgroup") {
    auto G = s3();
    auto N = normal_closure(*G, {Perm::cycle(3, std::vector<int>{0, 1, 2})});
    auto q = quotient_group(G, N);
    CHECK(q.quotient->order() == 2);
    CHECK(q.cosets.size() == 2);
    // canonical map is multiplicative on all pairs (small enough to afford)
    for (std::size_t i = 0; i < G->order(); ++i)
        for (std::size_t j = 0; j < G->order(); ++j) {
            int lhs = q.canonical[static_cast<std::size_t>(
                G->index_of(compose(G->element(static_cast<int>(i)), G->element(static_cast<int>(j)))))];
            Perm rhs = compose(q.quotient->element(q.canonical[i]), q.quotient->element(q.canonical[j]));
            CHECK(lhs == q.quotient->index_of(rhs));
        }
}

TEST_CASE("quotient rejects non-normal subgroups") {
    auto G = s3();
    Perm t = Perm::cycle(3, std::vector<int>{0, 1});
    CHECK_THROWS_AS(quotient_group(G, {G->identity(), t}), DomainError);
}

TEST_CASE("abelian invariants") {
    CHECK(abelian_invariants(*cyclic(6)) == std::vector<std::uint64_t>{6});
    CHECK(abelian_invariants(*direct_product(cyclic(2), cyclic(4))) ==
          std::vector<std::uint64_t>{2, 4});
    // d(2) x d(3) x d(4): prime exponents {2:[2,1], 3:[1]} merge to 12 | ...,
    // i.e. invariant factors [2, 12].
    auto G = direct_product(direct_product(cyclic(2), cyclic(3)), cyclic(4));
    CHECK(abelian_invariants(*G) == std::vector<std::uint64_t>{2, 12});
    CHECK(abelian_invariants(*trivial()).empty());
    CHECK_THROWS_AS(abelian_invariants(*s3()), DomainError);
}

TEST_CASE("abelian invariants: product and divisibility hold for assorted groups") {
    for (const auto& G :
         {cyclic(12), direct_product(cyclic(6), cyclic(4)), direct_product(cyclic(2), cyclic(2))}) {
        auto inv = abelian_invariants(*G);
        std::uint64_t prod = 1;
        for (std::size_t i = 0; i < inv.size(); ++i) {
            CHECK(inv[i] >= 2);
            if (i + 1 < inv.size()) CHECK(inv[i + 1] % inv[i] == 0);
            prod *= inv[i];
        }
        CHECK(prod == G->order());
    }
}

TEST_CASE("abelianization") {
    CHECK(abelianization(s3()).invariants == std::vector<std::uint64_t>{2});
    CHECK(abelianization(dihedral(4)).invariants == std::vector<std::uint64_t>{2, 2});
    CHECK(abelianization(q8()).invariants == std::vector<std::uint64_t>{2, 2});
}

TEST_CASE("dg_p") {
    CHECK(dg_p(dihedral(4), 2) == 2);
    CHECK(dg_p(s3(), 3) == 0);
    CHECK(dg_p(s3(), 2) == 1);
    CHECK_THROWS_AS(dg_p(s3(), 4), DomainError);
}

TEST_CASE("dg") {
    CHECK(dg(s3()) == 1);
    CHECK(dg(dihedral(4)) == 2);
    CHECK(dg(cyclic(6)) == 1);
    CHECK(dg(trivial()) == 0);
    CHECK_THROWS_AS(dg(a5()), DomainError);  // perfect nontrivial
}

TEST_CASE("dg_brute") {
    CHECK(dg_brute(trivial()) == 0);
    CHECK(dg_brute(s3()) == 1);
    CHECK(dg_brute(direct_product(cyclic(2), cyclic(2))) == 2);
    auto c2c2c2 = direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2));
    CHECK(dg_brute(c2c2c2) == 3);
    Budget tiny;
    tiny.brute_cap = 4;
    CHECK_THROWS_AS(dg_brute(s3(), tiny), CapExceeded);
}

TEST_CASE("dg agrees with dg_brute on assorted groups") {
    for (const auto& G : {s3(), dihedral(4), dihedral(5), q8(), a4(), cyclic(9),
                          direct_product(cyclic(2), cyclic(6))}) {
        CHECK(dg(G) == dg_brute(G));
    }
}

TEST_CASE("sylow subgroups of nilpotent groups") {
    CHECK(sylow_subgroup(cyclic(6), 2)->order() == 2);
    CHECK(sylow_subgroup(cyclic(12), 2)->order() == 4);
    CHECK(abelian_invariants(*sylow_subgroup(cyclic(12), 2)) == std::vector<std::uint64_t>{4});
    auto q8c3 = direct_product(q8(), cyclic(3));
    auto syl = sylow_subgroup(q8c3, 2);
    CHECK(syl->order() == 8);
    CHECK(order_census(*syl) == order_census(*q8()));  // element-order census of Q8
    CHECK_THROWS_AS(sylow_subgroup(s3(), 2), DomainError);
}

TEST_CASE("is_nilpotent") {
    CHECK_FALSE(is_nilpotent(*s3()));
    CHECK(is_nilpotent(*q8()));
    CHECK(is_nilpotent(*cyclic(12)));
    CHECK(is_nilpotent(*direct_product(q8(), cyclic(3))));
    CHECK_FALSE(is_nilpotent(*a4()));
    CHECK_FALSE(is_nilpotent(*dihedral(6)));
    CHECK(is_nilpotent(*dihedral(4)));
}

TEST_CASE("direct product") {
    auto G = direct_product(cyclic(2), cyclic(3));
    CHECK(G->order() == 6);
    CHECK(G->is_abelian());
    CHECK(exponent(*G) == 6);
}

TEST_CASE("exponent and order census") {
    CHECK(exponent(*s3()) == 6);
    CHECK(exponent(*q8()) == 4);
    auto census = order_census(*q8());
    // Q8: one identity, one element of order 2, six of order 4.
    CHECK(census == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{1, 1}, {2, 1}, {4, 6}});
}

TEST_CASE("conjugacy class representatives") {
    auto reps = conjugacy_class_reps(*s3());
    CHECK(reps.size() == 3);  // identity, transpositions, 3-cycles
    CHECK(reps[0] == 0);
}

TEST_CASE("small generating set") {
    auto G = direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2));
    auto gens = small_generating_set(*G);
    CHECK(gens.size() == 3);
    CHECK(closure(G->degree(), gens).size() == 8);
}

TEST_CASE("prime helpers") {
    CHECK(prime_factors(12) == std::vector<std::uint64_t>{2, 3});
    CHECK(prime_factors(1).empty());
}
