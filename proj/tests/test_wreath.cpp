#include <doctest.h>

#include <cmath>
#include <random>

#include "wreathlab/catalog.hpp"
#include "wreathlab/hom.hpp"
#include "wreathlab/wreath.hpp"

using namespace wreathlab;

namespace {

WreathElement random_element(const WreathGroup& W, std::mt19937_64& rng) {
    WreathElement w = W.identity_element();
    std::uniform_int_distribution<int> base(0, static_cast<int>(W.base_group()->order()) - 1);
    std::uniform_int_distribution<int> top(0, static_cast<int>(W.top_group()->order()) - 1);
    for (int& e : w.table) e = base(rng);
    w.top = top(rng);
    return w;
}

}  // namespace

TEST_CASE("group actions satisfy the right-action laws on generators") {
    for (const GroupPtr& G : {symmetric3(), quaternion8(), cyclic(6)}) {
        for (auto kind : {GroupAction::Kind::natural, GroupAction::Kind::regular}) {
            GroupAction a(G, kind);
            const Perm id = Perm::identity(G->degree());
            for (int x = 0; x < a.num_points(); ++x) {
                CHECK(a.act(x, id) == x);
                for (const Perm& g : G->generators())
                    for (const Perm& h : G->generators())
                        CHECK(a.act(x, compose(g, h)) == a.act(a.act(x, g), h));
            }
        }
    }
}

TEST_CASE("regular action point 0 is the identity element") {
    for (const GroupPtr& G : {symmetric3(), cyclic(8), quaternion8()})
        CHECK(G->identity() == G->element(0));
}

TEST_CASE("wreath multiply: identity is neutral") {
    WreathGroup W = regular_wreath(cyclic(2), cyclic(2));
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        WreathElement w = random_element(W, rng);
        CHECK(W.multiply(W.identity_element(), w) == w);
        CHECK(W.multiply(w, W.identity_element()) == w);
    }
}

TEST_CASE("wreath multiply: the twist spreads a one-position table") {
    // f1 = f2 = delta at position 0, g1 the nontrivial top: the product
    // table must have entries at both positions.
    WreathGroup W = regular_wreath(cyclic(2), cyclic(2));
    WreathElement a{{1, 0}, 1};  // (delta, swap)
    WreathElement b{{1, 0}, 0};  // (delta, 1)
    WreathElement ab = W.multiply(a, b);
    CHECK(ab.table == std::vector<int>{1, 1});
    CHECK(ab.top == 1);
    // cross-check against permutation composition through encode
    CHECK(W.encode(ab) == compose(W.encode(a), W.encode(b)));
}

TEST_CASE("wreath multiply agrees with the permutation image on random triples") {
    WreathGroup W = regular_wreath(cyclic(3), cyclic(2));
    std::mt19937_64 rng(42);
    for (int t = 0; t < 1000; ++t) {
        WreathElement a = random_element(W, rng);
        WreathElement b = random_element(W, rng);
        WreathElement c = random_element(W, rng);
        // homomorphism property of encode
        CHECK(W.encode(W.multiply(a, b)) == compose(W.encode(a), W.encode(b)));
        // associativity via the permutation oracle
        WreathElement left = W.multiply(W.multiply(a, b), c);
        WreathElement right = W.multiply(a, W.multiply(b, c));
        CHECK(left == right);
        CHECK(W.encode(left) == compose(compose(W.encode(a), W.encode(b)), W.encode(c)));
    }
}

TEST_CASE("encode/decode round-trip") {
    for (WreathGroup W :
         {regular_wreath(cyclic(3), cyclic(2)), regular_wreath(symmetric3(), cyclic(2))}) {
        std::mt19937_64 rng(7);
        for (int t = 0; t < 50; ++t) {
            WreathElement w = random_element(W, rng);
            WreathElement back = W.decode(W.encode(w));
            CHECK(back == w);
        }
        // and over every carrier element: decode then encode is the identity
        for (const Perm& p : W.carrier()->elements()) CHECK(W.encode(W.decode(p)) == p);
    }
}

TEST_CASE("permutational wreath orders and degrees") {
    WreathGroup W22 = regular_wreath(cyclic(2), cyclic(2));
    CHECK(W22.carrier()->order() == 8);
    CHECK(W22.carrier()->degree() == 4);

    WreathGroup W32 = regular_wreath(cyclic(3), cyclic(2));
    CHECK(W32.carrier()->order() == 18);
    CHECK(W32.carrier()->degree() == 6);

    WreathGroup W23 = regular_wreath(cyclic(2), cyclic(3));
    CHECK(W23.carrier()->order() == 24);

    // trivial top: H wr E is H itself
    WreathGroup We = regular_wreath(symmetric3(), trivial_group());
    CHECK(We.carrier()->order() == 6);
}

TEST_CASE("regular wreath C2 wr C2 is dihedral of order 8") {
    WreathGroup W = regular_wreath(cyclic(2), cyclic(2));
    auto iso = is_isomorphic(W.carrier(), dihedral(4));
    REQUIRE(iso.has_value());
    CHECK(iso->isomorphism());
    // its commutator subgroup has order 2, so the abelianization has order 4
    CHECK(commutator_subgroup(*W.carrier()).size() == 2);
    CHECK(abelianization(W.carrier()).invariants == std::vector<std::uint64_t>{2, 2});
}

TEST_CASE("wreath respects caps with a projected-order message") {
    Budget tight;
    tight.element_cap = 1000;
    CHECK_THROWS_AS(regular_wreath(cyclic(2), quaternion8(), tight), CapExceeded);
    try {
        build_tower(TowerSpec{{2, 2, 2, 2}, Bracketing::descending}, tight);
        FAIL("expected CapExceeded");
    } catch (const CapExceeded& e) {
        CHECK(std::string(e.what()).find("projected order") != std::string::npos);
    }
}

TEST_CASE("build_tower orders and degrees") {
    Tower d222 = build_tower(TowerSpec{{2, 2, 2}, Bracketing::descending});
    CHECK(d222.carrier->order() == 2048);  // 2^8 * 8
    CHECK(d222.carrier->degree() == 16);

    Tower a222 = build_tower(TowerSpec{{2, 2, 2}, Bracketing::ascending});
    CHECK(a222.carrier->order() == 128);  // 8^2 * 2
    CHECK(a222.carrier->degree() == 8);

    Tower single = build_tower(TowerSpec{{5}, Bracketing::descending});
    CHECK(single.carrier->order() == 5);
    CHECK(single.generators.size() == 1);

    // order formula per construction step, descending: |C1|^|W2| * |W2|
    Tower d32 = build_tower(TowerSpec{{3, 2}, Bracketing::descending});
    CHECK(d32.carrier->order() == 18);
    Tower d43 = build_tower(TowerSpec{{4, 3}, Bracketing::descending});
    CHECK(d43.carrier->order() == 192);  // 4^3 * 3
}

TEST_CASE("trivial factors are skipped during construction") {
    Tower padded = build_tower(TowerSpec{{9, 1}, Bracketing::descending});
    CHECK(padded.carrier->order() == 9);
    CHECK(padded.generators.size() == 2);
    CHECK(padded.generators[1].is_identity());

    Tower t = build_tower(TowerSpec{{1, 3, 1, 2}, Bracketing::descending});
    CHECK(t.carrier->order() == 18);  // same as wr(C3,C2;desc)
}

TEST_CASE("tower generators generate and have the layer orders") {
    for (auto spec : {TowerSpec{{2, 2}, Bracketing::descending},
                      TowerSpec{{3, 2}, Bracketing::descending},
                      TowerSpec{{2, 2, 2}, Bracketing::ascending}}) {
        Tower t = build_tower(spec);
        CHECK(closure(t.carrier->degree(), t.generators).size() == t.carrier->order());
        for (std::size_t i = 0; i < spec.orders.size(); ++i)
            CHECK(t.generators[i].order() == spec.orders[i]);
    }
}

TEST_CASE("tower spec formats as a parsable expression") {
    TowerSpec s{{2, 4, 3}, Bracketing::ascending};
    CHECK(s.to_string() == "wr(C2,C4,C3;asc)");
}

TEST_CASE("iterated wreath of cyclic factors matches build_tower") {
    GroupPtr viaGroups =
        iterated_regular_wreath({cyclic(2), cyclic(2), cyclic(2)}, Bracketing::ascending);
    Tower viaSpec = build_tower(TowerSpec{{2, 2, 2}, Bracketing::ascending});
    CHECK(viaGroups->degree() == viaSpec.carrier->degree());
    CHECK(viaGroups->elements() == viaSpec.carrier->elements());
}

TEST_CASE("projected order matches built order") {
    for (auto spec : {TowerSpec{{2, 2, 2}, Bracketing::descending},
                      TowerSpec{{2, 2, 2}, Bracketing::ascending},
                      TowerSpec{{3, 2}, Bracketing::descending},
                      TowerSpec{{4, 2, 2}, Bracketing::ascending}}) {
        Tower t = build_tower(spec);
        CHECK(std::abs(projected_log2_order(spec) -
                       std::log2(static_cast<double>(t.carrier->order()))) < 1e-6);
    }
}

TEST_CASE("dg_p is additive over one wreath step") {
    // dg_p(H wr G) = dg_p(H) + dg_p(G), over the primes dividing the order.
    struct Pair {
        GroupPtr H, G;
    };
    for (const auto& [H, G] : {Pair{cyclic(2), cyclic(2)}, Pair{cyclic(3), cyclic(2)},
                               Pair{symmetric3(), cyclic(2)}, Pair{cyclic(6), cyclic(2)}}) {
        WreathGroup W = regular_wreath(H, G);
        for (std::uint64_t p : prime_factors(W.carrier()->order()))
            CHECK(dg_p(W.carrier(), p) == dg_p(H, p) + dg_p(G, p));
    }
}

TEST_CASE("derived length of towers equals the number of layers") {
    CHECK(derived_length(*build_tower(TowerSpec{{2, 2}, Bracketing::descending}).carrier) == 2);
    CHECK(derived_length(*build_tower(TowerSpec{{2, 2, 2}, Bracketing::descending}).carrier) == 3);
    CHECK(derived_length(*build_tower(TowerSpec{{2, 2, 2}, Bracketing::ascending}).carrier) == 3);
    CHECK(derived_length(*build_tower(TowerSpec{{7}, Bracketing::ascending}).carrier) == 1);
}
