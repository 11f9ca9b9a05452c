#include <doctest.h>

#include <set>

#include "wreathlab/catalog.hpp"
#include "wreathlab/expr.hpp"
#include "wreathlab/invariants.hpp"

using namespace wreathlab;

TEST_CASE("all_subgroups enumerates the full lattice") {
    auto subsS3 = all_subgroups(symmetric3());
    CHECK(subsS3.size() == 6);  // 1, three C2, C3, S3

    auto subsQ8 = all_subgroups(quaternion8());
    CHECK(subsQ8.size() == 6);  // 1, Z, three C4, Q8

    auto subsC6 = all_subgroups(cyclic(6));
    CHECK(subsC6.size() == 4);  // one per divisor
}

TEST_CASE("is_semiabelian: abelian groups answer yes with an empty chain") {
    for (const GroupPtr& G : {cyclic(7), direct_product(cyclic(2), cyclic(4)), trivial_group()}) {
        SemiabelianCertificate c = is_semiabelian(G);
        CHECK(c.verdict);
        CHECK(c.chain.empty());
    }
}

TEST_CASE("is_semiabelian: S3 descends through its 3-element subgroup") {
    SemiabelianCertificate c = is_semiabelian(symmetric3());
    CHECK(c.verdict);
    REQUIRE(c.chain.size() == 1);
    CHECK(c.chain[0].abelian_normal.size() == 3);
    CHECK(c.chain[0].complement.size() == 2);
    CHECK(validate_semiabelian_chain(symmetric3(), c).empty());
}

TEST_CASE("is_semiabelian: Q8 = C4 . C4") {
    SemiabelianCertificate c = is_semiabelian(quaternion8());
    CHECK(c.verdict);
    REQUIRE(c.chain.size() == 1);
    CHECK(c.chain[0].abelian_normal.size() == 4);
    CHECK(c.chain[0].complement.size() == 4);
    CHECK(validate_semiabelian_chain(quaternion8(), c).empty());
}

TEST_CASE("is_semiabelian with chains across the required catalog groups") {
    for (const char* expr : {"S3", "D4", "D5", "D6", "Q8", "A4"}) {
        GroupPtr G = parse_group_expression(expr);
        SemiabelianCertificate c = is_semiabelian(G);
        CHECK(c.verdict);
        CHECK(validate_semiabelian_chain(G, c).empty());
    }
}

TEST_CASE("chain validation rejects doctored chains") {
    GroupPtr S3 = symmetric3();
    SemiabelianCertificate c = is_semiabelian(S3);
    REQUIRE(c.verdict);
    SemiabelianCertificate bad = c;
    bad.chain[0].complement = bad.chain[0].abelian_normal;  // not a complement
    CHECK_FALSE(validate_semiabelian_chain(S3, bad).empty());
}

TEST_CASE("tower order and divisors helpers") {
    CHECK(tower_order(TowerSpec{{2, 2, 2}, Bracketing::descending}) == 2048);
    CHECK(tower_order(TowerSpec{{2, 2, 2}, Bracketing::ascending}) == 128);
    CHECK(tower_order(TowerSpec{{3, 2}, Bracketing::descending}) == 18);
    CHECK(tower_order(TowerSpec{{1, 5}, Bracketing::descending}) == 5);
    CHECK(nontrivial_divisors(12) == std::vector<std::uint64_t>{2, 3, 4, 6, 12});
}

TEST_CASE("tower relation filter agrees with the graph criterion everywhere") {
    // Exhaustive comparison over every image pair for a few (spec, G) combos.
    struct Case {
        TowerSpec spec;
        GroupPtr G;
    };
    for (const auto& [spec, G] :
         {Case{TowerSpec{{2, 2}, Bracketing::descending}, symmetric3()},
          Case{TowerSpec{{3, 2}, Bracketing::descending}, symmetric3()},
          Case{TowerSpec{{2, 2}, Bracketing::descending}, dihedral(4)},
          Case{TowerSpec{{4, 2}, Bracketing::descending}, quaternion8()}}) {
        Tower t = build_tower(spec);
        for (std::uint64_t i = 0; i < G->order(); ++i)
            for (std::uint64_t j = 0; j < G->order(); ++j) {
                std::vector<Perm> images{G->element(static_cast<int>(i)),
                                         G->element(static_cast<int>(j))};
                bool filter = tower_relations_hold(spec.orders, G, images);
                bool graph = verify_homomorphism(t.carrier, G, images).verified();
                CHECK(filter == graph);
            }
    }
}

TEST_CASE("epi_exists: cyclic quotients of a single layer") {
    EpiSearchResult r = epi_exists(TowerSpec{{6}, Bracketing::descending}, cyclic(3));
    CHECK(r.status == SearchStatus::found);
    CHECK(r.hom->surjective());

    EpiSearchResult none = epi_exists(TowerSpec{{4}, Bracketing::descending}, cyclic(3));
    CHECK(none.status == SearchStatus::refuted);  // 3 does not divide 4
}

TEST_CASE("epi_exists: [3,2] covers S3, [2,2] cannot") {
    EpiSearchResult found = epi_exists(TowerSpec{{3, 2}, Bracketing::descending}, symmetric3());
    CHECK(found.status == SearchStatus::found);
    CHECK(found.hom->surjective());
    CHECK(found.hom->kernel_order() == 3);  // 18 / 6

    // cross-check: the same epimorphism arises from the semidirect structure
    auto A = normal_closure(*symmetric3(), {Perm::cycle(3, std::vector<int>{0, 1, 2})});
    std::vector<Perm> H{Perm::identity(3), Perm::cycle(3, std::vector<int>{0, 1})};
    SemidirectQuotient sq = semidirect_quotient(symmetric3(), A, H);
    CHECK(sq.hom.kernel_order() == found.hom->kernel_order());

    EpiSearchResult lagrange = epi_exists(TowerSpec{{2, 2}, Bracketing::descending}, symmetric3());
    CHECK(lagrange.status == SearchStatus::refuted);
    CHECK(lagrange.note.find("divisible") != std::string::npos);
}

TEST_CASE("epi_exists reports budget exhaustion distinctly") {
    Budget tiny;
    tiny.tuple_budget = 2;
    EpiSearchResult r = epi_exists(TowerSpec{{4, 2}, Bracketing::descending}, dihedral(4), tiny);
    CHECK(r.status == SearchStatus::exhausted);
}

TEST_CASE("wl_bounds: dihedral of order 8 has exact wl 2 = dg") {
    WlCertificate c = wl_bounds(dihedral(4));
    CHECK(c.dg_value == 2);
    CHECK(c.exact == 2);
    CHECK(c.witness->surjective());
    CHECK(c.method == "nilpotent-combination");
}

TEST_CASE("wl_bounds: S3 has exact wl 2 with dg 1") {
    WlCertificate c = wl_bounds(symmetric3());
    CHECK(c.dg_value == 1);
    CHECK(c.dl_value == 2);
    CHECK(c.lower == 2);
    CHECK(c.exact == 2);
    CHECK(c.method == "search");
    CHECK(c.witness_spec->orders == std::vector<std::uint64_t>{3, 2});
}

TEST_CASE("wl_bounds: cyclic groups have wl 1") {
    for (std::uint64_t n : {2, 5, 12}) {
        WlCertificate c = wl_bounds(cyclic(n));
        CHECK(c.exact == 1);
        CHECK(c.method == "cyclic");
    }
    WlCertificate e = wl_bounds(trivial_group());
    CHECK(e.exact == 1);
    CHECK(e.dg_value == 0);
}

TEST_CASE("wl_bounds: Q8 via the nilpotent construction") {
    WlCertificate c = wl_bounds(quaternion8());
    CHECK(c.exact == 2);
    CHECK(c.method == "nilpotent-combination");
    CHECK(c.witness_spec->orders == std::vector<std::uint64_t>{4, 4});
}

TEST_CASE("wl_bounds: A4 resolves by search at its derived-length bound") {
    WlCertificate c = wl_bounds(alternating4());
    CHECK(c.dg_value == 1);
    CHECK(c.dl_value == 2);
    CHECK(c.exact == 2);
    CHECK(c.witness->surjective());
}

TEST_CASE("nilpotent_tower examples") {
    SemiabelianClassifier cls;

    NilpotentTower c6 = nilpotent_tower(cyclic(6), cls);
    CHECK(c6.spec.orders == std::vector<std::uint64_t>{6});
    CHECK(c6.hom.isomorphism());

    NilpotentTower q8 = nilpotent_tower(quaternion8(), cls);
    CHECK(q8.spec.orders == std::vector<std::uint64_t>{4, 4});
    CHECK(q8.hom.surjective());

    // (C2 x C2) x C9 merges the per-prime towers into [18, 2]
    GroupPtr G = direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(9));
    NilpotentTower nt = nilpotent_tower(G, cls);
    CHECK(nt.spec.orders == std::vector<std::uint64_t>{18, 2});
    CHECK(nt.hom.surjective());
    CHECK(nt.hom.image_order() == 36);

    CHECK_THROWS_AS(nilpotent_tower(symmetric3(), cls), DomainError);
}

TEST_CASE("characterization: groups with wl = dg carry a witness") {
    SemiabelianClassifier cls;
    for (const char* expr : {"D4", "Q8", "C6", "C2*C2"}) {
        GroupPtr G = parse_group_expression(expr);
        WlCertificate cert = wl_bounds(G, cls);
        WlEqDgCheck chk = check_wl_eq_dg_characterization(G, cert);
        CHECK(chk.decided);
        CHECK(chk.wl_equals_dg);
        CHECK_FALSE(chk.discrepancy);
        REQUIRE(chk.witness_prime.has_value());
        REQUIRE(chk.witness_spec.has_value());
        for (std::uint64_t n : chk.witness_spec->orders)
            if (n > 1) CHECK(n % *chk.witness_prime == 0);
        CHECK(chk.witness_hom->surjective());
    }
}

TEST_CASE("characterization: S3 has no witness at length dg = 1") {
    SemiabelianClassifier cls;
    WlCertificate cert = wl_bounds(symmetric3(), cls);
    WlEqDgCheck chk = check_wl_eq_dg_characterization(symmetric3(), cert);
    CHECK(chk.decided);
    CHECK_FALSE(chk.wl_equals_dg);
    CHECK(chk.refuted_at_dg);
    CHECK(chk.search_complete);
    CHECK_FALSE(chk.discrepancy);
}

TEST_CASE("dl_tower_check") {
    DlTowerCheck c22 = dl_tower_check(TowerSpec{{2, 2}, Bracketing::descending});
    CHECK(c22.ok());
    CHECK(c22.expected == 2);
    DlTowerCheck c222 = dl_tower_check(TowerSpec{{2, 2, 2}, Bracketing::descending});
    CHECK(c222.ok());
    DlTowerCheck single = dl_tower_check(TowerSpec{{7}, Bracketing::descending});
    CHECK(single.ok());
    CHECK(single.expected == 1);
    CHECK_THROWS_AS(dl_tower_check(TowerSpec{{1, 2}, Bracketing::descending}), DomainError);
}

TEST_CASE("cyclic_conductor finds the least prime = 1 mod N") {
    CHECK(cyclic_conductor(3).prime == 7);
    CHECK(cyclic_conductor(4).prime == 5);
    CHECK(cyclic_conductor(5).prime == 11);
    CHECK(cyclic_conductor(8).prime == 17);
    CHECK(cyclic_conductor(12).prime == 13);
    CHECK_THROWS_AS(cyclic_conductor(1), DomainError);
}

namespace {

// SL(2,3) as a degree-8 permutation group: the regular image of the
// quaternions extended by the order-3 automorphism cycling i -> j -> k.
GroupPtr special_linear_2_3() {
    std::vector<int> mul_i{2, 3, 1, 0, 7, 6, 4, 5};
    std::vector<int> mul_j{4, 5, 6, 7, 1, 0, 3, 2};
    std::vector<int> rot{0, 1, 4, 5, 6, 7, 2, 3};
    return FiniteGroup::generated(
        8, {Perm::from_images(mul_i), Perm::from_images(mul_j), Perm::from_images(rot)}, "SL23");
}

}  // namespace

TEST_CASE("a group outside the family is refuted with a note") {
    GroupPtr G = special_linear_2_3();
    REQUIRE(G->order() == 24);
    SemiabelianCertificate c = is_semiabelian(G);
    CHECK_FALSE(c.verdict);
    CHECK(c.counterexample_note.find("no pair") != std::string::npos);
    CHECK_FALSE(validate_semiabelian_chain(G, c).empty());

    // the survey reports the verdict and leaves wl open
    std::vector<SurveyRow> rows = survey({G});
    REQUIRE(rows.size() == 1);
    CHECK_FALSE(rows[0].semiabelian);
    CHECK(rows[0].notes.find("not semiabelian") != std::string::npos);
    CHECK_FALSE(rows[0].wl_exact.has_value());

    SemiabelianClassifier cls;
    CHECK_THROWS_AS(wl_bounds(G, cls), DomainError);
}

TEST_CASE("wl certificates degrade to bounds when the budget is tiny") {
    Budget tiny;
    tiny.tuple_budget = 1;
    WlCertificate c = wl_bounds(symmetric3(), tiny);
    CHECK_FALSE(c.exact.has_value());
    CHECK(c.method == "bounds-only");
    CHECK(c.budget_hit);
    CHECK(c.lower == 2);

    WlEqDgCheck chk = check_wl_eq_dg_characterization(symmetric3(), c, tiny);
    CHECK(chk.decided);  // lower > dg settles the verdict without the exact value
    CHECK_FALSE(chk.wl_equals_dg);
}

TEST_CASE("epi_exists refuses towers past the caps") {
    CHECK_THROWS_AS(epi_exists(TowerSpec{{2, 2, 3}, Bracketing::descending}, symmetric3()),
                    CapExceeded);
}

TEST_CASE("degenerate tower specs") {
    EpiSearchResult onto_trivial =
        epi_exists(TowerSpec{{1}, Bracketing::descending}, trivial_group());
    CHECK(onto_trivial.status == SearchStatus::found);
    EpiSearchResult undersized = epi_exists(TowerSpec{{1}, Bracketing::descending}, cyclic(2));
    CHECK(undersized.status == SearchStatus::refuted);
}

TEST_CASE("all_subgroups respects the brute cap") {
    Budget tight;
    tight.brute_cap = 4;
    CHECK_THROWS_AS(all_subgroups(symmetric3(), tight), CapExceeded);
}

TEST_CASE("survey rows carry consistent certificates") {
    std::vector<GroupPtr> sel{cyclic(2), symmetric3(), dihedral(4),
                              parse_group_expression("wr(C2,C2;desc)")};
    std::vector<SurveyRow> rows = survey(sel);
    REQUIRE(rows.size() == 4);

    CHECK(rows[0].label == "C2");
    CHECK(rows[0].dg_value == 1);
    CHECK(rows[0].dl_value == 1);
    CHECK(rows[0].wl_exact == 1);

    CHECK(rows[1].label == "S3");
    CHECK(rows[1].order == 6);
    CHECK(rows[1].ab_invariants == std::vector<std::uint64_t>{2});
    CHECK(rows[1].dg_value == 1);
    CHECK(rows[1].dl_value == 2);
    CHECK(rows[1].semiabelian);
    CHECK(rows[1].wl_exact == 2);
    CHECK(rows[1].wl_eq_dg_decided);
    CHECK_FALSE(rows[1].wl_eq_dg);

    // D4 before wr(C2,C2;desc) alphabetically; the wreath row notes the iso
    CHECK(rows[2].label == "D4");
    CHECK(rows[2].wl_eq_dg);
    CHECK(rows[2].witness_prime == 2);
    CHECK(rows[3].label == "wr(C2,C2;desc)");
    CHECK(rows[3].iso_to == "D4");
}
