#include <doctest.h>

#include "wreathlab/expr.hpp"
#include "wreathlab/group.hpp"

using namespace wreathlab;

TEST_CASE("atoms") {
    CHECK(parse_group_expression("E")->order() == 1);
    CHECK(parse_group_expression("C2")->order() == 2);
    CHECK(parse_group_expression("C12")->order() == 12);
    CHECK(parse_group_expression("D4")->order() == 8);
    CHECK(parse_group_expression("Q8")->order() == 8);
    CHECK(parse_group_expression("S3")->order() == 6);
    CHECK(parse_group_expression("A4")->order() == 12);
}

TEST_CASE("direct products and parentheses") {
    CHECK(parse_group_expression("C2*C3")->order() == 6);
    CHECK(parse_group_expression("C2 * C2 * C2")->order() == 8);
    CHECK(parse_group_expression("(C2*C3)*C4")->order() == 24);
    CHECK(parse_group_expression("C2*(C3*C4)")->order() == 24);
}

TEST_CASE("wreath combinator") {
    CHECK(parse_group_expression("wr(C2,C2;desc)")->order() == 8);
    CHECK(parse_group_expression("wr(C2,C2,C2;desc)")->order() == 2048);
    CHECK(parse_group_expression("wr(C2,C2,C2;asc)")->order() == 128);
    CHECK(parse_group_expression("wr(C3,C2;desc)")->order() == 18);
    CHECK(parse_group_expression("wr(S3;desc)")->order() == 6);  // single factor
    CHECK(parse_group_expression("wr(C2*C2,C2;asc)")->order() == 32);
}

TEST_CASE("whitespace is insignificant") {
    CHECK(parse_group_expression("  wr( C3 , C2 ; desc )  ")->order() == 18);
    CHECK(parse_group_expression("C2\t*\nC3")->order() == 6);
}

TEST_CASE("labels round-trip through the parser") {
    for (const char* e : {"C6", "C2*C4", "D5", "wr(C2,C3;desc)", "wr(C2,C2,C2;asc)"}) {
        GroupPtr g = parse_group_expression(e);
        CHECK(g->label() == e);
        GroupPtr again = parse_group_expression(g->label());
        CHECK(again->order() == g->order());
        CHECK(again->elements() == g->elements());
    }
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_group_expression("C1"), ParseError);
    try {
        parse_group_expression("C2**C3");
    } catch (const ParseError& e) {
        CHECK(e.pos == 3);
    }
    CHECK_THROWS_AS(parse_group_expression(""), ParseError);
    CHECK_THROWS_AS(parse_group_expression("C2*"), ParseError);
    CHECK_THROWS_AS(parse_group_expression("wr(C2,C2)"), ParseError);       // missing bracketing
    CHECK_THROWS_AS(parse_group_expression("wr(C2,C2;down)"), ParseError);  // unknown bracketing
    CHECK_THROWS_AS(parse_group_expression("X5"), ParseError);
    CHECK_THROWS_AS(parse_group_expression("C2)"), ParseError);  // trailing input

    try {
        parse_group_expression("C1");
        FAIL("C1 must be rejected");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("trivial group is 'E'") != std::string::npos);
    }
}

TEST_CASE("caps flow through the parser") {
    Budget tight;
    tight.element_cap = 100;
    CHECK_THROWS_AS(parse_group_expression("wr(C2,C2,C2;asc)", tight), CapExceeded);
}
