#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "goldsieve/errors.hpp"
#include "goldsieve/ground.hpp"

using goldsieve::GroundKind;
using goldsieve::GroundSequence;
using goldsieve::Int;

TEST_CASE("naturals") {
    auto g = GroundSequence::naturals();
    CHECK(g.kind() == GroundKind::naturals);
    CHECK(g.term(1) == 1);
    CHECK(g.term(12345) == 12345);
    CHECK(g.is_arith_like());
    CHECK(g.a() == 1);
    CHECK(g.b() == 0);
    CHECK(!g.prefix_size().has_value());
}

TEST_CASE("arithmetic progressions") {
    auto g = GroundSequence::arith(3, 2);
    CHECK(g.term(1) == 5);
    CHECK(g.term(4) == 14);
    CHECK(g.a() == 3);
    CHECK(g.b() == 2);
    CHECK(GroundSequence::arith(1, 0).kind() == GroundKind::naturals);
    CHECK(GroundSequence::arith(1, 1).term(2) == 3);
    CHECK(GroundSequence::arith(4, 4).term(1) == 8);
}

TEST_CASE("arith validation") {
    CHECK_THROWS_AS(GroundSequence::arith(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(GroundSequence::arith(-2, 0), std::invalid_argument);
    CHECK_THROWS_AS(GroundSequence::arith(2, -1), std::invalid_argument);
    CHECK_THROWS_AS(GroundSequence::arith(2, 3), std::invalid_argument);
}

TEST_CASE("squares") {
    auto g = GroundSequence::squares();
    CHECK(g.term(1) == 1);
    CHECK(g.term(7) == 49);
    CHECK(!g.is_arith_like());
}

TEST_CASE("explicit lists") {
    auto g = GroundSequence::explicit_list({2, 3, 7, 50});
    CHECK(g.term(1) == 2);
    CHECK(g.term(4) == 50);
    CHECK(g.prefix_size() == 4);
    CHECK_THROWS_AS(g.term(5), goldsieve::bounded_prefix_error);
    CHECK_THROWS_AS(GroundSequence::explicit_list({}), std::invalid_argument);
    CHECK_THROWS_AS(GroundSequence::explicit_list({3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(GroundSequence::explicit_list({5, 4}), std::invalid_argument);
    CHECK_THROWS_AS(GroundSequence::explicit_list({0, 1}), std::invalid_argument);
}

TEST_CASE("describe names the ground") {
    CHECK(GroundSequence::naturals().describe() == "naturals");
    CHECK(GroundSequence::squares().describe() == "squares");
    CHECK(GroundSequence::arith(2, 1).describe() == "arith(2,1)");
    CHECK(GroundSequence::arith(3, 0).describe() == "arith(3,0)");
    CHECK(GroundSequence::explicit_list({4, 9}).describe() == "explicit[2]");
}
