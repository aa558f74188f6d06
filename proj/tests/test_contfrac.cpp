#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "goldsieve/contfrac.hpp"
#include "goldsieve/surd.hpp"
#include "support/reference_data.hpp"

using goldsieve::BigInt;
using goldsieve::Int;
using goldsieve::QuadSurd;

namespace {

std::vector<BigInt> big(std::initializer_list<Int> xs) {
    return std::vector<BigInt>(xs.begin(), xs.end());
}

}

TEST_CASE("golden ratio expands to [1; (1)]") {
    auto cf = goldsieve::cf_expand(goldsieve::golden_ratio());
    CHECK(cf.preperiod == big({1}));
    CHECK(cf.period == big({1}));
}

TEST_CASE("sqrt 2 and sqrt 3") {
    auto rt2 = goldsieve::cf_expand(QuadSurd::sqrt_of(BigInt(2)));
    CHECK(rt2.preperiod == big({1}));
    CHECK(rt2.period == big({2}));
    auto rt3 = goldsieve::cf_expand(QuadSurd::sqrt_of(BigInt(3)));
    CHECK(rt3.preperiod == big({1}));
    CHECK(rt3.period == big({1, 2}));
}

TEST_CASE("negative and shifted inputs") {
    // -phi = [-2; 2, (1)]: floor(-1.618) = -2, remainder 1/0.382 = 2.618...
    auto cf = goldsieve::cf_expand(-goldsieve::golden_ratio());
    CHECK(cf.preperiod.front() == -2);
    auto quotients = goldsieve::cf_unroll(cf, 8);
    // reconstruct via convergents and compare floors of tail values
    auto conv = goldsieve::cf_convergents(quotients);
    auto [pn, qn] = conv.back();
    // p/q should approximate -phi to within 1/q^2
    QuadSurd approx_err =
        goldsieve::golden_ratio() + QuadSurd::rational(pn, qn);
    QuadSurd bound = QuadSurd::rational(BigInt(1), qn * qn);
    CHECK(approx_err < bound);
    CHECK(-bound < approx_err);
}

TEST_CASE("rational input is rejected") {
    CHECK_THROWS_AS(goldsieve::cf_expand(QuadSurd::rational(BigInt(7), BigInt(3))),
                    std::invalid_argument);
}

TEST_CASE("survivor slope family [1; (a, 1)]") {
    for (Int a = 2; a <= 20; ++a) {
        auto cf = goldsieve::cf_expand(goldsieve::survivor_slope(a));
        CHECK(cf.preperiod == big({1}));
        CHECK(cf.period == big({a, 1}));
    }
    auto collapse = goldsieve::cf_expand(goldsieve::survivor_slope(1));
    CHECK(collapse.period == big({1}));
}

TEST_CASE("deletion slope family [a+1; (1, a)]") {
    for (Int a = 2; a <= 20; ++a) {
        auto cf = goldsieve::cf_expand(goldsieve::deletion_slope(a));
        CHECK(cf.preperiod == big({a + 1}));
        CHECK(cf.period == big({1, a}));
    }
}

TEST_CASE("double-sieve slope expansions match the worked rows") {
    for (const auto& row : refdata::gamma_cf) {
        auto cf = goldsieve::cf_expand(goldsieve::double_pointer_slope(row.param));
        CHECK(cf.preperiod == std::vector<BigInt>(row.preperiod.begin(), row.preperiod.end()));
        CHECK(cf.period == std::vector<BigInt>(row.period.begin(), row.period.end()));
    }
    auto a12 = goldsieve::cf_expand(goldsieve::double_pointer_slope(12));
    CHECK(static_cast<Int>(a12.period.size()) == refdata::gamma_cf_period_len_a12);
}

TEST_CASE("power-of-two period prediction") {
    for (Int k = 1; k <= 10; ++k) {
        auto cf = goldsieve::cf_expand(goldsieve::double_pointer_slope(Int{1} << k));
        auto expected = goldsieve::gamma_pow2_expected_period(k);
        CHECK(cf.period == expected);
        CHECK(static_cast<Int>(cf.period.size()) == 2 * k + 3);
    }
}

TEST_CASE("family check rows are all green") {
    auto rows = goldsieve::check_cf_families(20, 10);
    CHECK(goldsieve::cf_families_ok(rows));
    for (const auto& row : rows) {
        INFO(row.label, ": expected ", row.expected, ", got ", row.actual);
        CHECK(row.ok);
    }
}

TEST_CASE("render and unroll") {
    auto cf = goldsieve::cf_expand(goldsieve::double_pointer_slope(4));
    CHECK(goldsieve::render_cf(cf) == "[2; (4, 1, 9, 1, 4, 2, 2)]");
    auto q = goldsieve::cf_unroll(cf, 10);
    CHECK(q == big({2, 4, 1, 9, 1, 4, 2, 2, 4, 1}));
    auto rt2 = goldsieve::cf_expand(QuadSurd::sqrt_of(BigInt(2)));
    CHECK(goldsieve::render_cf(rt2) == "[1; (2)]");
}

TEST_CASE("convergents satisfy the determinant identity") {
    auto cf = goldsieve::cf_expand(goldsieve::survivor_slope(3));
    auto conv = goldsieve::cf_convergents(goldsieve::cf_unroll(cf, 12));
    for (std::size_t i = 1; i < conv.size(); ++i) {
        BigInt det = conv[i].first * conv[i - 1].second - conv[i - 1].first * conv[i].second;
        CHECK((det == 1 || det == -1));
    }
}
