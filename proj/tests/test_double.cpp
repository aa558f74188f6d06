#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "goldsieve/double_sieve.hpp"
#include "goldsieve/ground.hpp"
#include "goldsieve/surd.hpp"
#include "support/naive_models.hpp"
#include "support/reference_data.hpp"

using goldsieve::GroundSequence;
using goldsieve::Int;

TEST_CASE("worked six-step run on the naturals") {
    auto trace = goldsieve::run_double(GroundSequence::naturals(), 10, 10);
    CHECK(trace.pointer_values == refdata::double_naturals_pointers);
    CHECK(trace.target_values == refdata::double_naturals_targets);
    CHECK(trace.survivors == refdata::double_naturals_survivors);
    for (const auto& row : refdata::double_naturals_steps) {
        const auto& step = trace.steps[static_cast<std::size_t>(row[0] - 1)];
        CHECK(step.pointer == row[1]);
        CHECK(step.target == row[2]);
    }
    CHECK(trace.steps[0].coincidence);
    for (std::size_t i = 1; i < trace.steps.size(); ++i)
        CHECK_FALSE(trace.steps[i].coincidence);
}

TEST_CASE("agrees with the list-model oracle") {
    struct Case {
        GroundSequence ground;
        std::vector<Int> prefix;
        Int steps;
    };
    std::vector<Case> cases;
    cases.push_back({GroundSequence::naturals(), naive::arith_prefix(1, 0, 800), 50});
    cases.push_back({GroundSequence::arith(2, 1), naive::arith_prefix(2, 1, 800), 50});
    cases.push_back({GroundSequence::arith(4, 3), naive::arith_prefix(4, 3, 800), 50});
    // On squares the pointer value itself is read as a position, so the
    // brute-force prefix must reach past (3n)^2.
    cases.push_back({GroundSequence::squares(), naive::squares_prefix(12000), 30});
    for (auto& c : cases) {
        auto expected = naive::double_sieve(c.prefix, c.steps);
        auto trace = goldsieve::run_double(c.ground, c.steps, c.steps);
        INFO(c.ground.describe());
        CHECK(trace.pointer_values == expected.pointers);
        CHECK(trace.target_values == expected.deletions);
        CHECK(trace.survivors == expected.survivors);
    }
}

TEST_CASE("pointer values are strictly increasing") {
    auto trace = goldsieve::run_double(GroundSequence::arith(3, 0), 300, 300);
    for (std::size_t i = 1; i < trace.pointer_values.size(); ++i)
        CHECK(trace.pointer_values[i] > trace.pointer_values[i - 1]);
}

TEST_CASE("target rank identity residual is zero") {
    for (Int a = 1; a <= 5; ++a) {
        for (Int b = 0; b < a; ++b) {
            auto trace = goldsieve::run_double(GroundSequence::arith(a, b), 300, 300);
            auto d = goldsieve::normalize(trace);
            INFO("a=", a, " b=", b);
            CHECK(goldsieve::check_double_rank(d) == 0);
        }
    }
}

TEST_CASE("pointer, target and survivor indices tile an initial segment") {
    for (Int a = 1; a <= 4; ++a) {
        auto trace = goldsieve::run_double(GroundSequence::arith(a, a / 2), 400, 400);
        auto violation = goldsieve::check_three_way_partition(goldsieve::normalize(trace));
        INFO("a=", a);
        CHECK_FALSE(violation.has_value());
    }
}

TEST_CASE("empirical pointer density approaches the exact slope") {
    auto report = goldsieve::double_slope_report(2, 0, 20000);
    double exact = report.pointer_slope.to_double();
    CHECK(std::fabs(report.pi_ratio - exact) < 1e-3);
    CHECK(std::fabs(report.tau_ratio - report.target_slope.to_double()) < 1e-3);
    CHECK(std::fabs(report.sigma_ratio - report.survivor_slope.to_double()) < 1e-3);
}

TEST_CASE("exact slopes print the tabulated digits") {
    for (std::size_t i = 0; i < refdata::double_gamma_digits.size(); ++i) {
        Int a = static_cast<Int>(i) + 1;
        CHECK(goldsieve::double_pointer_slope(a).decimal(4) == refdata::double_gamma_digits[i]);
        CHECK(goldsieve::double_target_slope(a).decimal(4) ==
              refdata::double_target_slope_digits[i]);
    }
}

TEST_CASE("interleaving observations hold on a small grid") {
    for (Int a = 1; a <= 3; ++a) {
        auto report = goldsieve::conjectures::check_interleaving(a, 0, 200);
        INFO("a=", a);
        CHECK(report.interleaved);
        CHECK(report.pi_gaps_two_three);
        CHECK(report.sigma_gaps_two_three);
        CHECK(report.n_checked >= 199);
    }
}
