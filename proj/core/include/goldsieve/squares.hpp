#ifndef GOLDSIEVE_SQUARES_HPP
#define GOLDSIEVE_SQUARES_HPP

#include <optional>
#include <vector>

#include "goldsieve/golden.hpp"
#include "goldsieve/types.hpp"

namespace goldsieve {

// Golden sieve on the perfect squares, tracked through the square roots:
// mu_n = sqrt(s_n), lambda_n = sqrt(d_n).
struct SquaresTrace {
    SieveTrace base;
    std::vector<Int> mu;
    std::vector<Int> lambda;
};

SquaresTrace run_squares(Int n);

// max |lambda_n - (mu_n^2 + (n - 1))| over n >= 2; lambda_1 = 1 is special.
Int check_squares_rank(const SquaresTrace& t);

// Nested identity mu_{mu_n^2 - 1} = mu_n^2 + n - 2 for n >= 2, as far as the
// computed prefix reaches. Returns max residual and how many were in range.
struct NestedReport {
    Int max_residual;
    Int checked;
};
NestedReport check_nested_identity(const SquaresTrace& t);

// mu has gaps in {1, 2}; the 2-gaps occur exactly at n in {mu_m^2 : m >= 2}.
// Returns the first position where predicted and actual 2-gap sets differ.
std::optional<Int> check_meta_positions(const SquaresTrace& t);

// S(m): alternating root tower m - sqrt(m) + sqrt(sqrt(m)) - ..., integer
// square roots, including terms down to the first one below 2.
Int root_tower(Int m);

// mu_n = n + S(floor(sqrt(n))) + eps_n with eps_n in {0, 1}.
struct EpsReport {
    Int lo;
    Int hi;
    Int min_eps;
    Int max_eps;
    std::vector<Int> ones;  // n where eps_n = 1
};
EpsReport check_eps_window(const SquaresTrace& t, Int lo, Int hi);

}

#endif
