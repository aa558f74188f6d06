#ifndef GOLDSIEVE_CONTFRAC_HPP
#define GOLDSIEVE_CONTFRAC_HPP

#include <string>
#include <utility>
#include <vector>

#include "goldsieve/surd.hpp"

namespace goldsieve {

// Eventually periodic continued fraction [pre_0; pre_1, ..., (per_0, ...)].
// The period is primitive (detected at the first repeated complete-quotient
// state). Purely periodic inputs are presented with the leading quotient
// split off into the preperiod, so preperiod is never empty.
struct PeriodicCF {
    std::vector<BigInt> preperiod;
    std::vector<BigInt> period;
};

// Expands a quadratic irrational; rational inputs throw
// std::invalid_argument. max_steps bounds the state walk as a safety net.
PeriodicCF cf_expand(const QuadSurd& x, int max_steps = 1 << 14);

// "[a0; a1, (p0, p1, ...)]"
std::string render_cf(const PeriodicCF& cf);

// First `count` partial quotients of the unrolled expansion.
std::vector<BigInt> cf_unroll(const PeriodicCF& cf, std::size_t count);

// Convergent numerators/denominators of a partial quotient list.
std::vector<std::pair<BigInt, BigInt>> cf_convergents(const std::vector<BigInt>& quotients);

// Structural checks of the expansion families: survivor slope
// [1; (a, 1)], deletion slope [a+1; (1, a)] for a <= a_max (period collapses
// to (1) at a = 1), double-sieve slope leading quotients 2, a, 1, 2a+1 for
// a <= a_max, gamma(1) = [2; (1, 1, 3)], gamma(2^k) period length 2k+3 with
// its power-of-two tail for k <= k_max, and the gamma(12) period length.
struct CfFamilyRow {
    std::string label;
    bool ok;
    std::string expected;
    std::string actual;
};
std::vector<CfFamilyRow> check_cf_families(Int a_max, Int k_max);
bool cf_families_ok(const std::vector<CfFamilyRow>& rows);

// Expected period of the double-sieve slope expansion for a = 2^k: head
// (a, 1, 2a+1, 1, a) followed by the zipper tail 2^(i+1) / 2^(k-1-i).
std::vector<BigInt> gamma_pow2_expected_period(Int k);

}

#endif
