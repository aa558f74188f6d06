#ifndef GOLDSIEVE_GOLDEN_HPP
#define GOLDSIEVE_GOLDEN_HPP

#include <map>
#include <utility>
#include <vector>

#include "goldsieve/ground.hpp"
#include "goldsieve/surd.hpp"
#include "goldsieve/types.hpp"

namespace goldsieve {

// One sieve step: the pointer value h_n read at position n and the deletion
// value d_n read at position h_n, both from the working sequence before the
// deletion.
struct SieveStep {
    Int n;
    Int pointer;
    Int deletion;
};

struct SieveTrace {
    GroundSequence ground;
    std::vector<SieveStep> steps;  // first `steps` records
    std::vector<Int> deletions;    // deletion values in step order
    std::vector<Int> survivors;    // stabilized survivors s_1..s_target
};

// Runs the sieve until both `steps` deletions and `survivor_target`
// stabilized survivors are available. For any strictly increasing ground the
// deletion at step m happens at position >= m, so after N steps the first N
// remaining values are final.
SieveTrace run_golden(const GroundSequence& ground, Int steps, Int survivor_target);

// Survivors/deletions divided back onto index scale: sigma = (s - b) / a.
// Only arith-like grounds normalize; others throw std::invalid_argument.
struct NormalizedPair {
    std::vector<Int> sigma;
    std::vector<Int> delta;
    Int a;
    Int b;
};
NormalizedPair normalize(const SieveTrace& trace);

// max |delta_n - (a*sigma_n + n + b - 1)| over the computed range. The
// identity starts at n = 2 on the naturals (degenerate first step) and at
// n = 1 everywhere else.
Int check_rank_identity(const NormalizedPair& pair);

// Histogram of consecutive gaps of a sequence.
std::map<Int, Int> gap_histogram(const std::vector<Int>& seq);

// sigma_{a*sigma_n + b - 1} = a*sigma_n + n + b - 2 for n >= 2, checked
// wherever the outer index lies in the computed range; requires a >= 2.
struct SelfRefReport {
    Int max_residual;
    Int checked;
    Int skipped;
};
SelfRefReport check_selfref(const NormalizedPair& pair);

// Closed forms on the naturals: s_n = floor((n-1)*phi) + 2 for n >= 1 and
// d_n = floor((n-1)*phi^2) + 2 for n >= 2 with d_1 = 1.
std::vector<Int> survivors_beatty(Int count);
std::vector<Int> deletions_beatty(Int count);

// floor(m*phi) and floor(m*phi^2); the sieve survivors/deletions shift onto
// these by s_{m+1} - 2 and d_{m+1} - 2.
std::pair<Int, Int> wythoff_pair(Int m);

struct FibInvarianceRow {
    Int k;
    Int fib_k;
    Int survivor_at_fib_k;
    Int fib_next;
};
// s(F_k) = F_{k+1} for 2 <= k <= k_max, via the exact survivor closed form.
std::vector<FibInvarianceRow> check_fibonacci_invariance(Int k_max);

// Sieve on aN+1 (a >= 1): max |delta_n - (a*sigma_n + n)| for n <= n_max.
// The normalized pair is exactly the P-position pair of NIM(a, 1).
Int check_p_positions(Int a, Int n_max);

}

#endif
