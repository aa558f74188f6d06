#ifndef GOLDSIEVE_DOUBLE_SIEVE_HPP
#define GOLDSIEVE_DOUBLE_SIEVE_HPP

#include <map>
#include <optional>
#include <vector>

#include "goldsieve/ground.hpp"
#include "goldsieve/surd.hpp"
#include "goldsieve/types.hpp"

namespace goldsieve {

// One double-sieve step: both the pointer element (at position n) and the
// target element (at position h_n) are deleted, once if they coincide. The
// coincidence occurs only at step 1 on the naturals.
struct DoubleStep {
    Int n;
    Int pointer;
    Int target;
    bool coincidence;
};

struct DoubleTrace {
    GroundSequence ground;
    std::vector<DoubleStep> steps;
    std::vector<Int> pointer_values;  // h_1..h_steps, strictly increasing
    std::vector<Int> target_values;   // d_1..d_steps
    std::vector<Int> survivors;       // stabilized s_1..s_target
};

DoubleTrace run_double(const GroundSequence& ground, Int steps, Int survivor_target);

struct DoubleNormalized {
    std::vector<Int> pi;     // pointer indices
    std::vector<Int> tau;    // target indices
    std::vector<Int> sigma;  // survivor indices
    Int a;
    Int b;
};
DoubleNormalized normalize(const DoubleTrace& trace);

// max |tau_n - (a*pi_n + b + 2(n-1))|, or on the naturals
// max |tau_n - (pi_n + 2n - 3)| for n >= 2 with pi_1 = tau_1 = 1.
Int check_double_rank(const DoubleNormalized& d);

// Verifies that pointer, target and survivor index sets tile an initial
// segment of N: every integer up to the last safe bound belongs to exactly
// one set, except the single pointer/target coincidence on the naturals.
// Returns the first violating integer, if any.
std::optional<Int> check_three_way_partition(const DoubleNormalized& d);

// Empirical slopes at the run horizon next to their exact counterparts.
struct DoubleSlopeReport {
    Int n;
    double pi_ratio;
    double tau_ratio;
    double sigma_ratio;
    QuadSurd pointer_slope;   // gamma(a)
    QuadSurd target_slope;    // a*gamma + 2
    QuadSurd survivor_slope;  // equals gamma via the partition densities
};
DoubleSlopeReport double_slope_report(Int a, Int b, Int n);

namespace conjectures {

// Unproved interleaving/two-gap observations about the double sieve; kept
// out of the theorem-backed checks above. Empirically true for a <= 5,
// n <= 500.
struct InterleavingReport {
    Int n_checked;
    bool interleaved;      // pi_n < sigma_n < pi_{n+1}
    bool pi_gaps_two_three;
    bool sigma_gaps_two_three;
    std::map<Int, Int> pi_gap_histogram;
    std::map<Int, Int> sigma_gap_histogram;
};
InterleavingReport check_interleaving(Int a, Int b, Int n);

}

}

#endif
