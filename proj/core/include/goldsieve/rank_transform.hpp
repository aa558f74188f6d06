#ifndef GOLDSIEVE_RANK_TRANSFORM_HPP
#define GOLDSIEVE_RANK_TRANSFORM_HPP

#include <functional>
#include <optional>
#include <vector>

#include "goldsieve/types.hpp"

namespace goldsieve {

// Nondecreasing block sequence: b - 1 leading zeros, then a copies of each
// positive integer. Closed form max(0, ceil((n - b + 1) / a)).
class BlockSequence {
  public:
    BlockSequence(Int a, Int b);
    Int operator()(Int n) const;
    Int a() const { return a_; }
    Int b() const { return b_; }

  private:
    Int a_;
    Int b_;
};

using TermFn = std::function<Int(Int)>;

// One application of the rank transform operator: given r (any positive
// integer sequence, not necessarily monotone mid-iteration), produce r' with
// r'_1 = 1 and r'_n = r_{n-1} + h(n) + 1, where h(n) counts entries of r in
// [u(n-1), u(n)) and h(1) = u(1).
std::vector<Int> transform_once(const TermFn& u, const std::vector<Int>& r);

struct FixedPointResult {
    std::vector<Int> sequence;
    Int iterations;
    bool converged;
};

// Iterates transform_once from the identity seed 1..n until stationary.
FixedPointResult transform_fixed_point(const TermFn& u, Int n, Int max_iter = 0);

// Joint-rank companion of the fixed point against the block sequence.
Int companion(Int a, Int b, Int r_n, Int n);

// Compares the fixed point and its companion against the sieve's survivor
// and deletion index sequences on a*N+b (a >= 2, 1 <= b <= a). Returns the
// 1-based index of the first mismatch, if any.
std::optional<Int> check_transform_equivalence(Int a, Int b, Int n);

}

#endif
