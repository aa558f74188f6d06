#ifndef GOLDSIEVE_HICCUP_HPP
#define GOLDSIEVE_HICCUP_HPP

#include <optional>
#include <vector>

#include "goldsieve/ground.hpp"
#include "goldsieve/types.hpp"

namespace goldsieve {

// Positive-integer membership set with O(1) queries; probes at zero or
// negative values are defined to be misses.
class MembershipIndex {
  public:
    void insert(Int v);
    bool contains(Int v) const;

  private:
    std::vector<bool> bits_;
};

// Self-referential gap recurrence: x_1 = x, and the gap before x_n is y
// when n - j is one of the values already produced, z otherwise.
struct HiccupParams {
    Int j;
    Int x;
    Int y;
    Int z;
};

std::vector<Int> hiccup_generate(const HiccupParams& p, Int count);

// Extraction sieve: at step n take the minimum as survivor s_n, always
// delete the next min(y,z)-1 elements, and delete |y-z| more when the probe
// t = n+1-j lands in {s_1..s_n} (for y > z) or misses it (for y < z).
struct ExtractionParams {
    Int j;
    Int y;
    Int z;
};

std::vector<Int> run_extraction(const ExtractionParams& p, const GroundSequence& ground,
                                Int count);

// Feeding a*N+b through the sieve rewrites hiccup parameters affinely:
// (j, x, y, z) -> (j, a*x + b, a*y, a*z). Composes like x -> a*x + b.
HiccupParams affine_transform(const HiccupParams& p, Int a, Int b);

// The hiccup equivalent of running the extraction sieve on a*N+b.
HiccupParams extraction_as_hiccup(const ExtractionParams& p, Int a, Int b);

// Cross-check of the two constructions; returns the 1-based index of the
// first disagreement, if any.
std::optional<Int> check_extraction_equiv(const ExtractionParams& p, Int a, Int b, Int count);

}

#endif
