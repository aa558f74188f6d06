#include "goldsieve/rank_transform.hpp"

#include <algorithm>
#include <stdexcept>

#include "goldsieve/golden.hpp"

namespace goldsieve {

BlockSequence::BlockSequence(Int a, Int b) : a_(a), b_(b) {
    if (a < 1 || b < 1) throw std::invalid_argument("BlockSequence: needs a >= 1, b >= 1");
}

Int BlockSequence::operator()(Int n) const {
    Int num = n - b_ + 1;
    Int q = num >= 0 ? (num + a_ - 1) / a_ : 0;
    return std::max<Int>(0, q);
}

std::vector<Int> transform_once(const TermFn& u, const std::vector<Int>& r) {
    auto n = static_cast<Int>(r.size());
    std::vector<Int> sorted(r);
    std::sort(sorted.begin(), sorted.end());
    auto count_in = [&](Int lo, Int hi) {
        // entries of r in [lo, hi)
        auto first = std::lower_bound(sorted.begin(), sorted.end(), lo);
        auto last = std::lower_bound(sorted.begin(), sorted.end(), hi);
        return static_cast<Int>(last - first);
    };
    std::vector<Int> out;
    out.reserve(r.size());
    for (Int m = 1; m <= n; ++m) {
        if (m == 1) {
            out.push_back(1);
            continue;
        }
        Int h = count_in(u(m - 1), u(m));
        out.push_back(r[static_cast<std::size_t>(m - 2)] + h + 1);
    }
    return out;
}

FixedPointResult transform_fixed_point(const TermFn& u, Int n, Int max_iter) {
    if (n < 1) throw std::invalid_argument("transform_fixed_point: needs n >= 1");
    if (max_iter <= 0) max_iter = 2 * n + 16;
    std::vector<Int> r(static_cast<std::size_t>(n));
    for (Int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = i + 1;
    FixedPointResult result{r, 0, false};
    for (Int it = 1; it <= max_iter; ++it) {
        auto next = transform_once(u, result.sequence);
        ++result.iterations;
        if (next == result.sequence) {
            result.converged = true;
            return result;
        }
        result.sequence = std::move(next);
    }
    return result;
}

Int companion(Int a, Int b, Int r_n, Int n) { return n + a * r_n + (b - 1); }

std::optional<Int> check_transform_equivalence(Int a, Int b, Int n) {
    if (a < 2 || b < 1) throw std::invalid_argument("check_transform_equivalence: needs a >= 2, b >= 1");
    BlockSequence u(a, b);
    auto fp = transform_fixed_point([&u](Int m) { return u(m); }, n);
    if (!fp.converged) return 1;
    auto trace = run_golden(GroundSequence::arith(a, b), n, n);
    auto norm = normalize(trace);
    for (Int i = 1; i <= n; ++i) {
        Int r_i = fp.sequence[static_cast<std::size_t>(i - 1)];
        Int c_i = companion(a, b, r_i, i);
        if (r_i != norm.sigma[static_cast<std::size_t>(i - 1)]) return i;
        if (c_i != norm.delta[static_cast<std::size_t>(i - 1)]) return i;
    }
    return std::nullopt;
}

}
