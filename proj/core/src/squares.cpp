#include "goldsieve/squares.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace goldsieve {

namespace {

Int isqrt_int(Int m) {
    if (m < 0) throw std::invalid_argument("isqrt_int: negative");
    auto r = static_cast<Int>(std::sqrt(static_cast<double>(m)));
    while (r > 0 && r * r > m) --r;
    while ((r + 1) * (r + 1) <= m) ++r;
    return r;
}

}

SquaresTrace run_squares(Int n) {
    SquaresTrace t{run_golden(GroundSequence::squares(), n, n), {}, {}};
    t.mu.reserve(t.base.survivors.size());
    t.lambda.reserve(t.base.deletions.size());
    for (Int s : t.base.survivors) t.mu.push_back(isqrt_int(s));
    for (Int d : t.base.deletions) t.lambda.push_back(isqrt_int(d));
    return t;
}

Int check_squares_rank(const SquaresTrace& t) {
    Int worst = 0;
    auto limit = static_cast<Int>(std::min(t.mu.size(), t.lambda.size()));
    for (Int n = 2; n <= limit; ++n) {
        Int mu_n = t.mu[static_cast<std::size_t>(n - 1)];
        Int lambda_n = t.lambda[static_cast<std::size_t>(n - 1)];
        Int r = lambda_n - (mu_n * mu_n + (n - 1));
        if (r < 0) r = -r;
        if (r > worst) worst = r;
    }
    return worst;
}

NestedReport check_nested_identity(const SquaresTrace& t) {
    NestedReport rep{0, 0};
    auto limit = static_cast<Int>(t.mu.size());
    for (Int n = 2; n <= limit; ++n) {
        Int mu_n = t.mu[static_cast<std::size_t>(n - 1)];
        Int inner = mu_n * mu_n - 1;
        if (inner < 1 || inner > limit) continue;
        Int lhs = t.mu[static_cast<std::size_t>(inner - 1)];
        Int rhs = mu_n * mu_n + n - 2;
        Int r = lhs - rhs;
        if (r < 0) r = -r;
        if (r > rep.max_residual) rep.max_residual = r;
        ++rep.checked;
    }
    return rep;
}

std::optional<Int> check_meta_positions(const SquaresTrace& t) {
    auto limit = static_cast<Int>(t.mu.size());
    std::set<Int> predicted;
    for (Int m = 2; m <= limit; ++m) {
        Int pos = t.mu[static_cast<std::size_t>(m - 1)];
        pos *= pos;
        if (pos <= limit) predicted.insert(pos);
    }
    for (Int n = 2; n <= limit; ++n) {
        Int gap = t.mu[static_cast<std::size_t>(n - 1)] - t.mu[static_cast<std::size_t>(n - 2)];
        if (gap != 1 && gap != 2) return n;
        bool wide = (gap == 2);
        if (wide != (predicted.count(n) != 0)) return n;
    }
    return std::nullopt;
}

Int root_tower(Int m) {
    if (m < 1) throw std::invalid_argument("root_tower: needs m >= 1");
    Int total = 0;
    Int term = m;
    Int sign = 1;
    while (true) {
        total += sign * term;
        if (term < 2) break;
        term = isqrt_int(term);
        sign = -sign;
    }
    return total;
}

EpsReport check_eps_window(const SquaresTrace& t, Int lo, Int hi) {
    if (lo < 1 || hi > static_cast<Int>(t.mu.size()))
        throw std::invalid_argument("check_eps_window: window exceeds computed prefix");
    EpsReport rep{lo, hi, 0, 0, {}};
    bool first = true;
    for (Int n = lo; n <= hi; ++n) {
        Int eps = t.mu[static_cast<std::size_t>(n - 1)] - n - root_tower(isqrt_int(n));
        if (first) {
            rep.min_eps = rep.max_eps = eps;
            first = false;
        } else {
            rep.min_eps = std::min(rep.min_eps, eps);
            rep.max_eps = std::max(rep.max_eps, eps);
        }
        if (eps == 1) rep.ones.push_back(n);
    }
    return rep;
}

}
