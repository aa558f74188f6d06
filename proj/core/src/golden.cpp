#include "goldsieve/golden.hpp"

#include <stdexcept>
#include <string>

#include "goldsieve/working_set.hpp"

namespace goldsieve {

SieveTrace run_golden(const GroundSequence& ground, Int steps, Int survivor_target) {
    if (steps < 1) throw std::invalid_argument("run_golden needs steps >= 1");
    if (survivor_target < 0) throw std::invalid_argument("negative survivor target");
    Int total = steps > survivor_target ? steps : survivor_target;

    SieveTrace trace{ground, {}, {}, {}};
    trace.steps.reserve(static_cast<std::size_t>(steps));
    trace.deletions.reserve(static_cast<std::size_t>(steps));
    trace.survivors.reserve(static_cast<std::size_t>(survivor_target));

    WorkingSet ws;
    for (Int n = 1; n <= total; ++n) {
        Int pointer_index = ws.select(n);
        Int h = ground.term(pointer_index);
        Int deletion_index = ws.select(h);
        Int d = ground.term(deletion_index);
        ws.erase(deletion_index);
        if (n <= steps) {
            trace.steps.push_back({n, h, d});
            trace.deletions.push_back(d);
        }
    }
    for (Int k = 1; k <= survivor_target; ++k)
        trace.survivors.push_back(ground.term(ws.select(k)));
    return trace;
}

NormalizedPair normalize(const SieveTrace& trace) {
    if (!trace.ground.is_arith_like())
        throw std::invalid_argument("normalize needs an arithmetic-progression ground, got " +
                                    trace.ground.describe());
    Int a = trace.ground.a();
    Int b = trace.ground.b();
    NormalizedPair out{{}, {}, a, b};
    out.sigma.reserve(trace.survivors.size());
    out.delta.reserve(trace.deletions.size());
    for (Int s : trace.survivors) out.sigma.push_back((s - b) / a);
    for (Int d : trace.deletions) out.delta.push_back((d - b) / a);
    return out;
}

Int check_rank_identity(const NormalizedPair& pair) {
    std::size_t count = std::min(pair.sigma.size(), pair.delta.size());
    std::size_t from = (pair.a == 1 && pair.b == 0) ? 1 : 0;
    Int worst = 0;
    for (std::size_t i = from; i < count; ++i) {
        Int n = static_cast<Int>(i) + 1;
        Int residual = pair.delta[i] - (pair.a * pair.sigma[i] + n + pair.b - 1);
        if (residual < 0) residual = -residual;
        if (residual > worst) worst = residual;
    }
    return worst;
}

std::map<Int, Int> gap_histogram(const std::vector<Int>& seq) {
    std::map<Int, Int> hist;
    for (std::size_t i = 1; i < seq.size(); ++i) ++hist[seq[i] - seq[i - 1]];
    return hist;
}

SelfRefReport check_selfref(const NormalizedPair& pair) {
    if (pair.a < 2) throw std::invalid_argument("self-referential identity needs a >= 2");
    SelfRefReport report{0, 0, 0};
    Int c = pair.b - 1;
    Int size = static_cast<Int>(pair.sigma.size());
    for (Int n = 2; n <= size; ++n) {
        Int inner = pair.a * pair.sigma[static_cast<std::size_t>(n - 1)] + c;
        if (inner < 1 || inner > size) {
            ++report.skipped;
            continue;
        }
        Int lhs = pair.sigma[static_cast<std::size_t>(inner - 1)];
        Int rhs = inner + n - 1;
        Int residual = lhs - rhs;
        if (residual < 0) residual = -residual;
        if (residual > report.max_residual) report.max_residual = residual;
        ++report.checked;
    }
    return report;
}

std::vector<Int> survivors_beatty(Int count) {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(count));
    QuadSurd phi = golden_ratio();
    for (Int n = 1; n <= count; ++n)
        out.push_back(static_cast<Int>((QuadSurd(n - 1) * phi).floor()) + 2);
    return out;
}

std::vector<Int> deletions_beatty(Int count) {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(count));
    QuadSurd phi2 = golden_ratio() * golden_ratio();
    for (Int n = 1; n <= count; ++n) {
        if (n == 1) {
            out.push_back(1);
            continue;
        }
        out.push_back(static_cast<Int>((QuadSurd(n - 1) * phi2).floor()) + 2);
    }
    return out;
}

std::pair<Int, Int> wythoff_pair(Int m) {
    QuadSurd phi = golden_ratio();
    Int lower = static_cast<Int>((QuadSurd(m) * phi).floor());
    return {lower, lower + m};
}

std::vector<FibInvarianceRow> check_fibonacci_invariance(Int k_max) {
    if (k_max < 2) throw std::invalid_argument("fibonacci invariance needs k_max >= 2");
    std::vector<FibInvarianceRow> rows;
    QuadSurd phi = golden_ratio();
    Int fib_prev = 1, fib = 1;  // F_1, F_2
    for (Int k = 2; k <= k_max; ++k) {
        Int fib_next = fib + fib_prev;
        Int s = static_cast<Int>((QuadSurd(fib - 1) * phi).floor()) + 2;
        rows.push_back({k, fib, s, fib_next});
        fib_prev = fib;
        fib = fib_next;
    }
    return rows;
}

Int check_p_positions(Int a, Int n_max) {
    if (a < 1) throw std::invalid_argument("check_p_positions needs a >= 1");
    if (n_max < 1) throw std::invalid_argument("check_p_positions needs n_max >= 1");
    SieveTrace trace = run_golden(GroundSequence::arith(a, 1), n_max, n_max);
    NormalizedPair pair = normalize(trace);
    Int worst = 0;
    for (Int n = 1; n <= n_max; ++n) {
        Int residual = pair.delta[static_cast<std::size_t>(n - 1)] -
                       (a * pair.sigma[static_cast<std::size_t>(n - 1)] + n);
        if (residual < 0) residual = -residual;
        if (residual > worst) worst = residual;
    }
    return worst;
}

}
