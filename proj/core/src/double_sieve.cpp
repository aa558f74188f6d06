#include "goldsieve/double_sieve.hpp"

#include <cmath>
#include <stdexcept>

#include "goldsieve/working_set.hpp"

namespace goldsieve {

DoubleTrace run_double(const GroundSequence& ground, Int steps, Int survivor_target) {
    if (steps < 0 || survivor_target < 0)
        throw std::invalid_argument("run_double: negative count");
    DoubleTrace trace{ground, {}, {}, {}, {}};
    trace.steps.reserve(static_cast<std::size_t>(steps));
    WorkingSet ws;
    for (Int n = 1; n <= steps; ++n) {
        // Locate both positions before deleting either; the deletions at
        // step n never touch positions < n, so earlier survivors are final.
        Int pointer_idx = ws.select(n);
        Int h = ground.term(pointer_idx);
        Int target_idx = ws.select(h);
        Int d = ground.term(target_idx);
        bool coincide = (target_idx == pointer_idx);
        ws.erase(target_idx);
        if (!coincide) ws.erase(pointer_idx);
        trace.steps.push_back({n, h, d, coincide});
        trace.pointer_values.push_back(h);
        trace.target_values.push_back(d);
    }
    Int idx = 0;
    for (Int k = 0; k < survivor_target; ++k) {
        ++idx;
        while (!ws.present(idx)) ++idx;
        trace.survivors.push_back(ground.term(idx));
    }
    return trace;
}

DoubleNormalized normalize(const DoubleTrace& trace) {
    if (!trace.ground.is_arith_like())
        throw std::invalid_argument("normalize: ground is not arithmetic");
    Int a = trace.ground.a();
    Int b = trace.ground.b();
    auto to_index = [&](Int value) { return (value - b) / a; };
    DoubleNormalized out;
    out.a = a;
    out.b = b;
    out.pi.reserve(trace.pointer_values.size());
    out.tau.reserve(trace.target_values.size());
    out.sigma.reserve(trace.survivors.size());
    for (Int v : trace.pointer_values) out.pi.push_back(to_index(v));
    for (Int v : trace.target_values) out.tau.push_back(to_index(v));
    for (Int v : trace.survivors) out.sigma.push_back(to_index(v));
    return out;
}

Int check_double_rank(const DoubleNormalized& d) {
    Int worst = 0;
    auto n_terms = static_cast<Int>(std::min(d.pi.size(), d.tau.size()));
    bool naturals = (d.a == 1 && d.b == 0);
    for (Int n = 1; n <= n_terms; ++n) {
        Int pi_n = d.pi[static_cast<std::size_t>(n - 1)];
        Int tau_n = d.tau[static_cast<std::size_t>(n - 1)];
        Int expected;
        if (naturals) {
            if (n == 1) {
                expected = 1;  // pi_1 = tau_1 = 1: the lone coincidence
            } else {
                expected = pi_n + 2 * n - 3;
            }
        } else {
            expected = d.a * pi_n + d.b + 2 * (n - 1);
        }
        Int r = tau_n - expected;
        if (r < 0) r = -r;
        if (r > worst) worst = r;
    }
    return worst;
}

std::optional<Int> check_three_way_partition(const DoubleNormalized& d) {
    bool naturals = (d.a == 1 && d.b == 0);
    // Safe bound: every index below the smallest "frontier" of the three
    // sequences has had its classification decided.
    Int bound = 0;
    if (!d.pi.empty() && !d.tau.empty() && !d.sigma.empty()) {
        bound = std::min({d.pi.back(), d.tau.back(), d.sigma.back()});
    }
    std::vector<int> hits(static_cast<std::size_t>(bound + 1), 0);
    auto mark = [&](const std::vector<Int>& v) {
        for (Int x : v)
            if (x >= 1 && x <= bound) ++hits[static_cast<std::size_t>(x)];
    };
    mark(d.pi);
    mark(d.tau);
    mark(d.sigma);
    for (Int i = 1; i <= bound; ++i) {
        int expected = (naturals && i == 1) ? 2 : 1;
        if (hits[static_cast<std::size_t>(i)] != expected) return i;
    }
    return std::nullopt;
}

DoubleSlopeReport double_slope_report(Int a, Int b, Int n) {
    auto ground = GroundSequence::arith(a, b);
    auto trace = run_double(ground, n, n);
    auto norm = normalize(trace);
    DoubleSlopeReport rep{};
    rep.n = n;
    auto last = static_cast<std::size_t>(n - 1);
    rep.pi_ratio = static_cast<double>(norm.pi[last]) / static_cast<double>(n);
    rep.tau_ratio = static_cast<double>(norm.tau[last]) / static_cast<double>(n);
    rep.sigma_ratio = static_cast<double>(norm.sigma[last]) / static_cast<double>(n);
    rep.pointer_slope = double_pointer_slope(a);
    rep.target_slope = double_target_slope(a);
    rep.survivor_slope = double_survivor_slope(a);
    return rep;
}

namespace conjectures {

InterleavingReport check_interleaving(Int a, Int b, Int n) {
    auto ground = GroundSequence::arith(a, b);
    auto trace = run_double(ground, n + 1, n + 1);
    auto d = normalize(trace);
    InterleavingReport rep{};
    rep.n_checked = n;
    rep.interleaved = true;
    for (Int i = 1; i <= n; ++i) {
        Int pi_i = d.pi[static_cast<std::size_t>(i - 1)];
        Int pi_next = d.pi[static_cast<std::size_t>(i)];
        Int sigma_i = d.sigma[static_cast<std::size_t>(i - 1)];
        if (!(pi_i < sigma_i && sigma_i < pi_next)) rep.interleaved = false;
    }
    for (Int i = 2; i <= n; ++i) {
        Int g = d.pi[static_cast<std::size_t>(i - 1)] - d.pi[static_cast<std::size_t>(i - 2)];
        ++rep.pi_gap_histogram[g];
        g = d.sigma[static_cast<std::size_t>(i - 1)] - d.sigma[static_cast<std::size_t>(i - 2)];
        ++rep.sigma_gap_histogram[g];
    }
    auto only_two_three = [](const std::map<Int, Int>& h) {
        for (const auto& [gap, count] : h) {
            (void)count;
            if (gap != 2 && gap != 3) return false;
        }
        return true;
    };
    rep.pi_gaps_two_three = only_two_three(rep.pi_gap_histogram);
    rep.sigma_gaps_two_three = only_two_three(rep.sigma_gap_histogram);
    return rep;
}

}

}
