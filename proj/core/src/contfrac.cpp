#include "goldsieve/contfrac.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "goldsieve/errors.hpp"

namespace goldsieve {

namespace {

// floor((P + sqrt(D)) / Q) for non-square D, any sign of Q.
BigInt floor_pq(const BigInt& P, const BigInt& D, const BigInt& Q) {
    BigInt root = isqrt(D);
    if (Q > 0) return floor_div(P + root, Q);
    // (P + sqrt(D)) / Q = (-P - sqrt(D)) / (-Q); -sqrt(D) floors to -root-1.
    return floor_div(-P - root - 1, -Q);
}

}

PeriodicCF cf_expand(const QuadSurd& x, int max_steps) {
    if (x.is_rational())
        throw std::invalid_argument("cf_expand needs a quadratic irrational");

    // Rewrite x = (P + sqrt(D)) / Q with integral P, Q, D and Q | (D - P^2).
    BigInt P = x.p();
    BigInt Q = x.r();
    BigInt D = x.q() * x.q() * x.d();
    if (x.q() < 0) {
        P = -P;
        Q = -Q;
    }
    if ((D - P * P) % Q != 0) {
        BigInt s = Q < 0 ? -Q : Q;
        P *= s;
        D *= s * s;
        Q *= s;
    }

    std::vector<BigInt> quotients;
    std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
    for (int i = 0; i < max_steps; ++i) {
        auto state = std::make_pair(P, Q);
        auto it = seen.find(state);
        if (it != seen.end()) {
            PeriodicCF out;
            out.preperiod.assign(quotients.begin(),
                                 quotients.begin() + static_cast<std::ptrdiff_t>(it->second));
            out.period.assign(quotients.begin() + static_cast<std::ptrdiff_t>(it->second),
                              quotients.end());
            if (out.preperiod.empty()) {
                // Purely periodic: present as [a0; (rotated period)].
                out.preperiod.push_back(out.period.front());
                out.period.erase(out.period.begin());
                out.period.push_back(out.preperiod.front());
            }
            return out;
        }
        seen.emplace(state, quotients.size());
        BigInt a = floor_pq(P, D, Q);
        quotients.push_back(a);
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
    throw error("cf_expand exceeded max_steps without closing a period");
}

std::string render_cf(const PeriodicCF& cf) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < cf.preperiod.size(); ++i) {
        if (i == 1) out << "; ";
        if (i > 1) out << ", ";
        out << cf.preperiod[i];
    }
    if (!cf.period.empty()) {
        out << (cf.preperiod.size() <= 1 ? "; (" : ", (");
        for (std::size_t i = 0; i < cf.period.size(); ++i) {
            if (i > 0) out << ", ";
            out << cf.period[i];
        }
        out << ")";
    }
    out << "]";
    return out.str();
}

std::vector<BigInt> cf_unroll(const PeriodicCF& cf, std::size_t count) {
    std::vector<BigInt> out;
    out.reserve(count);
    for (std::size_t i = 0; i < cf.preperiod.size() && out.size() < count; ++i)
        out.push_back(cf.preperiod[i]);
    while (out.size() < count && !cf.period.empty())
        for (std::size_t i = 0; i < cf.period.size() && out.size() < count; ++i)
            out.push_back(cf.period[i]);
    return out;
}

std::vector<std::pair<BigInt, BigInt>> cf_convergents(const std::vector<BigInt>& quotients) {
    std::vector<std::pair<BigInt, BigInt>> out;
    BigInt p_prev = 0, p_curr = 1;
    BigInt q_prev = 1, q_curr = 0;
    for (const BigInt& a : quotients) {
        BigInt p_next = a * p_curr + p_prev;
        BigInt q_next = a * q_curr + q_prev;
        out.emplace_back(p_next, q_next);
        p_prev = p_curr;
        p_curr = p_next;
        q_prev = q_curr;
        q_curr = q_next;
    }
    return out;
}

std::vector<BigInt> gamma_pow2_expected_period(Int k) {
    if (k < 1) throw std::invalid_argument("gamma_pow2_expected_period needs k >= 1");
    BigInt a = BigInt(1) << static_cast<unsigned>(k);
    std::vector<BigInt> period = {a, 1, 2 * a + 1, 1, a};
    for (Int m = 0; m <= 2 * k - 3; ++m) {
        Int e = (m % 2 == 0) ? m / 2 + 1 : k - 1 - (m - 1) / 2;
        period.push_back(BigInt(1) << static_cast<unsigned>(e));
    }
    return period;
}

namespace {

std::string join(const std::vector<BigInt>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out << ",";
        out << v[i];
    }
    return out.str();
}

CfFamilyRow expect_exact(const std::string& label, const QuadSurd& x,
                         const std::vector<BigInt>& pre, const std::vector<BigInt>& per) {
    PeriodicCF cf = cf_expand(x);
    PeriodicCF want{pre, per};
    bool ok = cf.preperiod == pre && cf.period == per;
    return {label, ok, render_cf(want), render_cf(cf)};
}

}

std::vector<CfFamilyRow> check_cf_families(Int a_max, Int k_max) {
    std::vector<CfFamilyRow> rows;
    rows.push_back(expect_exact("phi", golden_ratio(), {1}, {1}));
    for (Int a = 1; a <= a_max; ++a) {
        std::vector<BigInt> per =
            a == 1 ? std::vector<BigInt>{1} : std::vector<BigInt>{a, 1};
        rows.push_back(expect_exact("alpha(" + std::to_string(a) + ")", survivor_slope(a),
                                    {1}, per));
        std::vector<BigInt> per_b =
            a == 1 ? std::vector<BigInt>{1} : std::vector<BigInt>{1, a};
        rows.push_back(expect_exact("beta(" + std::to_string(a) + ")", deletion_slope(a),
                                    {a + 1}, per_b));
        PeriodicCF g = cf_expand(double_pointer_slope(a));
        std::vector<BigInt> lead = cf_unroll(g, 4);
        std::vector<BigInt> want_lead = {2, a, 1, 2 * a + 1};
        rows.push_back({"gamma(" + std::to_string(a) + ") leading quotients",
                        lead == want_lead, join(want_lead), join(lead)});
    }
    rows.push_back(expect_exact("gamma(1)", double_pointer_slope(1), {2}, {1, 1, 3}));
    for (Int k = 1; k <= k_max; ++k) {
        Int a = Int{1} << static_cast<unsigned>(k);
        PeriodicCF g = cf_expand(double_pointer_slope(a));
        std::vector<BigInt> want = gamma_pow2_expected_period(k);
        bool ok = g.preperiod == std::vector<BigInt>{2} && g.period == want &&
                  static_cast<Int>(g.period.size()) == 2 * k + 3;
        rows.push_back({"gamma(2^" + std::to_string(k) + ") period", ok,
                        "[2; (" + join(want) + ")]", render_cf(g)});
    }
    PeriodicCF g12 = cf_expand(double_pointer_slope(12));
    rows.push_back({"gamma(12) period length", g12.period.size() == 36, "36",
                    std::to_string(g12.period.size())});
    return rows;
}

bool cf_families_ok(const std::vector<CfFamilyRow>& rows) {
    for (const auto& row : rows)
        if (!row.ok) return false;
    return true;
}

}
