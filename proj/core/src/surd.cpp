#include "goldsieve/surd.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "goldsieve/errors.hpp"

namespace goldsieve {

namespace {

BigInt gcd3(const BigInt& a, const BigInt& b, const BigInt& c) {
    return boost::multiprecision::gcd(boost::multiprecision::gcd(a, b), c);
}

// Pick the shared radicand of two operands, folding rationals onto the other
// side's d.
BigInt merged_d(const QuadSurd& x, const QuadSurd& y) {
    if (x.is_rational()) return y.d();
    if (y.is_rational()) return x.d();
    if (x.d() != y.d())
        throw arithmetic_error("mixed radicands: sqrt(" + x.d().str() + ") vs sqrt(" +
                               y.d().str() + ")");
    return x.d();
}

}

BigInt isqrt(const BigInt& v) {
    if (v < 0) throw std::invalid_argument("isqrt of negative value");
    return boost::multiprecision::sqrt(v);
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("floor_div by zero");
    BigInt q = num / den;
    if ((num % den) != 0 && ((num < 0) != (den < 0))) --q;
    return q;
}

QuadSurd::QuadSurd(BigInt value) : p_(std::move(value)), q_(0), d_(0), r_(1) {}

QuadSurd::QuadSurd(BigInt p, BigInt q, BigInt d, BigInt r)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {
    canonicalize();
}

QuadSurd QuadSurd::rational(BigInt num, BigInt den) {
    return QuadSurd(std::move(num), 0, 0, std::move(den));
}

QuadSurd QuadSurd::sqrt_of(BigInt d) {
    return QuadSurd(0, 1, std::move(d), 1);
}

void QuadSurd::canonicalize() {
    if (r_ == 0) throw arithmetic_error("surd with zero denominator");
    if (d_ < 0) throw arithmetic_error("negative radicand");
    if (r_ < 0) {
        p_ = -p_;
        q_ = -q_;
        r_ = -r_;
    }
    if (d_ == 0 || d_ == 1) {
        if (d_ == 1) p_ += q_;
        q_ = 0;
        d_ = 0;
    }
    if (q_ == 0) {
        d_ = 0;
    } else {
        // Absorb square factors of d into q.
        for (BigInt f = 2; f * f <= d_; ++f) {
            BigInt sq = f * f;
            while (d_ % sq == 0) {
                d_ /= sq;
                q_ *= f;
            }
        }
        if (d_ == 1) {
            p_ += q_;
            q_ = 0;
            d_ = 0;
        }
    }
    BigInt g = gcd3(boost::multiprecision::abs(p_), boost::multiprecision::abs(q_), r_);
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        r_ /= g;
    }
}

int QuadSurd::sign() const {
    // r > 0, so the sign is that of p + q*sqrt(d).
    if (q_ == 0) return p_ == 0 ? 0 : (p_ < 0 ? -1 : 1);
    if (p_ == 0) return q_ < 0 ? -1 : 1;
    if (p_ > 0 && q_ > 0) return 1;
    if (p_ < 0 && q_ < 0) return -1;
    BigInt lhs = p_ * p_;
    BigInt rhs = q_ * q_ * d_;
    if (p_ > 0) return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
    return rhs > lhs ? 1 : (rhs < lhs ? -1 : 0);
}

BigInt QuadSurd::floor() const {
    if (q_ == 0) return floor_div(p_, r_);
    BigInt root = isqrt(q_ * q_ * d_);
    // d is non-square and q != 0, so q*sqrt(d) is irrational and lies
    // strictly between consecutive integers; the numerator does too.
    BigInt low = q_ > 0 ? BigInt(p_ + root) : BigInt(p_ - root - 1);
    return floor_div(low, r_);
}

QuadSurd QuadSurd::conjugate() const {
    return QuadSurd(p_, -q_, d_, r_);
}

QuadSurd QuadSurd::reciprocal() const {
    if (sign() == 0) throw arithmetic_error("division by zero surd");
    BigInt norm = p_ * p_ - q_ * q_ * d_;
    return QuadSurd(r_ * p_, -r_ * q_, d_, norm);
}

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
    BigInt d = merged_d(x, y);
    return QuadSurd(x.p_ * y.r_ + y.p_ * x.r_, x.q_ * y.r_ + y.q_ * x.r_, d, x.r_ * y.r_);
}

QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) {
    return x + (-y);
}

QuadSurd QuadSurd::operator-() const {
    QuadSurd out = *this;
    out.p_ = -out.p_;
    out.q_ = -out.q_;
    return out;
}

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
    BigInt d = merged_d(x, y);
    return QuadSurd(x.p_ * y.p_ + x.q_ * y.q_ * d, x.p_ * y.q_ + x.q_ * y.p_, d, x.r_ * y.r_);
}

QuadSurd operator/(const QuadSurd& x, const QuadSurd& y) {
    return x * y.reciprocal();
}

bool operator==(const QuadSurd& x, const QuadSurd& y) {
    return x.p_ == y.p_ && x.q_ == y.q_ && x.d_ == y.d_ && x.r_ == y.r_;
}

bool operator<(const QuadSurd& x, const QuadSurd& y) {
    return (x - y).sign() < 0;
}

std::string QuadSurd::decimal(unsigned digits) const {
    int s = sign();
    if (s == 0 && digits == 0) return "0";
    QuadSurd mag = s < 0 ? -*this : *this;
    BigInt scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    // round(v) = floor((2v + 1) / 2), evaluated exactly.
    BigInt twice = (mag * QuadSurd(scale * 2)).floor();
    BigInt scaled = floor_div(twice + 1, 2);
    BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string out = (s < 0 && scaled != 0) ? "-" : "";
    out += whole.str();
    if (digits > 0) {
        std::string f = frac.str();
        out += "." + std::string(digits - f.size(), '0') + f;
    }
    return out;
}

double QuadSurd::to_double() const {
    double pp = p_.convert_to<double>();
    double qq = q_.convert_to<double>();
    double dd = d_.convert_to<double>();
    double rr = r_.convert_to<double>();
    return (pp + qq * std::sqrt(dd)) / rr;
}

QuadSurd golden_ratio() {
    return QuadSurd(1, 1, 5, 2);
}

QuadSurd survivor_slope(Int a) {
    if (a < 1) throw std::invalid_argument("slope parameter must be >= 1");
    return QuadSurd(a, 1, BigInt(a) * a + 4 * a, 2 * a);
}

QuadSurd deletion_slope(Int a) {
    return QuadSurd(a) * survivor_slope(a) + QuadSurd(1);
}

QuadSurd gap_word_density(Int a) {
    return survivor_slope(a) - QuadSurd(1);
}

QuadSurd double_pointer_slope(Int a) {
    if (a < 1) throw std::invalid_argument("slope parameter must be >= 1");
    return QuadSurd(2 * a - 1, 1, 4 * BigInt(a) * a + 12 * a + 1, 2 * a);
}

QuadSurd double_target_slope(Int a) {
    return QuadSurd(a) * double_pointer_slope(a) + QuadSurd(2);
}

QuadSurd double_survivor_slope(Int a) {
    // 1/sigma* = 1 - 1/gamma - 1/(a*gamma + 2); the defining quadratic of
    // gamma collapses the right side to 1/gamma, so sigma* = gamma exactly.
    QuadSurd g = double_pointer_slope(a);
    QuadSurd one(1);
    return one / (one - one / g - one / (QuadSurd(a) * g + QuadSurd(2)));
}

QuadSurd extraction_slope(Int y, Int z, Int a) {
    if (y < 1 || z < 1) throw std::invalid_argument("extraction parameters must be >= 1");
    if (a < 1) throw std::invalid_argument("extraction progression needs a >= 1");
    // Probes hit with the density 1/slope of the value set, so the mean gap
    // is a*z + a*(y - z)/slope whichever of y, z is larger. For z > y the
    // smaller root of the quadratic falls below the minimum gap a*y and is
    // infeasible, leaving the larger root (they coincide at a=1, y=1, z=2).
    BigInt az = BigInt(a) * z;
    return QuadSurd(az, 1, az * az + 4 * BigInt(a) * (y - z), 2);
}

MetallicSlopes metallic_slopes(Int k) {
    if (k < 1) throw std::invalid_argument("metallic index must be >= 1");
    MetallicSlopes out;
    out.slope_up = QuadSurd(k, 1, BigInt(k) * k + 4, 2);
    out.offset_j1_up =
        QuadSurd(-(k - 1)) * out.slope_up / (out.slope_up + QuadSurd(1));
    out.offset_j0_up =
        (QuadSurd(1) - QuadSurd(k) * out.slope_up) / (out.slope_up + QuadSurd(1));
    out.slope_down = QuadSurd(k + 1, 1, BigInt(k + 1) * (k + 1) - 4, 2);
    out.offset_j1_down =
        k == 1 ? QuadSurd(0)
               : QuadSurd(-(k - 1)) * out.slope_down / (out.slope_down - QuadSurd(1));
    out.offset_j0_down = QuadSurd(2) - out.slope_down;
    return out;
}

}
