#ifndef GOLDSIEVE_SURD_HPP
#define GOLDSIEVE_SURD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "goldsieve/types.hpp"

namespace goldsieve {

using BigInt = boost::multiprecision::cpp_int;

// Exact arithmetic on real quadratic surds (p + q*sqrt(d)) / r. Canonical
// form: r > 0, gcd(p, q, r) = 1, square factors of d absorbed into q, and
// d = 0 exactly when the value is rational. All comparisons and floors are
// exact; no floating point is involved.
//
// Binary operations require compatible radicands: equal d, or at least one
// rational operand. Mixing two distinct irrational radicands throws
// arithmetic_error.
class QuadSurd {
public:
    QuadSurd() : QuadSurd(0) {}
    QuadSurd(Int value) : QuadSurd(BigInt(value)) {}          // NOLINT(runtime/explicit)
    QuadSurd(BigInt value);                                   // NOLINT(runtime/explicit)
    QuadSurd(BigInt p, BigInt q, BigInt d, BigInt r);

    static QuadSurd rational(BigInt num, BigInt den);
    static QuadSurd sqrt_of(BigInt d);

    const BigInt& p() const { return p_; }
    const BigInt& q() const { return q_; }
    const BigInt& d() const { return d_; }
    const BigInt& r() const { return r_; }

    bool is_rational() const { return q_ == 0; }
    int sign() const;
    BigInt floor() const;
    QuadSurd conjugate() const;
    QuadSurd reciprocal() const;

    // Decimal rendering rounded half away from zero at `digits` places.
    std::string decimal(unsigned digits) const;
    double to_double() const;

    friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator/(const QuadSurd& x, const QuadSurd& y);
    QuadSurd operator-() const;

    friend bool operator==(const QuadSurd& x, const QuadSurd& y);
    friend bool operator!=(const QuadSurd& x, const QuadSurd& y) { return !(x == y); }
    friend bool operator<(const QuadSurd& x, const QuadSurd& y);
    friend bool operator<=(const QuadSurd& x, const QuadSurd& y) { return !(y < x); }
    friend bool operator>(const QuadSurd& x, const QuadSurd& y) { return y < x; }
    friend bool operator>=(const QuadSurd& x, const QuadSurd& y) { return !(x < y); }

private:
    void canonicalize();

    BigInt p_, q_, d_, r_;
};

// Floor of the integer square root; v must be nonnegative.
BigInt isqrt(const BigInt& v);

// Floor division with sign semantics of mathematical floor; den != 0.
BigInt floor_div(const BigInt& num, const BigInt& den);

QuadSurd golden_ratio();                 // (1 + sqrt 5) / 2

// Slopes of the golden sieve on aN+b: survivor slope alpha(a), the positive
// root of a*x^2 - a*x - 1 = 0, and deletion slope a*alpha + 1.
QuadSurd survivor_slope(Int a);
QuadSurd deletion_slope(Int a);
// Density of 1s in the gap word: alpha(a) - 1.
QuadSurd gap_word_density(Int a);

// Slopes of the double sieve on aN+b: pointer slope gamma(a), the positive
// root of a*x^2 - (2a-1)*x - 4 = 0, target slope a*gamma + 2, and survivor
// slope from the partition densities 1/gamma + 1/(a*gamma+2) + 1/sigma* = 1
// (which collapses to sigma* = gamma).
QuadSurd double_pointer_slope(Int a);
QuadSurd double_target_slope(Int a);
QuadSurd double_survivor_slope(Int a);

// Slope of the extraction sieve C_{j,y,z} on aN+b: the larger root of
// x^2 - a*z*x - a*(y - z) = 0, independent of b and (with one exception) of
// j. Exception: at a = 1, y = 1 the j = 1 recurrence always probes a member
// and collapses to the naturals, slope 1.
QuadSurd extraction_slope(Int y, Int z, Int a);

// Slopes and Beatty offsets for |y - z| = 1 extraction sieves on N.
// slope_up = (k + sqrt(k^2 + 4)) / 2 covers (j, 1, k+1, k); slope_down =
// ((k+1) + sqrt((k+1)^2 - 4)) / 2 covers (j, 1, k, k+1). offset_j1_down is
// 0/0 at k = 1 (slope_down = 1, rational); the returned 0 is the exact value
// making floor(n + 0) match the degenerate all-naturals hiccup.
struct MetallicSlopes {
    QuadSurd slope_up;
    QuadSurd offset_j1_up;    // -(k-1)*slope_up / (slope_up + 1)
    QuadSurd offset_j0_up;    // (1 - k*slope_up) / (slope_up + 1); needs k >= 2
                              // (at k = 1 the (0,1,2,1) recurrence collapses
                              // to the naturals and no Beatty form applies)
    QuadSurd slope_down;
    QuadSurd offset_j1_down;  // -(k-1)*slope_down / (slope_down - 1)
    QuadSurd offset_j0_down;  // -(slope_down - 2); valid from n = 2
};
MetallicSlopes metallic_slopes(Int k);

}

#endif
