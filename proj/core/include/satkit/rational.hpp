#pragma once

#include <gmpxx.h>

#include <string>

namespace satkit {

/// Exact arbitrary-precision rational, always kept in canonical reduced form.
using Rat = mpq_class;

Rat rat_from_string(const std::string& text);
std::string rat_to_string(const Rat& x);

/// Round up/down to a dyadic with denominator 2^bits. Used to keep the
/// numerators of certified bounds from growing without bound; the direction
/// of the rounding preserves the bound's soundness.
Rat round_up_dyadic(const Rat& x, unsigned bits);
Rat round_down_dyadic(const Rat& x, unsigned bits);

/// True iff s is the square of a rational; if so *root is set to the
/// nonnegative exact square root.
bool exact_sqrt(const Rat& s, Rat* root);

/// Certified rational bounds for sqrt(s), s >= 0. Exact when s is a perfect
/// square, otherwise Newton iterations from above keep upper an upper bound
/// and lower = s/upper stays below. Throws std::domain_error for s < 0.
Rat sqrt_upper(const Rat& s, int iters = 8);
Rat sqrt_lower(const Rat& s, int iters = 8);

/// Rational with the smallest denominator (smallest numerator on ties) in
/// [lo, hi]. Requires 0 <= lo <= hi. Used to recover an exact threshold from
/// a bisection enclosure.
Rat simplest_in_interval(const Rat& lo, const Rat& hi);

/// Complex number with exact rational real and imaginary parts.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() : re(0), im(0) {}
    GaussRat(Rat r) : re(std::move(r)), im(0) {}
    GaussRat(long r) : re(r), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return {re, -im}; }

    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);
};

GaussRat operator+(GaussRat a, const GaussRat& b);
GaussRat operator-(GaussRat a, const GaussRat& b);
GaussRat operator-(const GaussRat& a);
GaussRat operator*(const GaussRat& a, const GaussRat& b);
GaussRat operator/(const GaussRat& a, const GaussRat& b);
bool operator==(const GaussRat& a, const GaussRat& b);
bool operator!=(const GaussRat& a, const GaussRat& b);

/// |c|^2 = re^2 + im^2, exact. All modulus comparisons go through this:
/// |u| < |v|  <=>  abs_sq(u) < abs_sq(v).
Rat abs_sq(const GaussRat& c);

/// Rational upper bound for |c|: |re| + |im|. Exact for real or purely
/// imaginary c.
Rat abs_upper(const GaussRat& c);

/// Tightened upper bound via square-root refinement of abs_sq.
Rat abs_upper_refined(const GaussRat& c, int iters = 8);

/// Rational lower bound for |c|; exact for real or purely imaginary c.
Rat abs_lower(const GaussRat& c, int iters = 8);

std::string gauss_to_string(const GaussRat& c);

}  // namespace satkit
