#pragma once

#include <algorithm>

#include "satkit/poly.hpp"
#include "satkit/rational.hpp"

namespace satkit {

// Closed rational interval [lo, hi].
struct RatInterval {
    Rat lo = 0;
    Rat hi = 0;

    static RatInterval point(const Rat& x) { return {x, x}; }
    static RatInterval hull(const Rat& a, const Rat& b) {
        return a <= b ? RatInterval{a, b} : RatInterval{b, a};
    }

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }

    RatInterval operator*(const RatInterval& o) const {
        Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return {std::min(std::min(a, b), std::min(c, d)),
                std::max(std::max(a, b), std::max(c, d))};
    }

    RatInterval square() const {
        Rat a = lo * lo, b = hi * hi;
        if (lo <= 0 && hi >= 0) return {Rat(0), std::max(a, b)};
        return {std::min(a, b), std::max(a, b)};
    }
};

// Axis-aligned rational box in the complex plane.
struct BoxC {
    RatInterval re;
    RatInterval im;

    static BoxC point(const GaussRat& z) {
        return {RatInterval::point(z.re), RatInterval::point(z.im)};
    }

    BoxC operator+(const BoxC& o) const { return {re + o.re, im + o.im}; }

    BoxC operator*(const BoxC& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
};

// Horner enclosure of p over the box t.
inline BoxC eval_box(const UniPoly& p, const BoxC& t) {
    BoxC acc = BoxC::point(GaussRat());
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * t + BoxC::point(p.coeff(static_cast<std::size_t>(k)));
    }
    return acc;
}

inline RatInterval abs_sq_box(const BoxC& z) { return z.re.square() + z.im.square(); }

}  // namespace satkit
