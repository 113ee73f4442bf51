#pragma once

#include "satkit/germ.hpp"
#include "satkit/poly.hpp"
#include "satkit/rational.hpp"
#include "satkit/winding.hpp"

namespace satkit {

enum class DiscMethod { CoefficientBound, WindingZero };

// A certified radius: neither deflated restriction vanishes on |t| <= radius.
struct GoodDisc {
    Direction direction;
    Rat radius = 0;
    UniPoly deflated_f;
    UniPoly deflated_g;
    DiscMethod certificate_kind = DiscMethod::CoefficientBound;
    unsigned order_f = 0;  // deflation exponents; equal the germ orders for a
    unsigned order_g = 0;  // generic direction
    Rat r_star = 0;        // pre-safety bisection threshold (good_radius only)
};

struct Deflation {
    unsigned k = 0;
    UniPoly u;
};

// p = t^k u with u(0) != 0. Requires p != 0.
Deflation deflate(const UniPoly& p);

// Largest bisection-certified r* with (sum_{k>=1} abs_upper(u_k) r^k)^2 <=
// abs_sq(u(0)) for both deflations, then radius = safety * r*. The search cap
// is 1; a simplest-rational refinement recovers exact thresholds like 1/2.
// Requires d generic for both germs and safety in (0,1).
GoodDisc good_radius(const Germ& f, const Germ& g, const Direction& d,
                     const Rat& safety = Rat(1, 2));

enum class DiscVerdict { Certified, Rejected, Unknown };

struct DiscCheck {
    DiscVerdict verdict = DiscVerdict::Unknown;
    GoodDisc disc;
};

// Tries the strict coefficient bound first, then a zero winding count. A
// winding count > 0 or an exact zero on the circle rejects definitively; a
// step-budget failure leaves Unknown.
DiscCheck certify_disc(const Germ& f, const Germ& g, const Direction& d, const Rat& r,
                       const WindingOptions& wopts = {});

}  // namespace satkit
