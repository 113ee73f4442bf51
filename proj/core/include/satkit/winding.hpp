#pragma once

#include "satkit/poly.hpp"
#include "satkit/rational.hpp"

namespace satkit {

enum class WindingStatus { Counted, ZeroOnCircle, StepBudgetExceeded };

struct WindingResult {
    WindingStatus status = WindingStatus::StepBudgetExceeded;
    long count = 0;      // zeros inside, with multiplicity; valid when Counted
    unsigned steps = 0;  // circle points used (or last attempted)
    // Max over steps of (derivative bound * chord)^2 / |p|^2; squared sine
    // bound on any single argument step.
    Rat max_arg_step = 0;
};

struct WindingOptions {
    unsigned initial_steps = 64;
    unsigned max_steps = 1u << 16;
};

// Zeros of p strictly inside |t| = r, counted by certified discrete argument
// tracking at exact rational circle points. Requires r > 0.
WindingResult winding_number(const UniPoly& p, const Rat& r,
                             const WindingOptions& opts = {});

// The exact circle points the tracker samples, in loop order; exposed for the
// certificate search elsewhere.
std::vector<GaussRat> circle_points(const Rat& r, unsigned count);

}  // namespace satkit
