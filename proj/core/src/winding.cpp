#include "satkit/winding.hpp"

#include <stdexcept>

namespace satkit {
namespace {

// Quadrant label for nonzero z; half-open so every ray belongs to one label.
int quadrant(const GaussRat& z) {
    if (z.re > 0 && z.im >= 0) return 0;
    if (z.re <= 0 && z.im > 0) return 1;
    if (z.re < 0 && z.im <= 0) return 2;
    return 3;
}

// Upper bound on sup |p'| over the closed disc of radius r.
Rat derivative_bound(const UniPoly& p, const Rat& r) {
    Rat m = 0;
    Rat rpow = 1;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(p.degree()); ++k) {
        m += Rat(static_cast<long>(k)) * abs_upper(p.coeff(k)) * rpow;
        rpow *= r;
    }
    return m;
}

}  // namespace

std::vector<GaussRat> circle_points(const Rat& r, unsigned count) {
    if (count < 2 || count % 2 != 0) throw std::invalid_argument("point count must be even");
    unsigned half = count / 2;
    std::vector<GaussRat> pts;
    pts.reserve(count);
    for (unsigned j = 0; j < half; ++j) {
        // s sweeps [-1, 1); phi(s) = ((1-s^2) + 2si)/(1+s^2) walks the right
        // half circle from -i toward +i, all coordinates exact.
        Rat s(2L * j - static_cast<long>(half), static_cast<long>(half));
        s.canonicalize();
        Rat s2 = s * s;
        Rat den = 1 + s2;
        pts.emplace_back(r * (1 - s2) / den, r * 2 * s / den);
    }
    for (unsigned j = 0; j < half; ++j) {
        pts.emplace_back(-pts[j].re, -pts[j].im);
    }
    return pts;
}

WindingResult winding_number(const UniPoly& p, const Rat& r, const WindingOptions& opts) {
    if (r <= 0) throw std::invalid_argument("radius must be positive");
    WindingResult out;
    if (p.is_zero()) {
        out.status = WindingStatus::ZeroOnCircle;
        return out;
    }
    if (p.degree() == 0) {
        out.status = WindingStatus::Counted;
        return out;
    }
    Rat mprime = derivative_bound(p, r);
    Rat mprime_sq = mprime * mprime;

    for (unsigned n = opts.initial_steps; n <= opts.max_steps; n *= 2) {
        out.steps = n;
        std::vector<GaussRat> pts = circle_points(r, n);
        std::vector<GaussRat> vals;
        vals.reserve(n);
        for (const auto& t : pts) {
            vals.push_back(p.eval(t));
            if (vals.back().is_zero()) {
                out.status = WindingStatus::ZeroOnCircle;
                return out;
            }
        }
        bool certified = true;
        Rat worst = 0;
        for (unsigned j = 0; j < n && certified; ++j) {
            GaussRat chord = pts[(j + 1) % n] - pts[j];
            Rat lhs = mprime_sq * abs_sq(chord);
            Rat rhs = abs_sq(vals[j]);
            if (lhs >= rhs) {
                certified = false;
            } else {
                Rat ratio = lhs / rhs;
                if (ratio > worst) worst = ratio;
            }
        }
        if (!certified) continue;

        long delta_sum = 0;
        for (unsigned j = 0; j < n; ++j) {
            int a = quadrant(vals[j]);
            int b = quadrant(vals[(j + 1) % n]);
            int diff = (b - a + 4) % 4;
            if (diff == 2) {
                // Cannot happen under a certified quarter-turn step.
                certified = false;
                break;
            }
            delta_sum += (diff == 3) ? -1 : diff;
        }
        if (!certified) continue;
        if (delta_sum % 4 != 0) throw std::logic_error("winding sum not divisible by 4");
        out.status = WindingStatus::Counted;
        out.count = delta_sum / 4;
        out.max_arg_step = worst;
        return out;
    }
    out.status = WindingStatus::StepBudgetExceeded;
    return out;
}

}  // namespace satkit
