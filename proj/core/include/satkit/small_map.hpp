#pragma once

#include <stdexcept>
#include <vector>

#include "satkit/germ.hpp"
#include "satkit/poly.hpp"
#include "satkit/rational.hpp"

namespace satkit {

struct BadRadiusError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class SmallMapStatus { Checked, Unknown };

struct SmallMapReport {
    Rat r = 0;     // ball radius
    Rat rho = 0;   // disc radius, rho <= r/2
    Rat m = 0;     // lower bound for inf |f| on the rho circle
    Rat L = 0;     // Lipschitz bound for f on the closed polydisc of radius r
    Rat eta = 0;   // m / (L + 1)
    Rat disp = 0;  // upper bound for sup |z - phi(z)|
    bool pass = false;
    SmallMapStatus status = SmallMapStatus::Unknown;
    unsigned order_f = 0;
    unsigned order_g = 0;  // order of f composed with phi, checked not assumed
    // phi being a homeomorphism germ is never verified here.
    bool homeomorphism_checked = false;
};

// Gradient sum-norm bound on the closed polydisc of radius r.
Rat lipschitz_bound(const Poly& f, const Rat& r);

// Sum over components of the sup bound of |z_i - phi_i| on the polydisc.
// Requires phi(0) = 0 and one component per variable.
Rat displacement_bound(const std::vector<Poly>& phi, const Rat& r);

// The concrete sufficient triple test: pass iff disp < min(m/(L+1), rho),
// all comparisons exact. Status Unknown when the inf bound m is not positive.
SmallMapReport check_f_small(const Germ& f, const std::vector<Poly>& phi, const Rat& r,
                             const Direction& d, const Rat& rho);

}  // namespace satkit
