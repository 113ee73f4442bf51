#include "satkit/small_map.hpp"

#include <algorithm>

#include "satkit/rouche.hpp"

namespace satkit {
namespace {

// Sum of abs_upper(coeff) * r^degree over all terms: sup bound on the polydisc.
Rat poly_sup_bound(const Poly& p, const Rat& r) {
    Rat acc = 0;
    for (const auto& [m, c] : p.terms()) {
        Rat rpow = 1;
        for (unsigned e = 0; e < total_degree(m); ++e) rpow *= r;
        acc += abs_upper(c) * rpow;
    }
    return acc;
}

}  // namespace

Rat lipschitz_bound(const Poly& f, const Rat& r) {
    if (r <= 0) throw std::invalid_argument("radius must be positive");
    Rat acc = 0;
    for (std::size_t v = 0; v < f.nvars(); ++v) {
        acc += poly_sup_bound(derivative(f, v), r);
    }
    return acc;
}

Rat displacement_bound(const std::vector<Poly>& phi, const Rat& r) {
    if (r <= 0) throw std::invalid_argument("radius must be positive");
    if (phi.empty()) throw std::invalid_argument("empty map");
    std::size_t n = phi[0].nvars();
    if (phi.size() != n) throw std::invalid_argument("component count must match nvars");
    Rat acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (phi[i].nvars() != n) throw std::invalid_argument("component nvars mismatch");
        if (!phi[i].coeff(Monomial(n, 0)).is_zero()) {
            throw std::invalid_argument("map does not fix the origin");
        }
        Poly diff = Poly::variable(n, i) - phi[i];
        acc += poly_sup_bound(diff, r);
    }
    return acc;
}

SmallMapReport check_f_small(const Germ& f, const std::vector<Poly>& phi, const Rat& r,
                             const Direction& d, const Rat& rho) {
    if (r <= 0 || rho <= 0) throw std::invalid_argument("radii must be positive");
    if (rho * 2 > r) throw BadRadiusError("rho must be at most r/2");

    SmallMapReport out;
    out.r = r;
    out.rho = rho;
    out.order_f = f.order;
    Poly composed = compose(f.poly, phi);
    out.order_g = order(composed);  // throws if the composition collapses to 0

    UniPoly restricted = restrict_to_line(f.poly, d.d);
    out.m = inf_bound_circle(restricted, rho, f.order);
    out.L = lipschitz_bound(f.poly, r);
    out.disp = displacement_bound(phi, r);
    if (out.m <= 0) {
        out.status = SmallMapStatus::Unknown;
        return out;
    }
    out.eta = out.m / (out.L + 1);
    out.status = SmallMapStatus::Checked;
    out.pass = out.disp < std::min(out.eta, out.rho);
    return out;
}

}  // namespace satkit
