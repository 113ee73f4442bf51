#include "satkit/disc.hpp"

#include <stdexcept>

namespace satkit {
namespace {

const Rat kDefaultCap(1);
constexpr int kMaxBisect = 4096;

// Tail majorant coefficients A_k = abs_upper(u_k), k >= 1.
std::vector<Rat> tail_bounds(const UniPoly& u) {
    std::vector<Rat> a;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(std::max(u.degree(), 0)); ++k) {
        a.push_back(abs_upper(u.coeff(k)));
    }
    return a;
}

Rat tail_eval(const std::vector<Rat>& a, const Rat& r) {
    Rat acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        acc *= r;
        acc += *it;
    }
    return acc * r;
}

struct Dominance {
    std::vector<Rat> tail;
    Rat head_sq;  // abs_sq(u(0))

    explicit Dominance(const UniPoly& u) : tail(tail_bounds(u)), head_sq(abs_sq(u.coeff(0))) {}

    bool holds(const Rat& r) const {
        Rat t = tail_eval(tail, r);
        return t * t <= head_sq;
    }
    bool holds_strict(const Rat& r) const {
        Rat t = tail_eval(tail, r);
        return t * t < head_sq;
    }
    bool trivial() const {
        for (const auto& a : tail) {
            if (a != 0) return false;
        }
        return true;
    }
};

Deflation generic_deflation(const Germ& g, const Direction& d, const char* which) {
    UniPoly restricted = restrict_to_line(g.poly, d.d);
    if (restricted.is_zero()) {
        throw std::invalid_argument(std::string("direction not generic for ") + which +
                                    ": restriction vanishes");
    }
    Deflation def = deflate(restricted);
    if (def.k != g.order) {
        throw std::invalid_argument(std::string("direction not generic for ") + which +
                                    ": restricted order exceeds germ order");
    }
    return def;
}

}  // namespace

Deflation deflate(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("deflate of zero polynomial");
    std::size_t k = 0;
    while (p.coeff(k).is_zero()) ++k;
    std::vector<GaussRat> shifted;
    for (std::size_t j = k; j <= static_cast<std::size_t>(p.degree()); ++j) {
        shifted.push_back(p.coeff(j));
    }
    return {static_cast<unsigned>(k), UniPoly(std::move(shifted))};
}

GoodDisc good_radius(const Germ& f, const Germ& g, const Direction& d, const Rat& safety) {
    if (safety <= 0 || safety >= 1) throw std::invalid_argument("safety must be in (0,1)");
    Deflation df = generic_deflation(f, d, "f");
    Deflation dg = generic_deflation(g, d, "g");
    Dominance bf(df.u);
    Dominance bg(dg.u);

    Rat r_star;
    if ((bf.trivial() && bg.trivial()) || (bf.holds(kDefaultCap) && bg.holds(kDefaultCap))) {
        r_star = kDefaultCap;
    } else {
        auto ok = [&](const Rat& r) { return bf.holds(r) && bg.holds(r); };
        Rat lo = 0;
        Rat hi = kDefaultCap;
        Rat rel(1, 1 << 20);
        for (int i = 0; i < kMaxBisect; ++i) {
            if (lo > 0 && hi - lo <= lo * rel) break;
            Rat mid = (lo + hi) / 2;
            if (ok(mid)) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        if (lo == 0) throw std::runtime_error("good radius underflow");
        Rat cand = simplest_in_interval(lo, hi);
        r_star = ok(cand) ? cand : lo;
    }

    GoodDisc out;
    out.direction = d;
    out.r_star = r_star;
    out.radius = safety * r_star;
    out.deflated_f = df.u;
    out.deflated_g = dg.u;
    out.order_f = df.k;
    out.order_g = dg.k;
    out.certificate_kind = DiscMethod::CoefficientBound;
    return out;
}

DiscCheck certify_disc(const Germ& f, const Germ& g, const Direction& d, const Rat& r,
                       const WindingOptions& wopts) {
    if (r <= 0) throw std::invalid_argument("radius must be positive");
    Deflation df = generic_deflation(f, d, "f");
    Deflation dg = generic_deflation(g, d, "g");

    DiscCheck out;
    out.disc.direction = d;
    out.disc.radius = r;
    out.disc.deflated_f = df.u;
    out.disc.deflated_g = dg.u;
    out.disc.order_f = df.k;
    out.disc.order_g = dg.k;

    bool used_winding = false;
    DiscVerdict verdict = DiscVerdict::Certified;
    for (const UniPoly* u : {&df.u, &dg.u}) {
        Dominance dom(*u);
        if (dom.holds_strict(r)) continue;
        used_winding = true;
        WindingResult w = winding_number(*u, r, wopts);
        if (w.status == WindingStatus::Counted && w.count == 0) continue;
        if (w.status == WindingStatus::StepBudgetExceeded) {
            if (verdict == DiscVerdict::Certified) verdict = DiscVerdict::Unknown;
        } else {
            // Zero on the circle or a positive count inside: not a good disc.
            verdict = DiscVerdict::Rejected;
        }
    }
    out.verdict = verdict;
    out.disc.certificate_kind =
        used_winding ? DiscMethod::WindingZero : DiscMethod::CoefficientBound;
    return out;
}

}  // namespace satkit
