#include "satkit/rouche.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

#include "satkit/interval.hpp"

namespace satkit {
namespace {

GaussRat circle_param(const Rat& r, const Rat& s) {
    Rat s2 = s * s;
    Rat den = 1 + s2;
    return {r * (1 - s2) / den, r * 2 * s / den};
}

// First `count` values of s in [-1, 1], enumerated by denominator then
// numerator so low-height parameters come first.
std::vector<Rat> farey_params(unsigned count) {
    std::vector<Rat> out;
    for (long q = 1; out.size() < count; ++q) {
        for (long p = -q; p <= q && out.size() < count; ++p) {
            if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
            Rat s(p, q);
            s.canonicalize();
            out.push_back(s);
        }
    }
    return out;
}

std::vector<GaussRat> ambient_point(const std::vector<GaussRat>& d, const GaussRat& t) {
    std::vector<GaussRat> w;
    w.reserve(d.size());
    for (const auto& c : d) w.push_back(t * c);
    return w;
}

struct Arc {
    bool left;  // left half of the circle: t = -r*phi(s)
    Rat s0, s1;
    unsigned depth;
};

BoxC arc_box(const Rat& r, const Arc& a) {
    GaussRat t0 = circle_param(r, a.s0);
    GaussRat t1 = circle_param(r, a.s1);
    RatInterval re = RatInterval::hull(t0.re, t1.re);
    if (a.s0 < 0 && a.s1 > 0) re.hi = r;  // arc crosses the real-axis extreme
    RatInterval im = RatInterval::hull(t0.im, t1.im);
    if (a.left) {
        return {{-re.hi, -re.lo}, {-im.hi, -im.lo}};
    }
    return {re, im};
}

}  // namespace

Rat sup_bound_circle(const UniPoly& p, const Rat& r) {
    if (r <= 0) throw std::invalid_argument("radius must be positive");
    Rat acc = 0;
    Rat rpow = 1;
    for (std::size_t k = 0; k <= static_cast<std::size_t>(std::max(p.degree(), 0)); ++k) {
        acc += abs_upper(p.coeff(k)) * rpow;
        rpow *= r;
    }
    return acc;
}

Rat inf_bound_circle(const UniPoly& p, const Rat& r, unsigned m) {
    if (r <= 0) throw std::invalid_argument("radius must be positive");
    if (p.coeff(m).is_zero()) throw std::invalid_argument("dominant coefficient vanishes");
    Rat acc = 0;
    Rat rpow = 1;
    for (std::size_t k = 0; k <= static_cast<std::size_t>(p.degree()); ++k) {
        if (k == m) {
            acc += abs_lower(p.coeff(k)) * rpow;
        } else {
            acc -= abs_upper(p.coeff(k)) * rpow;
        }
        rpow *= r;
    }
    return acc;
}

SatelliteCertificate certify_satellite(const Germ& f, const Germ& g, const GoodDisc& disc,
                                       const RoucheOptions& opts) {
    const Rat& r = disc.radius;
    UniPoly p = restrict_to_line(f.poly, disc.direction.d);
    UniPoly q = restrict_to_line(g.poly, disc.direction.d);
    UniPoly d = p - q;

    SatelliteCertificate cert;
    cert.disc = disc;
    cert.sup_bound_fg = sup_bound_circle(d, r);
    cert.inf_bound_f = inf_bound_circle(p, r, f.order);

    // Stage 1: one global dominance comparison.
    if (cert.sup_bound_fg < cert.inf_bound_f) {
        cert.verdict = SatVerdict::Proved;
        cert.method = SatMethod::GlobalBound;
        return cert;
    }

    // Stage 2: exact refutation at low-height circle points.
    std::vector<Rat> params = farey_params(opts.witness_grid / 2);
    for (const Rat& s : params) {
        GaussRat base = circle_param(r, s);
        for (const GaussRat& t : {base, -base}) {
            if (abs_sq(d.eval(t)) >= abs_sq(p.eval(t))) {
                if (cert.refuting_points == 0) {
                    cert.witness_t = t;
                    cert.witness_point = ambient_point(disc.direction.d, t);
                }
                ++cert.refuting_points;
            }
        }
    }
    if (cert.refuting_points > 0) {
        cert.verdict = SatVerdict::RefutedOnDisc;
        cert.method = SatMethod::Witness;
        return cert;
    }

    // Stage 3: adaptive subdivision with box enclosures.
    cert.method = SatMethod::ArcSubdivision;
    std::deque<Arc> work;
    unsigned half = opts.initial_arcs / 2;
    for (unsigned j = 0; j < half; ++j) {
        Rat s0 = Rat(2L * j, half) - 1;
        Rat s1 = Rat(2L * (j + 1), half) - 1;
        s0.canonicalize();
        s1.canonicalize();
        work.push_back({false, s0, s1, 0});
        work.push_back({true, s0, s1, 0});
    }
    bool unresolved = false;
    bool have_pass = false;
    Rat sup_sq = 0;  // max over passed arcs of upper |d|^2
    Rat inf_sq = 0;  // min over passed arcs of lower |p|^2
    while (!work.empty()) {
        Arc a = work.front();
        work.pop_front();
        if (cert.arcs.examined >= opts.arc_budget) {
            unresolved = true;
            break;
        }
        ++cert.arcs.examined;
        if (a.depth > cert.arcs.max_depth) cert.arcs.max_depth = a.depth;

        BoxC box = arc_box(r, a);
        RatInterval dsq = abs_sq_box(eval_box(d, box));
        RatInterval psq = abs_sq_box(eval_box(p, box));
        if (dsq.hi < psq.lo) {
            if (!have_pass || dsq.hi > sup_sq) sup_sq = dsq.hi;
            if (!have_pass || psq.lo < inf_sq) inf_sq = psq.lo;
            have_pass = true;
            continue;
        }
        // Try the arc midpoint as an exact refuter before splitting.
        Rat sm = (a.s0 + a.s1) / 2;
        GaussRat tm = circle_param(r, sm);
        if (a.left) tm = -tm;
        if (abs_sq(d.eval(tm)) >= abs_sq(p.eval(tm))) {
            cert.witness_t = tm;
            cert.witness_point = ambient_point(disc.direction.d, tm);
            cert.refuting_points = 1;
            cert.verdict = SatVerdict::RefutedOnDisc;
            cert.method = SatMethod::Witness;
            return cert;
        }
        if (a.depth >= opts.arc_depth) {
            unresolved = true;
            continue;
        }
        work.push_back({a.left, a.s0, sm, a.depth + 1});
        work.push_back({a.left, sm, a.s1, a.depth + 1});
    }
    cert.arcs.unresolved = unresolved;
    if (!unresolved && have_pass) {
        // Each arc passed its own strict comparison, so |f-g| < |f| holds
        // pointwise on the circle. The recorded bounds are the merged arc
        // enclosures; they need not separate globally.
        cert.verdict = SatVerdict::Proved;
        cert.sup_bound_fg = sqrt_upper(sup_sq, 20);
        cert.inf_bound_f = sqrt_lower(inf_sq, 20);
        return cert;
    }
    cert.verdict = SatVerdict::Unknown;
    return cert;
}

SatelliteCertificate search_satellite(const Germ& f, const Germ& g, const SearchOptions& opts) {
    SatelliteCertificate best;
    bool have_best = false;
    for (unsigned a = 0; a < opts.attempts; ++a) {
        std::uint64_t dir_seed = opts.seed + a / 3;
        Rat safety = opts.safety_base;
        for (unsigned k = 0; k < a % 3; ++k) safety /= 2;
        SatelliteCertificate cert;
        try {
            Direction d = pick_generic_direction(f, g, dir_seed);
            GoodDisc disc = good_radius(f, g, d, safety);
            cert = certify_satellite(f, g, disc, opts.rouche);
        } catch (const std::runtime_error&) {
            continue;  // direction search exhausted; try the next seed
        }
        if (cert.verdict == SatVerdict::Proved) return cert;
        bool better = !have_best ||
                      (cert.verdict == SatVerdict::RefutedOnDisc &&
                       (best.verdict != SatVerdict::RefutedOnDisc ||
                        cert.refuting_points > best.refuting_points));
        if (better) {
            best = cert;
            have_best = true;
        }
    }
    return best;
}

}  // namespace satkit
