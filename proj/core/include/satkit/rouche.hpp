#pragma once

#include <cstdint>
#include <vector>

#include "satkit/disc.hpp"
#include "satkit/germ.hpp"
#include "satkit/poly.hpp"
#include "satkit/rational.hpp"

namespace satkit {

enum class SatVerdict { Proved, RefutedOnDisc, Unknown };
enum class SatMethod { GlobalBound, ArcSubdivision, Witness };

struct ArcTrace {
    unsigned examined = 0;
    unsigned max_depth = 0;
    bool unresolved = false;
};

struct SatelliteCertificate {
    GoodDisc disc;
    SatVerdict verdict = SatVerdict::Unknown;
    SatMethod method = SatMethod::GlobalBound;
    // Always an upper bound for sup |f-g| and a lower bound for inf |f| on
    // the circle. Under the global bound method, Proved means
    // sup_bound_fg < inf_bound_f exactly; under arc subdivision the proof is
    // the pointwise arc comparison and the two fields may cross.
    Rat sup_bound_fg = 0;
    Rat inf_bound_f = 0;
    // Refutation data: ambient point w = t*d on the circle with
    // abs_sq((f-g)(w)) >= abs_sq(f(w)) exactly.
    std::vector<GaussRat> witness_point;
    GaussRat witness_t;
    unsigned refuting_points = 0;
    ArcTrace arcs;
};

// Sum of abs_upper(p_k) r^k: an exact upper bound for sup |p| on |t| = r.
Rat sup_bound_circle(const UniPoly& p, const Rat& r);

// abs_lower(p_m) r^m minus the other terms' sup bound; a lower bound for
// inf |p| on |t| = r, possibly <= 0. Requires p_m != 0.
Rat inf_bound_circle(const UniPoly& p, const Rat& r, unsigned m);

struct RoucheOptions {
    unsigned witness_grid = 64;     // exact circle points tried as refuters
    unsigned initial_arcs = 64;
    unsigned arc_depth = 12;
    unsigned arc_budget = 1u << 14;  // total arcs examined
};

// Three stages: the global bound, exact witness search, then adaptive arc
// subdivision with rational box enclosures. Never silently wrong; budget
// exhaustion yields Unknown.
SatelliteCertificate certify_satellite(const Germ& f, const Germ& g, const GoodDisc& disc,
                                       const RoucheOptions& opts = {});

struct SearchOptions {
    unsigned attempts = 9;  // direction seeds x safety ladder
    std::uint64_t seed = 0;
    Rat safety_base = Rat(1, 2);
    RoucheOptions rouche;
};

// Iterates generic directions and radii until a certificate proves, else
// returns the most informative failure.
SatelliteCertificate search_satellite(const Germ& f, const Germ& g,
                                      const SearchOptions& opts = {});

}  // namespace satkit
