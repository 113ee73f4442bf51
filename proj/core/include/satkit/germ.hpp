#pragma once

#include <cstdint>
#include <vector>

#include "satkit/poly.hpp"
#include "satkit/rational.hpp"

namespace satkit {

// Hypersurface germ at the origin with its basic invariants.
struct Germ {
    Poly poly = Poly(0);
    unsigned order = 0;             // min total degree of a term
    Poly initial_form = Poly(0);    // homogeneous part of that degree
    bool reduced = false;

    // Requires poly != 0 and poly(0) = 0.
    static Germ analyze(const Poly& p);
};

// A line C·d through the origin.
struct Direction {
    std::vector<GaussRat> d;
};

unsigned order(const Poly& p);
Poly initial_form(const Poly& p);

// Squarefreeness over the coefficient field; sufficient for reducedness at 0.
bool is_reduced(const Poly& p);

// True iff both initial forms are nonzero at d, so C·d meets neither tangent cone.
bool is_generic_direction(const Germ& f, const Germ& g, const Direction& dir);

struct DirectionSearch {
    unsigned height = 8;          // initial coordinate bound, doubled per stage
    unsigned stage_attempts = 250;
    unsigned budget = 1000;
};

// Seeded sampling of integer vectors; throws std::runtime_error when the
// budget is exhausted.
Direction pick_generic_direction(const Germ& f, const Germ& g, std::uint64_t seed,
                                 const DirectionSearch& opts = {});

struct FamilySample {
    Rat s;
    unsigned order;
};

struct FamilyResult {
    std::vector<FamilySample> samples;
    bool equimultiple = true;
};

// family has the deformation parameter in slot 0 and z1..zn after it.
FamilyResult family_orders(const Poly& family, const std::vector<Rat>& s_values);

}  // namespace satkit
