#include "doctest.h"

#include "satkit/parse.hpp"
#include "satkit/weierstrass.hpp"

using namespace satkit;

namespace {
Poly P(const char* text, std::size_t nvars) {
    return parse_poly(text, VarContext::standard(nvars));
}
Germ G(const char* text, std::size_t nvars) { return Germ::analyze(P(text, nvars)); }

// No term of total degree <= bound.
bool vanishes_to(const Poly& p, unsigned bound) {
    return truncate(p, bound).is_zero();
}
}  // namespace

TEST_CASE("prepare divides out a unit") {
    // (1 + z1) z2^2 + z1^3: the unit is the geometric series of 1/(1+z1).
    Poly p = P("z2^2 + z1*z2^2 + z1^3", 2);
    WeierstrassFactorization wf = prepare(p, 6);
    CHECK(wf.nu == 2);
    CHECK(wf.u == P("1 + z1", 2));
    CHECK(wf.w == P("z2^2 + z1^3 - z1^4 + z1^5 - z1^6", 2));
    CHECK(wf.residual_checked);
    CHECK(vanishes_to(sub(p, mul(wf.u, wf.w)), 6));
}

TEST_CASE("prepared w restricts to the bare axis power") {
    Poly p = P("z2^2 + z1*z2^2 + z1^3 + z1*z2^3", 2);
    WeierstrassFactorization wf = prepare(p, 8);
    CHECK(wf.residual_checked);
    UniPoly axis = restrict_to_line(wf.w, {GaussRat(), GaussRat(Rat(1))});
    CHECK(axis == UniPoly({GaussRat(), GaussRat(), GaussRat(Rat(1))}));
    // w is monic of degree nu in the last variable: no z2-degree above 1
    // appears outside the z2^2 pivot.
    for (const auto& [m, c] : wf.w.terms()) {
        if (m[1] >= 2) CHECK(Monomial{0, 2} == m);
    }
}

TEST_CASE("prepare requires an axis-generic input") {
    CHECK_THROWS_AS(prepare(P("z1^2 + z1*z2", 2), 6), std::invalid_argument);
    CHECK_THROWS_AS(prepare(P("z2^2", 2), 1), std::invalid_argument);
}

TEST_CASE("axis normalization prefers the identity") {
    Germ f = G("z1^2 + z2^2", 2);
    AxisNormalization an = axis_normalize(f, f, 0);
    Poly id = compose(f.poly, {P("z1", 2), P("z2", 2)});
    CHECK(an.f.poly == id);

    // z1^2 alone is not generic along z2; a change is forced.
    Germ h = G("z1^2", 2);
    AxisNormalization moved = axis_normalize(h, h, 0);
    Monomial axis_sq{0, 2};
    CHECK(moved.f.poly.coeff(axis_sq) != GaussRat());
    CHECK(moved.f.order == 2);
}

TEST_CASE("construct pair yields the axis-exact certificate") {
    Germ f = G("z1^2 + z2^3", 2);
    Germ g = G("z1^2 + z1*z2^2 + z2^4", 2);
    PreparedPair pair = construct_pair(f, g, 0);
    CHECK(pair.f_fact.residual_checked);
    CHECK(pair.g_fact.residual_checked);
    CHECK(pair.f_fact.trunc_order == 8);

    std::vector<GaussRat> axis = {GaussRat(), GaussRat(Rat(1))};
    UniPoly wf_axis = restrict_to_line(pair.f_fact.w, axis);
    UniPoly wg_axis = restrict_to_line(pair.g_fact.w, axis);
    UniPoly t2({GaussRat(), GaussRat(), GaussRat(Rat(1))});
    CHECK(wf_axis == t2);
    CHECK(wg_axis == t2);

    const SatelliteCertificate& cert = pair.axis_certificate;
    CHECK(cert.verdict == SatVerdict::Proved);
    CHECK(cert.sup_bound_fg == 0);
    Rat r = cert.disc.radius;
    CHECK(cert.inf_bound_f == r * r);
}

TEST_CASE("construct pair rejects unequal orders") {
    Germ f = G("z1^2 + z2^2", 2);
    Germ g = G("z1^3 + z2^3", 2);
    CHECK_THROWS_AS(construct_pair(f, g, 0), OrderMismatchError);
}

TEST_CASE("linear changes preserve order") {
    Germ f = G("z1^2 + z2^3 + z3^3", 3);
    Germ g = G("z1^2 + z2^3 + z3^3 + z1^4 + z2^6", 3);
    AxisNormalization an = axis_normalize(f, g, 11);
    CHECK(an.f.order == f.order);
    CHECK(an.g.order == g.order);
    // The change is invertible: both germs stay nonzero with the same
    // initial-form degree, and the axis is generic for both.
    Monomial axis{0, 0, 2};
    CHECK(an.f.poly.coeff(axis) != GaussRat());
    CHECK(an.g.poly.coeff(axis) != GaussRat());
}
