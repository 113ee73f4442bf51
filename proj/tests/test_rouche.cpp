#include "doctest.h"

#include "satkit/parse.hpp"
#include "satkit/rouche.hpp"

using namespace satkit;

namespace {
const char* kF = "z1^2 + z2^3 + z3^3 + z1^3 + z2^4";
const char* kG = "z1^2 + z2^3 + z3^3 + z1^4 + z2^6";

Germ G3(const char* text) {
    return Germ::analyze(parse_poly(text, VarContext::standard(3)));
}
Direction diag() {
    return Direction{{GaussRat(Rat(1)), GaussRat(Rat(0)), GaussRat(Rat(1))}};
}
UniPoly U(const char* text) {
    return restrict_to_line(parse_poly(text, VarContext::standard(1)),
                            {GaussRat(Rat(1))});
}
}  // namespace

TEST_CASE("circle bounds") {
    // t^3 - t^4 at 1/4: 1/64 + 1/256.
    CHECK(sup_bound_circle(U("t^3 - t^4"), Rat(1, 4)) == Rat(5, 256));
    // t^2 + 2t^3 from below at order 2: 1/16 - 2/64.
    CHECK(inf_bound_circle(U("t^2 + 2*t^3"), Rat(1, 4), 2) == Rat(1, 32));
    CHECK(inf_bound_circle(U("t^2 + t^3 + t^4"), Rat(1, 4), 2) == Rat(11, 256));
    CHECK(sup_bound_circle(UniPoly(), Rat(1)) == 0);
    CHECK_THROWS(inf_bound_circle(U("t^3"), Rat(1, 4), 2));
}

TEST_CASE("reference pair proves in both directions") {
    Germ f = G3(kF);
    Germ g = G3(kG);
    GoodDisc disc = good_radius(f, g, diag());
    REQUIRE(disc.radius == Rat(1, 4));

    SatelliteCertificate fwd = certify_satellite(f, g, disc);
    CHECK(fwd.verdict == SatVerdict::Proved);
    CHECK(fwd.method == SatMethod::GlobalBound);
    CHECK(fwd.sup_bound_fg == Rat(5, 256));
    CHECK(fwd.inf_bound_f == Rat(1, 32));

    GoodDisc disc_rev = good_radius(g, f, diag());
    SatelliteCertificate rev = certify_satellite(g, f, disc_rev);
    CHECK(rev.verdict == SatVerdict::Proved);
    CHECK(rev.sup_bound_fg == Rat(5, 256));
    CHECK(rev.inf_bound_f == Rat(11, 256));
}

TEST_CASE("negation is refuted with an exact witness") {
    Germ f = G3(kF);
    Germ g = G3("-1*z1^2 - z2^3 - z3^3 - z1^3 - z2^4");
    GoodDisc disc = good_radius(f, g, diag());
    SatelliteCertificate cert = certify_satellite(f, g, disc);
    REQUIRE(cert.verdict == SatVerdict::RefutedOnDisc);
    CHECK(cert.method == SatMethod::Witness);
    CHECK(cert.refuting_points > 0);
    REQUIRE(cert.witness_point.size() == 3);
    // The witness satisfies the refuting inequality exactly in ambient space.
    GaussRat fv = eval_exact(f.poly, cert.witness_point);
    GaussRat gv = eval_exact(g.poly, cert.witness_point);
    CHECK(abs_sq(fv - gv) >= abs_sq(fv));
    CHECK(abs_sq(cert.witness_t) == disc.radius * disc.radius);
}

TEST_CASE("halving is one-directional") {
    Germ f = G3(kF);
    Germ g = G3("1/2*z1^2 + 1/2*z2^3 + 1/2*z3^3 + 1/2*z1^3 + 1/2*z2^4");
    GoodDisc fwd_disc = good_radius(f, g, diag());
    SatelliteCertificate fwd = certify_satellite(f, g, fwd_disc);
    CHECK(fwd.verdict == SatVerdict::Proved);
    CHECK(fwd.method == SatMethod::ArcSubdivision);
    CHECK_FALSE(fwd.arcs.unresolved);

    GoodDisc rev_disc = good_radius(g, f, diag());
    SatelliteCertificate rev = certify_satellite(g, f, rev_disc);
    CHECK(rev.verdict == SatVerdict::RefutedOnDisc);
}

TEST_CASE("every germ is its own satellite") {
    for (const char* text : {kF, kG, "z1*z2 + z3^3", "z1^3 - 3*z2*z3*z1"}) {
        Germ f = G3(text);
        Direction d = pick_generic_direction(f, f, 5);
        GoodDisc disc = good_radius(f, f, d);
        SatelliteCertificate cert = certify_satellite(f, f, disc);
        CHECK(cert.verdict == SatVerdict::Proved);
        CHECK(cert.sup_bound_fg == 0);
    }
}

TEST_CASE("search finds a certificate without hints") {
    Germ f = G3(kF);
    Germ g = G3(kG);
    SearchOptions so;
    so.seed = 3;
    SatelliteCertificate cert = search_satellite(f, g, so);
    CHECK(cert.verdict == SatVerdict::Proved);

    SatelliteCertificate again = search_satellite(f, g, so);
    CHECK(again.verdict == cert.verdict);
    CHECK(again.disc.direction.d == cert.disc.direction.d);
    CHECK(again.disc.radius == cert.disc.radius);
}

TEST_CASE("search reports refutation for the negated pair") {
    Germ f = G3("z1^2 + z2^2 + z3^2");
    Germ g = G3("-1*z1^2 - z2^2 - z3^2");
    SearchOptions so;
    so.attempts = 3;
    SatelliteCertificate cert = search_satellite(f, g, so);
    CHECK(cert.verdict == SatVerdict::RefutedOnDisc);
    CHECK(cert.refuting_points > 0);
}
