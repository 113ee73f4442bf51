#include "doctest.h"

#include "satkit/disc.hpp"
#include "satkit/parse.hpp"

using namespace satkit;

namespace {
Germ G(const char* text, std::size_t nvars) {
    return Germ::analyze(parse_poly(text, VarContext::standard(nvars)));
}
Direction D(std::initializer_list<long> entries) {
    Direction d;
    for (long v : entries) d.d.emplace_back(Rat(v));
    return d;
}
}  // namespace

TEST_CASE("deflation splits the zero at the origin") {
    UniPoly p = restrict_to_line(parse_poly("t^2 + 2*t^3", VarContext::standard(1)),
                                 {GaussRat(Rat(1))});
    Deflation d = deflate(p);
    CHECK(d.k == 2);
    CHECK(d.u == UniPoly({GaussRat(Rat(1)), GaussRat(Rat(2))}));
    CHECK_THROWS(deflate(UniPoly()));
}

TEST_CASE("good radius on the reference pair is exactly 1/4") {
    Germ f = G("z1^2 + z2^3 + z3^3 + z1^3 + z2^4", 3);
    Germ g = G("z1^2 + z2^3 + z3^3 + z1^4 + z2^6", 3);
    GoodDisc disc = good_radius(f, g, D({1, 0, 1}));
    CHECK(disc.r_star == Rat(1, 2));
    CHECK(disc.radius == Rat(1, 4));
    CHECK(disc.order_f == 2);
    CHECK(disc.order_g == 2);
    CHECK(disc.certificate_kind == DiscMethod::CoefficientBound);
}

TEST_CASE("deflated tail thresholds are recovered exactly") {
    // f|L 1 + 2t after deflation: threshold at 2r = 1, r* = 1/2.
    Germ f = G("z1^2 + 2*z1^3", 1);
    GoodDisc a = good_radius(f, f, D({1}));
    CHECK(a.r_star == Rat(1, 2));
    // 1 + 10t: threshold at 10r = 1, r* = 1/10.
    Germ h = G("z1^2 + 10*z1^3", 1);
    GoodDisc b = good_radius(h, h, D({1}));
    CHECK(b.r_star == Rat(1, 10));
    // 1 + t + t^2: threshold is the positive root of r + r^2 = 1, between
    // 3/5 and 5/8; the simplest certified rational below it is returned.
    Germ k = G("z1^2 + z1^3 + z1^4", 1);
    GoodDisc c = good_radius(k, k, D({1}));
    CHECK(c.r_star >= Rat(3, 5));
    CHECK(c.r_star * (1 + c.r_star) <= 1);
}

TEST_CASE("safety factor scales the radius") {
    Germ f = G("z1^2 + 2*z1^3", 1);
    GoodDisc quarter = good_radius(f, f, D({1}), Rat(1, 4));
    CHECK(quarter.radius == Rat(1, 8));
    CHECK_THROWS(good_radius(f, f, D({1}), Rat(1)));
    CHECK_THROWS(good_radius(f, f, D({1}), Rat(0)));
}

TEST_CASE("non-generic directions are rejected") {
    Germ f = G("z1^2 + z2^3", 2);
    CHECK_THROWS_AS(good_radius(f, f, D({0, 1})), std::invalid_argument);
}

TEST_CASE("disc certification is three-valued") {
    Germ f = G("z1^2 + 2*z1^3", 1);
    DiscCheck inside = certify_disc(f, f, D({1}), Rat(1, 4));
    CHECK(inside.verdict == DiscVerdict::Certified);

    // t^2 (1 + 2t) has a third zero at t = -1/2; radius 1 captures it.
    DiscCheck outside = certify_disc(f, f, D({1}), Rat(1));
    CHECK(outside.verdict == DiscVerdict::Rejected);

    // 1 + 2t + 2t^2 breaks the coefficient bound at r = 1/2 but its zeros
    // sit at modulus sqrt(2)/2, so the winding fallback certifies.
    Germ h = G("z1^2 + 2*z1^3 + 2*z1^4", 1);
    DiscCheck edge = certify_disc(h, h, D({1}), Rat(1, 2));
    CHECK(edge.verdict == DiscVerdict::Certified);
    CHECK(edge.disc.certificate_kind == DiscMethod::WindingZero);
}

TEST_CASE("zero exactly on the circle rejects the disc") {
    Germ f = G("z1^2 + 2*z1^3", 1);
    DiscCheck on = certify_disc(f, f, D({1}), Rat(1, 2));
    CHECK(on.verdict == DiscVerdict::Rejected);
}
