#include "doctest.h"

#include "satkit/germ.hpp"
#include "satkit/parse.hpp"

using namespace satkit;

namespace {
Poly P(const char* text, std::size_t nvars) {
    return parse_poly(text, VarContext::standard(nvars));
}
}  // namespace

TEST_CASE("order and initial form") {
    Poly f = P("z1^2 + z2^3 + z3^3 + z1^3 + z2^4", 3);
    CHECK(order(f) == 2);
    CHECK(initial_form(f) == P("z1^2", 3));
    Poly cusp = P("z1^2 - z2^3", 2);
    CHECK(order(cusp) == 2);
    CHECK(initial_form(cusp) == P("z1^2", 2));
    CHECK(order(P("5 + z1", 1)) == 0);
    CHECK_THROWS(order(Poly(2)));
}

TEST_CASE("germ analysis requires vanishing at the origin") {
    Germ g = Germ::analyze(P("z1^2 - z2^3", 2));
    CHECK(g.order == 2);
    CHECK(g.reduced);
    CHECK_THROWS_AS(Germ::analyze(P("1 + z1", 1)), std::invalid_argument);
}

TEST_CASE("reducedness is squarefreeness") {
    CHECK(is_reduced(P("z1*z2", 2)));
    CHECK(is_reduced(P("z1^2 - z2^3", 2)));
    CHECK_FALSE(is_reduced(P("z1^2*z2", 2)));
    CHECK_FALSE(is_reduced(P("z1^2 + 2*z1*z2 + z2^2", 2)));
    CHECK(is_reduced(P("z1", 1)));
}

TEST_CASE("generic directions see the full order") {
    Germ f = Germ::analyze(P("z1^2 + z2^3", 2));
    Direction good{{GaussRat(Rat(1)), GaussRat(Rat(1))}};
    Direction bad{{GaussRat(Rat(0)), GaussRat(Rat(1))}};
    CHECK(is_generic_direction(f, f, good));
    CHECK_FALSE(is_generic_direction(f, f, bad));
}

TEST_CASE("direction search is deterministic in the seed") {
    Germ f = Germ::analyze(P("z1^2 + z2^3 + z3^3", 3));
    Germ g = Germ::analyze(P("z1^3 + z2^2 + z3^4", 3));
    Direction a = pick_generic_direction(f, g, 42);
    Direction b = pick_generic_direction(f, g, 42);
    CHECK(a.d == b.d);
    CHECK(is_generic_direction(f, g, a));
    CHECK(is_generic_direction(f, g, pick_generic_direction(f, g, 7)));
}

TEST_CASE("family orders") {
    VarContext ctx = VarContext::with_parameter(2, "s");
    Poly fam = parse_poly("z1^3 + s*z1*z2 + z2^3", ctx);
    FamilyResult res = family_orders(fam, {Rat(0), Rat(1, 2)});
    REQUIRE(res.samples.size() == 2);
    CHECK(res.samples[0].order == 3);
    CHECK(res.samples[1].order == 2);
    CHECK_FALSE(res.equimultiple);

    Poly flat = parse_poly("z1^2 + s*z2^3", ctx);
    FamilyResult eq = family_orders(flat, {Rat(0), Rat(1), Rat(-3)});
    CHECK(eq.equimultiple);
    for (const FamilySample& s : eq.samples) CHECK(s.order == 2);
}

TEST_CASE("family specialization must stay nonzero") {
    VarContext ctx = VarContext::with_parameter(1, "s");
    Poly fam = parse_poly("s*z1^2", ctx);
    CHECK_THROWS_AS(family_orders(fam, {Rat(0)}), std::domain_error);
}
