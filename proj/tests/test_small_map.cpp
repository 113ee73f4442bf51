#include "doctest.h"

#include "satkit/parse.hpp"
#include "satkit/small_map.hpp"

using namespace satkit;

namespace {
Germ G(const char* text, std::size_t nvars) {
    return Germ::analyze(parse_poly(text, VarContext::standard(nvars)));
}
std::vector<Poly> quad_perturbation(const char* eps) {
    std::string e(eps);
    VarContext ctx = VarContext::standard(2);
    return {parse_poly("z1 + " + e + "*z1^2", ctx),
            parse_poly("z2 + " + e + "*z2^2", ctx)};
}
Direction e1() { return Direction{{GaussRat(Rat(1)), GaussRat(Rat(0))}}; }
}  // namespace

TEST_CASE("worked bounds for the circle pair") {
    Germ f = G("z1^2 + z2^2", 2);
    CHECK(lipschitz_bound(f.poly, Rat(1, 2)) == 2);
    CHECK(displacement_bound(quad_perturbation("1/100"), Rat(1, 2)) ==
          Rat(1, 200));
    SmallMapReport rep = check_f_small(f, quad_perturbation("1/100"), Rat(1, 2),
                                       e1(), Rat(1, 4));
    CHECK(rep.status == SmallMapStatus::Checked);
    CHECK(rep.m == Rat(1, 16));
    CHECK(rep.L == 2);
    CHECK(rep.eta == Rat(1, 48));
    CHECK(rep.disp == Rat(1, 200));
    CHECK(rep.pass);
    CHECK(rep.order_f == 2);
    CHECK(rep.order_g == 2);
    CHECK_FALSE(rep.homeomorphism_checked);
}

TEST_CASE("a large perturbation fails") {
    Germ f = G("z1^2 + z2^2", 2);
    SmallMapReport rep = check_f_small(f, quad_perturbation("1/2"), Rat(1, 2),
                                       e1(), Rat(1, 4));
    CHECK(rep.status == SmallMapStatus::Checked);
    CHECK(rep.disp == Rat(1, 4));
    CHECK_FALSE(rep.pass);
}

TEST_CASE("the pass threshold sits at eta") {
    // disp = 2 eps r^2 = eps / 2; eta = 1/48; the flip is at eps = 1/24.
    Germ f = G("z1^2 + z2^2", 2);
    SmallMapReport below = check_f_small(f, quad_perturbation("1/25"),
                                         Rat(1, 2), e1(), Rat(1, 4));
    CHECK(below.pass);
    SmallMapReport at = check_f_small(f, quad_perturbation("1/24"), Rat(1, 2),
                                      e1(), Rat(1, 4));
    CHECK_FALSE(at.pass);
}

TEST_CASE("radius contract") {
    Germ f = G("z1^2 + z2^2", 2);
    CHECK_THROWS_AS(check_f_small(f, quad_perturbation("1/100"), Rat(1, 2),
                                  e1(), Rat(1, 3)),
                    BadRadiusError);
    CHECK_THROWS(check_f_small(f, quad_perturbation("1/100"), Rat(0), e1(),
                               Rat(0)));
}

TEST_CASE("maps must fix the origin and match arity") {
    Germ f = G("z1^2 + z2^2", 2);
    VarContext ctx = VarContext::standard(2);
    std::vector<Poly> shifted = {parse_poly("z1 + 1/10", ctx),
                                 parse_poly("z2", ctx)};
    CHECK_THROWS_AS(
        check_f_small(f, shifted, Rat(1, 2), e1(), Rat(1, 4)),
        std::invalid_argument);
    std::vector<Poly> short_map = {parse_poly("z1", ctx)};
    CHECK_THROWS_AS(
        check_f_small(f, short_map, Rat(1, 2), e1(), Rat(1, 4)),
        std::invalid_argument);
}

TEST_CASE("composition order is recorded") {
    Germ f = G("z1^2 + z2^2", 2);
    VarContext ctx = VarContext::standard(2);
    // phi's first component starts at order 2, driving f's composition to
    // order 2 only through the second slot.
    std::vector<Poly> degenerate = {parse_poly("z1^2", ctx),
                                    parse_poly("z2", ctx)};
    SmallMapReport rep = check_f_small(f, degenerate, Rat(1, 2), e1(),
                                       Rat(1, 4));
    CHECK(rep.order_g == 2);
}
