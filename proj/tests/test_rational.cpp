#include "doctest.h"

#include "satkit/rational.hpp"

using namespace satkit;

TEST_CASE("rational parsing and printing") {
    CHECK(rat_from_string("3/4") == Rat(3, 4));
    CHECK(rat_from_string("-2/6") == Rat(-1, 3));
    CHECK(rat_from_string("5") == Rat(5));
    CHECK(rat_to_string(Rat(7, 2)) == "7/2");
    CHECK(rat_to_string(Rat(-3)) == "-3");
    CHECK_THROWS(rat_from_string("1/0"));
    CHECK_THROWS(rat_from_string("abc"));
}

TEST_CASE("dyadic rounding brackets the input") {
    Rat x(1, 3);
    Rat up = round_up_dyadic(x, 10);
    Rat dn = round_down_dyadic(x, 10);
    CHECK(dn <= x);
    CHECK(x <= up);
    CHECK(up - dn <= Rat(1, 1 << 10) * 2);
    CHECK(round_up_dyadic(Rat(1, 2), 4) == Rat(1, 2));
}

TEST_CASE("exact square root detection") {
    Rat root;
    CHECK(exact_sqrt(Rat(9, 4), &root));
    CHECK(root == Rat(3, 2));
    CHECK(exact_sqrt(Rat(0), &root));
    CHECK(root == 0);
    CHECK_FALSE(exact_sqrt(Rat(2), &root));
    CHECK_FALSE(exact_sqrt(Rat(1, 3), &root));
}

TEST_CASE("sqrt bounds enclose the true root") {
    for (const Rat& s : {Rat(2), Rat(5, 7), Rat(1, 100), Rat(144)}) {
        Rat lo = sqrt_lower(s);
        Rat hi = sqrt_upper(s);
        CHECK(lo * lo <= s);
        CHECK(hi * hi >= s);
        CHECK(lo <= hi);
        CHECK(lo >= 0);
    }
    CHECK(sqrt_upper(Rat(9)) == 3);
    CHECK(sqrt_lower(Rat(9)) == 3);
}

TEST_CASE("gaussian arithmetic") {
    GaussRat i(Rat(0), Rat(1));
    CHECK(i * i == GaussRat(Rat(-1)));
    GaussRat a(Rat(1), Rat(2));
    GaussRat b(Rat(3), Rat(-1));
    CHECK(a * b == GaussRat(Rat(5), Rat(5)));
    CHECK(a + b == GaussRat(Rat(4), Rat(1)));
    CHECK((a / b) * b == a);
    CHECK(a.conj() == GaussRat(Rat(1), Rat(-2)));
    CHECK(abs_sq(a) == Rat(5));
}

TEST_CASE("modulus bounds") {
    GaussRat c(Rat(3, 5), Rat(4, 5));
    CHECK(abs_upper(c) >= 1);
    Rat lo = abs_lower(c);
    Rat hi = abs_upper(c);
    CHECK(lo * lo <= abs_sq(c));
    CHECK(hi * hi >= abs_sq(c));
    CHECK(abs_lower(GaussRat(Rat(0))) == 0);
    CHECK(abs_upper(GaussRat(Rat(-2))) == 2);
    CHECK(abs_lower(GaussRat(Rat(-2))) == 2);
}

TEST_CASE("gaussian printing") {
    CHECK(gauss_to_string(GaussRat(Rat(3, 4))) == "3/4");
    CHECK(gauss_to_string(GaussRat(Rat(0), Rat(-2))) == "-2i");
    CHECK(gauss_to_string(GaussRat(Rat(1, 2), Rat(3))) == "1/2+3i");
    CHECK(gauss_to_string(GaussRat()) == "0");
}

TEST_CASE("simplest rational in an interval") {
    CHECK(simplest_in_interval(Rat(1, 3), Rat(2, 3)) == Rat(1, 2));
    CHECK(simplest_in_interval(Rat(1, 2), Rat(1, 2)) == Rat(1, 2));
    CHECK(simplest_in_interval(Rat(3), Rat(4)) == 3);
    CHECK(simplest_in_interval(Rat(7, 15), Rat(8, 15)) == Rat(1, 2));
    CHECK(simplest_in_interval(Rat(99, 1000), Rat(101, 1000)) == Rat(1, 10));
    Rat s = simplest_in_interval(Rat(415, 93), Rat(415, 92));
    CHECK(s >= Rat(415, 93));
    CHECK(s <= Rat(415, 92));
}
