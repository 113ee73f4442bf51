#include "satkit/rational.hpp"

#include <stdexcept>

namespace satkit {

Rat rat_from_string(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator in rational: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& x) {
    return x.get_str();
}

Rat round_up_dyadic(const Rat& x, unsigned bits) {
    mpz_class num = x.get_num() << bits;
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
    Rat r(q, mpz_class(1) << bits);
    r.canonicalize();
    return r;
}

Rat round_down_dyadic(const Rat& x, unsigned bits) {
    mpz_class num = x.get_num() << bits;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
    Rat r(q, mpz_class(1) << bits);
    r.canonicalize();
    return r;
}

bool exact_sqrt(const Rat& s, Rat* root) {
    if (s < 0) return false;
    if (mpz_perfect_square_p(s.get_num().get_mpz_t()) &&
        mpz_perfect_square_p(s.get_den().get_mpz_t())) {
        mpz_class n, d;
        mpz_sqrt(n.get_mpz_t(), s.get_num().get_mpz_t());
        mpz_sqrt(d.get_mpz_t(), s.get_den().get_mpz_t());
        *root = Rat(n, d);
        return true;
    }
    return false;
}

namespace {
constexpr unsigned kSqrtDyadicBits = 96;
}

Rat sqrt_upper(const Rat& s, int iters) {
    if (s < 0) throw std::domain_error("sqrt_upper of negative rational");
    if (s == 0) return Rat(0);
    Rat exact;
    if (exact_sqrt(s, &exact)) return exact;
    // (s+1)/2 >= sqrt(s); Newton from above stays above.
    Rat x = (s + 1) / 2;
    for (int i = 0; i < iters; ++i) {
        x = (x + s / x) / 2;
        x = round_up_dyadic(x, kSqrtDyadicBits);
    }
    return x;
}

Rat sqrt_lower(const Rat& s, int iters) {
    if (s < 0) throw std::domain_error("sqrt_lower of negative rational");
    if (s == 0) return Rat(0);
    Rat exact;
    if (exact_sqrt(s, &exact)) return exact;
    Rat lo = s / sqrt_upper(s, iters);
    lo = round_down_dyadic(lo, kSqrtDyadicBits);
    if (lo < 0) lo = 0;
    return lo;
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    Rat d = abs_sq(o);
    if (d == 0) throw std::domain_error("division by zero GaussRat");
    Rat r = (re * o.re + im * o.im) / d;
    Rat i = (im * o.re - re * o.im) / d;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    GaussRat r = a;
    return r *= b;
}
GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    GaussRat r = a;
    return r /= b;
}
bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

Rat abs_sq(const GaussRat& c) {
    return c.re * c.re + c.im * c.im;
}

Rat abs_upper(const GaussRat& c) {
    return abs(c.re) + abs(c.im);
}

Rat abs_upper_refined(const GaussRat& c, int iters) {
    if (c.re == 0) return abs(c.im);
    if (c.im == 0) return abs(c.re);
    Rat u = sqrt_upper(abs_sq(c), iters);
    Rat t = abs_upper(c);
    return u < t ? u : t;
}

Rat abs_lower(const GaussRat& c, int iters) {
    if (c.re == 0) return abs(c.im);
    if (c.im == 0) return abs(c.re);
    Rat lo = sqrt_lower(abs_sq(c), iters);
    Rat t = abs(c.re) > abs(c.im) ? abs(c.re) : abs(c.im);  // max component <= |c|
    return lo > t ? lo : t;
}

Rat simplest_in_interval(const Rat& lo, const Rat& hi) {
    if (lo < 0 || hi < lo) throw std::invalid_argument("bad interval");
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    mpz_class ceil_lo;
    mpz_cdiv_q(ceil_lo.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (Rat(ceil_lo) <= hi) return Rat(ceil_lo);
    // No integer inside; recurse on the flipped fractional parts.
    Rat inner = simplest_in_interval(Rat(1) / (hi - Rat(fl)), Rat(1) / (lo - Rat(fl)));
    return Rat(fl) + Rat(1) / inner;
}

std::string gauss_to_string(const GaussRat& c) {
    if (c.im == 0) return rat_to_string(c.re);
    if (c.re == 0) return rat_to_string(c.im) + "i";
    std::string s = rat_to_string(c.re);
    if (c.im > 0) s += "+";
    s += rat_to_string(c.im) + "i";
    return s;
}

}  // namespace satkit
