#include "satkit/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace satkit {
namespace {

// Graded lexicographic order; total degree first, then exponent vector.
bool grlex_less(const Monomial& a, const Monomial& b) {
    unsigned ta = total_degree(a);
    unsigned tb = total_degree(b);
    if (ta != tb) return ta < tb;
    return a < b;
}

std::pair<Monomial, GaussRat> lead_term(const Poly& p) {
    auto it = p.terms().begin();
    auto best = it;
    for (++it; it != p.terms().end(); ++it) {
        if (grlex_less(best->first, it->first)) best = it;
    }
    return {best->first, best->second};
}

Poly normalized(const Poly& p) {
    if (p.is_zero()) return p;
    auto [m, c] = lead_term(p);
    return p.scaled(GaussRat(1) / c);
}

Poly divide_exact(const Poly& p, const Poly& q) {
    auto r = try_divide(p, q);
    if (!r) throw std::logic_error("inexact division in gcd");
    return *r;
}

// Univariate gcd over the coefficient field, monic result.
Poly gcd_univariate(const Poly& p, const Poly& q) {
    auto to_dense = [](const Poly& f) {
        std::vector<GaussRat> c(static_cast<std::size_t>(f.degree()) + 1);
        for (const auto& [m, co] : f.terms()) c[m[0]] = co;
        return c;
    };
    auto trim = [](std::vector<GaussRat>& c) {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    };
    std::vector<GaussRat> a = to_dense(p);
    std::vector<GaussRat> b = to_dense(q);
    while (!b.empty()) {
        while (a.size() >= b.size()) {
            GaussRat factor = a.back() / b.back();
            std::size_t shift = a.size() - b.size();
            for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= factor * b[k];
            a.pop_back();
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    Poly g(1);
    GaussRat lc = a.back();
    for (std::size_t k = 0; k < a.size(); ++k) g.add_term(Monomial{static_cast<unsigned>(k)}, a[k] / lc);
    return g;
}

Poly gcd_impl(const Poly& p, const Poly& q);

// p viewed as univariate in its last variable; coefficients keep one fewer variable.
std::vector<Poly> split_last(const Poly& p) {
    std::size_t v = p.nvars() - 1;
    std::vector<Poly> coeffs;
    for (const auto& [m, c] : p.terms()) {
        unsigned e = m[v];
        if (coeffs.size() <= e) coeffs.resize(e + 1, Poly(p.nvars() - 1));
        Monomial rest(m.begin(), m.end() - 1);
        coeffs[e].add_term(rest, c);
    }
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    return coeffs;
}

Poly join_last(const std::vector<Poly>& coeffs, std::size_t nvars) {
    Poly p(nvars);
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        for (const auto& [m, c] : coeffs[e].terms()) {
            Monomial full(m);
            full.push_back(static_cast<unsigned>(e));
            p.add_term(full, c);
        }
    }
    return p;
}

Poly content_of(const std::vector<Poly>& coeffs) {
    Poly acc(coeffs.empty() ? 0 : coeffs[0].nvars());
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        acc = gcd_impl(acc, c);
        if (acc.is_constant() && !acc.is_zero()) break;
    }
    return acc;
}

std::vector<Poly> primitive_part(std::vector<Poly> coeffs) {
    Poly cont = content_of(coeffs);
    if (cont.is_zero() || (cont.is_constant() && cont.coeff(Monomial(cont.nvars(), 0)) == GaussRat(1))) {
        return coeffs;
    }
    for (auto& c : coeffs) {
        if (!c.is_zero()) c = divide_exact(c, cont);
    }
    return coeffs;
}

void trim_top(std::vector<Poly>& r) {
    while (!r.empty() && r.back().is_zero()) r.pop_back();
}

// Canonical pseudo-remainder lc(v)^(deg u - deg v + 1) * u mod v, ascending
// coefficients. Interior zeros are kept in play so the multiplier power is
// exactly the one the subresultant divisions expect.
std::vector<Poly> prem(std::vector<Poly> u, const std::vector<Poly>& v) {
    const Poly& lcv = v.back();
    std::size_t n = v.size() - 1;
    while (u.size() > n) {
        Poly lead = std::move(u.back());
        u.pop_back();
        for (Poly& c : u) c = c * lcv;
        if (!lead.is_zero()) {
            std::size_t shift = u.size() - n;
            for (std::size_t j = 0; j < n; ++j) u[shift + j] -= lead * v[j];
        }
    }
    trim_top(u);
    return u;
}

Poly power(const Poly& base, std::size_t e) {
    Poly acc = Poly::constant(base.nvars(), GaussRat(1));
    for (std::size_t k = 0; k < e; ++k) acc = acc * base;
    return acc;
}

Poly gcd_impl(const Poly& p, const Poly& q) {
    if (p.is_zero()) return normalized(q);
    if (q.is_zero()) return normalized(p);
    if (p.is_constant() || q.is_constant()) {
        return Poly::constant(p.nvars(), GaussRat(1));
    }
    if (p.nvars() == 1) return gcd_univariate(p, q);

    std::vector<Poly> a = split_last(p);
    std::vector<Poly> b = split_last(q);
    Poly cont_a = content_of(a);
    Poly cont_b = content_of(b);
    Poly cont_gcd = gcd_impl(cont_a, cont_b);
    std::vector<Poly> u = primitive_part(std::move(a));
    std::vector<Poly> v = primitive_part(std::move(b));
    if (u.size() < v.size()) std::swap(u, v);

    // Subresultant remainder sequence: dividing by g*h^delta keeps the
    // coefficient degrees linear where the naive chain compounds them.
    Poly g = Poly::constant(p.nvars() - 1, GaussRat(1));
    Poly h = g;
    while (true) {
        std::size_t delta = u.size() - v.size();
        std::vector<Poly> r = prem(u, v);
        if (r.empty()) break;
        Poly divisor = g * power(h, delta);
        for (Poly& c : r) {
            if (!c.is_zero()) c = divide_exact(c, divisor);
        }
        u = std::move(v);
        v = std::move(r);
        g = u.back();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = divide_exact(power(g, delta), power(h, delta - 1));
        }
    }
    v = primitive_part(std::move(v));

    Poly lift = join_last(v, p.nvars());
    Poly cont_lift(p.nvars());
    for (const auto& [m, c] : cont_gcd.terms()) {
        Monomial full(m);
        full.push_back(0);
        cont_lift.add_term(full, c);
    }
    return normalized(lift * cont_lift);
}

}  // namespace

std::optional<Poly> try_divide(const Poly& p, const Poly& q) {
    if (p.nvars() != q.nvars()) throw std::invalid_argument("nvars mismatch");
    if (q.is_zero()) return std::nullopt;
    if (p.is_zero()) return Poly(p.nvars());
    auto [qm, qc] = lead_term(q);
    Poly quotient(p.nvars());
    Poly r = p;
    while (!r.is_zero()) {
        auto [rm, rc] = lead_term(r);
        Monomial t(p.nvars());
        for (std::size_t i = 0; i < p.nvars(); ++i) {
            if (rm[i] < qm[i]) return std::nullopt;
            t[i] = rm[i] - qm[i];
        }
        GaussRat c = rc / qc;
        quotient.add_term(t, c);
        Poly piece(p.nvars());
        piece.add_term(t, c);
        r -= piece * q;
    }
    return quotient;
}

Poly poly_gcd(const Poly& p, const Poly& q) {
    if (p.nvars() != q.nvars()) throw std::invalid_argument("nvars mismatch");
    return gcd_impl(p, q);
}

}  // namespace satkit
