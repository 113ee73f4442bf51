#include "satkit/poly.hpp"

#include <numeric>
#include <stdexcept>

namespace satkit {

unsigned total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0u);
}

Poly Poly::constant(std::size_t nvars, GaussRat c) {
    Poly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Monomial(nvars, 0), std::move(c));
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw std::invalid_argument("variable index out of range");
    Poly p(nvars);
    Monomial m(nvars, 0);
    m[index] = 1;
    p.terms_.emplace(std::move(m), GaussRat(1));
    return p;
}

Poly Poly::from_terms(std::size_t nvars,
                      std::vector<std::pair<Monomial, GaussRat>> terms) {
    Poly p(nvars);
    for (auto& [m, c] : terms) {
        if (m.size() != nvars) throw std::invalid_argument("monomial length != nvars");
        p.add_term(m, c);
    }
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

GaussRat Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussRat() : it->second;
}

void Poly::add_term(const Monomial& m, const GaussRat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(total_degree(m)));
    return d;
}

int Poly::low_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int t = static_cast<int>(total_degree(m));
        if (d < 0 || t < d) d = t;
    }
    return d;
}

Poly& Poly::operator+=(const Poly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
    Poly r(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::scaled(const GaussRat& c) const {
    Poly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, co] : terms_) r.terms_.emplace(m, co * c);
    return r;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }

UniPoly::UniPoly(std::vector<GaussRat> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::constant(GaussRat c) {
    return UniPoly(std::vector<GaussRat>{std::move(c)});
}

GaussRat UniPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : GaussRat();
}

GaussRat UniPoly::eval(const GaussRat& t) const {
    GaussRat acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<GaussRat> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = coeffs_[k] * GaussRat(Rat(static_cast<long>(k)));
    }
    return UniPoly(std::move(d));
}

UniPoly UniPoly::scaled(const GaussRat& c) const {
    std::vector<GaussRat> r(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) r[k] = coeffs_[k] * c;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<GaussRat> r(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) + o.coeff(k);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<GaussRat> r(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) - o.coeff(k);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<GaussRat> r(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t a = 0; a < coeffs_.size(); ++a) {
        for (std::size_t b = 0; b < o.coeffs_.size(); ++b) {
            r[a + b] += coeffs_[a] * o.coeffs_[b];
        }
    }
    return UniPoly(std::move(r));
}

Poly add(const Poly& p, const Poly& q) { return p + q; }
Poly sub(const Poly& p, const Poly& q) { return p - q; }
Poly mul(const Poly& p, const Poly& q) { return p * q; }

GaussRat eval_exact(const Poly& p, const std::vector<GaussRat>& point) {
    if (point.size() != p.nvars()) throw std::invalid_argument("point length != nvars");
    GaussRat acc;
    for (const auto& [m, c] : p.terms()) {
        GaussRat term = c;
        for (std::size_t i = 0; i < p.nvars(); ++i) {
            for (unsigned e = 0; e < m[i]; ++e) term *= point[i];
        }
        acc += term;
    }
    return acc;
}

UniPoly restrict_to_line(const Poly& p, const std::vector<GaussRat>& d) {
    if (d.size() != p.nvars()) throw std::invalid_argument("direction length != nvars");
    bool all_zero = true;
    for (const auto& c : d) {
        if (!c.is_zero()) all_zero = false;
    }
    if (all_zero) throw std::invalid_argument("zero direction");

    std::vector<GaussRat> coeffs(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1);
    for (const auto& [m, c] : p.terms()) {
        GaussRat term = c;
        for (std::size_t i = 0; i < p.nvars(); ++i) {
            for (unsigned e = 0; e < m[i]; ++e) term *= d[i];
        }
        coeffs[total_degree(m)] += term;
    }
    return UniPoly(std::move(coeffs));
}

Poly derivative(const Poly& p, std::size_t var) {
    if (var >= p.nvars()) throw std::invalid_argument("variable index out of range");
    Poly r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (m[var] == 0) continue;
        Monomial dm = m;
        dm[var] -= 1;
        r.add_term(dm, c * GaussRat(Rat(static_cast<long>(m[var]))));
    }
    return r;
}

Poly partial_eval(const Poly& p, std::size_t var, const GaussRat& value) {
    if (var >= p.nvars()) throw std::invalid_argument("variable index out of range");
    Poly r(p.nvars() - 1);
    for (const auto& [m, c] : p.terms()) {
        GaussRat coeff = c;
        for (unsigned e = 0; e < m[var]; ++e) coeff *= value;
        Monomial rm;
        rm.reserve(m.size() - 1);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i != var) rm.push_back(m[i]);
        }
        r.add_term(rm, coeff);
    }
    return r;
}

Poly compose(const Poly& p, const std::vector<Poly>& subs) {
    if (subs.size() != p.nvars()) throw std::invalid_argument("substitution count != nvars");
    std::size_t out_vars = subs.empty() ? 0 : subs[0].nvars();
    for (const auto& s : subs) {
        if (s.nvars() != out_vars) throw std::invalid_argument("substitutions disagree on nvars");
    }
    // Powers of each substitution, built on demand.
    std::vector<std::vector<Poly>> powers(subs.size());
    auto power = [&](std::size_t i, unsigned e) -> const Poly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Poly::constant(out_vars, GaussRat(1)));
        while (cache.size() <= e) cache.push_back(cache.back() * subs[i]);
        return cache[e];
    };
    Poly r(out_vars);
    for (const auto& [m, c] : p.terms()) {
        Poly term = Poly::constant(out_vars, c);
        for (std::size_t i = 0; i < subs.size(); ++i) {
            if (m[i] > 0) term = term * power(i, m[i]);
        }
        r += term;
    }
    return r;
}

Poly truncate(const Poly& p, unsigned bound) {
    Poly r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (total_degree(m) <= bound) r.add_term(m, c);
    }
    return r;
}

}  // namespace satkit
