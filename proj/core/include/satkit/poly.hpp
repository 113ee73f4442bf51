#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "satkit/rational.hpp"

namespace satkit {

/// Exponent vector; one entry per variable, all of the polynomial's nvars.
using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m);

/// Sparse multivariate polynomial over GaussRat. The zero polynomial is the
/// empty term map; no zero coefficient is ever stored.
class Poly {
  public:
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly zero(std::size_t nvars) { return Poly(nvars); }
    static Poly constant(std::size_t nvars, GaussRat c);
    /// The monomial variable^1 (e.g. variable(3, 0) is z1 in three variables).
    static Poly variable(std::size_t nvars, std::size_t index);
    static Poly from_terms(std::size_t nvars,
                           std::vector<std::pair<Monomial, GaussRat>> terms);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, GaussRat>& terms() const { return terms_; }

    /// Coefficient of the given monomial (zero if absent).
    GaussRat coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const GaussRat& c);

    int degree() const;      // max total degree, -1 for zero
    int low_degree() const;  // min total degree, -1 for zero

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const GaussRat& c) const;

    bool operator==(const Poly& o) const = default;

  private:
    std::size_t nvars_;
    std::map<Monomial, GaussRat> terms_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);

/// Dense univariate polynomial; coeffs[k] is the degree-k coefficient and the
/// stored leading coefficient is nonzero (zero polynomial = empty vector).
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<GaussRat> coeffs);
    static UniPoly constant(GaussRat c);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<GaussRat>& coeffs() const { return coeffs_; }
    GaussRat coeff(std::size_t k) const;

    GaussRat eval(const GaussRat& t) const;
    UniPoly derivative() const;
    UniPoly scaled(const GaussRat& c) const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    bool operator==(const UniPoly& o) const = default;

  private:
    std::vector<GaussRat> coeffs_;
};

Poly add(const Poly& p, const Poly& q);
Poly sub(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);

/// Exact value of p at an nvars-long point.
GaussRat eval_exact(const Poly& p, const std::vector<GaussRat>& point);

/// t -> p(t*d) expanded exactly; the degree-k coefficient is the sum of
/// c_alpha * d^alpha over the monomials of total degree k.
UniPoly restrict_to_line(const Poly& p, const std::vector<GaussRat>& d);

Poly derivative(const Poly& p, std::size_t var);

/// Substitute value for one variable; the result has one variable fewer.
Poly partial_eval(const Poly& p, std::size_t var, const GaussRat& value);

/// Substitute subs[i] for variable i. All subs share one variable count,
/// which becomes the result's.
Poly compose(const Poly& p, const std::vector<Poly>& subs);

/// Drop every term of total degree > bound.
Poly truncate(const Poly& p, unsigned bound);

/// Exact division: num / den when den divides num, std::nullopt otherwise.
std::optional<Poly> try_divide(const Poly& num, const Poly& den);

/// Polynomial gcd, normalized so the graded-lex leading coefficient is 1.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace satkit
