#include "satkit/weierstrass.hpp"

#include <algorithm>

#include "satkit/disc.hpp"

namespace satkit {
namespace {

// Homogeneous slices of degree 0..bound.
std::vector<Poly> slices(const Poly& p, unsigned bound) {
    std::vector<Poly> out(bound + 1, Poly(p.nvars()));
    for (const auto& [m, c] : p.terms()) {
        unsigned d = total_degree(m);
        if (d <= bound) out[d].add_term(m, c);
    }
    return out;
}

void enumerate_monomials(std::size_t nvars, unsigned degree, Monomial& scratch,
                         std::size_t slot, std::vector<Monomial>& out) {
    if (slot + 1 == nvars) {
        scratch[slot] = degree;
        out.push_back(scratch);
        return;
    }
    for (unsigned e = 0; e <= degree; ++e) {
        scratch[slot] = e;
        enumerate_monomials(nvars, degree - e, scratch, slot + 1, out);
    }
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
    std::vector<Monomial> out;
    Monomial scratch(nvars, 0);
    enumerate_monomials(nvars, degree, scratch, 0, out);
    return out;
}

}  // namespace

Poly apply_change(const Poly& p, const LinearChange& a) {
    std::size_t n = p.nvars();
    if (a.matrix.size() != n) throw std::invalid_argument("matrix size mismatch");
    std::vector<Poly> subs;
    subs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.matrix[i].size() != n) throw std::invalid_argument("matrix size mismatch");
        Poly row(n);
        for (std::size_t j = 0; j < n; ++j) {
            Monomial m(n, 0);
            m[j] = 1;
            row.add_term(m, a.matrix[i][j]);
        }
        subs.push_back(std::move(row));
    }
    return compose(p, subs);
}

AxisNormalization axis_normalize(const Germ& f, const Germ& g, std::uint64_t seed) {
    std::size_t n = f.poly.nvars();
    if (g.poly.nvars() != n) throw std::invalid_argument("nvars mismatch");

    Direction axis;
    axis.d.assign(n, GaussRat());
    axis.d[n - 1] = GaussRat(1);

    Direction d = is_generic_direction(f, g, axis) ? axis
                                                   : pick_generic_direction(f, g, seed);

    // Columns: the standard basis minus the pivot slot, then d last; the
    // determinant is plus or minus the pivot entry.
    std::size_t pivot = 0;
    while (d.d[pivot].is_zero()) ++pivot;
    LinearChange a;
    a.matrix.assign(n, std::vector<GaussRat>(n, GaussRat()));
    std::size_t col = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (k == pivot) continue;
        a.matrix[k][col++] = GaussRat(1);
    }
    for (std::size_t i = 0; i < n; ++i) a.matrix[i][n - 1] = d.d[i];

    AxisNormalization out;
    out.change = a;
    out.f = Germ::analyze(apply_change(f.poly, a));
    out.g = Germ::analyze(apply_change(g.poly, a));
    return out;
}

WeierstrassFactorization prepare(const Poly& p, unsigned n_trunc) {
    std::size_t n = p.nvars();
    if (n == 0) throw std::invalid_argument("prepare needs at least one variable");
    unsigned nu = order(p);  // throws on zero polynomial
    Monomial axis_mon(n, 0);
    axis_mon[n - 1] = nu;
    GaussRat u0 = p.coeff(axis_mon);
    if (u0.is_zero()) {
        throw std::invalid_argument("input is not axis-generic in the last variable");
    }
    if (n_trunc < nu) throw std::invalid_argument("truncation order below the multiplicity");

    std::vector<Poly> pk = slices(p, n_trunc);
    std::vector<Poly> wk(n_trunc + 1, Poly(n));
    std::vector<Poly> uk(n_trunc + 1, Poly(n));
    GaussRat u0_inv = GaussRat(1) / u0;

    uk[0] = Poly::constant(n, u0);
    wk[nu] = pk[nu].scaled(u0_inv);

    for (unsigned k = nu + 1; k <= n_trunc; ++k) {
        unsigned m = k - nu;
        Poly rhs = pk[k];
        for (unsigned j = 1; j < m; ++j) rhs -= uk[j] * wk[k - j];

        // Solve u_m coefficient-wise by descending last-variable exponent;
        // the monic z_n^nu term of w_nu makes each step explicit.
        std::vector<Monomial> cands = monomials_of_degree(n, m);
        std::sort(cands.begin(), cands.end(), [n](const Monomial& x, const Monomial& y) {
            if (x[n - 1] != y[n - 1]) return x[n - 1] > y[n - 1];
            return x < y;
        });
        for (const Monomial& mu : cands) {
            Monomial target = mu;
            target[n - 1] += nu;
            GaussRat val = rhs.coeff(target);
            for (const auto& [mw, cw] : wk[nu].terms()) {
                if (mw == axis_mon) continue;
                Monomial mu2(n);
                bool divisible = true;
                for (std::size_t i = 0; i < n; ++i) {
                    if (target[i] < mw[i]) {
                        divisible = false;
                        break;
                    }
                    mu2[i] = target[i] - mw[i];
                }
                if (!divisible) continue;
                val -= uk[m].coeff(mu2) * cw;
            }
            if (!val.is_zero()) uk[m].add_term(mu, val);
        }

        Poly wpart = (rhs - uk[m] * wk[nu]).scaled(u0_inv);
        for (const auto& [mm, cc] : wpart.terms()) {
            if (mm[n - 1] >= nu) throw std::logic_error("triangular solve left a high axis term");
        }
        wk[k] = std::move(wpart);
    }

    WeierstrassFactorization out;
    out.original = p;
    out.nu = nu;
    out.trunc_order = n_trunc;
    out.w = Poly(n);
    out.u = Poly(n);
    for (unsigned k = 0; k <= n_trunc; ++k) {
        out.w += wk[k];
        out.u += uk[k];
    }
    Poly residual = p - out.u * out.w;
    out.residual_checked = truncate(residual, n_trunc).is_zero();
    out.w_reduced = !out.w.is_zero() && is_reduced(out.w);
    return out;
}

PreparedPair construct_pair(const Germ& f, const Germ& g, std::uint64_t seed,
                            unsigned n_trunc) {
    if (f.order != g.order) {
        throw OrderMismatchError("orders differ: " + std::to_string(f.order) + " vs " +
                                 std::to_string(g.order));
    }
    unsigned nu = f.order;
    if (n_trunc == 0) n_trunc = 2 * nu + 4;

    PreparedPair out;
    AxisNormalization norm = axis_normalize(f, g, seed);
    out.change = norm.change;
    out.f_fact = prepare(norm.f.poly, n_trunc);
    out.g_fact = prepare(norm.g.poly, n_trunc);

    std::size_t n = f.poly.nvars();
    Direction axis;
    axis.d.assign(n, GaussRat());
    axis.d[n - 1] = GaussRat(1);
    Germ fp = Germ::analyze(out.f_fact.w);
    Germ gp = Germ::analyze(out.g_fact.w);
    GoodDisc disc = good_radius(fp, gp, axis, Rat(1, 2));
    out.axis_certificate = certify_satellite(fp, gp, disc);
    return out;
}

}  // namespace satkit
