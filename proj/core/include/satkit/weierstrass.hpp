#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "satkit/germ.hpp"
#include "satkit/poly.hpp"
#include "satkit/rouche.hpp"

namespace satkit {

struct OrderMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Invertible linear substitution z = A * z_new, row-major.
struct LinearChange {
    std::vector<std::vector<GaussRat>> matrix;
};

Poly apply_change(const Poly& p, const LinearChange& a);

struct WeierstrassFactorization {
    Poly original = Poly(0);  // input after any coordinate change
    Poly w = Poly(0);         // monic of degree nu in the last variable
    Poly u = Poly(0);         // truncated unit, u(0) != 0
    unsigned nu = 0;
    unsigned trunc_order = 0;       // N
    bool residual_checked = false;  // original - u*w has no term of degree <= N
    bool w_reduced = false;         // is_reduced(w), reported not enforced
};

struct AxisNormalization {
    LinearChange change;
    Germ f;
    Germ g;
};

// Finds one linear change making the last-variable axis generic for both
// germs; the identity is preferred when it already works.
AxisNormalization axis_normalize(const Germ& f, const Germ& g, std::uint64_t seed);

// Degree-by-degree triangular solve of p = u*w modulo total degree > N.
// Requires the axis coefficient of z_n^order(p) to be nonzero and N >= order.
WeierstrassFactorization prepare(const Poly& p, unsigned n_trunc);

struct PreparedPair {
    LinearChange change;
    WeierstrassFactorization f_fact;
    WeierstrassFactorization g_fact;
    SatelliteCertificate axis_certificate;
};

// The constructive equal-order pipeline: shared axis normalization, two
// preparations, and the exact axis-disc certificate (sup 0, inf r^nu).
// n_trunc 0 selects the default 2*nu + 4.
PreparedPair construct_pair(const Germ& f, const Germ& g, std::uint64_t seed = 0,
                            unsigned n_trunc = 0);

}  // namespace satkit
