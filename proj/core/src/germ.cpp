#include "satkit/germ.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace satkit {

unsigned order(const Poly& p) {
    int low = p.low_degree();
    if (low < 0) throw std::domain_error("order of zero polynomial");
    return static_cast<unsigned>(low);
}

Poly initial_form(const Poly& p) {
    unsigned nu = order(p);
    Poly r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (total_degree(m) == nu) r.add_term(m, c);
    }
    return r;
}

bool is_reduced(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("reducedness of zero polynomial");
    Poly g = p;
    for (std::size_t v = 0; v < p.nvars(); ++v) {
        g = poly_gcd(g, derivative(p, v));
        if (g.is_constant()) return true;
    }
    return g.is_constant();
}

Germ Germ::analyze(const Poly& p) {
    Germ out;
    out.poly = p;
    out.order = satkit::order(p);
    if (out.order == 0) throw std::invalid_argument("germ does not vanish at the origin");
    out.initial_form = satkit::initial_form(p);
    out.reduced = is_reduced(p);
    return out;
}

bool is_generic_direction(const Germ& f, const Germ& g, const Direction& dir) {
    if (dir.d.size() != f.poly.nvars() || dir.d.size() != g.poly.nvars()) {
        throw std::invalid_argument("direction length mismatch");
    }
    return !eval_exact(f.initial_form, dir.d).is_zero() &&
           !eval_exact(g.initial_form, dir.d).is_zero();
}

Direction pick_generic_direction(const Germ& f, const Germ& g, std::uint64_t seed,
                                 const DirectionSearch& opts) {
    std::size_t n = f.poly.nvars();
    if (g.poly.nvars() != n) throw std::invalid_argument("nvars mismatch");
    std::mt19937_64 rng(seed);
    unsigned height = opts.height;
    unsigned attempts = 0;
    while (attempts < opts.budget) {
        for (unsigned k = 0; k < opts.stage_attempts && attempts < opts.budget; ++k) {
            ++attempts;
            Direction dir;
            dir.d.reserve(n);
            bool nonzero = false;
            for (std::size_t i = 0; i < n; ++i) {
                // Modulo sampling keeps the stream identical across platforms.
                long span = 2L * height + 1;
                long v = static_cast<long>(rng() % static_cast<std::uint64_t>(span)) - height;
                if (v != 0) nonzero = true;
                dir.d.emplace_back(Rat(v));
            }
            if (!nonzero) continue;
            if (is_generic_direction(f, g, dir)) return dir;
        }
        height *= 2;
    }
    throw std::runtime_error("generic direction search exhausted after " +
                             std::to_string(attempts) + " attempts");
}

FamilyResult family_orders(const Poly& family, const std::vector<Rat>& s_values) {
    FamilyResult out;
    for (const Rat& s : s_values) {
        Poly fs = partial_eval(family, 0, GaussRat(s));
        if (fs.is_zero()) {
            throw std::domain_error("family specialization at s = " + rat_to_string(s) +
                                    " is identically zero");
        }
        out.samples.push_back({s, order(fs)});
    }
    for (const auto& sample : out.samples) {
        if (sample.order != out.samples.front().order) out.equimultiple = false;
    }
    return out;
}

}  // namespace satkit
