#include "satkit/report.hpp"

namespace satkit {

std::string json_rat(const Rat& x) { return rat_to_string(x); }

std::string json_gauss(const GaussRat& z) { return gauss_to_string(z); }

OrderedJson json_point(const std::vector<GaussRat>& w) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& c : w) arr.push_back(json_gauss(c));
    return arr;
}

const char* verdict_name(SatVerdict v) {
    switch (v) {
        case SatVerdict::Proved: return "Proved";
        case SatVerdict::RefutedOnDisc: return "RefutedOnDisc";
        default: return "Unknown";
    }
}

const char* method_name(SatMethod m) {
    switch (m) {
        case SatMethod::GlobalBound: return "global_bound";
        case SatMethod::ArcSubdivision: return "arc_subdivision";
        default: return "witness";
    }
}

const char* disc_method_name(DiscMethod m) {
    return m == DiscMethod::CoefficientBound ? "coefficient_bound" : "winding_zero";
}

OrderedJson json_disc(const GoodDisc& d, bool include_r_star) {
    OrderedJson out;
    out["direction"] = json_point(d.direction.d);
    out["radius"] = json_rat(d.radius);
    out["method"] = disc_method_name(d.certificate_kind);
    if (include_r_star) out["r_star"] = json_rat(d.r_star);
    return out;
}

OrderedJson json_bounds(const SatelliteCertificate& c) {
    OrderedJson out;
    out["sup_fg"] = json_rat(c.sup_bound_fg);
    out["inf_f"] = json_rat(c.inf_bound_f);
    return out;
}

OrderedJson json_witness(const SatelliteCertificate& c) {
    OrderedJson out;
    out["t"] = json_gauss(c.witness_t);
    out["point"] = json_point(c.witness_point);
    out["refuting_points"] = c.refuting_points;
    return out;
}

OrderedJson json_small_map(const SmallMapReport& r) {
    OrderedJson out;
    out["r"] = json_rat(r.r);
    out["rho"] = json_rat(r.rho);
    out["m"] = json_rat(r.m);
    out["L"] = json_rat(r.L);
    out["eta"] = json_rat(r.eta);
    out["disp"] = json_rat(r.disp);
    out["pass"] = r.pass;
    return out;
}

}  // namespace satkit
