#include "satkit/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "satkit/disc.hpp"
#include "satkit/germ.hpp"
#include "satkit/parse.hpp"
#include "satkit/report.hpp"
#include "satkit/rouche.hpp"
#include "satkit/small_map.hpp"
#include "satkit/version.hpp"
#include "satkit/weierstrass.hpp"
#include "satkit/winding.hpp"

namespace satkit {
namespace {

constexpr int kOk = 0;
constexpr int kFalse = 2;
constexpr int kUnknown = 3;
constexpr int kInputError = 4;

struct Options {
    std::string f_text;
    std::string g_text;
    std::string line;
    std::string radius;
    std::string safety = "1/2";
    std::string r;
    std::string rho;
    std::string samples;
    std::vector<std::string> phi;
    std::uint64_t seed = 0;
    long long budget = -1;  // -1: use SATKIT_BUDGET or the verb default
    unsigned trunc = 0;
};

std::string read_input(const std::string& text) {
    if (text == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    return text;
}

long long budget_or(const Options& o, long long fallback) {
    if (o.budget >= 0) return o.budget;
    if (const char* env = std::getenv("SATKIT_BUDGET")) {
        try {
            long long v = std::stoll(env);
            if (v >= 0) return v;
        } catch (const std::exception&) {
        }
    }
    return fallback;
}

OrderedJson new_report(const char* verb) {
    OrderedJson doc;
    doc["schema"] = kSchema;
    doc["verb"] = verb;
    doc["inputs"] = OrderedJson::object();
    doc["options"] = OrderedJson::object();
    return doc;
}

Direction make_direction(const std::string& text, std::size_t nvars) {
    std::vector<Rat> v = parse_direction(text);
    if (v.size() != nvars)
        throw std::invalid_argument("direction has " + std::to_string(v.size()) +
                                    " components, expected " + std::to_string(nvars));
    Direction d;
    d.d.reserve(v.size());
    for (const Rat& x : v) d.d.emplace_back(x);
    return d;
}

struct PairInput {
    std::size_t nvars = 0;
    Germ f;
    Germ g;
};

PairInput load_pair(const std::string& f_raw, const std::string& g_raw) {
    std::string ft = read_input(f_raw);
    std::string gt = read_input(g_raw);
    std::size_t n = std::max(infer_nvars(ft), infer_nvars(gt));
    PairInput in;
    in.nvars = n;
    in.f = Germ::analyze(parse_poly(ft, VarContext::standard(n)));
    in.g = Germ::analyze(parse_poly(gt, VarContext::standard(n)));
    return in;
}

void echo_pair(OrderedJson& doc, const PairInput& in) {
    doc["inputs"]["f"] = render_poly(in.f.poly);
    doc["inputs"]["g"] = render_poly(in.g.poly);
}

void attach_orders(OrderedJson& doc, unsigned f, unsigned g) {
    OrderedJson o;
    o["f"] = f;
    o["g"] = g;
    doc["orders"] = o;
}

int verdict_exit(SatVerdict v) {
    switch (v) {
        case SatVerdict::Proved: return kOk;
        case SatVerdict::RefutedOnDisc: return kFalse;
        default: return kUnknown;
    }
}

void attach_certificate(OrderedJson& doc, const SatelliteCertificate& cert) {
    doc["verdict"] = verdict_name(cert.verdict);
    doc["method"] = method_name(cert.method);
    doc["bounds"] = json_bounds(cert);
    if (cert.verdict == SatVerdict::RefutedOnDisc) doc["witness"] = json_witness(cert);
    doc["disc"] = json_disc(cert.disc);
}

int do_order(const Options& o, OrderedJson& doc) {
    doc = new_report("order");
    Poly p(1);
    {
        std::string text = read_input(o.f_text);
        p = parse_poly(text, VarContext::standard(infer_nvars(text)));
    }
    doc["inputs"]["f"] = render_poly(p);
    doc["verdict"] = "ok";
    OrderedJson ord;
    ord["f"] = order(p);
    doc["orders"] = ord;
    return kOk;
}

int do_tangent_cone(const Options& o, OrderedJson& doc) {
    doc = new_report("tangent-cone");
    Poly p(1);
    {
        std::string text = read_input(o.f_text);
        p = parse_poly(text, VarContext::standard(infer_nvars(text)));
    }
    doc["inputs"]["f"] = render_poly(p);
    doc["verdict"] = "ok";
    OrderedJson ord;
    ord["f"] = order(p);
    doc["orders"] = ord;
    doc["tangent_cone"] = render_poly(initial_form(p));
    return kOk;
}

int do_reduced(const Options& o, OrderedJson& doc) {
    doc = new_report("reduced");
    Poly p(1);
    {
        std::string text = read_input(o.f_text);
        p = parse_poly(text, VarContext::standard(infer_nvars(text)));
    }
    doc["inputs"]["f"] = render_poly(p);
    bool red = is_reduced(p);
    doc["verdict"] = red ? "reduced" : "non-reduced";
    doc["reduced"] = red;
    return red ? kOk : kFalse;
}

int do_good_disc(const Options& o, OrderedJson& doc) {
    doc = new_report("good-disc");
    PairInput in = load_pair(o.f_text, o.g_text);
    echo_pair(doc, in);
    doc["options"]["line"] = o.line;
    doc["options"]["safety"] = o.safety;
    Direction d = o.line.empty() ? pick_generic_direction(in.f, in.g, o.seed)
                                 : make_direction(o.line, in.nvars);
    GoodDisc disc = good_radius(in.f, in.g, d, rat_from_string(o.safety));
    doc["verdict"] = "ok";
    doc["disc"] = json_disc(disc, /*include_r_star=*/true);
    attach_orders(doc, disc.order_f, disc.order_g);
    return kOk;
}

int do_certify(const Options& o, OrderedJson& doc) {
    doc = new_report("certify");
    PairInput in = load_pair(o.f_text, o.g_text);
    echo_pair(doc, in);
    long long budget = budget_or(o, 9);
    doc["options"]["line"] = o.line;
    doc["options"]["radius"] = o.radius;
    doc["options"]["safety"] = o.safety;
    doc["options"]["budget"] = budget;

    SatelliteCertificate cert;
    if (!o.line.empty()) {
        Direction d = make_direction(o.line, in.nvars);
        if (!o.radius.empty()) {
            Rat r = rat_from_string(o.radius);
            DiscCheck chk = certify_disc(in.f, in.g, d, r);
            if (chk.verdict != DiscVerdict::Certified) {
                doc["verdict"] = "Unknown";
                doc["disc_check"] =
                    chk.verdict == DiscVerdict::Rejected ? "rejected" : "unknown";
                doc["disc"] = json_disc(chk.disc);
                attach_orders(doc, in.f.order, in.g.order);
                return kUnknown;
            }
            cert = certify_satellite(in.f, in.g, chk.disc);
        } else {
            GoodDisc disc = good_radius(in.f, in.g, d, rat_from_string(o.safety));
            cert = certify_satellite(in.f, in.g, disc);
        }
    } else {
        SearchOptions so;
        so.seed = o.seed;
        so.attempts = static_cast<unsigned>(budget);
        cert = search_satellite(in.f, in.g, so);
    }
    attach_certificate(doc, cert);
    attach_orders(doc, in.f.order, in.g.order);
    return verdict_exit(cert.verdict);
}

int do_count_zeros(const Options& o, OrderedJson& doc) {
    doc = new_report("count-zeros");
    std::string text = read_input(o.f_text);
    Poly p = parse_poly(text, VarContext::standard(1));
    doc["inputs"]["p"] = render_poly(p);
    long long budget = budget_or(o, 1 << 16);
    doc["options"]["radius"] = o.radius;
    doc["options"]["budget"] = budget;
    std::vector<GaussRat> coeffs(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1);
    for (const auto& [mono, c] : p.terms()) coeffs[mono[0]] = c;
    UniPoly u(coeffs);
    WindingOptions wo;
    wo.max_steps = static_cast<unsigned>(std::max<long long>(budget, 2));
    wo.initial_steps = std::min(wo.initial_steps, wo.max_steps & ~1u);
    WindingResult res = winding_number(u, rat_from_string(o.radius), wo);
    switch (res.status) {
        case WindingStatus::Counted:
            doc["verdict"] = "counted";
            doc["count"] = res.count;
            doc["steps"] = res.steps;
            return kOk;
        case WindingStatus::ZeroOnCircle:
            doc["verdict"] = "zero_on_circle";
            doc["steps"] = res.steps;
            return kFalse;
        default:
            doc["verdict"] = "step_budget_exceeded";
            doc["steps"] = res.steps;
            return kUnknown;
    }
}

int do_prepare(const Options& o, OrderedJson& doc) {
    doc = new_report("prepare");
    std::string text = read_input(o.f_text);
    Poly p = parse_poly(text, VarContext::standard(infer_nvars(text)));
    doc["inputs"]["f"] = render_poly(p);
    unsigned nu = order(p);
    unsigned n_trunc = o.trunc > 0 ? o.trunc : 2 * nu + 4;
    doc["options"]["trunc"] = n_trunc;
    WeierstrassFactorization wf = prepare(p, n_trunc);
    doc["verdict"] = wf.residual_checked ? "ok" : "residual_failed";
    OrderedJson w;
    w["N"] = wf.trunc_order;
    w["residual_ok"] = wf.residual_checked;
    w["nu"] = wf.nu;
    w["u"] = render_poly(wf.u);
    w["w"] = render_poly(wf.w);
    w["w_reduced"] = wf.w_reduced;
    doc["weierstrass"] = w;
    return wf.residual_checked ? kOk : kFalse;
}

int do_small_map(const Options& o, OrderedJson& doc) {
    doc = new_report("small-map");
    std::string ft = read_input(o.f_text);
    std::size_t n = infer_nvars(ft);
    Germ f = Germ::analyze(parse_poly(ft, VarContext::standard(n)));
    if (o.phi.size() != n)
        throw std::invalid_argument("expected " + std::to_string(n) +
                                    " --phi components, got " + std::to_string(o.phi.size()));
    std::vector<Poly> phi;
    phi.reserve(n);
    for (const std::string& raw : o.phi)
        phi.push_back(parse_poly(read_input(raw), VarContext::standard(n)));
    doc["inputs"]["f"] = render_poly(f.poly);
    OrderedJson comps = OrderedJson::array();
    for (const Poly& c : phi) comps.push_back(render_poly(c));
    doc["inputs"]["phi"] = comps;
    doc["options"]["r"] = o.r;
    doc["options"]["rho"] = o.rho;
    doc["options"]["line"] = o.line;
    Direction d = o.line.empty() ? pick_generic_direction(f, f, o.seed)
                                 : make_direction(o.line, n);
    SmallMapReport rep =
        check_f_small(f, phi, rat_from_string(o.r), d, rat_from_string(o.rho));
    if (rep.status == SmallMapStatus::Unknown)
        doc["verdict"] = "Unknown";
    else
        doc["verdict"] = rep.pass ? "pass" : "fail";
    doc["small_map"] = json_small_map(rep);
    attach_orders(doc, rep.order_f, rep.order_g);
    if (rep.status == SmallMapStatus::Unknown) return kUnknown;
    return rep.pass ? kOk : kFalse;
}

int do_family(const Options& o, OrderedJson& doc) {
    doc = new_report("family");
    std::string text = read_input(o.f_text);
    std::size_t n = infer_nvars(text, {"s"});
    Poly fam = parse_poly(text, VarContext::with_parameter(n, "s"));
    doc["inputs"]["family"] = text;
    doc["options"]["samples"] = o.samples;
    std::vector<Rat> samples = parse_direction(o.samples);
    FamilyResult res = family_orders(fam, samples);
    OrderedJson rows = OrderedJson::array();
    for (const FamilySample& s : res.samples) {
        OrderedJson row;
        row["s"] = json_rat(s.s);
        row["order"] = s.order;
        rows.push_back(row);
    }
    doc["verdict"] = res.equimultiple ? "equimultiple" : "non-equimultiple";
    doc["family"] = rows;
    doc["equimultiple"] = res.equimultiple;
    return res.equimultiple ? kOk : kFalse;
}

int do_zariski_demo(const Options& o, OrderedJson& doc) {
    doc = new_report("zariski-demo");
    PairInput in = load_pair(o.f_text, o.g_text);
    echo_pair(doc, in);
    long long budget = budget_or(o, 9);
    doc["options"]["budget"] = budget;
    SearchOptions so;
    so.seed = o.seed;
    so.attempts = static_cast<unsigned>(budget);
    SatelliteCertificate cert = search_satellite(in.f, in.g, so);
    attach_certificate(doc, cert);
    attach_orders(doc, in.f.order, in.g.order);
    if (in.f.order == in.g.order) {
        PreparedPair pair = construct_pair(in.f, in.g, o.seed, o.trunc);
        OrderedJson w;
        w["N"] = pair.f_fact.trunc_order;
        w["residual_ok"] = pair.f_fact.residual_checked && pair.g_fact.residual_checked;
        w["w_f"] = render_poly(pair.f_fact.w);
        w["w_g"] = render_poly(pair.g_fact.w);
        OrderedJson axis;
        axis["verdict"] = verdict_name(pair.axis_certificate.verdict);
        axis["bounds"] = json_bounds(pair.axis_certificate);
        axis["disc"] = json_disc(pair.axis_certificate.disc);
        w["axis_certificate"] = axis;
        doc["weierstrass"] = w;
    }
    return verdict_exit(cert.verdict);
}

}  // namespace

CliResult run_command(const std::vector<std::string>& args) {
    Options o;
    CLI::App app{"exact multiplicities and satellite certificates for plane and space germs"};
    app.name("satkit");
    app.require_subcommand(1);

    CLI::App* c_order = app.add_subcommand("order", "multiplicity of a germ at the origin");
    c_order->add_option("poly", o.f_text, "polynomial (or - for stdin)")->required();

    CLI::App* c_cone = app.add_subcommand("tangent-cone", "initial form of a germ");
    c_cone->add_option("poly", o.f_text, "polynomial (or - for stdin)")->required();

    CLI::App* c_red = app.add_subcommand("reduced", "squarefreeness check");
    c_red->add_option("poly", o.f_text, "polynomial (or - for stdin)")->required();

    CLI::App* c_disc = app.add_subcommand("good-disc", "certified good disc on a test line");
    c_disc->add_option("f", o.f_text, "first germ")->required();
    c_disc->add_option("g", o.g_text, "second germ")->required();
    c_disc->add_option("--line", o.line, "direction, comma separated rationals");
    c_disc->add_option("--safety", o.safety, "shrink factor in (0,1)");
    c_disc->add_option("--seed", o.seed, "seed for direction search");

    CLI::App* c_cert = app.add_subcommand("certify", "satellite certificate for a germ pair");
    c_cert->add_option("f", o.f_text, "first germ")->required();
    c_cert->add_option("g", o.g_text, "second germ")->required();
    c_cert->add_option("--line", o.line, "direction, comma separated rationals");
    c_cert->add_option("--radius", o.radius, "disc radius (validated before certifying)");
    c_cert->add_option("--safety", o.safety, "shrink factor for the good radius");
    c_cert->add_option("--seed", o.seed, "seed for the search");
    c_cert->add_option("--budget", o.budget, "search attempts");

    CLI::App* c_count = app.add_subcommand("count-zeros", "winding number of a univariate polynomial");
    c_count->add_option("poly", o.f_text, "polynomial in one variable")->required();
    c_count->add_option("--radius", o.radius, "circle radius")->required();
    c_count->add_option("--budget", o.budget, "maximum subdivision steps");

    CLI::App* c_prep = app.add_subcommand("prepare", "Weierstrass normalization along the last axis");
    c_prep->add_option("poly", o.f_text, "axis-generic germ")->required();
    c_prep->add_option("--trunc", o.trunc, "truncation order (default 2*order+4)");

    CLI::App* c_small = app.add_subcommand("small-map", "f-smallness check for a polynomial map");
    c_small->add_option("f", o.f_text, "germ")->required();
    c_small->add_option("--phi", o.phi, "map component (repeat per variable)")->required();
    c_small->add_option("--r", o.r, "outer radius")->required();
    c_small->add_option("--rho", o.rho, "inner radius, at most r/2")->required();
    c_small->add_option("--line", o.line, "direction, comma separated rationals");
    c_small->add_option("--seed", o.seed, "seed for direction search");

    CLI::App* c_fam = app.add_subcommand("family", "orders along a one-parameter family");
    c_fam->add_option("poly", o.f_text, "family in s and z1..zn")->required();
    c_fam->add_option("--samples", o.samples, "parameter values, comma separated")->required();

    CLI::App* c_dem = app.add_subcommand("zariski-demo", "satellite certificate plus prepared pair");
    c_dem->add_option("f", o.f_text, "first germ")->required();
    c_dem->add_option("g", o.g_text, "second germ")->required();
    c_dem->add_option("--seed", o.seed, "seed for the search");
    c_dem->add_option("--budget", o.budget, "search attempts");
    c_dem->add_option("--trunc", o.trunc, "truncation order (default 2*order+4)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return {kOk, app.help()};
    } catch (const CLI::CallForAllHelp&) {
        return {kOk, app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        OrderedJson doc;
        doc["schema"] = kSchema;
        doc["verb"] = "none";
        doc["error"] = e.what();
        doc["version"] = kVersion;
        return {kInputError, doc.dump(2) + "\n"};
    }

    auto t0 = std::chrono::steady_clock::now();
    OrderedJson doc;
    int code = kOk;
    try {
        if (app.got_subcommand(c_order)) code = do_order(o, doc);
        else if (app.got_subcommand(c_cone)) code = do_tangent_cone(o, doc);
        else if (app.got_subcommand(c_red)) code = do_reduced(o, doc);
        else if (app.got_subcommand(c_disc)) code = do_good_disc(o, doc);
        else if (app.got_subcommand(c_cert)) code = do_certify(o, doc);
        else if (app.got_subcommand(c_count)) code = do_count_zeros(o, doc);
        else if (app.got_subcommand(c_prep)) code = do_prepare(o, doc);
        else if (app.got_subcommand(c_small)) code = do_small_map(o, doc);
        else if (app.got_subcommand(c_fam)) code = do_family(o, doc);
        else if (app.got_subcommand(c_dem)) code = do_zariski_demo(o, doc);
    } catch (const ParseError& e) {
        doc["verdict"] = "error";
        OrderedJson err;
        err["message"] = e.what();
        err["column"] = e.column;
        doc["error"] = err;
        code = kInputError;
    } catch (const std::runtime_error& e) {
        doc["verdict"] = "Unknown";
        doc["error"] = e.what();
        code = kUnknown;
    } catch (const std::exception& e) {
        doc["verdict"] = "error";
        doc["error"] = e.what();
        code = kInputError;
    }

    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    doc["seed"] = o.seed;
    doc["version"] = kVersion;
    doc["elapsed_ms"] = ms;
    return {code, doc.dump(2) + "\n"};
}

}  // namespace satkit
