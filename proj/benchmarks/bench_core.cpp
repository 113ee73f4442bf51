#include <benchmark/benchmark.h>

#include "satkit/disc.hpp"
#include "satkit/germ.hpp"
#include "satkit/parse.hpp"
#include "satkit/rouche.hpp"
#include "satkit/winding.hpp"

using namespace satkit;

namespace {

Poly reference_f() {
    return parse_poly("z1^2 + z2^3 + z3^3 + z1^3 + z2^4", VarContext::standard(3));
}

Poly reference_g() {
    return parse_poly("z1^2 + z2^3 + z3^3", VarContext::standard(3));
}

Direction diag() {
    Direction d;
    d.d = {GaussRat(Rat(1)), GaussRat(Rat(0)), GaussRat(Rat(1))};
    return d;
}

void BM_PolyMul(benchmark::State& state) {
    Poly f = reference_f();
    Poly g = reference_g();
    for (auto _ : state) {
        Poly h = f * g;
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_PolyMul);

void BM_RestrictToLine(benchmark::State& state) {
    Poly f = reference_f();
    Direction d = diag();
    for (auto _ : state) {
        UniPoly u = restrict_to_line(f, d.d);
        benchmark::DoNotOptimize(u);
    }
}
BENCHMARK(BM_RestrictToLine);

void BM_GoodRadius(benchmark::State& state) {
    Germ f = Germ::analyze(reference_f());
    Germ g = Germ::analyze(reference_g());
    Direction d = diag();
    for (auto _ : state) {
        GoodDisc disc = good_radius(f, g, d);
        benchmark::DoNotOptimize(disc);
    }
}
BENCHMARK(BM_GoodRadius);

void BM_CertifyPipeline(benchmark::State& state) {
    Germ f = Germ::analyze(reference_f());
    Germ g = Germ::analyze(reference_g());
    Direction d = diag();
    for (auto _ : state) {
        GoodDisc disc = good_radius(f, g, d);
        SatelliteCertificate cert = certify_satellite(f, g, disc);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_CertifyPipeline);

void BM_Winding(benchmark::State& state) {
    UniPoly p({GaussRat(Rat(0)), GaussRat(Rat(0)), GaussRat(Rat(1)),
               GaussRat(Rat(2))});
    Rat r(1, 4);
    for (auto _ : state) {
        WindingResult res = winding_number(p, r);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_Winding);

}  // namespace

BENCHMARK_MAIN();
