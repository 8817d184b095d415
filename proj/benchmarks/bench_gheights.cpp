// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the hot paths: basis computation, minor
// enumeration, dimension search, syzygy kernels, sweep sampling, and
// session parsing.
#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "gheights/gheights.hpp"

namespace {

using namespace gh;

RingPtr rational_ring(std::vector<std::string> vars,
                      MonomialOrder order = MonomialOrder::grevlex()) {
    return PolyRing::create(std::move(vars), CoefficientField::rationals(), order);
}

std::vector<Polynomial> parse_all(const RingPtr& ring, const std::vector<std::string>& texts) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(parse_polynomial(ring, t));
    return out;
}

PolyMatrix koszul(const RingPtr& ring) {
    return PolyMatrix(ring, 3, 3,
                      parse_all(ring, {"y", "z", "0", "-x", "0", "z", "0", "-x", "-y"}));
}

void BM_ReducedBasisSquareOfMaxIdeal(benchmark::State& state) {
    auto R = rational_ring({"x", "y", "z"});
    auto gens = parse_all(R, {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"});
    for (auto _ : state) {
        Ideal I(R, gens);
        benchmark::DoNotOptimize(I.basis());
    }
}
BENCHMARK(BM_ReducedBasisSquareOfMaxIdeal);

void BM_ReducedBasisTwistedCubicLex(benchmark::State& state) {
    auto R = rational_ring({"z", "y", "x"}, MonomialOrder::lex());
    auto gens = parse_all(R, {"y - x^2", "z - x^3"});
    for (auto _ : state) {
        Ideal I(R, gens);
        benchmark::DoNotOptimize(I.basis());
    }
}
BENCHMARK(BM_ReducedBasisTwistedCubicLex);

void BM_MinorsGeneric3x4(benchmark::State& state) {
    std::vector<std::string> vars;
    for (int i = 0; i < 12; ++i) vars.push_back("a" + std::to_string(i));
    auto R = rational_ring(vars);
    std::vector<Polynomial> entries;
    for (int i = 0; i < 12; ++i) entries.push_back(Polynomial::variable(R, i));
    PolyMatrix A(R, 3, 4, entries);
    for (auto _ : state) benchmark::DoNotOptimize(minors(A, 2));
}
BENCHMARK(BM_MinorsGeneric3x4);

void BM_KrullDimMonomial5Vars(benchmark::State& state) {
    auto R = rational_ring({"a", "b", "c", "d", "e"});
    auto gens = parse_all(R, {"a*b", "c*d", "a*e", "b*c"});
    for (auto _ : state) {
        Ideal I(R, gens);
        benchmark::DoNotOptimize(krull_dim(I));
    }
}
BENCHMARK(BM_KrullDimMonomial5Vars);

void BM_KernelKoszul(benchmark::State& state) {
    auto R = rational_ring({"x", "y", "z"});
    PolyMatrix K = koszul(R);
    for (auto _ : state) benchmark::DoNotOptimize(kernel(K));
}
BENCHMARK(BM_KernelKoszul);

void BM_CheckHunekeRossiKoszul(benchmark::State& state) {
    auto R = rational_ring({"x", "y", "z"});
    PolyMatrix K = koszul(R);
    for (auto _ : state) benchmark::DoNotOptimize(check_huneke_rossi(K, {}));
}
BENCHMARK(BM_CheckHunekeRossiKoszul);

void BM_SweepSampleKwiecinski(benchmark::State& state) {
    SweepConfig config;
    config.theorem_id = "kwiecinski";
    config.rows = 2;
    config.cols = 1;
    config.samples = 1;
    config.seed = 42;
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep(config));
}
BENCHMARK(BM_SweepSampleKwiecinski);

void BM_SessionParse(benchmark::State& state) {
    const std::string text = R"([ring]
vars = x, y, z
field = Fp 5

[matrix K]
row = y; z; 0
row = -x; 0; z
row = 0; -x; -y

[vector v]
entries = x; y; z

[ideal I]
gen = x*y
gen = x*z

[prime m]
gen = x
gen = y
gen = z
asserted = true
)";
    for (auto _ : state) benchmark::DoNotOptimize(parse_session_text(text));
}
BENCHMARK(BM_SessionParse);

} // namespace

BENCHMARK_MAIN();
