#include <benchmark/benchmark.h>

#include <random>

#include "charp/expmap.hpp"
#include "charp/lines.hpp"
#include "charp/stableiso.hpp"

using namespace charp;

namespace {

Poly dense_poly(const FieldPtr& F, const VarSetPtr& v, std::int64_t deg, std::uint64_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::uint32_t> cf(0, F->characteristic() - 1);
    Poly p(F, v);
    for (std::int64_t i = 0; i <= deg; ++i)
        for (std::int64_t j = 0; i + j <= deg; ++j) {
            Coeff c{cf(rng)};
            if (!F->is_zero(c)) p.add_term({i, j}, c);
        }
    return p;
}

void BM_poly_mul(benchmark::State& state) {
    auto F3 = FieldSpec::prime(3);
    auto v = make_vars({"Z", "T"});
    Poly a = dense_poly(F3, v, state.range(0), 1);
    Poly b = dense_poly(F3, v, state.range(0), 2);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_poly_mul)->Arg(8)->Arg(16)->Arg(32);

void BM_poly_pow_frobenius(benchmark::State& state) {
    auto F3 = FieldSpec::prime(3);
    auto v = make_vars({"Z", "T"});
    Poly a = dense_poly(F3, v, 6, 3);
    for (auto _ : state) benchmark::DoNotOptimize(a.pow((std::uint64_t)state.range(0)));
}
BENCHMARK(BM_poly_pow_frobenius)->Arg(9)->Arg(27)->Arg(54);

void BM_normal_form(benchmark::State& state) {
    auto F2 = FieldSpec::prime(2);
    auto ZT = make_vars({"Z", "T"});
    Poly f = Poly::variable(F2, ZT, "Z", 4) + Poly::variable(F2, ZT, "T") +
             Poly::variable(F2, ZT, "T", 6);
    PresPtr A = Presentation::make(F2, 2, {2, 3}, f);
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> deg(0, (std::int64_t)state.range(0));
    Poly raw(F2, A->vars());
    for (int t = 0; t < 30; ++t) {
        Exps e(A->vars()->size());
        for (auto& x : e) x = deg(rng);
        raw.add_term(e, F2->one());
    }
    for (auto _ : state) benchmark::DoNotOptimize(AElem(A, raw));
}
BENCHMARK(BM_normal_form)->Arg(6)->Arg(10);

void BM_nagata_certificate(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            make_nagata_certificate((std::uint32_t)state.range(0), (std::uint32_t)state.range(1)));
}
BENCHMARK(BM_nagata_certificate)->Args({2, 3})->Args({3, 2})->Args({5, 3});

void BM_phi1_verify(benchmark::State& state) {
    LineCertificate c = make_nagata_certificate(2, 3);
    PresPtr A = Presentation::make(c.field, 2, {2, 3}, c.f);
    for (auto _ : state) {
        ExpMap phi = make_phi1(A);
        benchmark::DoNotOptimize(verify_exponential(phi));
    }
}
BENCHMARK(BM_phi1_verify);

void BM_stable_iso(benchmark::State& state) {
    LineCertificate c = make_nagata_certificate(3, 2);
    PresPtr A = Presentation::make(c.field, (std::size_t)state.range(0),
                                   std::vector<std::int64_t>(state.range(0), 2), c.f);
    for (auto _ : state) benchmark::DoNotOptimize(build_stable_iso(A, c));
}
BENCHMARK(BM_stable_iso)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
