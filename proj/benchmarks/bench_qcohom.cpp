#include <benchmark/benchmark.h>

#include "qcohom/gw_check.hpp"
#include "qcohom/ig_model.hpp"
#include "qcohom/zerodim.hpp"

namespace {

using namespace qcohom;

template <Field F>
ig::ModelPresentation<F> model(int n, ig::Variant v, CoeffField q) {
    return ig::build_relations<F>({n, v, std::move(q)});
}

void BM_GroebnerSigma(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const auto m = model<Rational>(n, ig::Variant::SigmaQuantum, CoeffField::specialized(Rational(-1)));
    for (auto _ : state) {
        auto gb = buchberger(m.ideal(), m.ring->order());
        benchmark::DoNotOptimize(gb);
    }
}
BENCHMARK(BM_GroebnerSigma)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_GroebnerSigmaGeneric(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const auto m = model<RatFunc>(n, ig::Variant::SigmaQuantum, CoeffField::generic());
    for (auto _ : state) {
        auto gb = buchberger(m.ideal(), m.ring->order());
        benchmark::DoNotOptimize(gb);
    }
}
BENCHMARK(BM_GroebnerSigmaGeneric)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_TraceForm(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const auto m = model<Rational>(n, ig::Variant::ABQuantum, CoeffField::specialized(Rational(-1)));
    for (auto _ : state) {
        const QuotientAlgebra<Rational> a(m.ideal());
        auto tf = trace_form(a);
        benchmark::DoNotOptimize(tf);
    }
}
BENCHMARK(BM_TraceForm)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Saturation(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const auto m = model<Rational>(n, ig::Variant::ABQuantum, CoeffField::specialized(Rational(-1)));
    for (auto _ : state) {
        auto sat = saturate_at_origin(m.ideal());
        benchmark::DoNotOptimize(sat);
    }
}
BENCHMARK(BM_Saturation)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ZCount(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto z = ig::z_count(n);
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_ZCount)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_FourPoint(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = gw::four_point_check(n, 2, 2 * n - 4, 100, 7);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_FourPoint)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
