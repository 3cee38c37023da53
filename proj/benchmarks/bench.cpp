#include "crysext/breuil.hpp"
#include "crysext/oracle.hpp"
#include "crysext/rmodule.hpp"

#include <benchmark/benchmark.h>

#include <optional>

using namespace crysext;

namespace {

// first extension at the largest valid pair, with a dense lambda
ExtBM sample(const Context& ctx) {
    std::optional<ExtBM> best;
    for_each_instance({ctx.p(), ctx.e(), ctx.f()}, FrobeniusRange::generator_pair,
                      [&](const Context& c, const FullChar& c1, const FullChar& c2, const SerreWeight& a) {
                          if (best) return;
                          for (const auto& vp : valid_pairs(c1, c2, a, c)) {
                              if (vp.x + vp.y < c.e()) continue;
                              TruncPoly lambda(c.ring());
                              const int r = c.reduce(vp.l - vp.k);
                              for (int d = lambda_min_degree(vp.x, vp.y, c); d < c.ring_length(); ++d)
                                  if (c.reduce(d) == r) lambda.set_coeff(d, c.field().one());
                              best = make_extension(vp.x, vp.y, lambda, c1, c2, a, c);
                              return;
                          }
                      });
    return *best;
}

void BM_RingMultiply(benchmark::State& state) {
    const Context ctx(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    TruncPoly a(ctx.ring()), b(ctx.ring());
    for (int i = 0; i < ctx.ring_length(); ++i) {
        a.set_coeff(i, ctx.field().from_int(i + 1));
        b.set_coeff(i, ctx.field().from_int(2 * i + 1));
    }
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_RingMultiply)->Args({3, 1})->Args({3, 3})->Args({5, 3});

void BM_ComparisonKernel(benchmark::State& state) {
    const Context ctx(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    const ExtBM p = sample(ctx);
    const auto cm = transform_to_big_model(p, ctx);
    for (auto _ : state) benchmark::DoNotOptimize(kernel(cm.from_original));
}
BENCHMARK(BM_ComparisonKernel)->Args({3, 2})->Args({5, 3});

void BM_NormalForm(benchmark::State& state) {
    const Context ctx(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    const ExtBM p = sample(ctx);
    for (auto _ : state) benchmark::DoNotOptimize(reduce_to_normal_form(p, ctx));
}
BENCHMARK(BM_NormalForm)->Args({3, 2})->Args({5, 3});

void BM_IsomorphismSolve(benchmark::State& state) {
    const Context ctx(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    const ExtBM p = sample(ctx);
    const ExtBM q = reduce_to_normal_form(p, ctx);
    for (auto _ : state) benchmark::DoNotOptimize(isomorphism_solve(p, q, ctx));
}
BENCHMARK(BM_IsomorphismSolve)->Args({3, 2})->Args({5, 2});

}  // namespace

BENCHMARK_MAIN();
