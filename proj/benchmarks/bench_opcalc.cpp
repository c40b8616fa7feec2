#include "opcalc/swiss_cheese.hpp"

#include <benchmark/benchmark.h>

using namespace opcalc;

namespace {

using BD1 = BModule<LittleIntervals>;
using WE = BD1::WElement;
using BE = BD1::Element;
using IC = IntervalConfig;

const LittleIntervals d1;
const BD1 b;
const auto& w = b.w();
const OperadMap<WE, IC> delta_star = eta_mu(w, [](const IC& c) { return c; }, "eta_mu");
const PointedMapFamily<WE, IC> family{PointedSet{{"*", "m"}},
                                      {delta_star, then(delta_star, [](const IC& c) { return mirror(c); }, "m")}};

void BM_NormalizeW(benchmark::State& state) {
    Rng rng(1);
    std::vector<WOperad<LittleIntervals>::Raw> raws;
    for (int k = 0; k < 64; ++k) raws.push_back(w.sample_raw(rng, static_cast<std::size_t>(state.range(0))));
    std::size_t k = 0;
    for (auto _ : state) benchmark::DoNotOptimize(w.normalize(raws[k++ % raws.size()]));
}
BENCHMARK(BM_NormalizeW)->Arg(2)->Arg(4)->Arg(6);

void BM_NormalizeB(benchmark::State& state) {
    Rng rng(2);
    std::vector<BD1::Raw> raws;
    for (int k = 0; k < 64; ++k) raws.push_back(b.sample_raw(rng, static_cast<std::size_t>(state.range(0))));
    std::size_t k = 0;
    for (auto _ : state) benchmark::DoNotOptimize(b.normalize(raws[k++ % raws.size()]));
}
BENCHMARK(BM_NormalizeB)->Arg(2)->Arg(4)->Arg(6);

void BM_ComposeW(benchmark::State& state) {
    Rng rng(3);
    const auto x = w.sample(rng, 3), y = w.sample(rng, 3);
    for (auto _ : state) benchmark::DoNotOptimize(w.compose(x, 2, y));
}
BENCHMARK(BM_ComposeW);

void BM_Mu(benchmark::State& state) {
    Rng rng(4);
    const auto x = w.sample(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(w.mu(x));
}
BENCHMARK(BM_Mu)->Arg(3)->Arg(6);

void BM_DecomposeB(benchmark::State& state) {
    Rng rng(5);
    const auto x = b.sample(rng, 5);
    for (auto _ : state) benchmark::DoNotOptimize(b.decompose(x));
}
BENCHMARK(BM_DecomposeB);

void BM_PsiPrime(benchmark::State& state) {
    Rng rng(6);
    const auto h = random_hofiber_point(rng, family);
    const auto x = b.sample(rng, 5);
    for (auto _ : state) benchmark::DoNotOptimize(psi_prime_eval(d1, family, h, x));
}
BENCHMARK(BM_PsiPrime);

void BM_Alpha(benchmark::State& state) {
    Rng rng(7);
    const auto c = random_sc1(rng, 2, Colour::Open);
    std::vector<BimoduleMap<BE, IC>> fs;
    for (int k = 0; k < 2; ++k) {
        const auto loop = random_hofiber_point(rng, family, 2, std::size_t{0}).g;
        fs.push_back({"xi", [loop](const BE& y) { return xi_eval(d1, delta_star, loop, y); }});
    }
    const auto h = random_hofiber_point(rng, family);
    const auto last = psi_double_prime<BE, IC>(h.x, psi_prime(d1, family, h), [](const IC& e) { return e.arity(); });
    const auto y = b.sample(rng, 5);
    for (auto _ : state) benchmark::DoNotOptimize(alpha_eval(b, d1, delta_star, c, fs, last, y));
}
BENCHMARK(BM_Alpha);

}  // namespace

BENCHMARK_MAIN();
