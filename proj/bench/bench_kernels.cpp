// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <thread>

#include "sched/alpha_points.hpp"
#include "sched/exact_oracle.hpp"
#include "sched/lp_relaxation.hpp"
#include "sched/pipeline.hpp"

namespace {

sched::Instance bench_instance(int n, std::uint64_t seed) {
    sched::GeneratorParams gen;
    gen.n = n;
    gen.seed = seed;
    gen.r_max = 4.0 * n;
    gen.edge_prob = 0.1;
    return sched::normalize_release_dates(sched::generate_random(gen));
}

sched::BenchParams bench_params(int count) {
    sched::BenchParams params;
    params.count = count;
    params.generator.n = 7;
    params.generator.seed = 1;
    return params;
}

void BM_RunBenchSerial(benchmark::State &state) {
    const auto params = bench_params(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sched::run_bench_serial(params));
}

void BM_RunBenchParallel(benchmark::State &state) {
    auto params = bench_params(static_cast<int>(state.range(0)));
    params.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    for (auto _ : state) benchmark::DoNotOptimize(sched::run_bench(params));
}

sched::AlphaProfile profile_for(const sched::Instance &inst) {
    return sched::AlphaProfile::from_list(inst, sched::lp_list_order(sched::solve_lp_relaxation(inst), inst));
}

// Preemption-heavy instance: the seed with the most candidate alphas among the first few.
struct ProfileFixture {
    sched::Instance inst;
    sched::AlphaProfile profile;

    explicit ProfileFixture(int n) : inst(pick(n)), profile(profile_for(inst)) {}

    static sched::Instance pick(int n) {
        sched::Instance best;
        std::size_t most = 0;
        for (std::uint64_t seed = 1; seed <= 8; ++seed) {
            sched::GeneratorParams gen;
            gen.n = n;
            gen.seed = seed;
            gen.p_max = 20;
            gen.r_max = 6.0 * n;
            gen.edge_prob = 0.0;
            auto inst = sched::normalize_release_dates(sched::generate_random(gen));
            const auto count = sched::candidate_alphas(profile_for(inst)).size();
            if (count > most) most = count, best = std::move(inst);
        }
        return best;
    }
};

void BM_DerandomizeSerial(benchmark::State &state) {
    const ProfileFixture f(static_cast<int>(state.range(0)));
    state.counters["candidates"] = static_cast<double>(sched::candidate_alphas(f.profile).size());
    for (auto _ : state) benchmark::DoNotOptimize(sched::derandomized_best_serial(f.inst, f.profile));
}

void BM_DerandomizeParallel(benchmark::State &state) {
    const ProfileFixture f(static_cast<int>(state.range(0)));
    state.counters["candidates"] = static_cast<double>(sched::candidate_alphas(f.profile).size());
    for (auto _ : state) benchmark::DoNotOptimize(sched::derandomized_best(f.inst, f.profile));
}

std::vector<double> random_point(const sched::Instance &inst) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> c(inst.jobs.size());
    for (auto &v : c) v = u(rng) * 3.0 * static_cast<double>(inst.size());
    return c;
}

void BM_SeparationSerial(benchmark::State &state) {
    const auto inst = bench_instance(static_cast<int>(state.range(0)), 7);
    const auto c = random_point(inst);
    for (auto _ : state) benchmark::DoNotOptimize(sched::brute_force_separation_serial(c, inst, 0.0, 16));
}

void BM_SeparationParallel(benchmark::State &state) {
    const auto inst = bench_instance(static_cast<int>(state.range(0)), 7);
    const auto c = random_point(inst);
    for (auto _ : state) benchmark::DoNotOptimize(sched::brute_force_separation(c, inst, 0.0, 16));
}

void BM_PrefixSeparation(benchmark::State &state) {
    const auto inst = bench_instance(static_cast<int>(state.range(0)), 7);
    const auto c = random_point(inst);
    for (auto _ : state) benchmark::DoNotOptimize(sched::separate(c, inst));
}

}  // namespace

BENCHMARK(BM_RunBenchSerial)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunBenchParallel)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DerandomizeSerial)->Arg(12)->Arg(20)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DerandomizeParallel)->Arg(12)->Arg(20)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SeparationSerial)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SeparationParallel)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_PrefixSeparation)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
