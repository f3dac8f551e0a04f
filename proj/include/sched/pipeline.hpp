#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sched/alpha_points.hpp"
#include "sched/exact_oracle.hpp"
#include "sched/instance.hpp"
#include "sched/lp_relaxation.hpp"
#include "sched/schedule.hpp"

namespace sched {

/// Guarantee constants as checked by the experiment harness.
inline constexpr double kRatioBound = 2.5414941;   // sqrt(e)/(sqrt(e)-1), rounded up
inline constexpr double kLpGapBound = 0.3934693;   // (sqrt(e)-1)/sqrt(e), rounded down
inline constexpr double kRatioSlack = 1e-6;

enum class AlphaMode { Best, Random };

struct SolveOptions {
    double tol_sep = kDefaultSeparationTol;
    AlphaMode alpha_mode = AlphaMode::Best;
    std::uint64_t seed = 1;
    bool exact = false;
    int exact_limit = 10;
};

struct StageTimings {
    double lp_ms = 0.0;
    double pmtn_ms = 0.0;
    double alpha_ms = 0.0;
    double exact_ms = 0.0;
};

struct SolveResult {
    Instance instance;  // normalized
    LpSolution lp;
    std::vector<JobId> lp_order;
    Schedule pmtn;      // double-speed preemptive list schedule
    double pmtn_cost = 0.0;
    AlphaResult alpha;
    double expected_cost = 0.0;
    std::vector<double> breakpoints;
    std::optional<ExactResult> exact;
    StageTimings timings;
};

/// normalize -> LP -> LP order -> double-speed preemptive list schedule ->
/// alpha-point conversion (derandomized, or one sampled alpha).
SolveResult solve(const Instance &inst, const SolveOptions &options = {});

struct BenchRecord {
    int index = 0;
    std::uint64_t seed = 0;
    int n = 0;
    int edges = 0;
    double lp_bound = 0.0;
    double pmtn_cost = 0.0;
    double alg_cost = 0.0;
    double expected_cost = 0.0;
    std::optional<double> exact_opt;
    std::optional<double> alg_over_lp;
    std::optional<double> alg_over_opt;
    std::optional<double> lp_over_opt;
    StageTimings timings;
};

BenchRecord make_record(int index, std::uint64_t seed, const SolveResult &result);

/// Empty when the record satisfies every guarantee.
std::vector<std::string> check_record(const BenchRecord &record);

struct BenchParams {
    int count = 100;
    GeneratorParams generator;  // generator.seed is the seed of instance 0
    SolveOptions solve;         // solve.exact is forced on when n <= solve.exact_limit
    int jobs = 1;
};

/// Instance i uses seed generator.seed + i. Records come back in index order.
/// Instances are solved concurrently on `jobs` OpenMP threads.
std::vector<BenchRecord> run_bench(const BenchParams &params);

/// Single-threaded reference for run_bench.
std::vector<BenchRecord> run_bench_serial(const BenchParams &params);

struct BenchSummary {
    int count = 0;
    int violations = 0;
    double max_alg_over_lp = 0.0;
    double mean_alg_over_lp = 0.0;
    double max_alg_over_opt = 0.0;
    double mean_alg_over_opt = 0.0;
    double min_lp_over_opt = 0.0;
    double mean_lp_over_opt = 0.0;
};

BenchSummary summarize(const std::vector<BenchRecord> &records);

}  // namespace sched
