#include "sched/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <random>

namespace sched {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::optional<double> ratio(double num, double den) {
    if (den == 0.0) return std::nullopt;
    return num / den;
}

}  // namespace

SolveResult solve(const Instance &inst, const SolveOptions &options) {
    SolveResult out;
    out.instance = normalize_release_dates(inst);
    const Instance &norm = out.instance;

    auto t0 = Clock::now();
    out.lp = solve_lp_relaxation(norm, options.tol_sep);
    out.lp_order = lp_list_order(out.lp, norm);
    out.timings.lp_ms = elapsed_ms(t0);

    t0 = Clock::now();
    const auto profile = AlphaProfile::from_list(norm, out.lp_order, 2.0);
    out.pmtn = profile.schedule();
    out.pmtn_cost = objective(out.pmtn, norm);
    out.timings.pmtn_ms = elapsed_ms(t0);

    t0 = Clock::now();
    out.breakpoints = breakpoints(profile);
    out.expected_cost = expected_cost(norm, profile);
    if (options.alpha_mode == AlphaMode::Random) {
        std::mt19937_64 rng(options.seed);
        const double u = std::generate_canonical<double, 53>(rng);
        out.alpha = alpha_schedule(norm, profile, sample_alpha(u));
    } else {
        out.alpha = derandomized_best(norm, profile);
    }
    out.timings.alpha_ms = elapsed_ms(t0);

    if (options.exact) {
        t0 = Clock::now();
        out.exact = brute_force_optimum(norm, options.exact_limit);
        out.timings.exact_ms = elapsed_ms(t0);
    }
    return out;
}

BenchRecord make_record(int index, std::uint64_t seed, const SolveResult &result) {
    BenchRecord rec;
    rec.index = index;
    rec.seed = seed;
    rec.n = result.instance.size();
    rec.edges = static_cast<int>(result.instance.prec.size());
    rec.lp_bound = result.lp.objective;
    rec.pmtn_cost = result.pmtn_cost;
    rec.alg_cost = result.alpha.cost;
    rec.expected_cost = result.expected_cost;
    rec.alg_over_lp = ratio(rec.alg_cost, rec.lp_bound);
    if (result.exact) {
        rec.exact_opt = result.exact->cost;
        rec.alg_over_opt = ratio(rec.alg_cost, result.exact->cost);
        rec.lp_over_opt = ratio(rec.lp_bound, result.exact->cost);
    }
    rec.timings = result.timings;
    return rec;
}

std::vector<std::string> check_record(const BenchRecord &rec) {
    // Multiplied forms so that zero-cost instances are covered too.
    constexpr double kAbs = 1e-9;
    const double upper = kRatioBound + kRatioSlack;
    std::vector<std::string> out;
    if (rec.alg_cost > upper * rec.lp_bound + kAbs) out.emplace_back("alg/lp exceeds bound");
    if (rec.exact_opt) {
        const double opt = *rec.exact_opt;
        if (rec.alg_cost > upper * opt + kAbs) out.emplace_back("alg/opt exceeds bound");
        if (rec.lp_bound < (kLpGapBound - kRatioSlack) * opt - kAbs) out.emplace_back("lp/opt below bound");
        if (rec.lp_bound > (1.0 + kRatioSlack) * opt + kAbs) out.emplace_back("lp exceeds opt");
        if (rec.alg_cost < opt - 1e-6 * std::max(1.0, opt)) out.emplace_back("alg below opt");
    }
    return out;
}

namespace {

BenchRecord bench_one(const BenchParams &params, int index) {
    GeneratorParams gen = params.generator;
    gen.seed = params.generator.seed + static_cast<std::uint64_t>(index);
    SolveOptions opts = params.solve;
    opts.exact = opts.exact || gen.n <= opts.exact_limit;
    const Instance inst = generate_random(gen);
    return make_record(index, gen.seed, solve(inst, opts));
}

}  // namespace

std::vector<BenchRecord> run_bench_serial(const BenchParams &params) {
    std::vector<BenchRecord> out;
    out.reserve(static_cast<std::size_t>(std::max(params.count, 0)));
    for (int i = 0; i < params.count; ++i) out.push_back(bench_one(params, i));
    return out;
}

std::vector<BenchRecord> run_bench(const BenchParams &params) {
    const int count = std::max(params.count, 0);
    std::vector<BenchRecord> out(static_cast<std::size_t>(count));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
    const int threads = std::max(params.jobs, 1);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int i = 0; i < count; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = bench_one(params, i);
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    (void)threads;
    for (const auto &e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

BenchSummary summarize(const std::vector<BenchRecord> &records) {
    BenchSummary s;
    s.count = static_cast<int>(records.size());
    int n_lp = 0;
    int n_opt = 0;
    bool first_gap = true;
    for (const auto &rec : records) {
        if (!check_record(rec).empty()) ++s.violations;
        if (rec.alg_over_lp) {
            s.max_alg_over_lp = std::max(s.max_alg_over_lp, *rec.alg_over_lp);
            s.mean_alg_over_lp += *rec.alg_over_lp;
            ++n_lp;
        }
        if (rec.alg_over_opt && rec.lp_over_opt) {
            s.max_alg_over_opt = std::max(s.max_alg_over_opt, *rec.alg_over_opt);
            s.mean_alg_over_opt += *rec.alg_over_opt;
            s.min_lp_over_opt = first_gap ? *rec.lp_over_opt : std::min(s.min_lp_over_opt, *rec.lp_over_opt);
            s.mean_lp_over_opt += *rec.lp_over_opt;
            first_gap = false;
            ++n_opt;
        }
    }
    if (n_lp > 0) s.mean_alg_over_lp /= n_lp;
    if (n_opt > 0) {
        s.mean_alg_over_opt /= n_opt;
        s.mean_lp_over_opt /= n_opt;
    }
    return s;
}

}  // namespace sched
