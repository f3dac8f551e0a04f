#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sched/pipeline.hpp"

namespace sched {

using Json = nlohmann::ordered_json;

Json instance_json(const Instance &inst, const std::string &source);
Json lp_json(const LpSolution &sol);
/// {"speed", "segments": [[[start, end], ...] per job], "completions"}
Json schedule_json(const Schedule &sched);
Json exact_json(const ExactResult &res);

/// Full `solve` report. Timings are written only when requested so that
/// repeated runs are byte-identical.
Json solve_report(const SolveResult &res, const std::string &source, AlphaMode mode, bool with_timings);
Json lb_report(const Instance &inst, const LpSolution &sol, const std::string &source);
Json exact_report(const Instance &inst, const ExactResult &res, const std::string &source);

/// Throws ValueError naming the first missing or mistyped field.
void validate_solve_report(const Json &report);

/// Fixed column order:
/// index,seed,n,edges,lp_bound,pmtn_cost,alg_cost,expected_cost,exact_opt,
/// alg_over_lp,alg_over_opt,lp_over_opt,lp_ms,pmtn_ms,alpha_ms,exact_ms,ok
std::string bench_csv_header();
std::string bench_csv_row(const BenchRecord &rec, bool with_timings);

Json bench_record_json(const BenchRecord &rec, bool with_timings);
Json bench_summary_json(const BenchSummary &summary);

/// Static Gantt chart: one row per job, release dates as tick marks.
std::string gantt_svg(const Schedule &sched, const Instance &inst, const std::string &title);

}  // namespace sched
