#include "sched/report.hpp"

#include <algorithm>
#include <sstream>

#include "sched/errors.hpp"

namespace sched {

Json instance_json(const Instance &inst, const std::string &source) {
    Json out;
    out["source"] = source;
    out["n"] = inst.size();
    out["prec_edges"] = inst.prec.size();
    return out;
}

Json lp_json(const LpSolution &sol) {
    Json out;
    out["objective"] = sol.objective;
    out["c_star"] = sol.c_star;
    out["cuts"] = sol.cuts.size();
    out["rounds"] = sol.iterations;
    out["lp_solves"] = sol.lp_solves;
    return out;
}

Json schedule_json(const Schedule &sched) {
    Json segments = Json::array();
    for (const auto &segs : sched.segments) {
        Json job = Json::array();
        for (const auto &iv : segs) job.push_back(Json::array({iv.start, iv.end}));
        segments.push_back(std::move(job));
    }
    Json out;
    out["speed"] = sched.speed;
    out["segments"] = std::move(segments);
    out["completions"] = completion_times(sched);
    return out;
}

Json exact_json(const ExactResult &res) {
    Json out;
    out["cost"] = res.cost;
    out["order"] = res.order;
    out["nodes"] = res.nodes_explored;
    return out;
}

namespace {

Json optional_number(const std::optional<double> &v) { return v ? Json(*v) : Json(nullptr); }

Json timings_json(const StageTimings &t) {
    Json out;
    out["lp_ms"] = t.lp_ms;
    out["pmtn_ms"] = t.pmtn_ms;
    out["alpha_ms"] = t.alpha_ms;
    out["exact_ms"] = t.exact_ms;
    return out;
}

}  // namespace

Json solve_report(const SolveResult &res, const std::string &source, AlphaMode mode, bool with_timings) {
    Json out;
    out["instance"] = instance_json(res.instance, source);
    out["lp"] = lp_json(res.lp);
    out["lp"]["order"] = res.lp_order;

    Json pmtn = schedule_json(res.pmtn);
    pmtn["cost"] = res.pmtn_cost;
    out["pmtn"] = std::move(pmtn);

    const Json alpha_sched = schedule_json(res.alpha.schedule);
    Json alpha;
    alpha["mode"] = mode == AlphaMode::Best ? "best" : "random";
    alpha["best_alpha"] = res.alpha.alpha;
    alpha["order"] = res.alpha.order;
    alpha["segments"] = alpha_sched["segments"];
    alpha["completions"] = alpha_sched["completions"];
    alpha["cost"] = res.alpha.cost;
    alpha["expected_cost"] = res.expected_cost;
    alpha["breakpoints"] = res.breakpoints;
    out["alpha"] = std::move(alpha);

    if (res.exact) out["exact"] = exact_json(*res.exact);

    const auto rec = make_record(0, 0, res);
    Json ratios;
    ratios["alg_over_lp"] = optional_number(rec.alg_over_lp);
    ratios["pmtn_over_lp"] = optional_number(rec.lp_bound == 0.0 ? std::nullopt
                                                                  : std::optional<double>(rec.pmtn_cost / rec.lp_bound));
    if (res.exact) {
        ratios["alg_over_opt"] = optional_number(rec.alg_over_opt);
        ratios["lp_over_opt"] = optional_number(rec.lp_over_opt);
    }
    out["ratios"] = std::move(ratios);
    if (with_timings) out["timings"] = timings_json(res.timings);
    return out;
}

Json lb_report(const Instance &inst, const LpSolution &sol, const std::string &source) {
    Json out;
    out["instance"] = instance_json(inst, source);
    out["lp"] = lp_json(sol);
    return out;
}

Json exact_report(const Instance &inst, const ExactResult &res, const std::string &source) {
    Json out;
    out["instance"] = instance_json(inst, source);
    out["exact"] = exact_json(res);
    return out;
}

void validate_solve_report(const Json &report) {
    const auto need = [](const Json &obj, const char *path, const char *key, auto &&pred) {
        if (!obj.is_object() || !obj.contains(key) || !pred(obj.at(key)))
            throw ValueError(std::string("report field '") + path + key + "' missing or mistyped");
    };
    const auto is_number = [](const Json &j) { return j.is_number(); };
    const auto is_object = [](const Json &j) { return j.is_object(); };
    const auto is_number_array = [](const Json &j) {
        return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json &x) { return x.is_number(); });
    };
    const auto is_segments = [](const Json &j) {
        return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json &job) {
                   return job.is_array() && std::all_of(job.begin(), job.end(), [](const Json &iv) {
                              return iv.is_array() && iv.size() == 2 && iv[0].is_number() && iv[1].is_number();
                          });
               });
    };
    const auto number_or_null = [](const Json &j) { return j.is_number() || j.is_null(); };

    need(report, "", "instance", is_object);
    need(report["instance"], "instance.", "n", is_number);
    need(report, "", "lp", is_object);
    need(report["lp"], "lp.", "objective", is_number);
    need(report["lp"], "lp.", "c_star", is_number_array);
    need(report["lp"], "lp.", "cuts", is_number);
    need(report["lp"], "lp.", "rounds", is_number);
    need(report, "", "pmtn", is_object);
    need(report["pmtn"], "pmtn.", "segments", is_segments);
    need(report["pmtn"], "pmtn.", "completions", is_number_array);
    need(report["pmtn"], "pmtn.", "cost", is_number);
    need(report, "", "alpha", is_object);
    need(report["alpha"], "alpha.", "best_alpha", is_number);
    need(report["alpha"], "alpha.", "order", is_number_array);
    need(report["alpha"], "alpha.", "segments", is_segments);
    need(report["alpha"], "alpha.", "cost", is_number);
    need(report["alpha"], "alpha.", "expected_cost", is_number);
    need(report["alpha"], "alpha.", "breakpoints", is_number_array);
    need(report, "", "ratios", is_object);
    need(report["ratios"], "ratios.", "alg_over_lp", number_or_null);
    if (report.contains("exact")) {
        need(report["exact"], "exact.", "cost", is_number);
        need(report["exact"], "exact.", "order", is_number_array);
    }
    const auto n = report["instance"]["n"].get<std::size_t>();
    if (report["lp"]["c_star"].size() != n || report["pmtn"]["segments"].size() != n ||
        report["alpha"]["order"].size() != n)
        throw ValueError("report arrays do not match instance size");
}

std::string bench_csv_header() {
    return "index,seed,n,edges,lp_bound,pmtn_cost,alg_cost,expected_cost,exact_opt,"
           "alg_over_lp,alg_over_opt,lp_over_opt,lp_ms,pmtn_ms,alpha_ms,exact_ms,ok";
}

std::string bench_csv_row(const BenchRecord &rec, bool with_timings) {
    const auto opt = [](const std::optional<double> &v) { return v ? format_number(*v) : std::string(); };
    const auto ms = [&](double v) { return with_timings ? format_number(v) : std::string("0"); };
    std::ostringstream out;
    out << rec.index << ',' << rec.seed << ',' << rec.n << ',' << rec.edges << ',' << format_number(rec.lp_bound)
        << ',' << format_number(rec.pmtn_cost) << ',' << format_number(rec.alg_cost) << ','
        << format_number(rec.expected_cost) << ',' << opt(rec.exact_opt) << ',' << opt(rec.alg_over_lp) << ','
        << opt(rec.alg_over_opt) << ',' << opt(rec.lp_over_opt) << ',' << ms(rec.timings.lp_ms) << ','
        << ms(rec.timings.pmtn_ms) << ',' << ms(rec.timings.alpha_ms) << ',' << ms(rec.timings.exact_ms) << ','
        << (check_record(rec).empty() ? 1 : 0);
    return out.str();
}

Json bench_record_json(const BenchRecord &rec, bool with_timings) {
    Json out;
    out["index"] = rec.index;
    out["seed"] = rec.seed;
    out["n"] = rec.n;
    out["edges"] = rec.edges;
    out["lp_bound"] = rec.lp_bound;
    out["pmtn_cost"] = rec.pmtn_cost;
    out["alg_cost"] = rec.alg_cost;
    out["expected_cost"] = rec.expected_cost;
    out["exact_opt"] = optional_number(rec.exact_opt);
    out["alg_over_lp"] = optional_number(rec.alg_over_lp);
    out["alg_over_opt"] = optional_number(rec.alg_over_opt);
    out["lp_over_opt"] = optional_number(rec.lp_over_opt);
    if (with_timings) out["timings"] = timings_json(rec.timings);
    Json problems = Json::array();
    for (auto &msg : check_record(rec)) problems.push_back(msg);
    out["violations"] = std::move(problems);
    return out;
}

Json bench_summary_json(const BenchSummary &s) {
    Json out;
    out["count"] = s.count;
    out["violations"] = s.violations;
    out["max_alg_over_lp"] = s.max_alg_over_lp;
    out["mean_alg_over_lp"] = s.mean_alg_over_lp;
    out["max_alg_over_opt"] = s.max_alg_over_opt;
    out["mean_alg_over_opt"] = s.mean_alg_over_opt;
    out["min_lp_over_opt"] = s.min_lp_over_opt;
    out["mean_lp_over_opt"] = s.mean_lp_over_opt;
    return out;
}

namespace {

std::string escape_xml(const std::string &text) {
    std::string out;
    for (char ch : text) {
        switch (ch) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

}  // namespace

std::string gantt_svg(const Schedule &sched, const Instance &inst, const std::string &title) {
    constexpr double kLeft = 60.0;
    constexpr double kTop = 40.0;
    constexpr double kRow = 24.0;
    constexpr double kWidth = 720.0;

    double horizon = 1.0;
    for (const auto &segs : sched.segments)
        for (const auto &iv : segs) horizon = std::max(horizon, iv.end);
    for (const auto &job : inst.jobs) horizon = std::max(horizon, job.r);
    const double scale = kWidth / horizon;
    const int n = sched.size();
    const double height = kTop + kRow * n + 40.0;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kLeft + kWidth + 20 << "\" height=\"" << height
        << "\" font-family=\"monospace\" font-size=\"12\">\n";
    svg << "<text x=\"" << kLeft << "\" y=\"20\">" << escape_xml(title) << "</text>\n";
    for (int j = 0; j < n; ++j) {
        const double y = kTop + kRow * j;
        svg << "<text x=\"8\" y=\"" << y + 16 << "\">job " << j << "</text>\n";
        for (const auto &iv : sched.segments[static_cast<std::size_t>(j)]) {
            const double x = kLeft + iv.start * scale;
            const double w = std::max((iv.end - iv.start) * scale, 1.0);
            svg << "<rect x=\"" << x << "\" y=\"" << y + 4 << "\" width=\"" << w << "\" height=\"" << kRow - 8
                << "\" fill=\"#4c78a8\" stroke=\"#1f3b57\"/>\n";
        }
        const double rx = kLeft + inst.job(j).r * scale;
        svg << "<line x1=\"" << rx << "\" y1=\"" << y + 2 << "\" x2=\"" << rx << "\" y2=\"" << y + kRow - 2
            << "\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
    }
    const double axis_y = kTop + kRow * n + 10;
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << axis_y << "\" x2=\"" << kLeft + kWidth << "\" y2=\"" << axis_y
        << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << kLeft << "\" y=\"" << axis_y + 16 << "\">0</text>\n";
    svg << "<text x=\"" << kLeft + kWidth - 40 << "\" y=\"" << axis_y + 16 << "\">" << format_number(horizon)
        << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace sched
