// Command-line front end: sched solve|lb|exact|gen|bench

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sched/errors.hpp"
#include "sched/pipeline.hpp"
#include "sched/report.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitSolver = 3;
constexpr int kExitGuarantee = 4;

void write_text(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw sched::ValueError("cannot write '" + path + "'");
    out << text;
}

void add_generator_flags(CLI::App &cmd, sched::GeneratorParams &gen) {
    cmd.add_option("--n", gen.n, "Number of jobs")->check(CLI::PositiveNumber);
    cmd.add_option("--seed", gen.seed, "Random seed");
    cmd.add_option("--p-max", gen.p_max, "Largest processing time")->check(CLI::NonNegativeNumber);
    cmd.add_option("--r-max", gen.r_max, "Largest release date")->check(CLI::NonNegativeNumber);
    cmd.add_option("--w-max", gen.w_max, "Largest weight")->check(CLI::NonNegativeNumber);
    cmd.add_option("--edge-prob", gen.edge_prob, "Probability of each edge j<k")->check(CLI::Range(0.0, 1.0));
    cmd.add_option("--zero-prob", gen.zero_p_prob, "Probability of a zero-length job")->check(CLI::Range(0.0, 1.0));
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Single-machine scheduling with release dates and precedence constraints"};
    app.require_subcommand(1);

    // solve
    std::string solve_file;
    std::string alpha_mode = "best";
    std::string svg_path;
    std::string solve_format = "json";
    sched::SolveOptions solve_opts;
    bool solve_timings = false;
    auto *solve_cmd = app.add_subcommand("solve", "Run the full approximation pipeline");
    solve_cmd->add_option("instance", solve_file, "Instance file")->required();
    solve_cmd->add_option("--tol-sep", solve_opts.tol_sep, "Separation tolerance")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--alpha", alpha_mode, "best or random")->check(CLI::IsMember({"best", "random"}));
    solve_cmd->add_option("--seed", solve_opts.seed, "Seed for --alpha random");
    solve_cmd->add_option("--svg", svg_path, "Write a Gantt chart of the final schedule");
    solve_cmd->add_option("--format", solve_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    solve_cmd->add_flag("--exact", solve_opts.exact, "Also compute the exact optimum");
    solve_cmd->add_flag("--timings", solve_timings, "Include wall times");

    // lb
    std::string lb_file;
    double lb_tol = sched::kDefaultSeparationTol;
    auto *lb_cmd = app.add_subcommand("lb", "Solve only the LP relaxation");
    lb_cmd->add_option("instance", lb_file, "Instance file")->required();
    lb_cmd->add_option("--tol-sep", lb_tol, "Separation tolerance")->check(CLI::PositiveNumber);

    // exact
    std::string exact_file;
    int exact_limit = 10;
    auto *exact_cmd = app.add_subcommand("exact", "Brute-force optimum for small instances");
    exact_cmd->add_option("instance", exact_file, "Instance file")->required();
    exact_cmd->add_option("--limit", exact_limit, "Largest n accepted");

    // gen
    sched::GeneratorParams gen_params;
    std::string gen_out;
    auto *gen_cmd = app.add_subcommand("gen", "Write a random instance");
    add_generator_flags(*gen_cmd, gen_params);
    gen_cmd->add_option("--out", gen_out, "Output file (default stdout)");

    // bench
    sched::BenchParams bench;
    bench.generator.n = 7;
    std::string bench_format = "csv";
    std::string bench_out;
    std::string bench_summary;
    bool bench_timings = false;
    auto *bench_cmd = app.add_subcommand("bench", "Sweep random instances and check the guarantees");
    add_generator_flags(*bench_cmd, bench.generator);
    bench_cmd->add_option("--count", bench.count, "Number of instances")->check(CLI::NonNegativeNumber);
    bench_cmd->add_option("--jobs", bench.jobs, "Worker threads")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--tol-sep", bench.solve.tol_sep, "Separation tolerance")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--format", bench_format, "csv or json")->check(CLI::IsMember({"json", "csv"}));
    bench_cmd->add_option("--out", bench_out, "Output file (default stdout)");
    bench_cmd->add_option("--summary", bench_summary, "Write the JSON summary here (csv format)");
    bench_cmd->add_flag("--timings", bench_timings, "Include wall times");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*solve_cmd) {
            solve_opts.alpha_mode = alpha_mode == "random" ? sched::AlphaMode::Random : sched::AlphaMode::Best;
            const auto inst = sched::read_instance_file(solve_file);
            const auto result = sched::solve(inst, solve_opts);
            if (solve_format == "csv") {
                write_text("", sched::bench_csv_header() + "\n" +
                                   sched::bench_csv_row(sched::make_record(0, solve_opts.seed, result), solve_timings) +
                                   "\n");
            } else {
                const auto report = sched::solve_report(result, solve_file, solve_opts.alpha_mode, solve_timings);
                write_text("", report.dump(2) + "\n");
            }
            if (!svg_path.empty())
                write_text(svg_path, sched::gantt_svg(result.alpha.schedule, result.instance,
                                                      "alpha = " + sched::format_number(result.alpha.alpha) +
                                                          ", cost = " + sched::format_number(result.alpha.cost)));
        } else if (*lb_cmd) {
            const auto inst = sched::normalize_release_dates(sched::read_instance_file(lb_file));
            const auto sol = sched::solve_lp_relaxation(inst, lb_tol);
            write_text("", sched::lb_report(inst, sol, lb_file).dump(2) + "\n");
        } else if (*exact_cmd) {
            const auto inst = sched::normalize_release_dates(sched::read_instance_file(exact_file));
            const auto res = sched::brute_force_optimum(inst, exact_limit);
            write_text("", sched::exact_report(inst, res, exact_file).dump(2) + "\n");
        } else if (*gen_cmd) {
            write_text(gen_out, sched::serialize_instance(sched::generate_random(gen_params)));
        } else if (*bench_cmd) {
            const auto records = sched::run_bench(bench);
            const auto summary = sched::summarize(records);
            if (bench_format == "json") {
                sched::Json out;
                out["records"] = sched::Json::array();
                for (const auto &rec : records) out["records"].push_back(sched::bench_record_json(rec, bench_timings));
                out["summary"] = sched::bench_summary_json(summary);
                write_text(bench_out, out.dump(2) + "\n");
            } else {
                std::string text = sched::bench_csv_header() + "\n";
                for (const auto &rec : records) text += sched::bench_csv_row(rec, bench_timings) + "\n";
                write_text(bench_out, text);
                if (!bench_summary.empty()) write_text(bench_summary, sched::bench_summary_json(summary).dump(2) + "\n");
            }
            if (summary.violations > 0) {
                std::cerr << "error: " << summary.violations << " record(s) violate the guarantees\n";
                return kExitGuarantee;
            }
        }
    } catch (const sched::SolverError &e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return kExitSolver;
    } catch (const sched::ParseError &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitInput;
    } catch (const sched::ValueError &e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitInput;
    } catch (const sched::CycleError &e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitInput;
    } catch (const sched::TooLarge &e) {
        std::cerr << "too large: " << e.what() << '\n';
        return kExitInput;
    } catch (const sched::Error &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitSolver;
    }
    return 0;
}
