#include <doctest.h>

#include "sched/errors.hpp"
#include "sched/report.hpp"
#include "test_support.hpp"

using namespace sched;
using sched::testing::make_instance;

TEST_CASE("solve pipeline on the two-job fixture") {
    SolveOptions opts;
    opts.exact = true;
    const auto res = solve(make_instance({{2, 0, 1}, {1, 0, 2}}), opts);
    CHECK(res.lp.objective == doctest::Approx(3.0));
    CHECK(res.pmtn_cost == doctest::Approx(2.5));
    CHECK(res.alpha.cost == 5);
    CHECK(res.exact->cost == 5);
    const auto rec = make_record(0, 0, res);
    CHECK(*rec.alg_over_lp == doctest::Approx(5.0 / 3.0));
    CHECK(check_record(rec).empty());
}

TEST_CASE("solve pipeline: single job and degenerate job") {
    const auto one = solve(make_instance({{2, 0, 3}}));
    CHECK(one.lp.objective == doctest::Approx(3.0));
    CHECK(one.alpha.cost == 6);
    CHECK(*make_record(0, 0, one).alg_over_lp == doctest::Approx(2.0));

    const auto zero = solve(make_instance({{0, 0, 1}}));
    CHECK(zero.lp.objective == 0);
    CHECK(zero.pmtn_cost == 0);
    CHECK(zero.alpha.cost == 0);
    CHECK(zero.expected_cost == 0);
    const auto rec = make_record(0, 0, zero);
    CHECK(!rec.alg_over_lp.has_value());
    CHECK(check_record(rec).empty());
}

TEST_CASE("random alpha mode is seeded") {
    const auto inst = make_instance({{4, 0, 1}, {1, 1, 1}});
    SolveOptions opts;
    opts.alpha_mode = AlphaMode::Random;
    opts.seed = 5;
    const auto a = solve(inst, opts);
    const auto b = solve(inst, opts);
    CHECK(a.alpha.alpha == b.alpha.alpha);
    CHECK((a.alpha.alpha > 0.0 && a.alpha.alpha <= 1.0));
    CHECK((a.alpha.cost == 8 || a.alpha.cost == 9));
}

TEST_CASE("check_record flags broken guarantees") {
    BenchRecord rec;
    rec.lp_bound = 1.0;
    rec.alg_cost = 3.0;
    CHECK(!check_record(rec).empty());
    rec.alg_cost = 2.5;
    CHECK(check_record(rec).empty());
    rec.exact_opt = 3.0;
    CHECK(!check_record(rec).empty());  // lp/opt = 1/3 below the gap bound
    rec.exact_opt = 2.5;
    CHECK(check_record(rec).empty());
    rec.lp_bound = 0.0;
    CHECK(!check_record(rec).empty());
}

TEST_CASE("solve report follows its schema and round-trips") {
    SolveOptions opts;
    opts.exact = true;
    const auto res = solve(make_instance({{4, 0, 1}, {1, 1, 1}, {2, 3, 2}}, {{1, 2}}), opts);
    const auto report = solve_report(res, "fixture", AlphaMode::Best, false);
    CHECK_NOTHROW(validate_solve_report(report));
    CHECK(!report.contains("timings"));
    const auto text = report.dump(2);
    const auto reparsed = Json::parse(text);
    CHECK(reparsed == report);
    CHECK(reparsed.dump(2) == text);

    auto broken = report;
    broken["alpha"].erase("cost");
    CHECK_THROWS_AS(validate_solve_report(broken), ValueError);
    auto short_lp = report;
    short_lp["lp"]["c_star"].erase(0);
    CHECK_THROWS_AS(validate_solve_report(short_lp), ValueError);

    CHECK(solve_report(res, "fixture", AlphaMode::Best, true).contains("timings"));
}

TEST_CASE("bench CSV row layout") {
    BenchRecord rec;
    rec.index = 3;
    rec.seed = 44;
    rec.n = 2;
    rec.edges = 0;
    rec.lp_bound = 3;
    rec.pmtn_cost = 2.5;
    rec.alg_cost = 5;
    rec.expected_cost = 5;
    rec.exact_opt = 5;
    rec.alg_over_lp = 5.0 / 3.0;
    rec.alg_over_opt = 1;
    rec.lp_over_opt = 0.6;
    rec.timings.lp_ms = 1.5;
    const auto header = bench_csv_header();
    const auto row = bench_csv_row(rec, false);
    CHECK(std::count(header.begin(), header.end(), ',') == std::count(row.begin(), row.end(), ','));
    CHECK(row == "3,44,2,0,3,2.5,5,5,5,1.6666666666666667,1,0.6,0,0,0,0,1");
    CHECK(bench_csv_row(rec, true).find(",1.5,") != std::string::npos);
}

TEST_CASE("Gantt SVG") {
    const auto inst = make_instance({{4, 0, 1}, {1, 1, 1}});
    const auto res = solve(inst);
    const auto svg = gantt_svg(res.alpha.schedule, inst, "a < b & c");
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("a &lt; b &amp; c") != std::string::npos);
    CHECK(std::count(svg.begin(), svg.end(), '\n') > 4);
    CHECK(svg.find("</svg>") != std::string::npos);
}
