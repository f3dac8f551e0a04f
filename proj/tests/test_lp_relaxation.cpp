#include <doctest.h>

#include <random>

#include "sched/errors.hpp"
#include "sched/exact_oracle.hpp"
#include "sched/lp_relaxation.hpp"
#include "sched/schedule.hpp"
#include "test_support.hpp"

using namespace sched;
using sched::testing::make_instance;

namespace {

double max_cut_violation(const std::vector<Cut> &cuts, std::span<const double> c, const Instance &inst) {
    double best = -1.0;
    for (const auto &cut : cuts) best = std::max(best, cut_violation(cut, c, inst));
    return best;
}

}  // namespace

TEST_CASE("separate: worked examples") {
    const auto two = make_instance({{2, 0, 1}, {1, 0, 2}});
    const std::vector<double> zero = {0.0, 0.0};
    const auto cuts = separate(zero, two);
    REQUIRE(cuts.size() == 1);
    CHECK(cuts[0].r == 0.0);
    CHECK(cuts[0].set == std::vector<JobId>{0, 1});
    CHECK(cut_violation(cuts[0], zero, two) == doctest::Approx(4.5));
    CHECK(brute_force_separation(zero, two)->violation == doctest::Approx(4.5));

    const auto one = make_instance({{2, 0, 1}});
    const std::vector<double> tight = {1.0};
    CHECK(separate(tight, one).empty());

    const auto empty_work = make_instance({{0, 0, 1}, {0, 3, 1}, {0, 1, 1}});
    const std::vector<double> anywhere = {-5.0, 0.0, 2.0};
    CHECK(separate(anywhere, empty_work).empty());
}

TEST_CASE("separate: cuts satisfy their invariants") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 20.0);
    for (const auto &inst : sched::testing::corpus(80, 3000, 2, 10)) {
        std::vector<double> c(inst.jobs.size());
        for (auto &v : c) v = u(rng);
        for (const auto &cut : separate(c, inst)) {
            REQUIRE(!cut.set.empty());
            CHECK(std::is_sorted(cut.set.begin(), cut.set.end()));
            bool attained = false;
            for (JobId j : cut.set) {
                CHECK(inst.job(j).r >= cut.r);
                attained = attained || inst.job(j).r == cut.r;
            }
            CHECK(attained);
            CHECK(cut_violation(cut, c, inst) > kDefaultSeparationTol);
        }
    }
}

TEST_CASE("separate matches exhaustive separation") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int with_violation = 0;
    for (const auto &inst : sched::testing::corpus(150, 9000, 1, 11)) {
        // candidate points around the scale of real schedules
        double horizon = 0.0;
        for (const auto &job : inst.jobs) horizon += job.p + job.r / 2;
        std::vector<double> c(inst.jobs.size());
        for (auto &v : c) v = u(rng) * (horizon + 1.0);

        const auto cuts = separate(c, inst);
        const auto witness = brute_force_separation(c, inst, kDefaultSeparationTol);
        REQUIRE(cuts.empty() == !witness.has_value());
        if (witness) {
            ++with_violation;
            CHECK(std::abs(max_cut_violation(cuts, c, inst) - witness->violation) <= 1e-9);
        }
    }
    CHECK(with_violation > 30);
}

TEST_CASE("every violated subset yields a violated prefix cut at its r_min") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 15.0);
    for (const auto &inst : sched::testing::corpus(40, 123, 2, 7)) {
        std::vector<double> c(inst.jobs.size());
        for (auto &v : c) v = u(rng);
        const int n = inst.size();
        for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
            Cut s;
            s.r = std::numeric_limits<double>::infinity();
            for (int j = 0; j < n; ++j)
                if (mask >> j & 1U) {
                    s.set.push_back(j);
                    s.r = std::min(s.r, inst.jobs[static_cast<std::size_t>(j)].r);
                }
            const double v = cut_violation(s, c, inst);
            if (v <= kDefaultSeparationTol) continue;
            // best prefix, in c order, of the jobs released at or after r_min(S)
            std::vector<JobId> eligible;
            for (const auto &job : inst.jobs)
                if (job.r >= s.r) eligible.push_back(job.id);
            std::sort(eligible.begin(), eligible.end(), [&](JobId a, JobId b) {
                return c[static_cast<std::size_t>(a)] < c[static_cast<std::size_t>(b)] ||
                       (c[static_cast<std::size_t>(a)] == c[static_cast<std::size_t>(b)] && a < b);
            });
            Cut prefix{s.r, {}};
            double best_prefix = 0.0;
            for (JobId j : eligible) {
                prefix.set.push_back(j);
                best_prefix = std::max(best_prefix, cut_violation(prefix, c, inst));
            }
            CHECK(best_prefix >= v - 1e-9);
            CHECK(max_cut_violation(separate(c, inst), c, inst) >= v - 1e-9);
        }
    }
}

TEST_CASE("solve_lp_relaxation: hand-checked instances") {
    SUBCASE("single job") {
        const auto sol = solve_lp_relaxation(make_instance({{2, 0, 3}}));
        CHECK(sol.c_star[0] == doctest::Approx(1.0));
        CHECK(sol.objective == doctest::Approx(3.0));
    }
    SUBCASE("two jobs") {
        const auto inst = make_instance({{2, 0, 1}, {1, 0, 2}});
        const auto sol = solve_lp_relaxation(inst);
        CHECK(sol.c_star[0] == doctest::Approx(2.0));
        CHECK(sol.c_star[1] == doctest::Approx(0.5));
        CHECK(sol.objective == doctest::Approx(3.0));
        CHECK(lp_list_order(sol, inst) == std::vector<JobId>{1, 0});
    }
    SUBCASE("chain") {
        const auto inst = make_instance({{2, 0, 0}, {1, 0, 1}}, {{0, 1}});
        const auto sol = solve_lp_relaxation(inst);
        CHECK(sol.c_star[0] <= sol.c_star[1] + 1e-9);
        CHECK(sol.c_star[1] == doctest::Approx(1.5));
        CHECK(sol.objective == doctest::Approx(1.5));
        std::vector<double> x;
        const auto oracle = sched::testing::vertex_enumeration_min({0.0, 1.0}, sched::testing::explicit_relaxation(inst), &x);
        CHECK(*oracle == doctest::Approx(1.5));
    }
    SUBCASE("preemption fixture") {
        const auto sol = solve_lp_relaxation(make_instance({{4, 0, 1}, {1, 1, 1}}));
        CHECK(sol.c_star[0] == doctest::Approx(2.75));
        CHECK(sol.c_star[1] == doctest::Approx(1.5));
        CHECK(sol.objective == doctest::Approx(4.25));
    }
}

TEST_CASE("solve_lp_relaxation matches the explicit LP over all subsets") {
    for (const auto &inst : sched::testing::corpus(45, 77, 2, 4)) {
        std::vector<double> w;
        for (const auto &job : inst.jobs) w.push_back(job.w);
        const auto oracle = sched::testing::vertex_enumeration_min(w, sched::testing::explicit_relaxation(inst));
        REQUIRE(oracle.has_value());
        const auto sol = solve_lp_relaxation(inst);
        CHECK(sol.objective == doctest::Approx(*oracle).epsilon(1e-8));
    }
}

TEST_CASE("LpSolution invariants") {
    for (const auto &inst : sched::testing::corpus(80, 4242, 2, 12)) {
        const auto sol = solve_lp_relaxation(inst);
        for (const auto &job : inst.jobs) CHECK(sol.c_star[static_cast<std::size_t>(job.id)] >= job.r + job.p / 2 - 1e-9);
        for (const auto &e : inst.prec)
            CHECK(sol.c_star[static_cast<std::size_t>(e.before)] <= sol.c_star[static_cast<std::size_t>(e.after)] + 1e-9);
        for (const auto &cut : sol.cuts) CHECK(cut_violation(cut, sol.c_star, inst) <= kDefaultSeparationTol);
        CHECK(separate(sol.c_star, inst).empty());
        if (inst.size() <= 12) CHECK(!brute_force_separation(sol.c_star, inst, 1e-6).has_value());
        CHECK(order_extends_precedence(inst, lp_list_order(sol, inst)));
    }
}

TEST_CASE("LP lower bound never exceeds the brute-force optimum") {
    for (const auto &inst : sched::testing::corpus(80, 31, 2, 8)) {
        const auto sol = solve_lp_relaxation(inst);
        const double opt = sched::testing::permutation_optimum(inst);
        CHECK(sol.objective <= opt * (1 + 1e-6) + 1e-9);
    }
}

TEST_CASE("mean busy times of feasible schedules satisfy every subset constraint") {
    for (const auto &inst : sched::testing::corpus(60, 808, 2, 9)) {
        const auto topo = topological_order(inst);
        for (const auto &sched : {nonpreemptive_list_schedule(inst, topo), preemptive_list_schedule(inst, topo, 1.0)}) {
            const auto mbt = mean_busy_times(sched, inst);
            CHECK(!brute_force_separation(mbt, inst, 1e-9).has_value());
        }
    }
}

TEST_CASE("solve_lp_relaxation is deterministic") {
    for (const auto &inst : sched::testing::corpus(10, 99, 5, 12)) {
        const auto a = solve_lp_relaxation(inst);
        const auto b = solve_lp_relaxation(inst);
        CHECK(a.c_star == b.c_star);
        CHECK(a.objective == b.objective);
        CHECK(a.cuts == b.cuts);
        CHECK(a.iterations == b.iterations);
    }
}

TEST_CASE("lp_list_order tie-breaks") {
    const auto free2 = make_instance({{1, 0, 1}, {1, 0, 1}});
    LpSolution sol;
    sol.c_star = {3.0, 1.0};
    CHECK(lp_list_order(sol, free2) == std::vector<JobId>{1, 0});

    const auto chain_rev = make_instance({{1, 0, 1}, {1, 0, 1}}, {{1, 0}});
    sol.c_star = {2.0, 2.0};
    CHECK(lp_list_order(sol, chain_rev) == std::vector<JobId>{1, 0});

    // rounding noise along an edge is absorbed
    sol.c_star = {2.0, 2.0 + 1e-12};
    CHECK(lp_list_order(sol, chain_rev) == std::vector<JobId>{1, 0});

    const auto chain = make_instance({{1, 0, 1}, {1, 0, 1}}, {{0, 1}});
    sol.c_star = {2.0, 2.0};
    CHECK(lp_list_order(sol, chain) == std::vector<JobId>{0, 1});
    sol.c_star = {3.0, 1.0};
    CHECK_THROWS_AS(lp_list_order(sol, chain), PrecedenceViolation);

    const auto three = make_instance({{1, 0, 1}, {1, 0, 1}, {1, 0, 1}});
    sol.c_star = {0.5, 2.5, 1.5};
    CHECK(lp_list_order(sol, three) == std::vector<JobId>{0, 2, 1});
}
