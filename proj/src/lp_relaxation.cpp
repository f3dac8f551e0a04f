#include "sched/lp_relaxation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sched/errors.hpp"
#include "sched/simplex.hpp"

namespace sched {

double cut_violation(const Cut &cut, std::span<const double> c, const Instance &inst) {
    double p_sum = 0.0;
    double weighted = 0.0;
    for (JobId j : cut.set) {
        const double p = inst.job(j).p;
        p_sum += p;
        weighted += p * c[static_cast<std::size_t>(j)];
    }
    return cut.r * p_sum + p_sum * p_sum / 2.0 - weighted;
}

std::vector<Cut> separate(std::span<const double> c, const Instance &inst, double tol) {
    const int n = inst.size();
    std::vector<JobId> by_c(static_cast<std::size_t>(n));
    std::iota(by_c.begin(), by_c.end(), 0);
    std::sort(by_c.begin(), by_c.end(), [&](JobId a, JobId b) {
        const double ca = c[static_cast<std::size_t>(a)];
        const double cb = c[static_cast<std::size_t>(b)];
        return ca < cb || (ca == cb && a < b);
    });

    std::vector<double> releases;
    releases.reserve(static_cast<std::size_t>(n));
    for (const auto &job : inst.jobs) releases.push_back(job.r);
    std::sort(releases.begin(), releases.end());
    releases.erase(std::unique(releases.begin(), releases.end()), releases.end());

    std::vector<Cut> cuts;
    for (const double r : releases) {
        double p_sum = 0.0;
        double weighted = 0.0;
        double best = 0.0;
        std::size_t best_len = 0;
        std::size_t len = 0;
        bool best_attains_r = false;
        bool attains_r = false;
        for (JobId j : by_c) {
            const Job &job = inst.job(j);
            if (job.r < r) continue;
            ++len;
            p_sum += job.p;
            weighted += job.p * c[static_cast<std::size_t>(j)];
            attains_r = attains_r || job.r == r;
            const double v = r * p_sum + p_sum * p_sum / 2.0 - weighted;
            if (v > best) {
                best = v;
                best_len = len;
                best_attains_r = attains_r;
            }
        }
        // A maximizer whose smallest release exceeds r is reported, more
        // strongly, under that larger release value.
        if (best <= tol || !best_attains_r) continue;
        Cut cut;
        cut.r = r;
        for (JobId j : by_c) {
            if (cut.set.size() == best_len) break;
            if (inst.job(j).r >= r) cut.set.push_back(j);
        }
        std::sort(cut.set.begin(), cut.set.end());
        cuts.push_back(std::move(cut));
    }
    return cuts;
}

LpSolution solve_lp_relaxation(const Instance &inst, double tol) {
    const int n = inst.size();
    LpProblem lp;
    lp.objective.resize(static_cast<std::size_t>(n));
    lp.lower.resize(static_cast<std::size_t>(n));
    for (const auto &job : inst.jobs) {
        lp.objective[static_cast<std::size_t>(job.id)] = job.w;
        lp.lower[static_cast<std::size_t>(job.id)] = job.r + job.p / 2.0;
    }
    for (const auto &e : inst.prec) lp.rows.push_back({{{e.after, 1.0}, {e.before, -1.0}}, RowSense::GreaterEqual, 0.0});

    LpSolution sol;
    const long max_rounds = 10L * n * n;
    for (;;) {
        const LpResult res = simplex_solve(lp);
        ++sol.lp_solves;
        sol.pivots += res.pivots;
        sol.c_star = res.x;
        sol.objective = res.value;

        auto cuts = separate(sol.c_star, inst, tol);
        if (cuts.empty()) break;
        if (++sol.iterations > max_rounds)
            throw IterationLimit("cutting-plane loop exceeded " + std::to_string(max_rounds) + " rounds");
        for (auto &cut : cuts) {
            LinearRow row;
            row.sense = RowSense::GreaterEqual;
            double p_sum = 0.0;
            for (JobId j : cut.set) {
                const double p = inst.job(j).p;
                if (p != 0.0) row.coeffs.emplace_back(j, p);
                p_sum += p;
            }
            row.rhs = cut.r * p_sum + p_sum * p_sum / 2.0;
            lp.rows.push_back(std::move(row));
            sol.cuts.push_back(std::move(cut));
        }
    }
    return sol;
}

std::vector<JobId> lp_list_order(const LpSolution &sol, const Instance &inst, double tol) {
    const int n = inst.size();
    const auto topo = topological_order(inst);
    std::vector<int> rank(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rank[static_cast<std::size_t>(topo[static_cast<std::size_t>(i)])] = i;

    // key_k = max(C*_k, key_j for predecessors j): monotone along every edge.
    std::vector<double> key = sol.c_star;
    const auto preds = inst.predecessors();
    for (JobId k : topo) {
        auto &kk = key[static_cast<std::size_t>(k)];
        for (JobId j : preds[static_cast<std::size_t>(k)]) {
            const double kj = key[static_cast<std::size_t>(j)];
            if (kj > kk) {
                if (kj - sol.c_star[static_cast<std::size_t>(k)] > tol * std::max(1.0, std::abs(kj)))
                    throw PrecedenceViolation("LP completion times decrease along edge (" + std::to_string(j) + "," +
                                              std::to_string(k) + ")");
                kk = kj;
            }
        }
    }

    std::vector<JobId> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](JobId a, JobId b) {
        const auto ia = static_cast<std::size_t>(a);
        const auto ib = static_cast<std::size_t>(b);
        if (key[ia] != key[ib]) return key[ia] < key[ib];
        if (rank[ia] != rank[ib]) return rank[ia] < rank[ib];
        return a < b;
    });
    return order;
}

}  // namespace sched
