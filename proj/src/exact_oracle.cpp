#include "sched/exact_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "sched/errors.hpp"

namespace sched {

namespace {

class OrderSearch {
  public:
    explicit OrderSearch(const Instance &inst)
        : inst_(inst), n_(inst.size()), preds_(inst.predecessors()), done_(static_cast<std::size_t>(n_), 0) {
        current_.reserve(static_cast<std::size_t>(n_));
    }

    ExactResult run() {
        expand(0.0, 0.0);
        return {best_cost_, best_order_, nodes_};
    }

  private:
    [[nodiscard]] bool available(JobId j) const {
        if (done_[static_cast<std::size_t>(j)]) return false;
        return std::all_of(preds_[static_cast<std::size_t>(j)].begin(), preds_[static_cast<std::size_t>(j)].end(),
                           [&](JobId i) { return done_[static_cast<std::size_t>(i)] != 0; });
    }

    [[nodiscard]] double slack() const { return 1e-9 * std::max(1.0, std::abs(best_cost_)); }

    void expand(double t, double cost) {
        ++nodes_;
        if (static_cast<int>(current_.size()) == n_) {
            if (best_order_.empty() || cost < best_cost_ - slack()) {
                best_cost_ = cost;
                best_order_ = current_;
            }
            return;
        }
        // every remaining job completes no earlier than max(t, r_j) + p_j
        double bound = cost;
        for (const auto &job : inst_.jobs)
            if (!done_[static_cast<std::size_t>(job.id)]) bound += job.w * (std::max(t, job.r) + job.p);
        if (!best_order_.empty() && bound >= best_cost_ - slack()) return;

        for (JobId j = 0; j < n_; ++j) {
            if (!available(j)) continue;
            const Job &job = inst_.job(j);
            const double end = std::max(t, job.r) + job.p;
            done_[static_cast<std::size_t>(j)] = 1;
            current_.push_back(j);
            expand(end, cost + job.w * end);
            current_.pop_back();
            done_[static_cast<std::size_t>(j)] = 0;
        }
    }

    const Instance &inst_;
    int n_;
    std::vector<std::vector<JobId>> preds_;
    std::vector<char> done_;
    std::vector<JobId> current_;
    std::vector<JobId> best_order_;
    double best_cost_ = std::numeric_limits<double>::infinity();
    long nodes_ = 0;
};

void check_size(const Instance &inst, int n_limit, const char *what) {
    if (inst.size() > n_limit)
        throw TooLarge(std::string(what) + ": n = " + std::to_string(inst.size()) + " exceeds limit " +
                       std::to_string(n_limit));
}

struct Best {
    double violation = -std::numeric_limits<double>::infinity();
    std::uint64_t mask = 0;

    void offer(double v, std::uint64_t m) {
        if (v > violation || (v == violation && m < mask)) {
            violation = v;
            mask = m;
        }
    }
};

double subset_violation(std::span<const double> c, const Instance &inst, std::uint64_t mask) {
    double r_min = std::numeric_limits<double>::infinity();
    double p_sum = 0.0;
    double weighted = 0.0;
    for (int j = 0; j < inst.size(); ++j) {
        if (!(mask >> j & 1U)) continue;
        const Job &job = inst.jobs[static_cast<std::size_t>(j)];
        r_min = std::min(r_min, job.r);
        p_sum += job.p;
        weighted += job.p * c[static_cast<std::size_t>(j)];
    }
    return r_min * p_sum + p_sum * p_sum / 2.0 - weighted;
}

std::optional<SeparationWitness> to_witness(const Best &best, int n, double tol) {
    if (!(best.violation > tol)) return std::nullopt;
    SeparationWitness w;
    w.violation = best.violation;
    for (int j = 0; j < n; ++j)
        if (best.mask >> j & 1U) w.set.push_back(j);
    return w;
}

}  // namespace

ExactResult brute_force_optimum(const Instance &inst, int n_limit) {
    check_size(inst, n_limit, "brute_force_optimum");
    return OrderSearch(inst).run();
}

std::optional<SeparationWitness> brute_force_separation_serial(std::span<const double> c, const Instance &inst,
                                                               double tol, int n_limit) {
    check_size(inst, n_limit, "brute_force_separation");
    const std::uint64_t total = std::uint64_t{1} << inst.size();
    Best best;
    for (std::uint64_t mask = 1; mask < total; ++mask) best.offer(subset_violation(c, inst, mask), mask);
    return to_witness(best, inst.size(), tol);
}

std::optional<SeparationWitness> brute_force_separation(std::span<const double> c, const Instance &inst, double tol,
                                                        int n_limit) {
    check_size(inst, n_limit, "brute_force_separation");
    const auto total = static_cast<long long>(std::uint64_t{1} << inst.size());
    Best best;
#pragma omp parallel if (total > 1024)
    {
        Best local;
#pragma omp for schedule(static) nowait
        for (long long mask = 1; mask < total; ++mask)
            local.offer(subset_violation(c, inst, static_cast<std::uint64_t>(mask)), static_cast<std::uint64_t>(mask));
#pragma omp critical(sched_separation_merge)
        best.offer(local.violation, local.mask);
    }
    return to_witness(best, inst.size(), tol);
}

}  // namespace sched
