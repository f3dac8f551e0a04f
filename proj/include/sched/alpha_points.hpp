#pragma once

#include <span>
#include <vector>

#include "sched/instance.hpp"
#include "sched/schedule.hpp"

namespace sched {

/// sqrt(e) / (sqrt(e) - 1): the conversion guarantee against the double-speed schedule.
double alpha_ratio();

/// Alpha-point view of a preemptive list schedule. Only schedules that the
/// preemptive list scheduler produces are accepted.
class AlphaProfile {
  public:
    struct Boundary {
        double time;
        double fraction;  // completed fraction of the job at `time`
    };

    /// Runs the preemptive list scheduler on `list` at `speed`.
    static AlphaProfile from_list(const Instance &inst, std::span<const JobId> list, double speed = 2.0);

    /// Wraps an existing schedule after checking that it is exactly the
    /// preemptive list schedule of `list`. Throws NotListSchedule otherwise.
    static AlphaProfile from_schedule(const Instance &inst, const Schedule &sched, std::span<const JobId> list);

    [[nodiscard]] const Schedule &schedule() const noexcept { return schedule_; }
    [[nodiscard]] const std::vector<JobId> &list() const noexcept { return list_; }
    [[nodiscard]] double speed() const noexcept { return schedule_.speed; }
    [[nodiscard]] int size() const noexcept { return schedule_.size(); }
    [[nodiscard]] double processing(JobId j) const { return processing_.at(static_cast<std::size_t>(j)); }
    [[nodiscard]] double completion(JobId j) const { return schedule_.completion(j); }
    [[nodiscard]] int finish_rank(JobId j) const { return finish_rank_.at(static_cast<std::size_t>(j)); }

    /// Start and end of every segment of j, paired with the completed fraction.
    /// Fractions are nondecreasing and end at exactly 1.
    [[nodiscard]] std::span<const Boundary> boundaries(JobId j) const {
        return boundaries_.at(static_cast<std::size_t>(j));
    }

  private:
    AlphaProfile(const Instance &inst, Schedule sched, std::span<const JobId> list);

    Schedule schedule_;
    std::vector<JobId> list_;
    std::vector<double> processing_;
    std::vector<int> finish_rank_;
    std::vector<std::vector<Boundary>> boundaries_;
};

/// Nonpreemptive speed-1 schedule built from the alpha-point order.
struct AlphaResult {
    double alpha = 1.0;
    std::vector<JobId> order;
    Schedule schedule;
    double cost = 0.0;
};

/// First time at which an alpha-fraction of j is done; the event instant for p_j = 0.
double alpha_point(const AlphaProfile &profile, JobId j, double alpha);

/// Completed fraction of every job at C'_k. Entry k is 1.
std::vector<double> eta_fractions(const AlphaProfile &profile, JobId k);

/// sum_j eta_j p_j / speed, a lower bound on C'_k.
double eta_work_bound(const AlphaProfile &profile, JobId k);

/// Jobs by (alpha-point, C'_j, completion rank in the source schedule).
std::vector<JobId> alpha_order(const AlphaProfile &profile, double alpha);

/// Throws PrecedenceViolation if the alpha order does not extend prec.
AlphaResult alpha_schedule(const Instance &inst, const AlphaProfile &profile, double alpha);

/// C'_k + sum over {j : eta_j >= alpha} of (1 + (alpha - eta_j)/2) p_j.
/// Upper bound on the completion of k in the alpha schedule; speed 2 only.
double alpha_completion_bound(const AlphaProfile &profile, JobId k, double alpha);

/// Density e^{a/2} / (2 (sqrt(e) - 1)) on (0, 1] and its distribution function.
double alpha_density(double alpha);
double alpha_cdf(double alpha);

/// Inverse-CDF draw. u = 0 maps to the smallest positive double.
double sample_alpha(double u);

/// Sorted distinct completed fractions in (0, 1) at interior segment boundaries.
std::vector<double> breakpoints(const AlphaProfile &profile);

/// Breakpoints, midpoints of the intervals they cut (0, 1] into, and 1.
std::vector<double> candidate_alphas(const AlphaProfile &profile);

/// Best alpha schedule over candidate_alphas; ties go to the smaller alpha.
/// Candidates are evaluated in parallel when OpenMP is available.
AlphaResult derandomized_best(const Instance &inst, const AlphaProfile &profile);

/// Single-threaded reference for derandomized_best.
AlphaResult derandomized_best_serial(const Instance &inst, const AlphaProfile &profile);

/// Exact expected cost when alpha is drawn from alpha_density.
double expected_cost(const Instance &inst, const AlphaProfile &profile);

}  // namespace sched
