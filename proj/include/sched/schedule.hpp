#pragma once

#include <span>
#include <string>
#include <vector>

#include "sched/instance.hpp"

namespace sched {

/// Absolute tolerance for all time comparisons in schedules.
inline constexpr double kTimeTol = 1e-9;

/// Half-open processing interval [start, end). A zero-length job is recorded
/// as the instantaneous event [t, t].
struct Interval {
    double start = 0.0;
    double end = 0.0;

    [[nodiscard]] double length() const noexcept { return end - start; }
    friend bool operator==(const Interval &, const Interval &) = default;
};

/// Single-machine schedule at a given speed (work processed per time unit).
/// Used for both preemptive and nonpreemptive schedules.
struct Schedule {
    double speed = 1.0;
    std::vector<std::vector<Interval>> segments;  // indexed by job id
    std::vector<JobId> finish_order;              // jobs in the order they completed

    [[nodiscard]] int size() const noexcept { return static_cast<int>(segments.size()); }
    [[nodiscard]] double completion(JobId j) const { return segments.at(static_cast<std::size_t>(j)).back().end; }
    [[nodiscard]] double first_start(JobId j) const { return segments.at(static_cast<std::size_t>(j)).front().start; }

    friend bool operator==(const Schedule &, const Schedule &) = default;
};

/// True iff `order` is a permutation of the job ids that extends prec.
bool order_extends_precedence(const Instance &inst, std::span<const JobId> order);

/// Jobs in `order` each as early as possible after the previous one finishes
/// and after their release date. Throws OrderViolatesPrecedence.
Schedule nonpreemptive_list_schedule(const Instance &inst, std::span<const JobId> order);

/// At every instant, run the first released incomplete job of `order`.
/// Requires normalized release dates. Throws OrderViolatesPrecedence.
Schedule preemptive_list_schedule(const Instance &inst, std::span<const JobId> order, double speed);

enum class ViolationKind {
    MissingJob,
    BadInterval,
    WrongLength,
    ReleaseDate,
    Precedence,
    MachineOverlap,
    PreemptionNotAllowed,
};

struct Violation {
    ViolationKind kind;
    JobId job = -1;
    JobId other = -1;
    double time = 0.0;
    std::string message;
};

/// Empty result means feasible.
std::vector<Violation> check_feasible(const Schedule &sched, const Instance &inst, bool allow_preemption);

std::vector<double> completion_times(const Schedule &sched);

/// Processing-weighted average instant of each job; the event time for p = 0.
std::vector<double> mean_busy_times(const Schedule &sched, const Instance &inst);

/// Total weighted completion time.
double objective(const Schedule &sched, const Instance &inst);

const char *to_string(ViolationKind kind);

}  // namespace sched
