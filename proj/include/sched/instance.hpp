#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sched {

using JobId = int;

struct Job {
    JobId id = 0;
    double p = 0.0;  // processing time
    double r = 0.0;  // release date
    double w = 0.0;  // weight

    friend bool operator==(const Job &, const Job &) = default;
};

/// Precedence pair: `before` must complete before `after` starts.
struct Edge {
    JobId before = 0;
    JobId after = 0;

    friend bool operator==(const Edge &, const Edge &) = default;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Single-machine instance. Jobs are indexed by id (jobs[i].id == i after
/// validation); `prec` holds the given edges only, never the closure.
struct Instance {
    std::vector<Job> jobs;
    std::vector<Edge> prec;

    [[nodiscard]] int size() const noexcept { return static_cast<int>(jobs.size()); }
    [[nodiscard]] const Job &job(JobId id) const { return jobs.at(static_cast<std::size_t>(id)); }

    /// Immediate successors / predecessors per job, built from `prec`.
    [[nodiscard]] std::vector<std::vector<JobId>> successors() const;
    [[nodiscard]] std::vector<std::vector<JobId>> predecessors() const;

    /// True iff j precedes k in the transitive closure (DFS on demand).
    [[nodiscard]] bool precedes(JobId j, JobId k) const;

    friend bool operator==(const Instance &, const Instance &) = default;
};

/// Checks field values, id layout and acyclicity. Jobs are reordered by id and
/// duplicate prec pairs are dropped; release-date monotonicity is not checked.
/// Throws ValueError or CycleError.
Instance validate(Instance raw);

/// Raises every release date to the maximum over its predecessors, so that
/// j before k implies r_j <= r_k. Idempotent.
Instance normalize_release_dates(const Instance &inst);

/// Kahn's method, smallest available id first. Throws CycleError.
std::vector<JobId> topological_order(const Instance &inst);

/// Line-oriented text format:
///   jobs <n>
///   job <id> <p> <r> <w>
///   prec <j> <k>
/// '#' starts a comment. Throws ParseError, then validates.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance &inst);

Instance read_instance_file(const std::string &path);

struct GeneratorParams {
    int n = 8;
    int p_max = 10;
    int r_max = 10;
    int w_max = 10;
    double edge_prob = 0.2;
    double zero_p_prob = 0.05;
    std::uint64_t seed = 1;
};

/// Random integer-valued instance, normalized. Deterministic in params.
Instance generate_random(const GeneratorParams &params);

/// Shortest decimal representation that round-trips.
std::string format_number(double value);

}  // namespace sched
