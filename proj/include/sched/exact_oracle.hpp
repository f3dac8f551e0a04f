#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sched/instance.hpp"

namespace sched {

struct ExactResult {
    double cost = 0.0;
    std::vector<JobId> order;
    long nodes_explored = 0;
};

/// Optimal nonpreemptive cost by depth-first enumeration of precedence-feasible
/// orders with bounding. Returns the lexicographically smallest optimal order.
/// Throws TooLarge when n > n_limit.
ExactResult brute_force_optimum(const Instance &inst, int n_limit = 10);

struct SeparationWitness {
    double violation = 0.0;
    std::vector<JobId> set;
};

/// Maximizes r_min(S) p(S) + p(S)^2/2 - sum_{j in S} p_j c_j over all nonempty
/// S. Returns nullopt when the maximum is <= tol. Ties go to the smallest
/// subset bitmask. Subsets are split across threads when OpenMP is available.
std::optional<SeparationWitness> brute_force_separation(std::span<const double> c, const Instance &inst,
                                                        double tol = 0.0, int n_limit = 12);

/// Single-threaded reference for brute_force_separation.
std::optional<SeparationWitness> brute_force_separation_serial(std::span<const double> c, const Instance &inst,
                                                               double tol = 0.0, int n_limit = 12);

}  // namespace sched
