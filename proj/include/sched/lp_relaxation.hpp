#pragma once

#include <span>
#include <vector>

#include "sched/instance.hpp"

namespace sched {

inline constexpr double kDefaultSeparationTol = 1e-7;

/// Parallel-inequality cut:  sum_{j in set} p_j C_j >= r * p(S) + p(S)^2 / 2.
/// `r` equals the smallest release date in `set`.
struct Cut {
    double r = 0.0;
    std::vector<JobId> set;  // sorted ids

    friend bool operator==(const Cut &, const Cut &) = default;
};

/// r * p(S) + p(S)^2/2 - sum_{j in S} p_j c_j; positive means violated.
double cut_violation(const Cut &cut, std::span<const double> c, const Instance &inst);

struct LpSolution {
    std::vector<double> c_star;  // LP completion time per job id
    double objective = 0.0;
    std::vector<Cut> cuts;
    int iterations = 0;  // cutting-plane rounds
    int lp_solves = 0;
    int pivots = 0;
};

/// Prefix-scan separation: for every distinct release value r, scans the
/// prefixes of {j : r_j >= r} sorted by (c_j, id) and reports the most
/// violated prefix when it exceeds `tol` and contains a job released at r.
/// Returns an empty vector iff no subset violates its constraint by more than tol.
std::vector<Cut> separate(std::span<const double> c, const Instance &inst, double tol = kDefaultSeparationTol);

/// Cutting-plane solve of the completion-time relaxation. The instance must
/// have normalized release dates. Throws IterationLimit after 10 n^2 rounds.
LpSolution solve_lp_relaxation(const Instance &inst, double tol = kDefaultSeparationTol);

/// Jobs sorted by (C*, topological rank, id), adjusted so that the order
/// extends prec when C* ties or is off by rounding along an edge. Throws
/// PrecedenceViolation if C* decreases along an edge by more than `tol`.
std::vector<JobId> lp_list_order(const LpSolution &sol, const Instance &inst, double tol = 1e-6);

}  // namespace sched
