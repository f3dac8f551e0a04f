#pragma once

#include <utility>
#include <vector>

namespace sched {

enum class RowSense { GreaterEqual, LessEqual, Equal };

/// Sparse linear row: sum of coeff * x[var] (sense) rhs.
struct LinearRow {
    std::vector<std::pair<int, double>> coeffs;
    RowSense sense = RowSense::GreaterEqual;
    double rhs = 0.0;
};

/// min objective . x  s.t. rows, x >= lower (componentwise).
struct LpProblem {
    std::vector<double> objective;
    std::vector<double> lower;
    std::vector<LinearRow> rows;
};

struct LpResult {
    std::vector<double> x;
    double value = 0.0;
    int pivots = 0;
};

struct SimplexOptions {
    double optimality_tol = 1e-9;
    double feasibility_tol = 1e-8;
    double pivot_tol = 1e-11;
    int degenerate_streak = 50;  // switch to Bland's rule after this many
    int max_pivots = 0;          // 0: derived from problem size
};

/// Dense two-phase primal simplex. Returns a basic optimal solution.
/// Throws InfeasibleLp, UnboundedLp, NumericalError or IterationLimit.
LpResult simplex_solve(const LpProblem &problem, const SimplexOptions &options = {});

}  // namespace sched
