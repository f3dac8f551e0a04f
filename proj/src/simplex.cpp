#include "sched/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sched/errors.hpp"

namespace sched {

namespace {

// Dense tableau in canonical form with respect to `basis`. The cost row holds
// reduced costs; `objective_value` is the current value of the phase objective.
class Tableau {
  public:
    Tableau(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0.0),
                                  b_(static_cast<std::size_t>(rows), 0.0), basis_(static_cast<std::size_t>(rows), -1),
                                  cost_(static_cast<std::size_t>(cols), 0.0) {}

    double &at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    [[nodiscard]] double at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    double &rhs(int i) { return b_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] double rhs(int i) const { return b_[static_cast<std::size_t>(i)]; }
    int &basic(int i) { return basis_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] int basic(int i) const { return basis_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }
    [[nodiscard]] double reduced_cost(int j) const { return cost_[static_cast<std::size_t>(j)]; }
    [[nodiscard]] double objective_value() const { return -cost_rhs_; }

    // Prices out the basis for a fresh cost vector.
    void set_costs(const std::vector<double> &c) {
        cost_ = c;
        cost_rhs_ = 0.0;
        for (int i = 0; i < rows_; ++i) {
            const double cb = c[static_cast<std::size_t>(basic(i))];
            if (cb == 0.0) continue;
            for (int j = 0; j < cols_; ++j) cost_[static_cast<std::size_t>(j)] -= cb * at(i, j);
            cost_rhs_ -= cb * rhs(i);
        }
    }

    void pivot(int r, int c) {
        const double inv = 1.0 / at(r, c);
        for (int j = 0; j < cols_; ++j) at(r, j) *= inv;
        at(r, c) = 1.0;
        rhs(r) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r) continue;
            const double factor = at(i, c);
            if (factor == 0.0) continue;
            for (int j = 0; j < cols_; ++j) at(i, j) -= factor * at(r, j);
            at(i, c) = 0.0;
            rhs(i) -= factor * rhs(r);
            if (std::abs(rhs(i)) < 1e-13) rhs(i) = 0.0;
        }
        const double factor = cost_[static_cast<std::size_t>(c)];
        if (factor != 0.0) {
            for (int j = 0; j < cols_; ++j) cost_[static_cast<std::size_t>(j)] -= factor * at(r, j);
            cost_[static_cast<std::size_t>(c)] = 0.0;
            cost_rhs_ -= factor * rhs(r);
        }
        basic(r) = c;
    }

  private:
    int rows_;
    int cols_;
    std::vector<double> a_;
    std::vector<double> b_;
    std::vector<int> basis_;
    std::vector<double> cost_;
    double cost_rhs_ = 0.0;
};

// Runs primal simplex on the current phase objective. Columns with
// blocked[j] set never enter.
int optimize(Tableau &t, const std::vector<char> &blocked, const SimplexOptions &opt, int max_pivots, int pivots) {
    constexpr double kRatioTol = 1e-9;
    int degenerate = 0;
    bool bland = false;

    for (;;) {
        int enter = -1;
        double best = -opt.optimality_tol;
        for (int j = 0; j < t.cols(); ++j) {
            if (blocked[static_cast<std::size_t>(j)]) continue;
            const double d = t.reduced_cost(j);
            if (d < best) {
                enter = j;
                if (bland) break;
                best = d;
            }
        }
        if (enter < 0) return pivots;

        int leave = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        double best_pivot = 0.0;
        bool tiny_pivot = false;
        for (int i = 0; i < t.rows(); ++i) {
            const double a = t.at(i, enter);
            if (a <= kRatioTol) {
                if (a > opt.pivot_tol) tiny_pivot = true;
                continue;
            }
            const double ratio = std::max(t.rhs(i), 0.0) / a;
            const double slack = 1e-12 * std::max(1.0, std::abs(best_ratio == std::numeric_limits<double>::infinity() ? 0.0 : best_ratio));
            if (ratio < best_ratio - slack) {
                leave = i;
                best_ratio = ratio;
                best_pivot = a;
            } else if (ratio <= best_ratio + slack) {
                const bool better = bland ? t.basic(i) < t.basic(leave) : a > best_pivot;
                if (better) {
                    leave = i;
                    best_ratio = std::min(best_ratio, ratio);
                    best_pivot = a;
                }
            }
        }
        if (leave < 0) {
            if (tiny_pivot)
                throw NumericalError("simplex: only pivot candidates below tolerance in column " + std::to_string(enter));
            throw UnboundedLp("simplex: objective unbounded below");
        }
        if (std::abs(best_pivot) < opt.pivot_tol) throw NumericalError("simplex: pivot magnitude below tolerance");

        if (best_ratio <= 1e-12) {
            if (++degenerate >= opt.degenerate_streak) bland = true;
        } else {
            degenerate = 0;
            bland = false;
        }

        t.pivot(leave, enter);
        if (++pivots > max_pivots) throw IterationLimit("simplex: pivot limit exceeded");
    }
}

}  // namespace

LpResult simplex_solve(const LpProblem &problem, const SimplexOptions &options) {
    const int n = static_cast<int>(problem.objective.size());
    const int m = static_cast<int>(problem.rows.size());
    std::vector<double> lower = problem.lower;
    lower.resize(static_cast<std::size_t>(n), 0.0);

    // Shift to x' = x - lower >= 0 and make every rhs non-negative.
    struct Row {
        std::vector<double> dense;
        RowSense sense;
        double rhs;
    };
    std::vector<Row> rows;
    rows.reserve(static_cast<std::size_t>(m));
    int extra = 0;
    int artificials = 0;
    for (const auto &src : problem.rows) {
        Row row{std::vector<double>(static_cast<std::size_t>(n), 0.0), src.sense, src.rhs};
        for (const auto &[var, coeff] : src.coeffs) {
            if (var < 0 || var >= n) throw NumericalError("simplex: row references unknown variable");
            row.dense[static_cast<std::size_t>(var)] += coeff;
        }
        for (int j = 0; j < n; ++j) row.rhs -= row.dense[static_cast<std::size_t>(j)] * lower[static_cast<std::size_t>(j)];

        const bool flip = row.rhs < 0.0 || (row.rhs == 0.0 && row.sense == RowSense::GreaterEqual);
        if (flip) {
            for (auto &v : row.dense) v = -v;
            row.rhs = -row.rhs;
            if (row.sense == RowSense::GreaterEqual)
                row.sense = RowSense::LessEqual;
            else if (row.sense == RowSense::LessEqual)
                row.sense = RowSense::GreaterEqual;
        }
        if (row.rhs == 0.0) row.rhs = 0.0;  // drop negative zero
        if (row.sense != RowSense::Equal) ++extra;
        if (row.sense != RowSense::LessEqual) ++artificials;
        rows.push_back(std::move(row));
    }

    const int slack_begin = n;
    const int art_begin = n + extra;
    const int cols = art_begin + artificials;
    Tableau t(m, cols);
    std::vector<char> is_artificial(static_cast<std::size_t>(cols), 0);
    int next_slack = slack_begin;
    int next_art = art_begin;
    for (int i = 0; i < m; ++i) {
        const auto &row = rows[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) t.at(i, j) = row.dense[static_cast<std::size_t>(j)];
        t.rhs(i) = row.rhs;
        switch (row.sense) {
            case RowSense::LessEqual:
                t.at(i, next_slack) = 1.0;
                t.basic(i) = next_slack++;
                break;
            case RowSense::GreaterEqual:
                t.at(i, next_slack++) = -1.0;
                [[fallthrough]];
            case RowSense::Equal:
                t.at(i, next_art) = 1.0;
                is_artificial[static_cast<std::size_t>(next_art)] = 1;
                t.basic(i) = next_art++;
                break;
        }
    }

    const int max_pivots = options.max_pivots > 0 ? options.max_pivots : 100 * (m + cols) + 1000;
    int pivots = 0;
    std::vector<char> blocked(static_cast<std::size_t>(cols), 0);

    if (artificials > 0) {
        std::vector<double> phase1(static_cast<std::size_t>(cols), 0.0);
        for (int j = art_begin; j < cols; ++j) phase1[static_cast<std::size_t>(j)] = 1.0;
        t.set_costs(phase1);
        pivots = optimize(t, blocked, options, max_pivots, pivots);

        double scale = 1.0;
        for (const auto &row : rows) scale = std::max(scale, std::abs(row.rhs));
        if (t.objective_value() > options.feasibility_tol * scale) throw InfeasibleLp("simplex: problem is infeasible");

        // Drive zero-level artificials out of the basis where possible.
        for (int i = 0; i < m; ++i) {
            if (!is_artificial[static_cast<std::size_t>(t.basic(i))]) continue;
            int col = -1;
            double mag = 1e-9;
            for (int j = 0; j < art_begin; ++j) {
                if (std::abs(t.at(i, j)) > mag) {
                    mag = std::abs(t.at(i, j));
                    col = j;
                }
            }
            if (col >= 0) {
                t.pivot(i, col);
                ++pivots;
            }
        }
        for (int j = art_begin; j < cols; ++j) blocked[static_cast<std::size_t>(j)] = 1;
    }

    std::vector<double> phase2(static_cast<std::size_t>(cols), 0.0);
    for (int j = 0; j < n; ++j) phase2[static_cast<std::size_t>(j)] = problem.objective[static_cast<std::size_t>(j)];
    t.set_costs(phase2);
    pivots = optimize(t, blocked, options, max_pivots, pivots);

    LpResult result;
    result.x = lower;
    for (int i = 0; i < m; ++i) {
        const int j = t.basic(i);
        if (j < n) result.x[static_cast<std::size_t>(j)] += std::max(t.rhs(i), 0.0);
    }
    result.value = 0.0;
    for (int j = 0; j < n; ++j)
        result.value += problem.objective[static_cast<std::size_t>(j)] * result.x[static_cast<std::size_t>(j)];
    result.pivots = pivots;
    return result;
}

}  // namespace sched
