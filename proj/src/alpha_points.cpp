#include "sched/alpha_points.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>

#include "sched/errors.hpp"

namespace sched {

namespace {

// sqrt(e) - 1, computed without cancellation.
const double kSqrtEMinusOne = std::expm1(0.5);

}  // namespace

double alpha_ratio() { return std::exp(0.5) / kSqrtEMinusOne; }

AlphaProfile::AlphaProfile(const Instance &inst, Schedule sched, std::span<const JobId> list)
    : schedule_(std::move(sched)), list_(list.begin(), list.end()) {
    const int n = inst.size();
    processing_.resize(static_cast<std::size_t>(n));
    finish_rank_.assign(static_cast<std::size_t>(n), 0);
    boundaries_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) finish_rank_[static_cast<std::size_t>(schedule_.finish_order[static_cast<std::size_t>(i)])] = i;

    for (JobId j = 0; j < n; ++j) {
        const double p = inst.job(j).p;
        processing_[static_cast<std::size_t>(j)] = p;
        const auto &segs = schedule_.segments[static_cast<std::size_t>(j)];
        auto &bounds = boundaries_[static_cast<std::size_t>(j)];
        if (p == 0.0) {
            bounds.push_back({segs.front().start, 1.0});
            continue;
        }
        double work = 0.0;
        for (std::size_t s = 0; s < segs.size(); ++s) {
            bounds.push_back({segs[s].start, std::min(work / p, 1.0)});
            work += segs[s].length() * schedule_.speed;
            bounds.push_back({segs[s].end, s + 1 == segs.size() ? 1.0 : std::min(work / p, 1.0)});
        }
    }
}

AlphaProfile AlphaProfile::from_list(const Instance &inst, std::span<const JobId> list, double speed) {
    return AlphaProfile(inst, preemptive_list_schedule(inst, list, speed), list);
}

AlphaProfile AlphaProfile::from_schedule(const Instance &inst, const Schedule &sched, std::span<const JobId> list) {
    Schedule expected;
    try {
        expected = preemptive_list_schedule(inst, list, sched.speed);
    } catch (const Error &e) {
        throw NotListSchedule(std::string("cannot rebuild list schedule: ") + e.what());
    }
    bool same = expected.segments.size() == sched.segments.size();
    for (std::size_t j = 0; same && j < sched.segments.size(); ++j) {
        const auto &a = expected.segments[j];
        const auto &b = sched.segments[j];
        same = a.size() == b.size();
        for (std::size_t s = 0; same && s < a.size(); ++s)
            same = std::abs(a[s].start - b[s].start) <= kTimeTol && std::abs(a[s].end - b[s].end) <= kTimeTol;
    }
    if (!same) throw NotListSchedule("schedule is not the preemptive list schedule of the given list");
    return AlphaProfile(inst, std::move(expected), list);
}

double alpha_point(const AlphaProfile &profile, JobId j, double alpha) {
    const auto bounds = profile.boundaries(j);
    const double p = profile.processing(j);
    if (p == 0.0) return bounds.front().time;
    for (std::size_t i = 0; i + 1 < bounds.size(); i += 2) {
        const auto &start = bounds[i];
        const auto &end = bounds[i + 1];
        if (alpha <= end.fraction || i + 2 == bounds.size()) {
            const double t = start.time + (alpha - start.fraction) * p / profile.speed();
            return std::clamp(t, start.time, end.time);
        }
    }
    return bounds.back().time;
}

std::vector<double> eta_fractions(const AlphaProfile &profile, JobId k) {
    const int n = profile.size();
    const double horizon = profile.completion(k);
    std::vector<double> eta(static_cast<std::size_t>(n), 0.0);
    for (JobId j = 0; j < n; ++j) {
        const double p = profile.processing(j);
        const auto &segs = profile.schedule().segments[static_cast<std::size_t>(j)];
        if (j == k) {
            eta[static_cast<std::size_t>(j)] = 1.0;
        } else if (p == 0.0) {
            eta[static_cast<std::size_t>(j)] = segs.front().start <= horizon ? 1.0 : 0.0;
        } else {
            double work = 0.0;
            for (const auto &iv : segs) {
                if (iv.start >= horizon) break;
                work += (std::min(iv.end, horizon) - iv.start) * profile.speed();
            }
            eta[static_cast<std::size_t>(j)] = std::clamp(work / p, 0.0, 1.0);
        }
    }
    return eta;
}

double eta_work_bound(const AlphaProfile &profile, JobId k) {
    const auto eta = eta_fractions(profile, k);
    double total = 0.0;
    for (JobId j = 0; j < profile.size(); ++j) total += eta[static_cast<std::size_t>(j)] * profile.processing(j);
    return total / profile.speed();
}

std::vector<JobId> alpha_order(const AlphaProfile &profile, double alpha) {
    const int n = profile.size();
    std::vector<double> point(static_cast<std::size_t>(n));
    for (JobId j = 0; j < n; ++j) point[static_cast<std::size_t>(j)] = alpha_point(profile, j, alpha);
    std::vector<JobId> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](JobId a, JobId b) {
        const auto ia = static_cast<std::size_t>(a);
        const auto ib = static_cast<std::size_t>(b);
        if (point[ia] != point[ib]) return point[ia] < point[ib];
        const double ca = profile.completion(a);
        const double cb = profile.completion(b);
        if (ca != cb) return ca < cb;
        return profile.finish_rank(a) < profile.finish_rank(b);
    });
    return order;
}

AlphaResult alpha_schedule(const Instance &inst, const AlphaProfile &profile, double alpha) {
    AlphaResult result;
    result.alpha = alpha;
    result.order = alpha_order(profile, alpha);
    if (!order_extends_precedence(inst, result.order))
        throw PrecedenceViolation("alpha-point order does not extend the precedence relation");
    result.schedule = nonpreemptive_list_schedule(inst, result.order);
    result.cost = objective(result.schedule, inst);
    return result;
}

double alpha_completion_bound(const AlphaProfile &profile, JobId k, double alpha) {
    if (profile.speed() != 2.0) throw ValueError("alpha_completion_bound requires a double-speed source schedule");
    const auto eta = eta_fractions(profile, k);
    double bound = profile.completion(k);
    for (JobId j = 0; j < profile.size(); ++j) {
        const double e = eta[static_cast<std::size_t>(j)];
        // Inclusive membership: every summand is at least p_j / 2.
        if (e >= alpha - 1e-12) bound += (1.0 + (alpha - e) / 2.0) * profile.processing(j);
    }
    return bound;
}

double alpha_density(double alpha) { return std::exp(alpha / 2.0) / (2.0 * kSqrtEMinusOne); }

double alpha_cdf(double alpha) {
    if (alpha <= 0.0) return 0.0;
    if (alpha >= 1.0) return 1.0;
    return std::expm1(alpha / 2.0) / kSqrtEMinusOne;
}

double sample_alpha(double u) {
    constexpr double kSmallest = std::numeric_limits<double>::denorm_min();
    if (!(u > 0.0)) return kSmallest;
    if (u >= 1.0) return 1.0;
    const double alpha = 2.0 * std::log1p(u * kSqrtEMinusOne);
    return std::clamp(alpha, kSmallest, 1.0);
}

std::vector<double> breakpoints(const AlphaProfile &profile) {
    std::vector<double> out;
    for (JobId j = 0; j < profile.size(); ++j) {
        const auto bounds = profile.boundaries(j);
        // interior boundaries: end of every segment but the last
        for (std::size_t i = 1; i + 1 < bounds.size(); i += 2) {
            const double f = bounds[i].fraction;
            if (f > 0.0 && f < 1.0) out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<double> candidate_alphas(const AlphaProfile &profile) {
    const auto points = breakpoints(profile);
    std::vector<double> out;
    double lo = 0.0;
    for (double b : points) {
        out.push_back((lo + b) / 2.0);
        out.push_back(b);
        lo = b;
    }
    out.push_back((lo + 1.0) / 2.0);
    out.push_back(1.0);
    return out;
}

namespace {

const AlphaResult &pick_best(const std::vector<AlphaResult> &results) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < results.size(); ++i) {
        const auto &a = results[i];
        const auto &b = results[best];
        if (a.cost < b.cost || (a.cost == b.cost && a.alpha < b.alpha)) best = i;
    }
    return results[best];
}

}  // namespace

AlphaResult derandomized_best_serial(const Instance &inst, const AlphaProfile &profile) {
    const auto alphas = candidate_alphas(profile);
    std::vector<AlphaResult> results;
    results.reserve(alphas.size());
    for (double a : alphas) results.push_back(alpha_schedule(inst, profile, a));
    return pick_best(results);
}

AlphaResult derandomized_best(const Instance &inst, const AlphaProfile &profile) {
    const auto alphas = candidate_alphas(profile);
    std::vector<AlphaResult> results(alphas.size());
    std::vector<std::exception_ptr> errors(alphas.size());
    const auto count = static_cast<long>(alphas.size());
#pragma omp parallel for schedule(dynamic) if (count > 16)
    for (long i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        try {
            results[idx] = alpha_schedule(inst, profile, alphas[idx]);
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    }
    for (const auto &e : errors)
        if (e) std::rethrow_exception(e);
    return pick_best(results);
}

double expected_cost(const Instance &inst, const AlphaProfile &profile) {
    double total = 0.0;
    double lo = 0.0;
    auto points = breakpoints(profile);
    points.push_back(1.0);
    for (double hi : points) {
        const double mass = alpha_cdf(hi) - alpha_cdf(lo);
        total += alpha_schedule(inst, profile, (lo + hi) / 2.0).cost * mass;
        lo = hi;
    }
    return total;
}

}  // namespace sched
