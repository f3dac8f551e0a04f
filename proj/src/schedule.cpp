#include "sched/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sched/errors.hpp"

namespace sched {

bool order_extends_precedence(const Instance &inst, std::span<const JobId> order) {
    const int n = inst.size();
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        const JobId j = order[static_cast<std::size_t>(i)];
        if (j < 0 || j >= n || pos[static_cast<std::size_t>(j)] >= 0) return false;
        pos[static_cast<std::size_t>(j)] = i;
    }
    return std::all_of(inst.prec.begin(), inst.prec.end(), [&](const Edge &e) {
        return pos[static_cast<std::size_t>(e.before)] < pos[static_cast<std::size_t>(e.after)];
    });
}

namespace {

void require_list(const Instance &inst, std::span<const JobId> order) {
    if (!order_extends_precedence(inst, order))
        throw OrderViolatesPrecedence("job order is not a permutation extending the precedence relation");
}

}  // namespace

Schedule nonpreemptive_list_schedule(const Instance &inst, std::span<const JobId> order) {
    require_list(inst, order);
    Schedule sched;
    sched.speed = 1.0;
    sched.segments.resize(inst.jobs.size());
    sched.finish_order.reserve(inst.jobs.size());
    double t = 0.0;
    for (JobId j : order) {
        const Job &job = inst.job(j);
        const double start = std::max(t, job.r);
        t = start + job.p;
        sched.segments[static_cast<std::size_t>(j)].push_back({start, t});
        sched.finish_order.push_back(j);
    }
    return sched;
}

Schedule preemptive_list_schedule(const Instance &inst, std::span<const JobId> order, double speed) {
    require_list(inst, order);
    if (!(speed > 0.0) || !std::isfinite(speed)) throw ValueError("machine speed must be positive");

    const int n = inst.size();
    Schedule sched;
    sched.speed = speed;
    sched.segments.resize(static_cast<std::size_t>(n));
    sched.finish_order.reserve(static_cast<std::size_t>(n));

    std::vector<double> remaining(static_cast<std::size_t>(n));
    for (const auto &job : inst.jobs) remaining[static_cast<std::size_t>(job.id)] = job.p;
    std::vector<char> done(static_cast<std::size_t>(n), 0);

    double t = 0.0;
    int finished = 0;
    JobId last_job = -1;  // owner of the most recent machine activity
    while (finished < n) {
        std::size_t head = order.size();
        for (std::size_t i = 0; i < order.size(); ++i) {
            const JobId j = order[i];
            if (!done[static_cast<std::size_t>(j)] && inst.job(j).r <= t + kTimeTol) {
                head = i;
                break;
            }
        }
        if (head == order.size()) {
            double next = std::numeric_limits<double>::infinity();
            for (JobId j = 0; j < n; ++j)
                if (!done[static_cast<std::size_t>(j)]) next = std::min(next, inst.job(j).r);
            t = next;
            continue;
        }

        const JobId j = order[head];
        auto &segs = sched.segments[static_cast<std::size_t>(j)];
        double &rem = remaining[static_cast<std::size_t>(j)];
        if (rem <= 0.0) {
            segs.push_back({t, t});
            done[static_cast<std::size_t>(j)] = 1;
            sched.finish_order.push_back(j);
            ++finished;
            last_job = j;
            continue;
        }

        // Only a job ahead of j in the list can preempt it.
        double preempt_at = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < head; ++i) {
            const JobId k = order[i];
            if (!done[static_cast<std::size_t>(k)]) preempt_at = std::min(preempt_at, inst.job(k).r);
        }

        const double finish = t + rem / speed;
        const double stop = preempt_at < finish - kTimeTol ? preempt_at : finish;
        if (last_job == j && !segs.empty() && segs.back().end == t)
            segs.back().end = stop;
        else
            segs.push_back({t, stop});
        last_job = j;

        if (stop == finish) {
            rem = 0.0;
            done[static_cast<std::size_t>(j)] = 1;
            sched.finish_order.push_back(j);
            ++finished;
        } else {
            rem -= (stop - t) * speed;
        }
        t = stop;
    }
    return sched;
}

const char *to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::MissingJob: return "MissingJob";
        case ViolationKind::BadInterval: return "BadInterval";
        case ViolationKind::WrongLength: return "WrongLength";
        case ViolationKind::ReleaseDate: return "ReleaseDate";
        case ViolationKind::Precedence: return "Precedence";
        case ViolationKind::MachineOverlap: return "MachineOverlap";
        case ViolationKind::PreemptionNotAllowed: return "PreemptionNotAllowed";
    }
    return "Unknown";
}

std::vector<Violation> check_feasible(const Schedule &sched, const Instance &inst, bool allow_preemption) {
    std::vector<Violation> out;
    const int n = inst.size();
    if (sched.size() != n || !(sched.speed > 0.0)) {
        out.push_back({ViolationKind::MissingJob, -1, -1, 0.0, "schedule does not cover every job exactly once"});
        return out;
    }

    struct Piece {
        Interval iv;
        JobId job;
    };
    std::vector<Piece> busy;
    std::vector<Piece> events;
    bool complete = true;

    for (JobId j = 0; j < n; ++j) {
        const auto &segs = sched.segments[static_cast<std::size_t>(j)];
        const Job &job = inst.job(j);
        if (segs.empty()) {
            out.push_back({ViolationKind::MissingJob, j, -1, 0.0, "job has no intervals"});
            complete = false;
            continue;
        }
        double total = 0.0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            const Interval &iv = segs[i];
            const bool zero_ok = job.p == 0.0 && segs.size() == 1 && iv.start == iv.end;
            if (!(iv.start < iv.end) && !zero_ok)
                out.push_back({ViolationKind::BadInterval, j, -1, iv.start, "empty or reversed interval"});
            if (i > 0 && iv.start < segs[i - 1].end - kTimeTol)
                out.push_back({ViolationKind::BadInterval, j, -1, iv.start, "intervals unsorted or overlapping"});
            total += iv.length();
            (iv.start == iv.end ? events : busy).push_back({iv, j});
        }
        if (std::abs(total - job.p / sched.speed) > kTimeTol * std::max(1.0, job.p))
            out.push_back({ViolationKind::WrongLength, j, -1, total, "processed length differs from p/speed"});
        if (segs.front().start < job.r - kTimeTol)
            out.push_back({ViolationKind::ReleaseDate, j, -1, segs.front().start, "starts before release date"});
        if (!allow_preemption && segs.size() > 1)
            out.push_back({ViolationKind::PreemptionNotAllowed, j, -1, segs[1].start, "job is preempted"});
    }

    if (complete) {
        for (const auto &e : inst.prec) {
            const double c = sched.completion(e.before);
            const double s = sched.first_start(e.after);
            if (c > s + kTimeTol)
                out.push_back({ViolationKind::Precedence, e.before, e.after, s, "successor starts before predecessor completes"});
        }
    }

    std::sort(busy.begin(), busy.end(), [](const Piece &a, const Piece &b) {
        return a.iv.start < b.iv.start || (a.iv.start == b.iv.start && a.job < b.job);
    });
    for (std::size_t i = 1; i < busy.size(); ++i) {
        if (busy[i].iv.start < busy[i - 1].iv.end - kTimeTol)
            out.push_back({ViolationKind::MachineOverlap, busy[i - 1].job, busy[i].job, busy[i].iv.start,
                           "machine processes two jobs at once"});
    }
    for (const auto &ev : events) {
        const double t = ev.iv.start;
        // first busy interval ending after t
        auto it = std::upper_bound(busy.begin(), busy.end(), t,
                                   [](double value, const Piece &p) { return value < p.iv.start; });
        if (it != busy.begin()) {
            const auto &prev = *std::prev(it);
            if (prev.iv.start + kTimeTol < t && t < prev.iv.end - kTimeTol)
                out.push_back({ViolationKind::MachineOverlap, prev.job, ev.job, t,
                               "zero-length job placed inside another job's interval"});
        }
    }
    return out;
}

std::vector<double> completion_times(const Schedule &sched) {
    std::vector<double> out(sched.segments.size(), 0.0);
    for (std::size_t j = 0; j < sched.segments.size(); ++j)
        if (!sched.segments[j].empty()) out[j] = sched.segments[j].back().end;
    return out;
}

std::vector<double> mean_busy_times(const Schedule &sched, const Instance &inst) {
    std::vector<double> out(sched.segments.size(), 0.0);
    for (std::size_t j = 0; j < sched.segments.size(); ++j) {
        const auto &segs = sched.segments[j];
        if (segs.empty()) continue;
        const double p = inst.jobs[j].p;
        if (p == 0.0) {
            out[j] = segs.front().start;
            continue;
        }
        double integral = 0.0;
        for (const auto &iv : segs) integral += (iv.end * iv.end - iv.start * iv.start) / 2.0;
        out[j] = sched.speed / p * integral;
    }
    return out;
}

double objective(const Schedule &sched, const Instance &inst) {
    double total = 0.0;
    for (const auto &job : inst.jobs) total += job.w * sched.completion(job.id);
    return total;
}

}  // namespace sched
