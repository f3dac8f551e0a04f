#include "sched/instance.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <queue>
#include <random>
#include <sstream>

#include "sched/errors.hpp"

namespace sched {

std::vector<std::vector<JobId>> Instance::successors() const {
    std::vector<std::vector<JobId>> out(jobs.size());
    for (const auto &e : prec) out[static_cast<std::size_t>(e.before)].push_back(e.after);
    return out;
}

std::vector<std::vector<JobId>> Instance::predecessors() const {
    std::vector<std::vector<JobId>> out(jobs.size());
    for (const auto &e : prec) out[static_cast<std::size_t>(e.after)].push_back(e.before);
    return out;
}

bool Instance::precedes(JobId j, JobId k) const {
    const auto succ = successors();
    std::vector<char> seen(jobs.size(), 0);
    std::vector<JobId> stack{j};
    while (!stack.empty()) {
        const JobId u = stack.back();
        stack.pop_back();
        for (JobId v : succ[static_cast<std::size_t>(u)]) {
            if (v == k) return true;
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                stack.push_back(v);
            }
        }
    }
    return false;
}

namespace {

bool valid_field(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

std::vector<JobId> topological_order(const Instance &inst) {
    const int n = inst.size();
    std::vector<int> indegree(static_cast<std::size_t>(n), 0);
    const auto succ = inst.successors();
    for (const auto &e : inst.prec) ++indegree[static_cast<std::size_t>(e.after)];

    std::priority_queue<JobId, std::vector<JobId>, std::greater<>> ready;
    for (JobId j = 0; j < n; ++j)
        if (indegree[static_cast<std::size_t>(j)] == 0) ready.push(j);

    std::vector<JobId> order;
    order.reserve(static_cast<std::size_t>(n));
    while (!ready.empty()) {
        const JobId j = ready.top();
        ready.pop();
        order.push_back(j);
        for (JobId k : succ[static_cast<std::size_t>(j)])
            if (--indegree[static_cast<std::size_t>(k)] == 0) ready.push(k);
    }
    if (static_cast<int>(order.size()) != n) throw CycleError("precedence relation contains a cycle");
    return order;
}

Instance validate(Instance raw) {
    const int n = raw.size();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (const auto &job : raw.jobs) {
        if (job.id < 0 || job.id >= n)
            throw ValueError("job id " + std::to_string(job.id) + " outside 0.." + std::to_string(n - 1));
        if (seen[static_cast<std::size_t>(job.id)])
            throw ValueError("duplicate job id " + std::to_string(job.id));
        seen[static_cast<std::size_t>(job.id)] = 1;
        if (!valid_field(job.p) || !valid_field(job.r) || !valid_field(job.w))
            throw ValueError("job " + std::to_string(job.id) + " has a negative or non-finite field");
    }
    std::sort(raw.jobs.begin(), raw.jobs.end(), [](const Job &a, const Job &b) { return a.id < b.id; });

    for (const auto &e : raw.prec) {
        if (e.before < 0 || e.before >= n || e.after < 0 || e.after >= n)
            throw ValueError("precedence pair (" + std::to_string(e.before) + "," + std::to_string(e.after) +
                             ") names an unknown job");
        if (e.before == e.after) throw CycleError("job " + std::to_string(e.before) + " precedes itself");
    }
    std::sort(raw.prec.begin(), raw.prec.end());
    raw.prec.erase(std::unique(raw.prec.begin(), raw.prec.end()), raw.prec.end());

    (void)topological_order(raw);
    return raw;
}

Instance normalize_release_dates(const Instance &inst) {
    Instance out = inst;
    const auto preds = inst.predecessors();
    for (JobId k : topological_order(inst)) {
        auto &job = out.jobs[static_cast<std::size_t>(k)];
        for (JobId j : preds[static_cast<std::size_t>(k)])
            job.r = std::max(job.r, out.jobs[static_cast<std::size_t>(j)].r);
    }
    return out;
}

std::string format_number(double value) {
    if (value == 0.0) return "0";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

namespace {

struct Token {
    std::string_view text;
    int column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

double parse_number(const Token &tok, int line) {
    double value = 0.0;
    const char *first = tok.text.data();
    const char *last = first + tok.text.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last)
        throw ParseError("expected a number, got '" + std::string(tok.text) + "'", line, tok.column);
    return value;
}

int parse_index(const Token &tok, int line) {
    int value = 0;
    const char *first = tok.text.data();
    const char *last = first + tok.text.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last)
        throw ParseError("expected an integer, got '" + std::string(tok.text) + "'", line, tok.column);
    return value;
}

}  // namespace

Instance parse_instance(std::string_view text) {
    Instance inst;
    int declared = -1;
    std::vector<char> defined;
    int line_no = 0;
    std::size_t pos = 0;
    int last_line = 0;

    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        last_line = line_no;
        const auto &head = tokens.front();
        const auto expect = [&](std::size_t count) {
            if (tokens.size() != count)
                throw ParseError("'" + std::string(head.text) + "' takes " + std::to_string(count - 1) + " arguments",
                                 line_no, tokens.size() > count ? tokens[count].column : head.column);
        };

        if (head.text == "jobs") {
            expect(2);
            if (declared >= 0) throw ParseError("duplicate 'jobs' line", line_no, head.column);
            declared = parse_index(tokens[1], line_no);
            if (declared < 0) throw ParseError("job count must be non-negative", line_no, tokens[1].column);
            defined.assign(static_cast<std::size_t>(declared), 0);
        } else if (head.text == "job") {
            expect(5);
            if (declared < 0) throw ParseError("'job' before 'jobs' line", line_no, head.column);
            Job job;
            job.id = parse_index(tokens[1], line_no);
            if (job.id < 0 || job.id >= declared)
                throw ParseError("job id " + std::to_string(job.id) + " out of range", line_no, tokens[1].column);
            if (defined[static_cast<std::size_t>(job.id)])
                throw ParseError("duplicate job id " + std::to_string(job.id), line_no, tokens[1].column);
            defined[static_cast<std::size_t>(job.id)] = 1;
            job.p = parse_number(tokens[2], line_no);
            job.r = parse_number(tokens[3], line_no);
            job.w = parse_number(tokens[4], line_no);
            inst.jobs.push_back(job);
        } else if (head.text == "prec") {
            expect(3);
            if (declared < 0) throw ParseError("'prec' before 'jobs' line", line_no, head.column);
            Edge e{parse_index(tokens[1], line_no), parse_index(tokens[2], line_no)};
            if (e.before < 0 || e.before >= declared)
                throw ParseError("unknown job id " + std::to_string(e.before), line_no, tokens[1].column);
            if (e.after < 0 || e.after >= declared)
                throw ParseError("unknown job id " + std::to_string(e.after), line_no, tokens[2].column);
            inst.prec.push_back(e);
        } else {
            throw ParseError("unknown directive '" + std::string(head.text) + "'", line_no, head.column);
        }
    }

    if (declared < 0) throw ParseError("missing 'jobs' line", std::max(last_line, 1), 1);
    if (static_cast<int>(inst.jobs.size()) != declared)
        throw ParseError("declared " + std::to_string(declared) + " jobs but found " + std::to_string(inst.jobs.size()),
                         std::max(last_line, 1), 1);
    return validate(std::move(inst));
}

std::string serialize_instance(const Instance &inst) {
    std::ostringstream out;
    out << "jobs " << inst.size() << '\n';
    std::vector<Job> jobs = inst.jobs;
    std::sort(jobs.begin(), jobs.end(), [](const Job &a, const Job &b) { return a.id < b.id; });
    for (const auto &job : jobs)
        out << "job " << job.id << ' ' << format_number(job.p) << ' ' << format_number(job.r) << ' '
            << format_number(job.w) << '\n';
    std::vector<Edge> prec = inst.prec;
    std::sort(prec.begin(), prec.end());
    for (const auto &e : prec) out << "prec " << e.before << ' ' << e.after << '\n';
    return out.str();
}

Instance read_instance_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValueError("cannot open instance file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

Instance generate_random(const GeneratorParams &params) {
    std::mt19937_64 rng(params.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto draw_int = [&](int lo, int hi) {
        if (hi <= lo) return lo;
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };

    Instance inst;
    const int n = std::max(params.n, 1);
    inst.jobs.reserve(static_cast<std::size_t>(n));
    for (JobId j = 0; j < n; ++j) {
        Job job;
        job.id = j;
        const bool zero_length = params.p_max <= 0 || unit(rng) < params.zero_p_prob;
        job.p = zero_length ? 0.0 : draw_int(1, params.p_max);
        job.r = draw_int(0, params.r_max);
        job.w = draw_int(0, params.w_max);
        inst.jobs.push_back(job);
    }
    for (JobId j = 0; j < n; ++j)
        for (JobId k = j + 1; k < n; ++k)
            if (unit(rng) < params.edge_prob) inst.prec.push_back({j, k});
    return normalize_release_dates(validate(std::move(inst)));
}

}  // namespace sched
