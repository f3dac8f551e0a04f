#include <doctest.h>

#include <fstream>
#include <sstream>

#include "sched/errors.hpp"
#include "sched/instance.hpp"
#include "test_support.hpp"

using namespace sched;
using sched::testing::make_instance;

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string normalize_whitespace(const std::string &text) {
    std::istringstream in(text);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream words(line);
        std::string word;
        std::string joined;
        while (words >> word) joined += (joined.empty() ? "" : " ") + word;
        if (!joined.empty()) out << joined << '\n';
    }
    return out.str();
}

bool closure_monotone(const Instance &inst) {
    for (const auto &a : inst.jobs)
        for (const auto &b : inst.jobs)
            if (a.id != b.id && inst.precedes(a.id, b.id) && a.r > b.r) return false;
    return true;
}

}  // namespace

TEST_CASE("validate rejects cycles and bad fields") {
    Instance two;
    two.jobs = {{0, 1, 0, 1}, {1, 1, 0, 1}};
    two.prec = {{0, 1}, {1, 0}};
    CHECK_THROWS_AS(validate(two), CycleError);

    Instance self = two;
    self.prec = {{1, 1}};
    CHECK_THROWS_AS(validate(self), CycleError);

    Instance one;
    one.jobs = {{0, 2, 0, 1}};
    CHECK(validate(one) == one);

    Instance negative;
    negative.jobs = {{0, -1, 0, 1}};
    CHECK_THROWS_AS(validate(negative), ValueError);

    Instance nan_weight;
    nan_weight.jobs = {{0, 1, 0, std::nan("")}};
    CHECK_THROWS_AS(validate(nan_weight), ValueError);

    Instance inf_release;
    inf_release.jobs = {{0, 1, HUGE_VAL, 1}};
    CHECK_THROWS_AS(validate(inf_release), ValueError);

    Instance duplicate;
    duplicate.jobs = {{0, 1, 0, 1}, {0, 1, 0, 1}};
    CHECK_THROWS_AS(validate(duplicate), ValueError);

    Instance dangling;
    dangling.jobs = {{0, 1, 0, 1}};
    dangling.prec = {{0, 3}};
    CHECK_THROWS_AS(validate(dangling), ValueError);
}

TEST_CASE("validate sorts jobs by id and drops duplicate pairs") {
    Instance raw;
    raw.jobs = {{1, 2, 0, 1}, {0, 1, 0, 1}};
    raw.prec = {{0, 1}, {0, 1}};
    const auto inst = validate(raw);
    CHECK(inst.jobs[0].id == 0);
    CHECK(inst.jobs[1].p == 2);
    CHECK(inst.prec.size() == 1);
}

TEST_CASE("normalize_release_dates") {
    SUBCASE("direct propagation") {
        const auto inst = normalize_release_dates(make_instance({{1, 5, 1}, {1, 2, 1}}, {{0, 1}}));
        CHECK(inst.jobs[1].r == 5);
    }
    SUBCASE("transitive chain") {
        const auto inst = normalize_release_dates(make_instance({{1, 3, 1}, {1, 0, 1}, {1, 1, 1}}, {{0, 1}, {1, 2}}));
        CHECK(inst.jobs[0].r == 3);
        CHECK(inst.jobs[1].r == 3);
        CHECK(inst.jobs[2].r == 3);
    }
    SUBCASE("no precedence is identity") {
        const auto raw = make_instance({{1, 3, 1}, {2, 0, 4}});
        CHECK(normalize_release_dates(raw) == raw);
    }
    SUBCASE("p and w are untouched; r_j + p_j is not propagated") {
        const auto inst = normalize_release_dates(make_instance({{4, 1, 2}, {1, 0, 3}}, {{0, 1}}));
        CHECK(inst.jobs[1].r == 1);
        CHECK(inst.jobs[1].p == 1);
        CHECK(inst.jobs[1].w == 3);
    }
}

TEST_CASE("topological_order uses smallest available id") {
    CHECK(topological_order(make_instance({{1, 0, 1}, {1, 0, 1}, {1, 0, 1}}, {{2, 0}})) == std::vector<JobId>{1, 2, 0});
    CHECK(topological_order(make_instance({{1, 0, 1}, {1, 0, 1}, {1, 0, 1}})) == std::vector<JobId>{0, 1, 2});
    CHECK(topological_order(make_instance({{1, 0, 1}, {1, 0, 1}, {1, 0, 1}}, {{0, 1}, {1, 2}})) ==
          std::vector<JobId>{0, 1, 2});
}

TEST_CASE("parse: documents and diagnostics") {
    SUBCASE("minimal document") {
        const auto inst = parse_instance("jobs 1\njob 0 2 0 3\n");
        CHECK(inst.size() == 1);
        CHECK(inst.jobs[0].w == 3);
    }
    SUBCASE("comments, blank lines and any job order") {
        const auto inst = parse_instance("# header\n\njobs 2   # count\njob 1 1 0 2\njob 0 2.5 0 1\nprec 0 1\n");
        CHECK(inst.size() == 2);
        CHECK(inst.jobs[0].p == 2.5);
        CHECK(inst.prec == std::vector<Edge>{{0, 1}});
    }
    SUBCASE("unknown prec id reports line and column") {
        try {
            (void)parse_instance("jobs 2\njob 0 1 0 1\njob 1 1 0 1\nprec 0 7\n");
            FAIL("expected ParseError");
        } catch (const ParseError &e) {
            CHECK(e.line() == 4);
            CHECK(e.column() == 8);
        }
    }
    SUBCASE("other malformed inputs") {
        CHECK_THROWS_AS(parse_instance("job 0 1 0 1\n"), ParseError);
        CHECK_THROWS_AS(parse_instance("jobs 1\njob 0 1 0\n"), ParseError);
        CHECK_THROWS_AS(parse_instance("jobs 1\njob 0 x 0 1\n"), ParseError);
        CHECK_THROWS_AS(parse_instance("jobs 2\njob 0 1 0 1\n"), ParseError);
        CHECK_THROWS_AS(parse_instance("jobs 1\njob 0 1 0 1\njob 0 1 0 1\n"), ParseError);
        CHECK_THROWS_AS(parse_instance("jobs 1\nmachine 2\n"), ParseError);
        CHECK_THROWS_AS(parse_instance(""), ParseError);
        CHECK_THROWS_AS(parse_instance("jobs 1\njob 0 -1 0 1\n"), ValueError);
        CHECK_THROWS_AS(parse_instance("jobs 2\njob 0 1 0 1\njob 1 1 0 1\nprec 0 1\nprec 1 0\n"), CycleError);
    }
}

TEST_CASE("serialize(parse(x)) reproduces the bundled sample") {
    const std::string text = read_file(std::string(SCHED_DATA_DIR) + "/sample.inst");
    REQUIRE(!text.empty());
    CHECK(serialize_instance(parse_instance(text)) == normalize_whitespace(text));
}

TEST_CASE("parse(serialize(inst)) is the identity on generated instances") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        GeneratorParams gen;
        gen.n = 1 + static_cast<int>(seed % 9);
        gen.edge_prob = 0.3;
        gen.seed = seed;
        const auto inst = generate_random(gen);
        CHECK(parse_instance(serialize_instance(inst)) == inst);
    }
    const auto frac = make_instance({{0.1, 1e-3, 12345.678}});
    CHECK(parse_instance(serialize_instance(frac)) == frac);
}

TEST_CASE("generate_random") {
    GeneratorParams gen;
    gen.n = 1;
    gen.seed = 9;
    CHECK(generate_random(gen).size() == 1);

    gen.n = 8;
    gen.edge_prob = 0.3;
    gen.seed = 42;
    const auto a = generate_random(gen);
    CHECK(serialize_instance(a) == serialize_instance(generate_random(gen)));
    CHECK(closure_monotone(a));
    for (const auto &job : a.jobs) {
        CHECK(job.p == std::floor(job.p));
        CHECK(job.p <= gen.p_max);
        CHECK(job.w <= gen.w_max);
    }

    gen.seed = 43;
    CHECK(serialize_instance(a) != serialize_instance(generate_random(gen)));
}

TEST_CASE("invariants over generated instances") {
    for (const auto &inst : sched::testing::corpus(60, 500, 1, 9)) {
        CHECK(closure_monotone(inst));
        CHECK(normalize_release_dates(inst) == inst);  // idempotent
        const auto order = topological_order(inst);
        std::vector<int> pos(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
        for (const auto &e : inst.prec) CHECK(pos[static_cast<std::size_t>(e.before)] < pos[static_cast<std::size_t>(e.after)]);
    }
}

TEST_CASE("format_number is shortest round-trip") {
    CHECK(format_number(5.0) == "5");
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(2.5414940825367984) == "2.5414940825367984");
}
