#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "recon/bench.hpp"
#include "test_util.hpp"

using namespace recon;

namespace {

bool rows_equal_modulo_time(const BenchRecord& a, const BenchRecord& b) {
    return a.algo == b.algo && a.n == b.n && a.delta == b.delta && a.seed == b.seed &&
           a.has_f == b.has_f && (!a.has_f || a.f == b.f) &&
           a.queries_distinct == b.queries_distinct && a.queries_raw == b.queries_raw &&
           a.correct == b.correct && a.has_worst_ratio == b.has_worst_ratio;
}

} // namespace

TEST_CASE("f rules") {
    CHECK(eval_f_rule("const:4", 100) == doctest::Approx(4.0));
    CHECK(eval_f_rule("sqrt", 256) == doctest::Approx(16.0));
    CHECK(eval_f_rule("n/4", 64) == doctest::Approx(16.0));
    CHECK(eval_f_rule("n/128", 64) >= 1.0); // clamped to a legal factor
    CHECK_THROWS_AS(eval_f_rule("const:0.5", 64), std::invalid_argument);
    CHECK_THROWS_AS(eval_f_rule("cube", 64), std::invalid_argument);
}

TEST_CASE("bench rows for an exact algorithm") {
    BenchConfig cfg;
    cfg.algo = "bounded";
    cfg.ns = {16, 24, 32};
    cfg.delta = 4;
    cfg.reps = 2;
    cfg.master_seed = 5;
    auto rows = run_bench(cfg);
    REQUIRE(rows.size() == 6);
    for (const auto& r : rows) {
        CHECK(r.algo == "bounded");
        CHECK(r.correct);
        CHECK(!r.has_f);
        CHECK(!r.has_worst_ratio);
        CHECK(r.queries_distinct > 0);
        CHECK(r.queries_raw >= r.queries_distinct);
    }
    // Same (n, rep) in a different ns order keeps the same seed.
    BenchConfig re = cfg;
    re.ns = {32, 16, 24};
    auto rows2 = run_bench(re);
    for (const auto& r : rows)
        for (const auto& s : rows2)
            if (r.n == s.n && r.seed == s.seed) CHECK(rows_equal_modulo_time(r, s));
}

TEST_CASE("bench rows for the approximation") {
    BenchConfig cfg;
    cfg.algo = "approx";
    cfg.ns = {32, 48};
    cfg.reps = 2;
    cfg.f_rule = "const:4";
    cfg.master_seed = 8;
    auto rows = run_bench(cfg);
    REQUIRE(rows.size() == 4);
    for (const auto& r : rows) {
        CHECK(r.has_f);
        CHECK(r.f == doctest::Approx(4.0));
        CHECK(r.has_worst_ratio);
        CHECK(r.correct); // sandwich verified against ground truth
        CHECK(r.worst_ratio <= 4.0 + 1e-9);
    }
}

TEST_CASE("bench repetition is deterministic") {
    BenchConfig cfg;
    cfg.algo = "outerplanar";
    cfg.ns = {24, 32};
    cfg.reps = 3;
    cfg.master_seed = 77;
    auto a = run_bench(cfg);
    auto b = run_bench(cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(rows_equal_modulo_time(a[i], b[i]));
}

TEST_CASE("csv round trip") {
    BenchConfig cfg;
    cfg.algo = "approx";
    cfg.ns = {24};
    cfg.reps = 2;
    cfg.f_rule = "sqrt";
    cfg.master_seed = 3;
    auto rows = run_bench(cfg);

    std::ostringstream out;
    write_csv(out, rows);
    std::istringstream in(out.str());
    auto back = parse_csv(in);
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows_equal_modulo_time(rows[i], back[i]));
        CHECK(back[i].worst_ratio == doctest::Approx(rows[i].worst_ratio));
    }
    CHECK(out.str().rfind("algo,n,delta,seed,f,queries_distinct,queries_raw,correct,"
                          "worst_ratio,wall_ms\n", 0) == 0);
    CHECK(csv_header() ==
          "algo,n,delta,seed,f,queries_distinct,queries_raw,correct,worst_ratio,wall_ms");
}

TEST_CASE("csv parser rejects malformed input") {
    std::istringstream bad("algo,n\nbounded,12\n");
    CHECK_THROWS_AS(parse_csv(bad), std::invalid_argument);
}

TEST_CASE("log-log fit recovers planted exponents") {
    auto rows_for = [](double expo) {
        std::vector<BenchRecord> rows;
        for (int n : {64, 128, 256, 512})
            for (int rep = 0; rep < 3; ++rep) {
                BenchRecord r;
                r.algo = "synthetic";
                r.n = n;
                r.queries_distinct =
                    static_cast<std::uint64_t>(std::pow(static_cast<double>(n), expo));
                rows.push_back(r);
            }
        return rows;
    };
    CHECK(fit_loglog(rows_for(2.0)).slope == doctest::Approx(2.0).epsilon(0.01));
    CHECK(fit_loglog(rows_for(1.5)).slope == doctest::Approx(1.5).epsilon(0.01));

    std::vector<BenchRecord> few = rows_for(2.0);
    few.erase(std::remove_if(few.begin(), few.end(),
                             [](const BenchRecord& r) { return r.n > 128; }),
              few.end());
    CHECK_THROWS_AS(fit_loglog(few), std::invalid_argument);
}

TEST_CASE("command line binary round trip") {
    // The test runner starts in the build directory, next to the binary.
    if (std::system("./recon --help > cli_help.txt 2>&1") != 0) {
        FAIL("recon binary not runnable from the test working directory");
        return;
    }
    int rc = std::system(
        "./recon gen --type outerplanar --n 40 --delta 4 --seed 3 --out cli_g.txt "
        "> /dev/null 2>&1");
    CHECK(rc == 0);
    rc = std::system(
        "./recon reconstruct --in cli_g.txt --algo outerplanar --seed 1 "
        "--json-out cli_rep.json > /dev/null 2>&1");
    CHECK(rc == 0);
    rc = std::system(
        "./recon bench --algo bounded --n 16,24,32 --reps 2 --seed 4 --out cli_bench.csv "
        "> /dev/null 2>&1");
    CHECK(rc == 0);
    rc = std::system("./recon fit --in cli_bench.csv > /dev/null 2>&1");
    CHECK(rc == 0);
    rc = std::system(
        "./recon approx --in cli_g.txt --f 4 --seed 2 --json-out cli_apx.json "
        "> /dev/null 2>&1");
    CHECK(rc == 0);
}
