#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

// Benchmark plumbing: run a reconstruction algorithm over generated instances
// and collect per-run query counts, plus the log-log scaling fit.

namespace recon {

// An exact algorithm produced the wrong edge set; carries the offending seed.
struct reconstruction_mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BenchRecord {
    std::string algo;
    int n = 0;
    int delta = 0;
    std::uint64_t seed = 0;
    double f = 0.0;
    bool has_f = false;
    std::uint64_t queries_distinct = 0;
    std::uint64_t queries_raw = 0;
    bool correct = false;
    double worst_ratio = 0.0;
    bool has_worst_ratio = false;
    double wall_ms = 0.0;
};

struct BenchConfig {
    std::string algo;  // bounded | outerplanar | exhaustive | approx
    std::vector<int> ns;
    int delta = 4;
    int reps = 10;
    std::string f_rule = "sqrt";  // approx only: const:<k> | sqrt | n/<k>
    std::uint64_t master_seed = 0;
};

// const:<k> -> k; sqrt -> sqrt(n); n/<k> -> n/k.
double eval_f_rule(const std::string& rule, int n);

// One record per (n, rep); the per-row seed depends only on (master, n, rep),
// never on execution order.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

std::string csv_header();
std::string csv_row(const BenchRecord& rec);
void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);
std::vector<BenchRecord> parse_csv(std::istream& in);

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;  // in log2 space
    std::vector<int> ns_used;
};

// Least squares of log2(per-n median distinct queries) against log2(n);
// needs at least three distinct n values.
FitResult fit_loglog(const std::vector<BenchRecord>& records);

}  // namespace recon
