#include "recon/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "recon/approx.hpp"
#include "recon/bounded.hpp"
#include "recon/generators.hpp"
#include "recon/outerplanar.hpp"

namespace recon {

namespace {

// Shortest representation that parses back to the same double, so a CSV
// written and re-read compares equal field for field.
std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

BenchRecord run_row(const BenchConfig& cfg, int n, std::uint64_t row_seed) {
    BenchRecord rec;
    rec.algo = cfg.algo;
    rec.n = n;
    rec.delta = cfg.delta;
    rec.seed = row_seed;

    const bool outer = cfg.algo == "outerplanar";
    const Graph g = outer ? gen_outerplanar(n, cfg.delta, row_seed)
                          : gen_bounded_degree(n, cfg.delta, row_seed);
    const DistanceMatrix truth = all_pairs_distances(g);
    CountingOracle o(truth);
    Rng rng(mix_seed(row_seed, 1));

    if (cfg.algo == "bounded") {
        rec.correct = reconstruct_bounded_degree(o, CenterConfig{}, rng) == g.edge_set();
    } else if (cfg.algo == "outerplanar") {
        rec.correct = reconstruct_outerplanar(o, n, BalancedPartitionConfig{}, rng) == g.edge_set();
    } else if (cfg.algo == "exhaustive") {
        rec.correct = exhaustive_reconstruct(o, range_set(n)) == g.edge_set();
    } else if (cfg.algo == "approx") {
        rec.f = eval_f_rule(cfg.f_rule, n);
        rec.has_f = true;
        const ApproxMetric am = approx_reconstruct(o, n, rec.f, rng);
        const ApproxReport rep = verify_approx(am, truth);
        rec.correct = rep.ok;
        rec.worst_ratio = rep.worst_ratio;
        rec.has_worst_ratio = true;
    } else {
        throw std::invalid_argument("unknown bench algorithm: " + cfg.algo);
    }

    const QueryStats st = o.stats();
    rec.queries_distinct = st.distinct;
    rec.queries_raw = st.raw;
    rec.wall_ms = st.wall_ms;
    if (!rec.correct && cfg.algo != "approx")
        throw reconstruction_mismatch("wrong edge set from '" + cfg.algo +
                                      "' on n=" + std::to_string(n) +
                                      " seed=" + std::to_string(row_seed));
    return rec;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2.0;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

double eval_f_rule(const std::string& rule, int n) {
    if (rule == "sqrt") return std::sqrt(static_cast<double>(n));
    if (rule.rfind("const:", 0) == 0) {
        const double k = std::stod(rule.substr(6));
        if (k < 1.0) throw std::invalid_argument("constant factor must be at least 1");
        return k;
    }
    if (rule.rfind("n/", 0) == 0) {
        const double k = std::stod(rule.substr(2));
        if (k <= 0.0) throw std::invalid_argument("divisor must be positive");
        return std::max(1.0, static_cast<double>(n) / k);
    }
    throw std::invalid_argument("unknown f rule: " + rule);
}

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
    if (cfg.ns.empty()) throw std::invalid_argument("bench needs at least one n");
    if (cfg.reps < 1) throw std::invalid_argument("bench needs at least one rep");
    std::vector<BenchRecord> out;
    for (int n : cfg.ns)
        for (int rep = 0; rep < cfg.reps; ++rep)
            out.push_back(run_row(cfg, n,
                                  mix_seed(mix_seed(cfg.master_seed, static_cast<std::uint64_t>(n)),
                                           static_cast<std::uint64_t>(rep))));
    return out;
}

std::string csv_header() {
    return "algo,n,delta,seed,f,queries_distinct,queries_raw,correct,worst_ratio,wall_ms";
}

std::string csv_row(const BenchRecord& rec) {
    std::ostringstream os;
    os << rec.algo << ',' << rec.n << ',' << rec.delta << ',' << rec.seed << ','
       << (rec.has_f ? format_double(rec.f) : "") << ',' << rec.queries_distinct << ','
       << rec.queries_raw << ',' << (rec.correct ? 1 : 0) << ','
       << (rec.has_worst_ratio ? format_double(rec.worst_ratio) : "") << ',' << std::fixed
       << std::setprecision(3) << rec.wall_ms;
    return os.str();
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << csv_header() << '\n';
    for (const auto& rec : records) out << csv_row(rec) << '\n';
}

std::vector<BenchRecord> parse_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != csv_header())
        throw std::invalid_argument("unrecognized csv header");
    std::vector<BenchRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 10) throw std::invalid_argument("bad csv row: " + line);
        BenchRecord rec;
        rec.algo = fields[0];
        rec.n = std::stoi(fields[1]);
        rec.delta = std::stoi(fields[2]);
        rec.seed = std::stoull(fields[3]);
        if (!fields[4].empty()) {
            rec.f = std::stod(fields[4]);
            rec.has_f = true;
        }
        rec.queries_distinct = std::stoull(fields[5]);
        rec.queries_raw = std::stoull(fields[6]);
        rec.correct = fields[7] == "1" || fields[7] == "true";
        if (!fields[8].empty()) {
            rec.worst_ratio = std::stod(fields[8]);
            rec.has_worst_ratio = true;
        }
        rec.wall_ms = std::stod(fields[9]);
        out.push_back(std::move(rec));
    }
    return out;
}

FitResult fit_loglog(const std::vector<BenchRecord>& records) {
    std::map<int, std::vector<double>> by_n;
    for (const auto& rec : records)
        by_n[rec.n].push_back(static_cast<double>(rec.queries_distinct));
    if (by_n.size() < 3)
        throw std::invalid_argument("scaling fit needs at least three distinct n values");
    FitResult fit;
    std::vector<double> xs, ys;
    for (auto& [n, qs] : by_n) {
        fit.ns_used.push_back(n);
        xs.push_back(std::log2(static_cast<double>(n)));
        ys.push_back(std::log2(median(std::move(qs))));
    }
    const double k = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    fit.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / k;
    return fit;
}

}  // namespace recon
