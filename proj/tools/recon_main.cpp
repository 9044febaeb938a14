#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "recon/approx.hpp"
#include "recon/bench.hpp"
#include "recon/bounded.hpp"
#include "recon/generators.hpp"
#include "recon/outerplanar.hpp"

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("RECON_MASTER_SEED")) return std::stoull(env);
    return 0;
}

void emit_report(const json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << report.dump(2) << '\n';
    }
}

int cmd_gen(const std::string& type, int n, int delta, int f, int k, std::uint64_t seed,
            const std::string& out_path) {
    recon::GenSpec spec;
    spec.kind = recon::gen_kind_from_name(type);
    spec.n = n;
    spec.delta = delta;
    spec.f = f;
    spec.k = k;
    const recon::Graph g = recon::generate(spec, seed);
    recon::save_graph_file(g, out_path);
    std::cout << "n=" << g.n() << " m=" << g.edge_count() << " max_degree=" << g.max_degree()
              << '\n';
    return 0;
}

int cmd_reconstruct(const std::string& in_path, const std::string& algo, std::uint64_t seed,
                    const recon::CenterConfig& ccfg, const recon::BalancedPartitionConfig& bcfg,
                    const std::string& json_out) {
    const recon::Graph g = recon::load_graph_file(in_path);
    recon::CountingOracle o(recon::all_pairs_distances(g));
    recon::Rng rng(seed);

    recon::EdgeSet found;
    json config;
    if (algo == "bounded") {
        found = recon::reconstruct_bounded_degree(o, ccfg, rng);
        config = {{"s", ccfg.s}, {"sampling_constant", ccfg.sampling_constant}};
    } else if (algo == "outerplanar") {
        found = recon::reconstruct_outerplanar(o, g.n(), bcfg, rng);
        config = {{"beta", bcfg.beta},
                  {"sampling_constant", bcfg.sampling_constant},
                  {"max_samplings", bcfg.max_samplings}};
    } else if (algo == "exhaustive") {
        found = recon::exhaustive_reconstruct(o, recon::range_set(g.n()));
        config = json::object();
    } else {
        throw std::invalid_argument("unknown algorithm: " + algo);
    }

    const bool correct = found == g.edge_set();
    const recon::QueryStats st = o.stats();
    emit_report(json{{"schema_version", kSchemaVersion},
                     {"algo", algo},
                     {"n", g.n()},
                     {"seed", seed},
                     {"edges_found", found.size()},
                     {"correct", correct},
                     {"queries_distinct", st.distinct},
                     {"queries_raw", st.raw},
                     {"wall_ms", st.wall_ms},
                     {"config", config}},
                json_out);
    return correct ? 0 : 3;
}

int cmd_approx(const std::string& in_path, double f, std::uint64_t seed,
               const std::string& json_out) {
    const recon::Graph g = recon::load_graph_file(in_path);
    const recon::DistanceMatrix truth = recon::all_pairs_distances(g);
    recon::CountingOracle o(truth);
    recon::Rng rng(seed);
    const recon::ApproxMetric am = recon::approx_reconstruct(o, g.n(), f, rng);
    const recon::ApproxReport rep = recon::verify_approx(am, truth);
    const recon::QueryStats st = o.stats();
    emit_report(json{{"schema_version", kSchemaVersion},
                     {"n", g.n()},
                     {"f", f},
                     {"seed", seed},
                     {"ok", rep.ok},
                     {"worst_ratio", rep.worst_ratio},
                     {"violations", rep.violations},
                     {"samples", am.samples},
                     {"queries_distinct", st.distinct},
                     {"queries_raw", st.raw},
                     {"wall_ms", st.wall_ms}},
                json_out);
    return rep.ok ? 0 : 3;
}

int cmd_bench(recon::BenchConfig cfg, const std::string& config_path, const std::string& out_path) {
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw std::runtime_error("cannot read " + config_path);
        const json j = json::parse(in);
        if (j.contains("algo")) cfg.algo = j["algo"].get<std::string>();
        if (j.contains("ns")) cfg.ns = j["ns"].get<std::vector<int>>();
        if (j.contains("delta")) cfg.delta = j["delta"].get<int>();
        if (j.contains("reps")) cfg.reps = j["reps"].get<int>();
        if (j.contains("f_rule")) cfg.f_rule = j["f_rule"].get<std::string>();
        if (j.contains("master_seed")) cfg.master_seed = j["master_seed"].get<std::uint64_t>();
    }
    const auto records = recon::run_bench(cfg);
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    recon::write_csv(out, records);
    std::cout << "wrote " << records.size() << " rows to " << out_path << '\n';
    return 0;
}

int cmd_fit(const std::string& in_path) {
    std::ifstream in(in_path);
    if (!in) throw std::runtime_error("cannot read " + in_path);
    const auto records = recon::parse_csv(in);
    const recon::FitResult fit = recon::fit_loglog(records);
    emit_report(json{{"schema_version", kSchemaVersion},
                     {"slope", fit.slope},
                     {"intercept", fit.intercept},
                     {"ns_used", fit.ns_used},
                     {"rows", records.size()}},
                "");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hidden-graph reconstruction through a pairwise distance oracle"};
    app.require_subcommand(1);

    std::string type = "bounded", out_path, in_path, algo = "bounded", json_out, f_rule = "sqrt";
    std::string config_path;
    int n = 16, delta = 3, lb_f = 1, lb_k = 1, reps = 10;
    double f = 2.0;
    std::uint64_t seed = default_seed();
    recon::CenterConfig ccfg;
    recon::BalancedPartitionConfig bcfg;
    std::vector<int> ns;

    auto* gen = app.add_subcommand("gen", "generate a graph instance");
    gen->add_option("--type", type, "bounded | outerplanar | tree | lowerbound");
    gen->add_option("--n", n, "vertex count");
    gen->add_option("--delta", delta, "max degree");
    gen->add_option("--f", lb_f, "lower-bound family depth parameter");
    gen->add_option("--k", lb_k, "lower-bound family width parameter");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--out", out_path, "output graph file")->required();

    auto* rec = app.add_subcommand("reconstruct", "reconstruct a graph from its oracle");
    rec->add_option("--in", in_path, "graph file")->required();
    rec->add_option("--algo", algo, "bounded | outerplanar | exhaustive");
    rec->add_option("--seed", seed, "random seed");
    rec->add_option("--s", ccfg.s, "center sample size (0 = sqrt(n))");
    rec->add_option("--K", ccfg.sampling_constant, "center retention sampling constant");
    rec->add_option("--beta", bcfg.beta, "balance bound");
    rec->add_option("--C", bcfg.sampling_constant, "path sampling constant");
    rec->add_option("--json-out", json_out, "write the JSON report here instead of stdout");

    auto* apx = app.add_subcommand("approx", "approximate the distance metric");
    apx->add_option("--in", in_path, "graph file")->required();
    apx->add_option("--f", f, "approximation factor (>= 1)");
    apx->add_option("--seed", seed, "random seed");
    apx->add_option("--json-out", json_out, "write the JSON report here instead of stdout");

    auto* ben = app.add_subcommand("bench", "run a benchmark batch to CSV");
    ben->add_option("--algo", algo, "bounded | outerplanar | exhaustive | approx");
    ben->add_option("--n", ns, "vertex counts")->delimiter(',');
    ben->add_option("--delta", delta, "max degree");
    ben->add_option("--reps", reps, "repetitions per n");
    ben->add_option("--f-rule", f_rule, "approx factor rule: const:<k> | sqrt | n/<k>");
    ben->add_option("--seed", seed, "master seed");
    ben->add_option("--config", config_path, "JSON config file (overrides flags)");
    ben->add_option("--out", out_path, "output CSV path")->required();

    auto* fit = app.add_subcommand("fit", "fit a scaling exponent to a bench CSV");
    fit->add_option("--in", in_path, "bench CSV")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(type, n, delta, lb_f, lb_k, seed, out_path);
        if (rec->parsed()) return cmd_reconstruct(in_path, algo, seed, ccfg, bcfg, json_out);
        if (apx->parsed()) return cmd_approx(in_path, f, seed, json_out);
        if (ben->parsed()) {
            recon::BenchConfig cfg;
            cfg.algo = algo;
            cfg.ns = ns;
            cfg.delta = delta;
            cfg.reps = reps;
            cfg.f_rule = f_rule;
            cfg.master_seed = seed;
            return cmd_bench(std::move(cfg), config_path, out_path);
        }
        if (fit->parsed()) return cmd_fit(in_path);
    } catch (const recon::reconstruction_mismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
