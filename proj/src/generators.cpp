#include "recon/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace recon {

namespace {

void check_n(int n) {
    if (n < 1) throw std::invalid_argument("generator: n must be >= 1");
}

void check_feasible(int n, int delta) {
    check_n(n);
    if (n == 2 && delta < 1)
        throw std::invalid_argument("generator: n=2 needs delta >= 1");
    if (n >= 3 && delta < 2)
        throw std::invalid_argument("generator: n >= 3 needs delta >= 2");
}

// Degree-capped random recursive tree: every new vertex picks a uniform
// parent among earlier vertices that still have spare degree. A parent always
// exists when delta >= 2 because the last-added vertex has degree 1.
std::vector<Edge> capped_tree_edges(int n, int delta, Rng& rng, std::vector<int>& deg) {
    std::vector<Edge> edges;
    deg.assign(static_cast<std::size_t>(n), 0);
    for (int v = 1; v < n; ++v) {
        std::vector<int> eligible;
        for (int u = 0; u < v; ++u)
            if (deg[static_cast<std::size_t>(u)] < delta) eligible.push_back(u);
        if (eligible.empty())
            throw std::invalid_argument("generator: degree bound too tight for a tree");
        int parent = eligible[rng.index(eligible.size())];
        edges.push_back(make_edge(parent, v));
        ++deg[static_cast<std::size_t>(parent)];
        ++deg[static_cast<std::size_t>(v)];
    }
    return edges;
}

std::vector<int> random_permutation(int k, Rng& rng) {
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    for (int i = k - 1; i > 0; --i) {
        int j = rng.uniform_int(0, i);
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
    }
    return p;
}

// Chords are kept as cycle positions with pos_a < pos_b. Two chords cross iff
// exactly one endpoint of the second lies strictly inside the first's arc.
bool chords_cross(const std::pair<int, int>& a, const std::pair<int, int>& b) {
    auto inside = [&a](int p) { return p > a.first && p < a.second; };
    return inside(b.first) != inside(b.second);
}

} // namespace

Graph gen_bounded_degree(int n, int delta, std::uint64_t seed) {
    check_feasible(n, delta);
    Rng rng(mix_seed(seed, 0xb0d1));
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edges;
    if (n > 1) edges = capped_tree_edges(n, delta, rng, deg);
    std::set<Edge> have(edges.begin(), edges.end());
    for (int attempt = 0; attempt < n; ++attempt) {
        int u = static_cast<int>(rng.index(static_cast<std::size_t>(n)));
        int v = static_cast<int>(rng.index(static_cast<std::size_t>(n)));
        if (u == v) continue;
        Edge e = make_edge(u, v);
        if (have.count(e)) continue;
        if (deg[static_cast<std::size_t>(u)] >= delta || deg[static_cast<std::size_t>(v)] >= delta)
            continue;
        have.insert(e);
        edges.push_back(e);
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    return Graph(n, edges);
}

Graph gen_tree(int n, std::uint64_t seed) {
    check_n(n);
    Rng rng(mix_seed(seed, 0x7ee));
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
        edges.push_back(make_edge(static_cast<int>(rng.index(static_cast<std::size_t>(v))), v));
    return Graph(n, edges);
}

Graph gen_outerplanar(int n, int delta, std::uint64_t seed, OuterplanarCert* cert) {
    check_feasible(n, delta);
    Rng rng(mix_seed(seed, 0x0d7e));
    OuterplanarCert local;
    OuterplanarCert& c = cert ? *cert : local;
    c = OuterplanarCert{};

    if (n == 1) return Graph(1, {});

    int r;
    if (delta == 2) {
        // Only paths and pure cycles fit the bound; anything attached to a
        // cycle would push some vertex to degree 3.
        r = (n >= 3 && rng.bernoulli(0.5)) ? n : 2;
    } else {
        r = rng.uniform_int(2, n);
    }

    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edges;

    if (r < 3) {
        // Degenerate draw: plain tree.
        edges = capped_tree_edges(n, delta, rng, deg);
        c.tree_edges = edges;
        return Graph(n, edges);
    }

    std::vector<int> perm = random_permutation(n, rng);
    c.cycle.assign(perm.begin(), perm.begin() + r);
    std::set<Edge> have;
    for (int i = 0; i < r; ++i) {
        Edge e = make_edge(c.cycle[static_cast<std::size_t>(i)],
                           c.cycle[static_cast<std::size_t>((i + 1) % r)]);
        edges.push_back(e);
        have.insert(e);
        ++deg[static_cast<std::size_t>(e.first)];
        ++deg[static_cast<std::size_t>(e.second)];
    }

    for (int attempt = 0; attempt < 2 * n; ++attempt) {
        int i = static_cast<int>(rng.index(static_cast<std::size_t>(r)));
        int j = static_cast<int>(rng.index(static_cast<std::size_t>(r)));
        if (i > j) std::swap(i, j);
        if (j - i < 2 || (i == 0 && j == r - 1)) continue; // cycle edge or self
        int u = c.cycle[static_cast<std::size_t>(i)];
        int v = c.cycle[static_cast<std::size_t>(j)];
        if (deg[static_cast<std::size_t>(u)] >= delta || deg[static_cast<std::size_t>(v)] >= delta)
            continue;
        Edge e = make_edge(u, v);
        if (have.count(e)) continue;
        std::pair<int, int> pos{i, j};
        bool crosses = false;
        for (const auto& existing : c.chord_positions)
            if (chords_cross(existing, pos)) {
                crosses = true;
                break;
            }
        if (crosses) continue;
        c.chord_positions.push_back(pos);
        edges.push_back(e);
        have.insert(e);
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }

    // Remaining vertices hang off the existing structure as pendant trees,
    // which preserves outerplanarity.
    std::vector<int> placed(c.cycle);
    for (int idx = r; idx < n; ++idx) {
        int v = perm[static_cast<std::size_t>(idx)];
        std::vector<int> eligible;
        for (int u : placed)
            if (deg[static_cast<std::size_t>(u)] < delta) eligible.push_back(u);
        if (eligible.empty())
            throw validation_error("gen_outerplanar: no attachment host with spare degree");
        int host = eligible[rng.index(eligible.size())];
        Edge e = make_edge(host, v);
        edges.push_back(e);
        c.tree_edges.push_back(e);
        ++deg[static_cast<std::size_t>(host)];
        ++deg[static_cast<std::size_t>(v)];
        placed.push_back(v);
    }

    return Graph(n, edges);
}

std::vector<std::vector<int>> random_permutations(int f, int k, std::uint64_t seed) {
    if (f < 0 || k < 1) throw std::invalid_argument("random_permutations: need f >= 0, k >= 1");
    Rng rng(mix_seed(seed, 0x9e45));
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(f));
    for (int i = 0; i < f; ++i) out.push_back(random_permutation(k, rng));
    return out;
}

Graph gen_lower_bound_tree(int f, int k, const std::vector<std::vector<int>>& perms,
                           bool include_root_edges) {
    if (f < 1 || k < 1) throw std::invalid_argument("gen_lower_bound_tree: need f >= 1, k >= 1");
    if (perms.size() != static_cast<std::size_t>(f))
        throw std::invalid_argument("gen_lower_bound_tree: need exactly f permutations");
    for (const auto& p : perms) {
        if (p.size() != static_cast<std::size_t>(k))
            throw std::invalid_argument("gen_lower_bound_tree: permutation size != k");
        std::vector<char> seen(static_cast<std::size_t>(k), 0);
        for (int x : p) {
            if (x < 0 || x >= k || seen[static_cast<std::size_t>(x)])
                throw std::invalid_argument("gen_lower_bound_tree: not a permutation of 0..k-1");
            seen[static_cast<std::size_t>(x)] = 1;
        }
    }

    int n = 1 + 2 * f * k;
    // i-th vertex of level l, levels 2 .. 2f+1
    auto vert = [k](int l, int i) { return (l - 2) * k + 1 + i; };

    std::vector<Edge> edges;
    if (include_root_edges)
        for (int i = 0; i < k; ++i) edges.push_back(make_edge(0, vert(2, i)));
    for (int l = 2; l <= 2 * f; ++l) {
        for (int i = 0; i < k; ++i) {
            int j = l <= f ? i : perms[static_cast<std::size_t>(l - f - 1)][static_cast<std::size_t>(i)];
            edges.push_back(make_edge(vert(l, i), vert(l + 1, j)));
        }
    }
    return Graph(n, edges);
}

ValidationReport validate(const Graph& g, int delta, bool outerplanar_bound) {
    ValidationReport r;
    r.connected = g.is_connected();
    if (!r.connected) r.messages.push_back("graph is not connected");
    r.max_degree = g.max_degree();
    r.degree_ok = r.max_degree <= delta;
    if (!r.degree_ok)
        r.messages.push_back("max degree " + std::to_string(r.max_degree) + " exceeds bound " +
                             std::to_string(delta));
    if (outerplanar_bound) {
        std::size_t bound = g.n() >= 2 ? static_cast<std::size_t>(2 * g.n() - 3) : 0;
        r.edge_bound_ok = g.edge_count() <= bound;
        if (!r.edge_bound_ok)
            r.messages.push_back("edge count " + std::to_string(g.edge_count()) +
                                 " exceeds outerplanar bound " + std::to_string(bound));
    }
    r.ok = r.connected && r.degree_ok && r.edge_bound_ok;
    return r;
}

std::string gen_kind_name(GenKind kind) {
    switch (kind) {
    case GenKind::BoundedDegree: return "bounded";
    case GenKind::Outerplanar: return "outerplanar";
    case GenKind::Tree: return "tree";
    case GenKind::LowerBoundTree: return "lower_bound";
    }
    throw std::invalid_argument("gen_kind_name: bad kind");
}

GenKind gen_kind_from_name(const std::string& name) {
    if (name == "bounded") return GenKind::BoundedDegree;
    if (name == "outerplanar") return GenKind::Outerplanar;
    if (name == "tree") return GenKind::Tree;
    if (name == "lower_bound" || name == "lowerbound") return GenKind::LowerBoundTree;
    throw std::invalid_argument("unknown generator kind: " + name);
}

Graph generate(const GenSpec& spec, std::uint64_t seed) {
    switch (spec.kind) {
    case GenKind::BoundedDegree: return gen_bounded_degree(spec.n, spec.delta, seed);
    case GenKind::Outerplanar: return gen_outerplanar(spec.n, spec.delta, seed);
    case GenKind::Tree: return gen_tree(spec.n, seed);
    case GenKind::LowerBoundTree:
        return gen_lower_bound_tree(spec.f, spec.k,
                                    random_permutations(spec.f, spec.k, mix_seed(seed, 0x10b7)));
    }
    throw std::invalid_argument("generate: bad kind");
}

} // namespace recon
