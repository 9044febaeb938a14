#include "recon/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace recon {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 0) throw validation_error("graph: negative vertex count");
    adj_.assign(static_cast<std::size_t>(n), {});
    std::set<Edge> seen;
    for (const auto& [a, b] : edges) {
        if (a == b) throw validation_error("graph: self loop at vertex " + std::to_string(a));
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw validation_error("graph: edge endpoint out of range: " + std::to_string(a) +
                                   " " + std::to_string(b));
        Edge e = make_edge(a, b);
        if (!seen.insert(e).second)
            throw validation_error("graph: duplicate edge " + std::to_string(e.first) + " " +
                                   std::to_string(e.second));
        adj_[static_cast<std::size_t>(e.first)].push_back(e.second);
        adj_[static_cast<std::size_t>(e.second)].push_back(e.first);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    edge_count_ = seen.size();
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("graph: vertex " + std::to_string(v) + " out of range");
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nbrs = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

EdgeSet Graph::edge_set() const {
    EdgeSet es;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) es.add(u, v);
    return es;
}

bool Graph::is_connected() const {
    if (n_ == 0) return false;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::deque<int> q{0};
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : adj_[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                q.push_back(v);
            }
        }
    }
    return reached == n_;
}

DistanceMatrix::DistanceMatrix(int n, std::vector<std::int32_t> flat)
    : n_(n), flat_(std::move(flat)) {
    if (n < 0 || flat_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw validation_error("distance matrix: size mismatch");
}

std::int32_t DistanceMatrix::at(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("distance matrix: vertex out of range");
    return flat_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(v)];
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    if (src < 0 || src >= g.n()) throw std::invalid_argument("bfs: source out of range");
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    std::deque<int> q{src};
    dist[static_cast<std::size_t>(src)] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push_back(v);
            }
        }
    }
    for (int v = 0; v < g.n(); ++v)
        if (dist[static_cast<std::size_t>(v)] < 0)
            throw validation_error("bfs: vertex " + std::to_string(v) + " unreachable from " +
                                   std::to_string(src));
    return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    int n = g.n();
    if (n == 0) throw validation_error("all_pairs_distances: empty graph");
    std::vector<std::int32_t> flat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
        auto dist = bfs_distances(g, u);
        for (int v = 0; v < n; ++v)
            flat[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(v)] = static_cast<std::int32_t>(dist[static_cast<std::size_t>(v)]);
    }
    return DistanceMatrix(n, std::move(flat));
}

std::vector<std::vector<int>> components_after_removal(const Graph& g, int v,
                                                       const std::vector<int>& within) {
    std::vector<char> in_set(static_cast<std::size_t>(g.n()), 0);
    for (int u : within) {
        if (u < 0 || u >= g.n())
            throw std::invalid_argument("components_after_removal: vertex out of range");
        in_set[static_cast<std::size_t>(u)] = 1;
    }
    if (v < 0 || v >= g.n() || !in_set[static_cast<std::size_t>(v)])
        throw std::invalid_argument("components_after_removal: pivot not in set");
    in_set[static_cast<std::size_t>(v)] = 0;

    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    std::vector<std::vector<int>> comps;
    std::vector<int> sorted_within = within;
    std::sort(sorted_within.begin(), sorted_within.end());
    for (int s : sorted_within) {
        if (s == v || seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> comp;
        std::deque<int> q{s};
        seen[static_cast<std::size_t>(s)] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            comp.push_back(u);
            for (int w : g.neighbors(u)) {
                if (in_set[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    q.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

namespace {

void extend_paths(const Graph& g, const std::vector<int>& dist_to_b, int b,
                  std::vector<int>& path, std::vector<std::vector<int>>& out) {
    constexpr std::size_t kPathCap = 1000000;
    int u = path.back();
    if (u == b) {
        if (out.size() >= kPathCap)
            throw validation_error("enumerate_all_shortest_paths: too many paths");
        out.push_back(path);
        return;
    }
    for (int w : g.neighbors(u)) {
        if (dist_to_b[static_cast<std::size_t>(w)] ==
            dist_to_b[static_cast<std::size_t>(u)] - 1) {
            path.push_back(w);
            extend_paths(g, dist_to_b, b, path, out);
            path.pop_back();
        }
    }
}

} // namespace

std::vector<std::vector<int>> enumerate_all_shortest_paths(const Graph& g, int a, int b) {
    if (g.n() > 24)
        throw validation_error("enumerate_all_shortest_paths: graph too large");
    if (a < 0 || a >= g.n() || b < 0 || b >= g.n())
        throw std::invalid_argument("enumerate_all_shortest_paths: vertex out of range");
    auto dist_to_b = bfs_distances(g, b);
    std::vector<std::vector<int>> out;
    std::vector<int> path{a};
    extend_paths(g, dist_to_b, b, path, out);
    return out;
}

Graph load_graph(std::istream& in) {
    auto next_line = [&in](std::string& line) -> bool {
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            auto non_ws = line.find_first_not_of(" \t\r\n");
            if (non_ws == std::string::npos) continue;
            return true;
        }
        return false;
    };

    std::string line;
    if (!next_line(line)) throw validation_error("load_graph: missing header line");
    std::istringstream hdr(line);
    long long n = 0, m = 0;
    if (!(hdr >> n >> m) || n < 0 || m < 0)
        throw validation_error("load_graph: bad header: " + line);
    std::string extra;
    if (hdr >> extra) throw validation_error("load_graph: trailing data in header: " + line);

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_line(line))
            throw validation_error("load_graph: expected " + std::to_string(m) +
                                   " edges, got " + std::to_string(i));
        std::istringstream es(line);
        long long u = 0, v = 0;
        if (!(es >> u >> v)) throw validation_error("load_graph: bad edge line: " + line);
        if (es >> extra) throw validation_error("load_graph: trailing data in edge line: " + line);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_line(line)) throw validation_error("load_graph: trailing data after edges: " + line);
    return Graph(static_cast<int>(n), edges);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw validation_error("load_graph: cannot open " + path);
    return load_graph(f);
}

void save_graph(const Graph& g, std::ostream& out) {
    auto edges = g.edge_set().pairs();
    out << g.n() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

void save_graph_file(const Graph& g, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw validation_error("save_graph: cannot open " + path);
    save_graph(g, f);
    if (!f) throw validation_error("save_graph: write failed for " + path);
}

} // namespace recon
