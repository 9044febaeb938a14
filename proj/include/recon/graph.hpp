#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace recon {

// Input that fails a structural precondition (disconnected graph, bad vertex
// id, malformed file, ...).
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An algorithm observed oracle answers inconsistent with the graph class it
// assumes. Distinct from validation_error so callers can tell "bad input"
// apart from "input outside the supported class".
class structural_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("make_edge: self loop");
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Normalized edge collection; the comparison operators make reconstruction
// results directly checkable against ground truth.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(const std::vector<Edge>& edges) {
        for (const auto& [u, v] : edges) add(u, v);
    }

    void add(int u, int v) { edges_.insert(make_edge(u, v)); }
    bool contains(int u, int v) const { return edges_.count(make_edge(u, v)) > 0; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    std::vector<Edge> pairs() const { return {edges_.begin(), edges_.end()}; }

    bool operator==(const EdgeSet& other) const { return edges_ == other.edges_; }
    bool operator!=(const EdgeSet& other) const { return !(*this == other); }

    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }

private:
    std::set<Edge> edges_;
};

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edges);

    int n() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const;
    bool has_edge(int u, int v) const;
    EdgeSet edge_set() const;
    bool is_connected() const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<int>> adj_;
};

// All-pairs hop distances, stored flat. Entries are >= 0 because the matrix
// is only built for connected graphs.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<std::int32_t> flat);

    int n() const { return n_; }
    std::int32_t at(int u, int v) const;

private:
    int n_ = 0;
    std::vector<std::int32_t> flat_;
};

// BFS hop distances from src; throws validation_error if some vertex is
// unreachable.
std::vector<int> bfs_distances(const Graph& g, int src);

DistanceMatrix all_pairs_distances(const Graph& g);

// Connected components of the subgraph induced by `within` minus vertex v.
// Each component is sorted ascending; components are ordered by smallest
// element. v must belong to `within`.
std::vector<std::vector<int>> components_after_removal(const Graph& g, int v,
                                                       const std::vector<int>& within);

// Every shortest a-b path, each as a vertex sequence starting at a. Intended
// for small test graphs: refuses n > 24 and caps the path count at 1e6.
std::vector<std::vector<int>> enumerate_all_shortest_paths(const Graph& g, int a, int b);

// Text format: first non-comment line "n m", then m lines "u v". '#' starts
// a comment. save_graph emits edges sorted, so output is canonical.
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);
void save_graph(const Graph& g, std::ostream& out);
void save_graph_file(const Graph& g, const std::string& path);

} // namespace recon
