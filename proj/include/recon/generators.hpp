#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "recon/graph.hpp"
#include "recon/rng.hpp"

namespace recon {

// Random connected graph with max degree <= delta: a degree-capped random
// recursive tree plus n random extra-edge attempts.
Graph gen_bounded_degree(int n, int delta, std::uint64_t seed);

// Uniform random recursive tree (no degree cap).
Graph gen_tree(int n, std::uint64_t seed);

// Construction witness for gen_outerplanar, enough to re-check the claimed
// structure without a planarity test: an outer cycle (vertex ids in cyclic
// order, empty when the draw degenerated to a tree), pairwise non-crossing
// chords given as cycle positions, and the attached tree edges.
struct OuterplanarCert {
    std::vector<int> cycle;
    std::vector<std::pair<int, int>> chord_positions; // pos_a < pos_b on cycle
    std::vector<Edge> tree_edges;
};

// Random connected outerplanar graph with max degree <= delta: a random outer
// cycle, random non-crossing chords, and remaining vertices attached as
// pendant trees. With delta == 2 the draw is a path or a pure cycle.
Graph gen_outerplanar(int n, int delta, std::uint64_t seed, OuterplanarCert* cert = nullptr);

// f uniform random permutations of {0,...,k-1}.
std::vector<std::vector<int>> random_permutations(int f, int k, std::uint64_t seed);

// Layered tree on 1 + 2fk vertices used for query lower-bound experiments:
// root 0, then 2f levels of k vertices each. Levels up to f are wired
// straight through; level f+l connects to level f+l+1 through perms[l-1].
// Vertex ids: level l (2 <= l <= 2f+1) holds (l-2)k+1 .. (l-1)k.
Graph gen_lower_bound_tree(int f, int k, const std::vector<std::vector<int>>& perms,
                           bool include_root_edges = true);

struct ValidationReport {
    bool ok = false;
    bool connected = false;
    int max_degree = 0;
    bool degree_ok = false;
    bool edge_bound_ok = true; // only checked when outerplanar_bound is set
    std::vector<std::string> messages;
};

// Non-throwing structural checks: connectivity, degree bound, and (optional)
// the outerplanar edge bound m <= 2n - 3.
ValidationReport validate(const Graph& g, int delta, bool outerplanar_bound = false);

enum class GenKind { BoundedDegree, Outerplanar, Tree, LowerBoundTree };

std::string gen_kind_name(GenKind kind);
GenKind gen_kind_from_name(const std::string& name);

struct GenSpec {
    GenKind kind = GenKind::BoundedDegree;
    int n = 0;
    int delta = 3;
    int f = 1; // LowerBoundTree only
    int k = 1; // LowerBoundTree only
};

// Dispatches to the matching generator. For LowerBoundTree the permutations
// are drawn from the seed and n is 1 + 2fk regardless of spec.n.
Graph generate(const GenSpec& spec, std::uint64_t seed);

} // namespace recon
