#pragma once

#include <cstdint>
#include <vector>

#include "recon/graph.hpp"
#include "recon/oracle.hpp"
#include "recon/rng.hpp"
#include "recon/vertex_set.hpp"

// Reconstruction of connected outerplanar graphs through a distance oracle.
// Every routine here works on a self-contained vertex set (closed under
// shortest paths between its members), so global distances coincide with
// distances inside the induced subgraph.

namespace recon {

struct NodePartition {
    int pivot = -1;
    // Each part = one component after removing the pivot, plus the pivot
    // itself.  Ordered by smallest non-pivot member.
    std::vector<VertexSet> parts;
};

// Both sides contain x and y; everything else appears on exactly one side.
struct EdgeSides {
    VertexSet side_a;
    VertexSet side_b;
};

struct Polygon {
    // Induced cycle; cycle[0] = x, cycle[1] = y_i, cycle.back() = y_{i+1}.
    std::vector<int> cycle;
};

struct PolygonPartition {
    std::vector<VertexSet> outgrowths;  // outgrowths[i] hangs at cycle[i]
    std::vector<VertexSet> strips;      // strips[i] lies between cycle[i], cycle[i+1 mod l]
};

struct BalancedPartitionConfig {
    double beta = 0.9;                // balance bound, valid range (0.7, 1)
    double sampling_constant = 10.0;  // path samples per round: ceil(c * ln|U|)
    int max_samplings = 50;           // rounds before the balance bound is relaxed
};

struct BalancedPartitionStats {
    uint64_t attempts = 0;     // sampling rounds started
    uint64_t successes = 0;    // rounds that produced a partition
    uint64_t relaxations = 0;  // times the balance bound was loosened
};

std::vector<int> shortest_path(CountingOracle& o, int a, int b, const VertexSet& u);

NodePartition partition_by_node(CountingOracle& o, int x, const VertexSet& u);

// Neighbors of x listed along the outer boundary; unique up to reversal, the
// returned order starts at the lowest-id endpoint.  x must not be a cut
// vertex of the subgraph on u.
std::vector<int> neighbors_in_order(CountingOracle& o, int x, const VertexSet& u);

EdgeSides partition_by_edge(CountingOracle& o, int x, int y, const VertexSet& u);

// The unique induced cycle through edges (x,y1) and (x,y2); y1 and y2 must be
// consecutive neighbors of x along the boundary.
Polygon find_polygon(CountingOracle& o, int x, int y1, int y2, const VertexSet& u);

PolygonPartition partition_by_polygon(CountingOracle& o, const Polygon& poly, const VertexSet& u);

// Splits u (|u| >= 10) into self-contained parts, each of size <= beta*|u|,
// that together cover every edge inside u.
std::vector<VertexSet> balanced_partition(CountingOracle& o, const VertexSet& u,
                                          const BalancedPartitionConfig& cfg, Rng& rng,
                                          BalancedPartitionStats* stats = nullptr);

EdgeSet exhaustive_reconstruct(CountingOracle& o, const VertexSet& u);

EdgeSet reconstruct_outerplanar(CountingOracle& o, int n, const BalancedPartitionConfig& cfg,
                                Rng& rng, BalancedPartitionStats* stats = nullptr);

}  // namespace recon
