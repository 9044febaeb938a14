#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "recon/graph.hpp"
#include "recon/vertex_set.hpp"

namespace recon {

struct QueryStats {
    std::uint64_t raw = 0;      // every query() call
    std::uint64_t distinct = 0; // distinct unordered pairs u != v
    double wall_ms = 0.0;       // elapsed since oracle construction
};

// Answers hop-distance queries against a hidden graph and counts them.
// Reconstruction cost is measured in distinct unordered pairs: repeats and
// self-queries increment only the raw counter. Algorithms receive this class
// by reference and have no other route to the graph.
class CountingOracle {
public:
    explicit CountingOracle(DistanceMatrix dist);

    int n() const { return dist_.n(); }
    int query(int u, int v);

    // Convenience loop over query(); same counting rules apply.
    std::map<std::pair<int, int>, int> query_batch(const VertexSet& us, const VertexSet& vs);

    QueryStats stats() const;

private:
    DistanceMatrix dist_;
    std::vector<std::uint64_t> asked_; // triangular bitset over unordered pairs
    std::uint64_t raw_ = 0;
    std::uint64_t distinct_ = 0;
    std::int64_t start_ns_ = 0;
};

} // namespace recon
