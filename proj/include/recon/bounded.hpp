#pragma once

#include "recon/graph.hpp"
#include "recon/oracle.hpp"
#include "recon/rng.hpp"
#include "recon/vertex_set.hpp"

namespace recon {

struct CenterConfig {
    int s = 0;                      // per-round center sample size; 0 -> floor(sqrt(n))
    double sampling_constant = 4.0; // scales the retention sample length
    int max_while_iters = 0;        // safety cap; 0 -> 64 * ceil(ln n)
};

// Result of the center-selection phase: the chosen centers and, for every
// vertex, its exact distance to the nearest center.
struct CenterCover {
    VertexSet centers;
    std::vector<int> dist_to_centers;
};

// Randomized center selection. Repeatedly promotes a small random sample of
// the still-active vertices to centers, then keeps a vertex active only if a
// uniform vertex sample suggests many vertices are still closer to it than to
// every center. Always returns a nonempty center set.
CenterCover modified_center(CountingOracle& o, const CenterConfig& cfg, Rng& rng);

// Recovers the full edge set from any nonempty center cover: around each
// center, queries its radius-2 ball against everything, extends the ball by
// the vertices it newly covers, and reads edges off distance-1 pairs.
EdgeSet local_reconstruction(CountingOracle& o, const CenterCover& cover);

// modified_center followed by local_reconstruction.
EdgeSet reconstruct_bounded_degree(CountingOracle& o, const CenterConfig& cfg, Rng& rng);

} // namespace recon
