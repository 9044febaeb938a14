#pragma once

#include <cstdint>

#include "recon/graph.hpp"
#include "recon/oracle.hpp"
#include "recon/rng.hpp"

// Metric approximation: estimate all pairwise distances within a factor f
// while querying far fewer than all pairs.

namespace recon {

struct ApproxMetric {
    int n = 0;
    double f = 1.0;
    DistanceMatrix est;   // symmetric, zero diagonal, >= 1 off-diagonal
    std::uint64_t samples = 0;
};

struct ApproxReport {
    bool ok = false;
    double worst_ratio = 0.0;   // max over pairs of true distance / estimate
    std::uint64_t violations = 0;
};

// Samples vertices until every pair has an estimate; each sample u fixes the
// row of u exactly and estimates all rows of vertices within distance f/2.
// Guarantees est <= distance <= f * est on every pair.
ApproxMetric approx_reconstruct(CountingOracle& o, int n, double f, Rng& rng);

ApproxReport verify_approx(const ApproxMetric& am, const DistanceMatrix& truth);

}  // namespace recon
