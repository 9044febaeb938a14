#include "recon/approx.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace recon {

ApproxMetric approx_reconstruct(CountingOracle& o, int n, double f, Rng& rng) {
    if (n != o.n()) throw std::invalid_argument("vertex count does not match the oracle");
    if (n < 1) throw std::invalid_argument("need at least one vertex");
    if (f < 1.0) throw std::invalid_argument("approximation factor must be at least 1");

    constexpr std::int32_t kUnset = -1;
    std::vector<std::int32_t> est(static_cast<std::size_t>(n) * n, kUnset);
    auto put = [&](int a, int b, std::int32_t val) {
        est[static_cast<std::size_t>(a) * n + b] = val;
        est[static_cast<std::size_t>(b) * n + a] = val;
    };

    // A vertex's whole row is filled the first time it is sampled or lands in
    // some sample's f/2-ball, so coverage is tracked per vertex.
    std::vector<char> row_done(n, 0);
    int remaining = n;
    std::uint64_t samples = 0;
    std::vector<int> du(n);
    while (remaining > 0) {
        const int u = static_cast<int>(rng.index(static_cast<std::size_t>(n)));
        ++samples;
        for (int v = 0; v < n; ++v) {
            du[v] = o.query(u, v);
            if (v != u) put(u, v, du[v]);
        }
        if (!row_done[u]) {
            row_done[u] = 1;
            --remaining;
        }
        // Ball test: 2*d <= f-1 rather than the more natural 2*d < f. For
        // integer f the two are the same set (distances are integers); for
        // fractional f only the former keeps the guarantee airtight, since a
        // far entry is estimated as du[w]-du[v] and its true distance can
        // exceed that by 2*du[v], which must stay within (f-1) times the
        // estimate.
        std::vector<int> ball;
        for (int v = 0; v < n; ++v)
            if (2.0 * du[v] <= f - 1.0) ball.push_back(v);
        for (int v : ball) {
            if (v == u) continue;
            for (int w : ball)
                if (w != v) put(v, w, 1);
            for (int w = 0; w < n; ++w) {
                if (2.0 * du[w] <= f - 1.0) continue;  // handled above
                const std::int32_t val = du[w] - du[v];
                if (val < 1)
                    throw structural_error("distance rows are inconsistent with the triangle inequality");
                put(v, w, val);
            }
            if (!row_done[v]) {
                row_done[v] = 1;
                --remaining;
            }
        }
    }
    for (int v = 0; v < n; ++v) est[static_cast<std::size_t>(v) * n + v] = 0;

    return ApproxMetric{n, f, DistanceMatrix(n, std::move(est)), samples};
}

ApproxReport verify_approx(const ApproxMetric& am, const DistanceMatrix& truth) {
    if (am.n != truth.n()) throw std::invalid_argument("metric sizes differ");
    ApproxReport rep;
    rep.ok = true;
    rep.worst_ratio = am.n > 0 ? 1.0 : 0.0;
    for (int u = 0; u < am.n; ++u) {
        for (int v = u + 1; v < am.n; ++v) {
            const double e = am.est.at(u, v);
            const double d = truth.at(u, v);
            if (!(e <= d && d <= am.f * e)) {
                rep.ok = false;
                ++rep.violations;
            }
            if (e > 0) rep.worst_ratio = std::max(rep.worst_ratio, d / e);
        }
    }
    return rep;
}

}  // namespace recon
