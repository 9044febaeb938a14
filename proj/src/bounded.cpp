#include "recon/bounded.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace recon {

namespace {

constexpr int kUncovered = std::numeric_limits<int>::max();

void absorb_center(CountingOracle& o, int a, std::vector<int>& dist_to_centers) {
    for (int v = 0; v < o.n(); ++v)
        dist_to_centers[static_cast<std::size_t>(v)] =
            std::min(dist_to_centers[static_cast<std::size_t>(v)], o.query(a, v));
}

} // namespace

CenterCover modified_center(CountingOracle& o, const CenterConfig& cfg, Rng& rng) {
    int n = o.n();
    if (n < 1) throw std::invalid_argument("modified_center: empty oracle");
    int s = cfg.s > 0 ? cfg.s : std::max(1, static_cast<int>(std::sqrt(static_cast<double>(n))));
    double ln_n = std::log(static_cast<double>(n));
    long long t_len = std::max(
        1LL, static_cast<long long>(std::ceil(cfg.sampling_constant * ln_n *
                                              std::max(1.0, std::log(std::max(ln_n, 1.0))))));
    int max_iters = cfg.max_while_iters > 0
                        ? cfg.max_while_iters
                        : 64 * std::max(1, static_cast<int>(std::ceil(ln_n)));

    CenterCover cover;
    cover.dist_to_centers.assign(static_cast<std::size_t>(n), kUncovered);
    VertexSet active = range_set(n);

    for (int iter = 0; iter < max_iters && !active.empty(); ++iter) {
        double p = std::min(1.0, static_cast<double>(s) / static_cast<double>(active.size()));
        VertexSet promoted;
        for (int w : active)
            if (rng.bernoulli(p)) promoted.push_back(w);
        for (int a : promoted) {
            absorb_center(o, a, cover.dist_to_centers);
            set_insert(cover.centers, a);
        }

        // A vertex stays active only if enough of a uniform sample lies
        // strictly closer to it than to the center set. Sample length s*t
        // and threshold 5*t make the test integer-exact.
        VertexSet still_active;
        for (int w : active) {
            long long hits = 0;
            for (long long i = 0; i < static_cast<long long>(s) * t_len; ++i) {
                int x = static_cast<int>(rng.index(static_cast<std::size_t>(n)));
                if (o.query(x, w) < cover.dist_to_centers[static_cast<std::size_t>(x)]) ++hits;
            }
            if (hits >= 5 * t_len) still_active.push_back(w);
        }
        active = std::move(still_active);
    }

    if (cover.centers.empty()) {
        // Small instances can deactivate everything before any promotion
        // lands; a single explicit center keeps the cover usable.
        absorb_center(o, 0, cover.dist_to_centers);
        cover.centers.push_back(0);
    }
    return cover;
}

EdgeSet local_reconstruction(CountingOracle& o, const CenterCover& cover) {
    int n = o.n();
    if (cover.centers.empty()) throw std::invalid_argument("local_reconstruction: no centers");
    if (cover.dist_to_centers.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("local_reconstruction: cover size mismatch");

    EdgeSet edges;
    for (int a : cover.centers) {
        VertexSet ball;
        for (int v = 0; v < n; ++v)
            if (o.query(a, v) <= 2) ball.push_back(v);

        // Extend the ball by every vertex that sits closer to it than to the
        // center set; edges incident to the ball all live inside the result.
        VertexSet patch = ball;
        for (int b : ball)
            for (int v = 0; v < n; ++v)
                if (o.query(b, v) < cover.dist_to_centers[static_cast<std::size_t>(v)])
                    set_insert(patch, v);

        for (std::size_t i = 0; i < patch.size(); ++i)
            for (std::size_t j = i + 1; j < patch.size(); ++j)
                if (o.query(patch[i], patch[j]) == 1) edges.add(patch[i], patch[j]);
    }
    return edges;
}

EdgeSet reconstruct_bounded_degree(CountingOracle& o, const CenterConfig& cfg, Rng& rng) {
    CenterCover cover = modified_center(o, cfg, rng);
    return local_reconstruction(o, cover);
}

} // namespace recon
