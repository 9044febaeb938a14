#include "recon/oracle.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

namespace recon {

namespace {

std::int64_t now_ns() {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

} // namespace

CountingOracle::CountingOracle(DistanceMatrix dist)
    : dist_(std::move(dist)), start_ns_(now_ns()) {
    std::size_t n = static_cast<std::size_t>(dist_.n());
    std::size_t pairs = n * (n - 1) / 2;
    asked_.assign((pairs + 63) / 64, 0);
}

int CountingOracle::query(int u, int v) {
    int n = dist_.n();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("oracle: vertex out of range: " + std::to_string(u) + " " +
                                    std::to_string(v));
    ++raw_;
    if (u != v) {
        int a = u < v ? u : v;
        int b = u < v ? v : u;
        std::size_t idx = static_cast<std::size_t>(a) * static_cast<std::size_t>(n) -
                          static_cast<std::size_t>(a) * (static_cast<std::size_t>(a) + 1) / 2 +
                          static_cast<std::size_t>(b - a - 1);
        std::uint64_t& word = asked_[idx / 64];
        std::uint64_t bit = 1ULL << (idx % 64);
        if (!(word & bit)) {
            word |= bit;
            ++distinct_;
        }
    }
    return dist_.at(u, v);
}

std::map<std::pair<int, int>, int> CountingOracle::query_batch(const VertexSet& us,
                                                               const VertexSet& vs) {
    std::map<std::pair<int, int>, int> out;
    for (int u : us)
        for (int v : vs) out[{u, v}] = query(u, v);
    return out;
}

QueryStats CountingOracle::stats() const {
    QueryStats s;
    s.raw = raw_;
    s.distinct = distinct_;
    s.wall_ms = static_cast<double>(now_ns() - start_ns_) / 1e6;
    return s;
}

} // namespace recon
