#pragma once

#include <algorithm>
#include <vector>

namespace recon {

// Sorted ascending vector of vertex ids. All algorithm-facing sets use this
// representation so iteration order, tie-breaking, and output are
// deterministic regardless of platform.
using VertexSet = std::vector<int>;

inline VertexSet make_vertex_set(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline VertexSet range_set(int n) {
    VertexSet v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
    return v;
}

inline bool set_contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline void set_insert(VertexSet& s, int v) {
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it == s.end() || *it != v) s.insert(it, v);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_minus(const VertexSet& a, int v) {
    VertexSet out;
    out.reserve(a.size());
    for (int u : a)
        if (u != v) out.push_back(u);
    return out;
}

} // namespace recon
