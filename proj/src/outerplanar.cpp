#include "recon/outerplanar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace recon {

namespace {

void require_member(const VertexSet& u, int v, const char* what) {
    if (!set_contains(u, v))
        throw std::invalid_argument(std::string(what) + " is not in the working set");
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }
    int find(int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Appends a shortest a->b walk with b excluded, recursing on the midpoint.
void sp_half(CountingOracle& o, int a, int b, const VertexSet& u, std::vector<int>& out) {
    int d = o.query(a, b);
    if (d == 0) return;
    if (d == 1) {
        out.push_back(a);
        return;
    }
    VertexSet on_path;
    std::vector<int> da;
    for (int w : u) {
        int wa = o.query(w, a);
        int wb = o.query(w, b);
        if (wa + wb == d) {
            on_path.push_back(w);
            da.push_back(wa);
        }
    }
    const int half = d / 2;
    int c = -1;
    for (std::size_t i = 0; i < on_path.size(); ++i) {
        if (da[i] == half) {
            c = on_path[i];
            break;
        }
    }
    if (c < 0) throw structural_error("no midpoint between two vertices; distances are inconsistent");
    VertexSet u1, u2;
    for (std::size_t i = 0; i < on_path.size(); ++i) {
        if (da[i] < half)
            u1.push_back(on_path[i]);
        else if (da[i] > half)
            u2.push_back(on_path[i]);
    }
    set_insert(u1, c);
    set_insert(u2, c);
    sp_half(o, a, c, u1, out);
    sp_half(o, c, b, u2, out);
}

// Shared scan behind partition_by_node and neighbors_in_order: for every
// non-pivot vertex, its nearest pivot-neighbors either merge two neighbors
// into one boundary group (|A|=2) or chain the unique nearest neighbor to the
// ones a step farther (|A|=1).
struct FanScan {
    VertexSet y;                         // neighbors of the pivot, ascending
    std::vector<std::vector<int>> rows;  // rows[i][j] = distance(u[i], y[j])
    std::vector<int> dist_to_pivot;      // aligned with u
};

FanScan fan_scan(CountingOracle& o, int x, const VertexSet& u) {
    FanScan fs;
    fs.dist_to_pivot.resize(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        fs.dist_to_pivot[i] = o.query(u[i], x);
        if (fs.dist_to_pivot[i] == 1) fs.y.push_back(u[i]);
    }
    fs.rows.assign(u.size(), {});
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == x) continue;
        auto& row = fs.rows[i];
        row.resize(fs.y.size());
        for (std::size_t j = 0; j < fs.y.size(); ++j) row[j] = o.query(u[i], fs.y[j]);
    }
    return fs;
}

// Indices (into fs.y) of the nearest neighbors of u[i].
std::vector<int> nearest_neighbor_set(const FanScan& fs, std::size_t i) {
    const auto& row = fs.rows[i];
    int best = std::numeric_limits<int>::max();
    for (int d : row) best = std::min(best, d);
    std::vector<int> idx;
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] == best) idx.push_back(static_cast<int>(j));
    return idx;
}

void apply_union_rules(const FanScan& fs, const VertexSet& u, int x, Dsu& dsu,
                       std::set<std::pair<int, int>>* pairs) {
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == x) continue;
        auto a = nearest_neighbor_set(fs, i);
        if (a.size() == 2) {
            dsu.unite(a[0], a[1]);
            if (pairs) pairs->insert({a[0], a[1]});
        } else if (a.size() == 1) {
            const int du = fs.rows[i][a[0]];
            for (std::size_t j = 0; j < fs.y.size(); ++j) {
                if (fs.rows[i][j] == du + 1) {
                    dsu.unite(a[0], static_cast<int>(j));
                    if (pairs) pairs->insert({std::min(a[0], static_cast<int>(j)),
                                              std::max(a[0], static_cast<int>(j))});
                }
            }
        }
        // three or more equally-near neighbors give no grouping evidence
    }
}

VertexSet side_with(const EdgeSides& es, int v) {
    const bool in_a = set_contains(es.side_a, v);
    const bool in_b = set_contains(es.side_b, v);
    if (in_a == in_b) throw structural_error("vertex is not on a unique side of an edge");
    return in_a ? es.side_a : es.side_b;
}

// Breadth-first search from `from` inside `allowed` using adjacency queries
// only; returns a shortest path to `to`.
std::vector<int> bfs_path(CountingOracle& o, int from, int to, const VertexSet& allowed) {
    std::map<int, int> parent;
    parent[from] = from;
    VertexSet frontier{from};
    while (!frontier.empty() && parent.find(to) == parent.end()) {
        VertexSet next;
        for (int v : allowed) {
            if (parent.count(v)) continue;
            for (int f : frontier) {
                if (o.query(v, f) == 1) {
                    parent[v] = f;
                    next.push_back(v);
                    break;
                }
            }
        }
        frontier = std::move(next);
    }
    if (!parent.count(to)) throw structural_error("two vertices are not connected inside their region");
    std::vector<int> path;
    for (int v = to; v != from; v = parent[v]) path.push_back(v);
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

std::vector<int> shortest_path(CountingOracle& o, int a, int b, const VertexSet& u) {
    require_member(u, a, "path endpoint");
    require_member(u, b, "path endpoint");
    std::vector<int> path;
    sp_half(o, a, b, u, path);
    path.push_back(b);
    return path;
}

NodePartition partition_by_node(CountingOracle& o, int x, const VertexSet& u) {
    require_member(u, x, "pivot");
    NodePartition np;
    np.pivot = x;
    if (u.size() == 1) return np;
    FanScan fs = fan_scan(o, x, u);
    if (fs.y.empty()) throw structural_error("pivot has no neighbor in its set");
    Dsu dsu(fs.y.size());
    apply_union_rules(fs, u, x, dsu, nullptr);

    std::map<int, std::vector<int>> members;  // group root -> non-pivot vertices
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == x) continue;
        auto a = nearest_neighbor_set(fs, i);
        const int root = dsu.find(a[0]);
        for (std::size_t k = 1; k < a.size(); ++k)
            if (dsu.find(a[k]) != root)
                throw structural_error("a vertex is equally near two separated neighbor groups");
        members[root].push_back(u[i]);
    }
    std::vector<std::pair<int, VertexSet>> ordered;
    for (auto& [root, verts] : members) {
        VertexSet part = verts;  // ascending already: u scanned in order
        ordered.emplace_back(part.front(), std::move(part));
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    for (auto& [key, part] : ordered) {
        set_insert(part, x);
        np.parts.push_back(std::move(part));
    }
    return np;
}

std::vector<int> neighbors_in_order(CountingOracle& o, int x, const VertexSet& u) {
    require_member(u, x, "fan pivot");
    if (u.size() == 1) return {};
    FanScan fs = fan_scan(o, x, u);
    if (fs.y.empty()) throw structural_error("pivot has no neighbor in its set");
    if (fs.y.size() == 1) return {fs.y.front()};

    Dsu dsu(fs.y.size());
    std::set<std::pair<int, int>> rel;
    apply_union_rules(fs, u, x, dsu, &rel);

    const std::size_t k = fs.y.size();
    if (rel.size() != k - 1)
        throw structural_error("neighbor adjacency evidence does not form a path");
    std::vector<std::vector<int>> adj(k);
    for (const auto& [a, b] : rel) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    int start = -1;
    for (std::size_t j = 0; j < k; ++j) {
        if (adj[j].size() > 2)
            throw structural_error("neighbor adjacency evidence does not form a path");
        if (adj[j].size() == 1 && start < 0) start = static_cast<int>(j);
    }
    if (start < 0) throw structural_error("neighbor adjacency evidence does not form a path");

    std::vector<int> order;
    int prev = -1;
    int cur = start;
    for (std::size_t step = 0; step < k; ++step) {
        order.push_back(fs.y[cur]);
        int next = -1;
        for (int cand : adj[cur])
            if (cand != prev) next = cand;
        prev = cur;
        if (next < 0) break;
        cur = next;
    }
    if (order.size() != k)
        throw structural_error("neighbor adjacency evidence does not form a path");
    return order;
}

EdgeSides partition_by_edge(CountingOracle& o, int x, int y, const VertexSet& u) {
    require_member(u, x, "edge endpoint");
    require_member(u, y, "edge endpoint");
    if (x == y || o.query(x, y) != 1)
        throw std::invalid_argument("side split requires an adjacent vertex pair");

    // Keep only the block where both endpoints live: the part of x's
    // partition holding y, intersected with the part of y's holding x.
    // Inside it neither endpoint is a cut vertex.
    NodePartition px = partition_by_node(o, x, u);
    NodePartition py = partition_by_node(o, y, u);
    const VertexSet* keep_x = nullptr;
    for (const auto& part : px.parts)
        if (set_contains(part, y)) keep_x = &part;
    const VertexSet* keep_y = nullptr;
    for (const auto& part : py.parts)
        if (set_contains(part, x)) keep_y = &part;
    if (!keep_x || !keep_y) throw structural_error("edge endpoints separated by their own partitions");
    VertexSet u2 = set_intersect(*keep_x, *keep_y);

    EdgeSides out;
    if (u2.size() <= 2) {
        out.side_a = u2;
        out.side_b = u2;
        return out;
    }

    const std::vector<int> zs = neighbors_in_order(o, x, u2);
    const std::vector<int> ts = neighbors_in_order(o, y, u2);
    int iy = -1, jx = -1;
    for (std::size_t k = 0; k < zs.size(); ++k)
        if (zs[k] == y) iy = static_cast<int>(k);
    for (std::size_t k = 0; k < ts.size(); ++k)
        if (ts[k] == x) jx = static_cast<int>(k);
    if (iy < 0 || jx < 0) throw structural_error("an edge endpoint is missing from the other's fan");

    // Distance tables to both fans; the fan construction already asked for
    // most of these, so they are nearly free in distinct-query terms.
    std::vector<int> dxv(u2.size()), dyv(u2.size());
    std::vector<std::vector<int>> dz(u2.size(), std::vector<int>(zs.size()));
    std::vector<std::vector<int>> dt(u2.size(), std::vector<int>(ts.size()));
    for (std::size_t i = 0; i < u2.size(); ++i) {
        dxv[i] = o.query(u2[i], x);
        dyv[i] = o.query(u2[i], y);
        for (std::size_t k = 0; k < zs.size(); ++k) dz[i][k] = o.query(u2[i], zs[k]);
        for (std::size_t k = 0; k < ts.size(); ++k) dt[i][k] = o.query(u2[i], ts[k]);
    }
    std::map<int, std::size_t> pos;
    for (std::size_t i = 0; i < u2.size(); ++i) pos[u2[i]] = i;

    // A vertex nearer to x gets its side directly from x's fan (which z
    // comes first); one nearer to y gets a provisional side from y's fan
    // whose global orientation is fixed below.
    constexpr int kSideA = 0, kSideB = 1, kUnset = -1;
    std::vector<int> pinned_label(u2.size(), kUnset);
    std::vector<int> pending_label0(u2.size(), kUnset);
    for (std::size_t i = 0; i < u2.size(); ++i) {
        const int v = u2[i];
        if (v == x || v == y) continue;
        if (dxv[i] <= dyv[i]) {
            int best = std::numeric_limits<int>::max(), istar = -1;
            for (std::size_t k = 0; k < zs.size(); ++k)
                if (dz[i][k] < best) {
                    best = dz[i][k];
                    istar = static_cast<int>(k);
                }
            if (istar == iy) throw structural_error("a side vertex is nearest to the splitting edge itself");
            pinned_label[i] = istar < iy ? kSideB : kSideA;
        } else {
            int best = std::numeric_limits<int>::max(), jstar = -1;
            for (std::size_t k = 0; k < ts.size(); ++k)
                if (dt[i][k] < best) {
                    best = dt[i][k];
                    jstar = static_cast<int>(k);
                }
            if (jstar == jx) throw structural_error("a side vertex is nearest to the splitting edge itself");
            pending_label0[i] = jstar < jx ? kSideB : kSideA;
        }
    }

    // Orientation of y's fan relative to x's.  A pair provably on the same
    // side (their distance beats any route through x or y) links the two
    // label families; such a pair always exists whenever the flip matters.
    auto conclusive = [&](std::size_t i, std::size_t j, int dij) {
        return dij < std::min(dxv[i] + dxv[j], dyv[i] + dyv[j]);
    };
    Dsu comp(u2.size());
    for (std::size_t i = 0; i < u2.size(); ++i) {
        const int v = u2[i];
        if (v == x || v == y) continue;
        for (std::size_t k = 0; k < zs.size(); ++k) {
            if (zs[k] == x || zs[k] == y) continue;
            const std::size_t j = pos[zs[k]];
            if (j == i) continue;
            if (conclusive(i, j, dz[i][k])) comp.unite(static_cast<int>(i), static_cast<int>(j));
        }
        for (std::size_t k = 0; k < ts.size(); ++k) {
            if (ts[k] == x || ts[k] == y) continue;
            const std::size_t j = pos[ts[k]];
            if (j == i) continue;
            if (conclusive(i, j, dt[i][k])) comp.unite(static_cast<int>(i), static_cast<int>(j));
        }
    }
    std::map<int, std::pair<int, int>> comp_labels;  // root -> (pinned label, pending label0)
    for (std::size_t i = 0; i < u2.size(); ++i) {
        if (pinned_label[i] == kUnset && pending_label0[i] == kUnset) continue;
        auto& entry = comp_labels.try_emplace(comp.find(static_cast<int>(i)),
                                              std::make_pair(kUnset, kUnset))
                          .first->second;
        if (pinned_label[i] != kUnset) {
            if (entry.first != kUnset && entry.first != pinned_label[i])
                throw structural_error("same-side evidence contradicts the fan of x");
            entry.first = pinned_label[i];
        } else {
            if (entry.second != kUnset && entry.second != pending_label0[i])
                throw structural_error("same-side evidence contradicts the fan of y");
            entry.second = pending_label0[i];
        }
    }
    int flip = kUnset;  // 0 = keep provisional labels, 1 = invert them
    for (const auto& [root, labels] : comp_labels) {
        if (labels.first == kUnset || labels.second == kUnset) continue;
        const int needed = labels.first == labels.second ? 0 : 1;
        if (flip != kUnset && flip != needed)
            throw structural_error("contradictory orientation evidence between the two fans");
        flip = needed;
    }

    std::vector<std::size_t> pendings, pinneds;
    for (std::size_t i = 0; i < u2.size(); ++i) {
        if (pending_label0[i] != kUnset) pendings.push_back(i);
        if (pinned_label[i] != kUnset) pinneds.push_back(i);
    }
    if (flip == kUnset && !pendings.empty() && !pinneds.empty()) {
        // No free evidence: probe pairs near the side boundary, where a
        // same-side pair must exist, sweeping outward by combined rank.
        std::stable_sort(pendings.begin(), pendings.end(), [&](std::size_t l, std::size_t r) {
            return dxv[l] - dyv[l] < dxv[r] - dyv[r];
        });
        std::stable_sort(pinneds.begin(), pinneds.end(), [&](std::size_t l, std::size_t r) {
            return dxv[l] - dyv[l] > dxv[r] - dyv[r];
        });
        for (std::size_t s = 0; s < pendings.size() + pinneds.size() - 1 && flip == kUnset; ++s) {
            for (std::size_t a = 0; a <= s && flip == kUnset; ++a) {
                if (a >= pendings.size() || s - a >= pinneds.size()) continue;
                const std::size_t i = pendings[a];
                const std::size_t j = pinneds[s - a];
                const int dij = o.query(u2[i], u2[j]);
                if (conclusive(i, j, dij))
                    flip = pinned_label[j] == pending_label0[i] ? 0 : 1;
            }
        }
    }
    if (flip == kUnset) flip = 0;  // only label naming is left ambiguous

    out.side_a = {x, y};
    out.side_b = {x, y};
    std::sort(out.side_a.begin(), out.side_a.end());
    std::sort(out.side_b.begin(), out.side_b.end());
    for (std::size_t i = 0; i < u2.size(); ++i) {
        int label = kUnset;
        if (pinned_label[i] != kUnset)
            label = pinned_label[i];
        else if (pending_label0[i] != kUnset)
            label = flip ? 1 - pending_label0[i] : pending_label0[i];
        else
            continue;
        set_insert(label == kSideA ? out.side_a : out.side_b, u2[i]);
    }
    return out;
}

Polygon find_polygon(CountingOracle& o, int x, int y1, int y2, const VertexSet& u) {
    require_member(u, x, "polygon apex");
    require_member(u, y1, "polygon neighbor");
    require_member(u, y2, "polygon neighbor");
    if (x == y1 || x == y2 || y1 == y2)
        throw std::invalid_argument("polygon search needs three distinct vertices");
    if (o.query(x, y1) != 1 || o.query(x, y2) != 1)
        throw std::invalid_argument("polygon search needs two edges at the apex");

    // The wedge between the two edges: intersect the side of (x,y1) holding
    // y2 with the side of (x,y2) holding y1.
    const EdgeSides e1 = partition_by_edge(o, x, y1, u);
    const EdgeSides e2 = partition_by_edge(o, x, y2, u);
    VertexSet wedge = set_intersect(side_with(e1, y2), side_with(e2, y1));
    VertexSet cand = set_minus(wedge, x);
    if (!set_contains(cand, y1) || !set_contains(cand, y2))
        throw structural_error("the wedge between two edges lost its own boundary");

    // Fast path: the smallest sum of distances to both neighbors locates the
    // far point of the cycle; two stitched half-paths close it.  If distances
    // through x contaminate the minimum, some step below fails and we fall
    // back to an adjacency search, so a returned path is always genuine.
    std::vector<int> path;
    bool done = false;
    {
        std::vector<int> sum(cand.size());
        int d = std::numeric_limits<int>::max();
        for (std::size_t i = 0; i < cand.size(); ++i) {
            sum[i] = o.query(cand[i], y1) + o.query(cand[i], y2);
            d = std::min(d, sum[i]);
        }
        int z = -1;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            if (sum[i] == d && o.query(cand[i], y1) == d / 2) {
                z = cand[i];
                break;
            }
        }
        if (z >= 0) {
            try {
                std::vector<int> p1 = shortest_path(o, y1, z, cand);
                std::vector<int> p2 = shortest_path(o, z, y2, cand);
                path = p1;
                path.insert(path.end(), p2.begin() + 1, p2.end());
                std::set<int> uniq(path.begin(), path.end());
                done = uniq.size() == path.size() && !uniq.count(x) &&
                       path.size() == static_cast<std::size_t>(d) + 1 && path.front() == y1 &&
                       path.back() == y2;
            } catch (const structural_error&) {
                done = false;
            }
        }
    }
    if (!done) path = bfs_path(o, y1, y2, cand);

    Polygon poly;
    poly.cycle.push_back(x);
    poly.cycle.insert(poly.cycle.end(), path.begin(), path.end());
    std::set<int> uniq(poly.cycle.begin(), poly.cycle.end());
    if (poly.cycle.size() < 3 || uniq.size() != poly.cycle.size())
        throw structural_error("no simple cycle closes through the two edges");
    return poly;
}

namespace {

// Outgrowth at a polygon vertex: the components of its removal that contain
// no other polygon vertex, plus the vertex itself.
VertexSet polygon_wedge(CountingOracle& o, int q, const VertexSet& scope, const std::set<int>& poly) {
    NodePartition np = partition_by_node(o, q, scope);
    VertexSet w{q};
    for (const auto& part : np.parts) {
        bool other = false;
        for (int v : part)
            if (v != q && poly.count(v)) other = true;
        if (!other) w = set_union(w, part);
    }
    return w;
}

// Strip between two consecutive polygon vertices: the side of their edge away
// from the rest of the polygon.  When neither side sees another polygon
// vertex the whole block is the strip.
VertexSet polygon_strip(CountingOracle& o, int qa, int qb, const VertexSet& scope,
                        const std::set<int>& poly) {
    EdgeSides es = partition_by_edge(o, qa, qb, scope);
    auto probed = [&](const VertexSet& side) {
        for (int v : side)
            if (v != qa && v != qb && poly.count(v)) return true;
        return false;
    };
    const bool pa = probed(es.side_a);
    const bool pb = probed(es.side_b);
    if (pa && pb) throw structural_error("both sides of a polygon edge touch the polygon");
    if (!pa && !pb) return set_union(es.side_a, es.side_b);
    return pa ? es.side_b : es.side_a;
}

struct PolygonSplitter {
    CountingOracle& o;
    const std::vector<int>& q;
    std::set<int> poly_set;
    std::vector<VertexSet> w, r;

    void compute(int m, const VertexSet& scope) {
        w[m] = polygon_wedge(o, q[m], scope, poly_set);
        r[m] = polygon_strip(o, q[m], q[(m + 1) % q.size()], scope, poly_set);
    }

    // Dichotomy over the chain q[s..t+1] inside `scope`.
    void segment(int s, int t, const VertexSet& scope) {
        if (s > t) return;
        const int m = (s + t) / 2;
        compute(m, scope);
        if (s == t) return;
        VertexSet rest = set_minus(scope, set_union(w[m], r[m]));
        set_insert(rest, q[m]);
        set_insert(rest, q[m + 1]);
        VertexSet a1, a2;
        for (int v : rest) {
            const int dm = o.query(v, q[m]);
            const int dm1 = o.query(v, q[m + 1]);
            if (dm < dm1)
                a1.push_back(v);
            else if (dm > dm1)
                a2.push_back(v);
            else
                throw structural_error("a vertex sits equidistant from its segment boundary");
        }
        segment(s, m - 1, a1);
        segment(m + 1, t, a2);
    }
};

}  // namespace

PolygonPartition partition_by_polygon(CountingOracle& o, const Polygon& poly, const VertexSet& u) {
    const auto& q = poly.cycle;
    const int l = static_cast<int>(q.size());
    if (l < 3) throw std::invalid_argument("a polygon needs at least three vertices");
    std::set<int> poly_set(q.begin(), q.end());
    if (static_cast<int>(poly_set.size()) != l)
        throw std::invalid_argument("polygon vertices must be distinct");
    for (int v : q) require_member(u, v, "polygon vertex");
    for (int i = 0; i < l; ++i)
        if (o.query(q[i], q[(i + 1) % l]) != 1)
            throw std::invalid_argument("polygon vertices must form a cycle of edges");

    PolygonSplitter ps{o, q, std::move(poly_set), std::vector<VertexSet>(l), std::vector<VertexSet>(l)};
    const int h = l / 2;
    std::set<int> anchors{0, h - 1, h, l - 1};
    for (int m : anchors) ps.compute(m, u);

    VertexSet covered;
    for (int m : anchors) covered = set_union(covered, set_union(ps.w[m], ps.r[m]));
    VertexSet z1, z2;
    for (int v : set_minus(u, covered)) {
        if (o.query(v, q[1]) < o.query(v, q[l - 1]))
            z1.push_back(v);
        else
            z2.push_back(v);
    }
    const bool have_seg1 = 1 <= h - 2;
    const bool have_seg2 = h + 1 <= l - 2;
    if ((!have_seg1 && !z1.empty()) || (!have_seg2 && !z2.empty()))
        throw structural_error("vertices fall outside every polygon region");
    if (have_seg1) {
        for (int i = 1; i <= h - 1; ++i) set_insert(z1, q[i]);
        ps.segment(1, h - 2, z1);
    }
    if (have_seg2) {
        for (int i = h + 1; i <= l - 1; ++i) set_insert(z2, q[i]);
        ps.segment(h + 1, l - 2, z2);
    }

    PolygonPartition out;
    out.outgrowths = std::move(ps.w);
    out.strips = std::move(ps.r);
    return out;
}

namespace {

bool within_bound(std::size_t size, double beta, std::size_t total) {
    return static_cast<double>(size) <= beta * static_cast<double>(total) + 1e-9;
}

// One sampling round of the balanced split; empty result means resample.
std::optional<std::vector<VertexSet>> balanced_attempt(CountingOracle& o, const VertexSet& u,
                                                       double beta,
                                                       const BalancedPartitionConfig& cfg,
                                                       Rng& rng) {
    const std::size_t n = u.size();
    const int omega =
        std::max(1, static_cast<int>(std::ceil(cfg.sampling_constant * std::log(static_cast<double>(n)))));

    // A vertex on many sampled shortest paths is a good splitter candidate.
    std::map<int, int> hits;
    for (int k = 0; k < omega; ++k) {
        const int a = u[rng.index(n)];
        const int b = u[rng.index(n)];
        for (int v : shortest_path(o, a, b, u)) ++hits[v];
    }
    int x = u.front(), best = -1;
    for (int v : u) {
        auto it = hits.find(v);
        const int c = it == hits.end() ? 0 : it->second;
        if (c > best) {
            best = c;
            x = v;
        }
    }

    NodePartition np = partition_by_node(o, x, u);
    bool all_ok = true;
    std::size_t largest = 0;
    for (std::size_t i = 0; i < np.parts.size(); ++i) {
        if (!within_bound(np.parts[i].size(), beta, n)) all_ok = false;
        if (np.parts[i].size() > np.parts[largest].size()) largest = i;
    }
    if (all_ok) return np.parts;

    const VertexSet& d = np.parts[largest];
    VertexSet v0 = set_minus(u, d);
    set_insert(v0, x);

    const std::vector<int> ys = neighbors_in_order(o, x, d);
    if (ys.size() < 2) return std::nullopt;

    // Cut away the region behind each fan neighbor.
    std::vector<VertexSet> behind;  // V_i
    VertexSet t = d;
    for (int y : ys) {
        NodePartition npy = partition_by_node(o, y, u);
        const VertexSet* sy = nullptr;
        for (const auto& part : npy.parts)
            if (set_contains(part, x)) sy = &part;
        if (!sy) throw structural_error("a fan neighbor's partition lost the pivot");
        VertexSet vi = set_minus(u, *sy);
        set_insert(vi, y);
        if (!within_bound(vi.size(), beta, n)) return std::nullopt;
        behind.push_back(std::move(vi));
        t = set_intersect(t, *sy);
    }

    // Wedges between consecutive fan edges.
    std::vector<VertexSet> wedges;
    int oversized = -1;
    for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
        const EdgeSides ea = partition_by_edge(o, x, ys[i], t);
        const EdgeSides eb = partition_by_edge(o, x, ys[i + 1], t);
        VertexSet ti = set_intersect(side_with(ea, ys[i + 1]), side_with(eb, ys[i]));
        if (oversized < 0 && !within_bound(ti.size(), beta, n)) oversized = static_cast<int>(i);
        wedges.push_back(std::move(ti));
    }
    if (oversized < 0) {
        std::vector<VertexSet> parts = std::move(wedges);
        parts.push_back(std::move(v0));
        for (auto& vi : behind) parts.push_back(std::move(vi));
        for (const auto& p : parts)
            if (!within_bound(p.size(), beta, n)) return std::nullopt;
        return parts;
    }

    // One wedge is still too big: it is bounded by a polygon whose regions
    // give the final split.
    const Polygon poly =
        find_polygon(o, x, ys[oversized], ys[oversized + 1], wedges[oversized]);
    const PolygonPartition pp = partition_by_polygon(o, poly, u);
    std::vector<VertexSet> parts = pp.strips;
    parts.insert(parts.end(), pp.outgrowths.begin(), pp.outgrowths.end());
    for (const auto& p : parts)
        if (!within_bound(p.size(), beta, n)) return std::nullopt;
    return parts;
}

}  // namespace

std::vector<VertexSet> balanced_partition(CountingOracle& o, const VertexSet& u,
                                          const BalancedPartitionConfig& cfg, Rng& rng,
                                          BalancedPartitionStats* stats) {
    if (u.size() < 10) throw std::invalid_argument("balanced split needs at least 10 vertices");
    if (!(cfg.beta > 0.7 && cfg.beta < 1.0))
        throw std::invalid_argument("balance bound must lie in (0.7, 1)");
    if (cfg.sampling_constant < 1.0)
        throw std::invalid_argument("sampling constant must be at least 1");
    if (cfg.max_samplings < 1) throw std::invalid_argument("max samplings must be positive");

    const double n = static_cast<double>(u.size());
    double beta = cfg.beta;
    int tries = 0;
    for (;;) {
        if (stats) ++stats->attempts;
        std::optional<std::vector<VertexSet>> got;
        try {
            got = balanced_attempt(o, u, beta, cfg, rng);
        } catch (const structural_error&) {
            got.reset();
        }
        if (got) {
            if (stats) ++stats->successes;
            return std::move(*got);
        }
        if (++tries >= cfg.max_samplings) {
            if (beta >= 1.0 - 1.0 / n - 1e-12)
                throw structural_error(
                    "balanced split keeps failing; distances do not fit a connected outerplanar graph");
            beta = std::min((1.0 + beta) / 2.0, 1.0 - 1.0 / n);
            if (stats) ++stats->relaxations;
            tries = 0;
        }
    }
}

EdgeSet exhaustive_reconstruct(CountingOracle& o, const VertexSet& u) {
    EdgeSet edges;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (o.query(u[i], u[j]) == 1) edges.add(u[i], u[j]);
    return edges;
}

EdgeSet reconstruct_outerplanar(CountingOracle& o, int n, const BalancedPartitionConfig& cfg,
                                Rng& rng, BalancedPartitionStats* stats) {
    if (n != o.n()) throw std::invalid_argument("vertex count does not match the oracle");
    EdgeSet edges;
    std::vector<VertexSet> todo{range_set(n)};
    while (!todo.empty()) {
        VertexSet cur = std::move(todo.back());
        todo.pop_back();
        if (cur.size() < 10) {
            for (const auto& [a, b] : exhaustive_reconstruct(o, cur)) edges.add(a, b);
        } else {
            for (auto& part : balanced_partition(o, cur, cfg, rng, stats))
                todo.push_back(std::move(part));
        }
    }
    return edges;
}

}  // namespace recon
