#pragma once

// Independent reference implementations used only by tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "flipgraph/geometry.hpp"

namespace oracle {

inline std::uint64_t catalan(int k) {
    std::vector<std::uint64_t> c(k + 1, 0);
    c[0] = 1;
    for (int i = 1; i <= k; ++i)
        for (int j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
    return c[k];
}

using i128 = __int128;

inline i128 cross(const flipgraph::Point& o, const flipgraph::Point& a, const flipgraph::Point& b) {
    return static_cast<i128>(a.x - o.x) * (b.y - o.y) - static_cast<i128>(a.y - o.y) * (b.x - o.x);
}

// Open segments pq and rs meet in a single interior point (parametric solve).
inline bool segments_cross(const flipgraph::Point& p, const flipgraph::Point& q, const flipgraph::Point& r,
                           const flipgraph::Point& s) {
    i128 dx1 = q.x - p.x, dy1 = q.y - p.y, dx2 = s.x - r.x, dy2 = s.y - r.y;
    i128 den = dx1 * dy2 - dy1 * dx2;
    if (den == 0) return false;
    i128 ex = r.x - p.x, ey = r.y - p.y;
    i128 tn = ex * dy2 - ey * dx2;
    i128 un = ex * dy1 - ey * dx1;
    if (den < 0) {
        den = -den;
        tn = -tn;
        un = -un;
    }
    return tn > 0 && tn < den && un > 0 && un < den;
}

// r strictly inside segment pq, via collinearity and bounding box.
inline bool on_open_segment(const flipgraph::Point& p, const flipgraph::Point& q, const flipgraph::Point& r) {
    if (cross(p, q, r) != 0) return false;
    if ((r.x == p.x && r.y == p.y) || (r.x == q.x && r.y == q.y)) return false;
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
           r.y <= std::max(p.y, q.y);
}

// Triangulations of a convex n-gon as sorted diagonal lists (u < v).
using Diags = std::vector<std::pair<int, int>>;

inline std::vector<Diags> convex_triangulations(int n) {
    std::map<std::pair<int, int>, std::vector<Diags>> memo;
    auto rec = [&](auto&& self, int i, int j) -> std::vector<Diags> {
        if (j - i < 2) return {{}};
        auto key = std::make_pair(i, j);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::vector<Diags> out;
        for (int k = i + 1; k < j; ++k)
            for (const auto& a : self(self, i, k))
                for (const auto& b : self(self, k, j)) {
                    Diags d = a;
                    d.insert(d.end(), b.begin(), b.end());
                    if (k - i >= 2) d.push_back({i, k});
                    if (j - k >= 2) d.push_back({k, j});
                    out.push_back(d);
                }
        memo[key] = out;
        return out;
    };
    auto all = rec(rec, 0, n - 1);
    for (auto& d : all) std::sort(d.begin(), d.end());
    return all;
}

// Flip graph of a convex n-gon: two triangulations are adjacent when they
// share all but one diagonal.
struct ConvexGraph {
    std::vector<Diags> nodes;
    std::map<Diags, int> index;
    std::vector<std::vector<int>> adj;

    explicit ConvexGraph(int n) : nodes(convex_triangulations(n)) {
        for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = static_cast<int>(i);
        adj.resize(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t j = i + 1; j < nodes.size(); ++j) {
                Diags common;
                std::set_intersection(nodes[i].begin(), nodes[i].end(), nodes[j].begin(), nodes[j].end(),
                                      std::back_inserter(common));
                if (common.size() + 1 == nodes[i].size()) {
                    adj[i].push_back(static_cast<int>(j));
                    adj[j].push_back(static_cast<int>(i));
                }
            }
    }

    std::vector<int> bfs(int s) const {
        std::vector<int> d(nodes.size(), -1);
        std::queue<int> q;
        q.push(s);
        d[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u])
                if (d[v] < 0) {
                    d[v] = d[u] + 1;
                    q.push(v);
                }
        }
        return d;
    }

    // Number of shortest paths s -> t by exhaustive DFS.
    long long geodesic_count(int s, int t) const {
        auto dt = bfs(t);
        long long count = 0;
        auto dfs = [&](auto&& self, int u) -> void {
            if (u == t) {
                ++count;
                return;
            }
            for (int v : adj[u])
                if (dt[v] == dt[u] - 1) self(self, v);
        };
        dfs(dfs, s);
        return count;
    }
};

}  // namespace oracle
