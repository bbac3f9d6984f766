#ifndef SUBFREE_TEST_SUPPORT_HPP
#define SUBFREE_TEST_SUPPORT_HPP

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "graph.hpp"
#include "util.hpp"

namespace subfree::testing {

// Exhaustive injection search, deliberately independent of find_copy: tries
// every injective map pattern -> host and checks pattern edges directly.
inline bool injection_exists(const Graph& host, const Graph& pattern,
                             const std::vector<Edge>& forbidden = {}) {
    std::vector<int> image(pattern.n, -1);
    std::vector<char> used(host.n, 0);
    auto edge_ok = [&](int a, int b) {
        if (!host.has_edge(a, b)) return false;
        for (auto [u, v] : forbidden)
            if (make_edge(a, b) == make_edge(u, v)) return false;
        return true;
    };
    std::function<bool(int)> rec = [&](int pv) -> bool {
        if (pv == pattern.n) return true;
        for (int x = 0; x < host.n; ++x) {
            if (used[x]) continue;
            bool ok = true;
            for (int w : pattern.adj[pv])
                if (w < pv && !edge_ok(x, image[w])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            image[pv] = x;
            used[x] = 1;
            if (rec(pv + 1)) return true;
            image[pv] = -1;
            used[x] = 0;
        }
        return false;
    };
    return rec(0);
}

// All distinct vertex sets carrying a copy of the pattern.
inline int count_copy_vertex_sets(const Graph& host, const Graph& pattern) {
    std::set<std::vector<int>> sets;
    std::vector<int> image(pattern.n, -1);
    std::vector<char> used(host.n, 0);
    std::function<void(int)> rec = [&](int pv) {
        if (pv == pattern.n) {
            std::vector<int> s(image.begin(), image.end());
            std::sort(s.begin(), s.end());
            sets.insert(s);
            return;
        }
        for (int x = 0; x < host.n; ++x) {
            if (used[x]) continue;
            bool ok = true;
            for (int w : pattern.adj[pv])
                if (w < pv && !host.has_edge(x, image[w])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            image[pv] = x;
            used[x] = 1;
            rec(pv + 1);
            image[pv] = -1;
            used[x] = 0;
        }
    };
    rec(0);
    return static_cast<int>(sets.size());
}

inline Graph random_graph(Rng& rng, int n, int m) {
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.push_back({u, v});
    // deterministic shuffle
    for (size_t i = all.size(); i > 1; --i) std::swap(all[i - 1], all[rng.below(i)]);
    all.resize(std::min<size_t>(m, all.size()));
    return build_graph(n, all);
}

inline Graph path_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return build_graph(n, es);
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back(make_edge(i, (i + 1) % n));
    return build_graph(n, es);
}

inline Graph complete_graph(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return build_graph(n, es);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> es = a.edges;
    for (auto [u, v] : b.edges) es.push_back({u + a.n, v + a.n});
    return build_graph(a.n + b.n, es);
}

// small pattern pool used by randomized corpora; includes disconnected
// patterns and patterns with isolated vertices
inline std::vector<Graph> pattern_pool() {
    Graph k2 = complete_graph(2);
    Graph k3 = complete_graph(3);
    Graph p3 = path_graph(3);
    Graph p4 = path_graph(4);
    Graph c4 = cycle_graph(4);
    Graph k4 = complete_graph(4);
    Graph two_k2 = disjoint_union(k2, k2);
    Graph k3_plus_iso = build_graph(4, {{0, 1}, {1, 2}, {0, 2}});
    Graph k2_plus_iso = build_graph(3, {{0, 1}});
    Graph p3_plus_k1 = build_graph(4, {{0, 1}, {1, 2}});
    return {k2, k3, p3, p4, c4, k4, two_k2, k3_plus_iso, k2_plus_iso, p3_plus_k1};
}

}  // namespace subfree::testing

#endif
