#include "graph.hpp"

#include <algorithm>
#include <set>

namespace subfree {

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

Graph build_graph(int n, const std::vector<Edge>& edge_list) {
    if (n < 0) throw Error(Err::invalid_input, "vertex count must be nonnegative");
    Graph g;
    g.n = n;
    std::set<Edge> dedup;
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(Err::index_out_of_range,
                        "edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw Error(Err::self_loop, "self-loop at vertex " + std::to_string(u));
        dedup.insert(make_edge(u, v));
    }
    g.edges.assign(dedup.begin(), dedup.end());
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> blocks;
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(blocks.size());
        blocks.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            blocks[id].push_back(v);
            for (int w : g.adj[v])
                if (comp[w] == -1) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(blocks[id].begin(), blocks[id].end());
    }
    return blocks;  // ordered by minimum vertex because seeds scan ascending
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> newid(g.n, -1);
    InducedSubgraph out;
    out.orig_of = verts;
    std::sort(out.orig_of.begin(), out.orig_of.end());
    out.orig_of.erase(std::unique(out.orig_of.begin(), out.orig_of.end()), out.orig_of.end());
    for (size_t i = 0; i < out.orig_of.size(); ++i) {
        int v = out.orig_of[i];
        if (v < 0 || v >= g.n) throw Error(Err::index_out_of_range, "induced vertex out of range");
        newid[v] = static_cast<int>(i);
    }
    std::vector<Edge> es;
    for (auto [u, v] : g.edges)
        if (newid[u] != -1 && newid[v] != -1) es.push_back(make_edge(newid[u], newid[v]));
    out.graph = build_graph(static_cast<int>(out.orig_of.size()), es);
    return out;
}

namespace {

// Matching order: per component, seed with the highest-degree vertex, then
// repeatedly pick the unplaced vertex with the most already-placed neighbors
// (degree, then index, as tie-breaks). Isolated vertices land last.
std::vector<int> matching_order(const Graph& pattern) {
    auto comps = connected_components(pattern);
    // larger components first so the tightest constraints come early
    std::stable_sort(comps.begin(), comps.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    std::vector<int> order;
    std::vector<char> placed(pattern.n, 0);
    for (const auto& comp : comps) {
        int seed = -1;
        for (int v : comp)
            if (seed == -1 || pattern.degree(v) > pattern.degree(seed)) seed = v;
        order.push_back(seed);
        placed[seed] = 1;
        for (size_t step = 1; step < comp.size(); ++step) {
            int best = -1, best_conn = -1;
            for (int v : comp) {
                if (placed[v]) continue;
                int conn = 0;
                for (int w : pattern.adj[v]) conn += placed[w];
                if (conn > best_conn ||
                    (conn == best_conn && best != -1 &&
                     (pattern.degree(v) > pattern.degree(best) ||
                      (pattern.degree(v) == pattern.degree(best) && v < best)))) {
                    best = v;
                    best_conn = conn;
                }
            }
            order.push_back(best);
            placed[best] = 1;
        }
    }
    return order;
}

struct CopySearch {
    const Graph& host;
    const Graph& pattern;
    const std::vector<Edge>& forbidden;
    std::vector<int> order;
    std::vector<int> image;       // pattern vertex -> host vertex or -1
    std::vector<char> used;       // host vertex taken

    bool edge_ok(int hu, int hv) const {
        if (!host.has_edge(hu, hv)) return false;
        return !std::binary_search(forbidden.begin(), forbidden.end(), make_edge(hu, hv));
    }

    bool extend(size_t pos) {
        if (pos == order.size()) return true;
        int u = order[pos];
        for (int x = 0; x < host.n; ++x) {
            if (used[x]) continue;
            bool ok = true;
            for (int w : pattern.adj[u]) {
                if (image[w] != -1 && !edge_ok(x, image[w])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[u] = x;
            used[x] = 1;
            if (extend(pos + 1)) return true;
            image[u] = -1;
            used[x] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<Embedding> find_copy(const Graph& host, const Graph& pattern,
                                   const std::vector<Edge>& forbidden_edges) {
    if (pattern.n > host.n) return std::nullopt;
    std::vector<Edge> forb = forbidden_edges;
    std::sort(forb.begin(), forb.end());
    CopySearch s{host, pattern, forb, matching_order(pattern),
                 std::vector<int>(pattern.n, -1), std::vector<char>(host.n, 0)};
    if (!s.extend(0)) return std::nullopt;
    return Embedding{s.image};
}

PatternFamily::PatternFamily(std::vector<Graph> pats) : patterns(std::move(pats)) {
    if (patterns.empty()) throw Error(Err::invalid_input, "pattern family must not be empty");
    for (const auto& p : patterns) {
        if (p.n == 0) throw Error(Err::invalid_input, "empty pattern (0 vertices) not allowed");
        r = std::max(r, p.n);
        components.push_back(connected_components(p));
    }
}

bool is_family_free(const Graph& host, const PatternFamily& fam,
                    const std::vector<Edge>& deleted) {
    for (auto [u, v] : deleted)
        if (!host.has_edge(u, v))
            throw Error(Err::unknown_edge,
                        "deleted edge (" + std::to_string(u) + "," + std::to_string(v) + ") not in host");
    for (const auto& p : fam.patterns)
        if (find_copy(host, p, deleted)) return false;
    return true;
}

}  // namespace subfree
