#include "treewidth.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace subfree {

std::vector<TdViolation> validate_td(const Graph& g, const TreeDecomposition& td) {
    std::vector<TdViolation> out;
    int N = td.nodes;
    if (static_cast<int>(td.bags.size()) != N) {
        out.push_back({"TREE", "bag count does not match node count"});
        return out;
    }
    for (auto [a, b] : td.tree_edges)
        if (a < 0 || a >= N || b < 0 || b >= N || a == b) {
            out.push_back({"TREE", "tree edge endpoint out of range"});
            return out;
        }
    if (N > 0) {
        if (static_cast<int>(td.tree_edges.size()) != N - 1)
            out.push_back({"TREE", "tree must have exactly nodes-1 edges"});
        UnionFind uf(N);
        for (auto [a, b] : td.tree_edges)
            if (!uf.unite(a, b)) out.push_back({"TREE", "cycle in tree edges"});
        int roots = 0;
        for (int i = 0; i < N; ++i)
            if (uf.find(i) == i) ++roots;
        if (roots != 1 && static_cast<int>(td.tree_edges.size()) == N - 1)
            out.push_back({"TREE", "tree is disconnected"});
    } else if (g.n > 0) {
        out.push_back({"T1", "no nodes but graph has vertices"});
        return out;
    }
    if (!out.empty()) return out;  // conditions below assume a tree

    std::vector<char> covered(g.n, 0);
    for (const auto& b : td.bags)
        for (int v : b) {
            if (v < 0 || v >= g.n) {
                out.push_back({"T1", "bag vertex " + std::to_string(v) + " out of range"});
                return out;
            }
            covered[v] = 1;
        }
    for (int v = 0; v < g.n; ++v)
        if (!covered[v]) out.push_back({"T1", "vertex " + std::to_string(v) + " in no bag"});

    for (auto [u, v] : g.edges) {
        bool ok = false;
        for (const auto& b : td.bags)
            if (std::binary_search(b.begin(), b.end(), u) &&
                std::binary_search(b.begin(), b.end(), v)) {
                ok = true;
                break;
            }
        if (!ok)
            out.push_back({"T2", "edge (" + std::to_string(u) + "," + std::to_string(v) + ") in no bag"});
    }

    // T3: nodes holding v must form one connected block of the tree
    std::vector<std::vector<int>> node_adj(N);
    for (auto [a, b] : td.tree_edges) {
        node_adj[a].push_back(b);
        node_adj[b].push_back(a);
    }
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> holders;
        for (int t = 0; t < N; ++t)
            if (std::binary_search(td.bags[t].begin(), td.bags[t].end(), v)) holders.push_back(t);
        if (holders.size() <= 1) continue;
        std::set<int> holder_set(holders.begin(), holders.end());
        std::vector<int> stack{holders[0]};
        std::set<int> seen{holders[0]};
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int s : node_adj[t])
                if (holder_set.count(s) && !seen.count(s)) {
                    seen.insert(s);
                    stack.push_back(s);
                }
        }
        if (seen.size() != holders.size())
            out.push_back({"T3", "vertex " + std::to_string(v) + " induces a disconnected subtree"});
    }
    return out;
}

namespace {

// Bag construction from an elimination order: eliminate in order, bag(v) is v
// plus its current (fill) neighborhood; v's node hangs off the node of the
// first later-eliminated bag member.
TreeDecomposition td_from_order(const Graph& g, const std::vector<int>& order) {
    int n = g.n;
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    TreeDecomposition td;
    td.nodes = n;
    td.bags.assign(n, {});
    std::vector<int> node_of(n);
    for (int i = 0; i < n; ++i) node_of[order[i]] = i;

    for (int i = 0; i < n; ++i) {
        int v = order[i];
        std::vector<int> nb(adj[v].begin(), adj[v].end());
        td.bags[i] = nb;
        td.bags[i].push_back(v);
        std::sort(td.bags[i].begin(), td.bags[i].end());
        int parent = -1;
        for (int w : nb)
            if (parent == -1 || pos[w] < pos[parent]) parent = w;
        if (parent != -1) td.tree_edges.push_back(make_edge(i, node_of[parent]));
        for (int a : nb)
            for (int b : nb)
                if (a < b) {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
        for (int w : nb) adj[w].erase(v);
        adj[v].clear();
    }
    // connect any leftover forest pieces (disconnected input) arbitrarily
    if (n > 0) {
        UnionFind uf(n);
        for (auto [a, b] : td.tree_edges) uf.unite(a, b);
        for (int i = 1; i < n; ++i)
            if (uf.find(i) != uf.find(0)) {
                uf.unite(0, i);
                td.tree_edges.push_back(make_edge(0, i));
            }
    }
    return td;
}

std::vector<int> min_fill_order(const Graph& g) {
    int n = g.n;
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<char> gone(n, 0);
    std::vector<int> order;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long best_fill = -1;
        for (int v = 0; v < n; ++v) {
            if (gone[v]) continue;
            long fill = 0;
            std::vector<int> nb(adj[v].begin(), adj[v].end());
            for (size_t i = 0; i < nb.size(); ++i)
                for (size_t j = i + 1; j < nb.size(); ++j)
                    if (!adj[nb[i]].count(nb[j])) ++fill;
            if (best == -1 || fill < best_fill) {
                best = v;
                best_fill = fill;
            }
        }
        order.push_back(best);
        gone[best] = 1;
        std::vector<int> nb(adj[best].begin(), adj[best].end());
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                adj[nb[i]].insert(nb[j]);
                adj[nb[j]].insert(nb[i]);
            }
        for (int w : nb) adj[w].erase(best);
        adj[best].clear();
    }
    return order;
}

// Neighbors of v reachable through the eliminated set S (bitmask), i.e. the
// back-degree of v if eliminated right after S.
int elim_degree(const Graph& g, uint32_t S, int v) {
    uint32_t seen = 1u << v;
    std::vector<int> stack{v};
    int deg = 0;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int w : g.adj[x]) {
            if (seen & (1u << w)) continue;
            seen |= 1u << w;
            if (S & (1u << w))
                stack.push_back(w);  // pass through eliminated vertices
            else
                ++deg;
        }
    }
    return deg;
}

// Exact tree-width by dynamic programming over subsets of eliminated
// vertices. Also yields an optimal elimination order via backpointers.
std::vector<int> exact_order(const Graph& g, int* width_out) {
    int n = g.n;
    if (n == 0) {
        *width_out = -1;
        return {};
    }
    if (n > 20) throw Error(Err::too_large, "exact tree-width limited to 20 vertices");
    uint32_t full = (1u << n) - 1;
    std::vector<int> f(full + 1, 0), back(full + 1, -1);
    for (uint32_t S = 1; S <= full; ++S) {
        int best = g.n + 1, bestv = -1;
        for (int v = 0; v < n; ++v) {
            if (!(S & (1u << v))) continue;
            uint32_t T = S & ~(1u << v);
            int cand = std::max(f[T], elim_degree(g, T, v));
            if (cand < best) {
                best = cand;
                bestv = v;
            }
        }
        f[S] = best;
        back[S] = bestv;
    }
    *width_out = f[full];
    std::vector<int> order(n);
    uint32_t S = full;
    for (int i = n - 1; i >= 0; --i) {
        order[i] = back[S];
        S &= ~(1u << back[S]);
    }
    return order;
}

}  // namespace

int exact_treewidth(const Graph& g) {
    int w = -1;
    auto comps = connected_components(g);
    for (const auto& c : comps) {
        auto sub = induced_subgraph(g, c);
        int cw;
        exact_order(sub.graph, &cw);
        w = std::max(w, cw);
    }
    return w;
}

TreeDecomposition compute_td(const Graph& g, int exact_threshold) {
    if (g.n == 0) {
        TreeDecomposition td;
        td.nodes = 1;
        td.bags = {{}};
        return td;
    }
    auto comps = connected_components(g);
    std::vector<TreeDecomposition> parts;
    for (const auto& c : comps) {
        auto sub = induced_subgraph(g, c);
        std::vector<int> order;
        if (sub.graph.n <= exact_threshold) {
            int w;
            order = exact_order(sub.graph, &w);
        } else {
            order = min_fill_order(sub.graph);
        }
        TreeDecomposition td = td_from_order(sub.graph, order);
        for (auto& bag : td.bags)
            for (auto& v : bag) v = sub.orig_of[v];
        for (auto& bag : td.bags) std::sort(bag.begin(), bag.end());
        parts.push_back(std::move(td));
    }
    if (parts.size() == 1) return parts[0];
    // chain components through fresh empty bags so the solver sees one tree
    TreeDecomposition out;
    std::vector<int> first_node(parts.size()), offset(parts.size());
    for (size_t i = 0; i < parts.size(); ++i) {
        offset[i] = out.nodes;
        first_node[i] = out.nodes;
        out.nodes += parts[i].nodes;
        for (const auto& b : parts[i].bags) out.bags.push_back(b);
        for (auto [a, b] : parts[i].tree_edges)
            out.tree_edges.push_back(make_edge(a + offset[i], b + offset[i]));
    }
    for (size_t i = 0; i + 1 < parts.size(); ++i) {
        int link = out.nodes++;
        out.bags.push_back({});
        out.tree_edges.push_back(make_edge(first_node[i], link));
        out.tree_edges.push_back(make_edge(link, first_node[i + 1]));
    }
    return out;
}

void validate_embedding(const Graph& g, const ProductEmbedding& embed) {
    if (static_cast<int>(embed.placement.size()) != g.n)
        throw Error(Err::invalid_embedding, "placement size does not match vertex count");
    if (embed.path_length < 1)
        throw Error(Err::invalid_embedding, "path length must be positive");
    std::set<std::pair<int, int>> seen;
    for (auto [hv, layer] : embed.placement) {
        if (hv < 0 || hv >= embed.h.n)
            throw Error(Err::invalid_embedding, "factor coordinate out of range");
        if (layer < 1 || layer > embed.path_length)
            throw Error(Err::invalid_embedding, "layer coordinate out of range");
        if (!seen.insert({hv, layer}).second)
            throw Error(Err::invalid_embedding, "placement is not injective");
    }
    for (auto [u, v] : g.edges) {
        auto [hu, lu] = embed.placement[u];
        auto [hv, lv] = embed.placement[v];
        bool h_ok = (hu == hv) || embed.h.has_edge(hu, hv);
        if (!h_ok || std::abs(lu - lv) > 1)
            throw Error(Err::invalid_embedding,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") violates strong-product adjacency");
    }
}

WindowDecomposition window_td(const Graph& g, const ProductEmbedding& embed,
                              const std::vector<int>& sub_vertices, int lo, int hi) {
    validate_embedding(g, embed);
    if (lo > hi) throw Error(Err::invalid_input, "empty layer interval");
    for (int v : sub_vertices) {
        if (v < 0 || v >= g.n) throw Error(Err::index_out_of_range, "sub vertex out of range");
        int layer = embed.placement[v].second;
        if (layer < lo || layer > hi)
            throw Error(Err::layer_out_of_range,
                        "vertex " + std::to_string(v) + " at layer " + std::to_string(layer) +
                            " outside [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
    }
    WindowDecomposition out;
    out.sub = induced_subgraph(g, sub_vertices);
    std::vector<int> newid(g.n, -1);
    for (size_t i = 0; i < out.sub.orig_of.size(); ++i) newid[out.sub.orig_of[i]] = static_cast<int>(i);

    const TreeDecomposition& hd = embed.h_td;
    out.td.nodes = std::max(hd.nodes, 1);
    out.td.bags.assign(out.td.nodes, {});
    out.td.tree_edges = hd.tree_edges;
    // bag of node t: every sub vertex whose factor coordinate lies in B_t
    for (int v : out.sub.orig_of) {
        int hv = embed.placement[v].first;
        for (int t = 0; t < hd.nodes; ++t)
            if (std::binary_search(hd.bags[t].begin(), hd.bags[t].end(), hv))
                out.td.bags[t].push_back(newid[v]);
    }
    for (auto& b : out.td.bags) std::sort(b.begin(), b.end());
    return out;
}

}  // namespace subfree
