#include "nice_tree.hpp"

#include <algorithm>
#include <functional>

namespace subfree {

namespace {

struct Builder {
    const Graph& g;
    const TreeDecomposition& td;
    std::vector<NiceNode> nodes;
    std::vector<std::vector<int>> td_adj;

    explicit Builder(const Graph& g_, const TreeDecomposition& td_) : g(g_), td(td_) {
        td_adj.assign(td.nodes, {});
        for (auto [a, b] : td.tree_edges) {
            td_adj[a].push_back(b);
            td_adj[b].push_back(a);
        }
        for (auto& a : td_adj) std::sort(a.begin(), a.end());
    }

    int add(NiceNode n) {
        nodes.push_back(std::move(n));
        return static_cast<int>(nodes.size()) - 1;
    }

    // leaf() then introduce the bag one vertex at a time
    int leaf_chain(const std::vector<int>& bag) {
        int cur = add({NiceNode::leaf, {}, -1, -1, -1, {-1, -1}, 0, 0});
        std::vector<int> sofar;
        for (int v : bag) {
            sofar.push_back(v);
            cur = add({NiceNode::introduce_vertex, sofar, cur, -1, v, {-1, -1}, 0, 0});
        }
        return cur;
    }

    // forget from/introduce to transform the top bag `from` into `to`
    int adjust(int top, const std::vector<int>& from, const std::vector<int>& to) {
        std::vector<int> cur = from;
        for (int v : from) {
            if (std::binary_search(to.begin(), to.end(), v)) continue;
            cur.erase(std::find(cur.begin(), cur.end(), v));
            top = add({NiceNode::forget_vertex, cur, top, -1, v, {-1, -1}, 0, 0});
        }
        for (int v : to) {
            if (std::binary_search(from.begin(), from.end(), v)) continue;
            cur.insert(std::upper_bound(cur.begin(), cur.end(), v), v);
            top = add({NiceNode::introduce_vertex, cur, top, -1, v, {-1, -1}, 0, 0});
        }
        return top;
    }

    int build(int t, int parent) {
        std::vector<int> children;
        for (int s : td_adj[t])
            if (s != parent) children.push_back(s);
        if (children.empty()) return leaf_chain(td.bags[t]);
        std::vector<int> tops;
        for (int c : children) tops.push_back(adjust(build(c, t), td.bags[c], td.bags[t]));
        int cur = tops[0];
        for (size_t i = 1; i < tops.size(); ++i)
            cur = add({NiceNode::join, td.bags[t], cur, tops[i], -1, {-1, -1}, 0, 0});
        return cur;
    }
};

}  // namespace

NiceTree make_nice(const Graph& g, const TreeDecomposition& td) {
    auto violations = validate_td(g, td);
    if (!violations.empty())
        throw Error(Err::invalid_decomposition,
                    violations[0].condition + ": " + violations[0].detail);

    Builder b(g, td);
    NiceTree nt;
    if (td.nodes == 0) {
        nt.nodes.push_back({NiceNode::leaf, {}, -1, -1, -1, {-1, -1}, 0, 0});
        nt.root = 0;
    } else {
        int top = b.build(0, -1);
        top = b.adjust(top, b.td.bags[0], {});
        nt.nodes = std::move(b.nodes);
        nt.root = top;
    }

    // Find, for every graph edge, the shallowest node whose bag holds both
    // endpoints, and splice an introduce-edge chain directly above it.
    std::vector<int> parent(nt.nodes.size(), -1), depth(nt.nodes.size(), 0);
    std::function<void(int)> dfs_depth = [&](int t) {
        const auto& nd = nt.nodes[t];
        for (int c : {nd.child, nd.child2})
            if (c != -1) {
                parent[c] = t;
                depth[c] = depth[t] + 1;
                dfs_depth(c);
            }
    };
    dfs_depth(nt.root);

    std::map<int, std::vector<Edge>> per_top;  // node -> edges topping there
    for (Edge e : g.edges) {
        int best = -1;
        for (size_t t = 0; t < nt.nodes.size(); ++t) {
            const auto& bag = nt.nodes[t].bag;
            if (std::binary_search(bag.begin(), bag.end(), e.first) &&
                std::binary_search(bag.begin(), bag.end(), e.second)) {
                if (best == -1 || depth[t] < depth[best]) best = static_cast<int>(t);
            }
        }
        if (best == -1) throw Error(Err::internal, "edge not covered by any nice bag");
        per_top[best].push_back(e);
    }
    for (auto& [m, es] : per_top) {
        std::sort(es.begin(), es.end());
        int below = m;
        for (Edge e : es) {
            int node = static_cast<int>(nt.nodes.size());
            nt.nodes.push_back({NiceNode::introduce_edge, nt.nodes[m].bag, below, -1, -1, e, 0, 0});
            if (parent[m] == -1) {
                nt.root = node;
            } else {
                auto& p = nt.nodes[parent[m]];
                if (p.child == below || (below == m && p.child == m))
                    p.child = node;
                else if (p.child2 == below || (below == m && p.child2 == m))
                    p.child2 = node;
                else
                    throw Error(Err::internal, "nice tree splice lost a child link");
            }
            nt.edge_node[e] = node;
            below = node;
        }
    }

    // recompute traversal data on the final tree
    nt.post_order.clear();
    int timer = 0;
    std::function<void(int)> dfs = [&](int t) {
        nt.nodes[t].tin = timer++;
        const auto& nd = nt.nodes[t];
        for (int c : {nd.child, nd.child2})
            if (c != -1) dfs(c);
        nt.nodes[t].tout = timer - 1;
        nt.post_order.push_back(t);
    };
    dfs(nt.root);
    return nt;
}

TreeDecomposition nice_as_td(const NiceTree& nt) {
    TreeDecomposition td;
    td.nodes = static_cast<int>(nt.nodes.size());
    for (const auto& nd : nt.nodes) td.bags.push_back(nd.bag);
    for (int t = 0; t < td.nodes; ++t) {
        const auto& nd = nt.nodes[t];
        for (int c : {nd.child, nd.child2})
            if (c != -1) td.tree_edges.push_back(make_edge(t, c));
    }
    return td;
}

}  // namespace subfree
