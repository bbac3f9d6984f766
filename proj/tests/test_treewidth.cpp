#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "nice_tree.hpp"
#include "test_support.hpp"
#include "treewidth.hpp"

using namespace subfree;
namespace ts = subfree::testing;

namespace {

// reference width: try every elimination order, take the best max back-degree
int width_by_order_enumeration(const Graph& g) {
    if (g.n == 0) return -1;
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    int best = g.n;
    do {
        std::vector<std::set<int>> adj(g.n);
        for (auto [u, v] : g.edges) {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        int width = 0;
        for (int v : order) {
            std::vector<int> nb(adj[v].begin(), adj[v].end());
            width = std::max(width, static_cast<int>(nb.size()));
            for (size_t i = 0; i < nb.size(); ++i)
                for (size_t j = i + 1; j < nb.size(); ++j) {
                    adj[nb[i]].insert(nb[j]);
                    adj[nb[j]].insert(nb[i]);
                }
            for (int w : nb) adj[w].erase(v);
            adj[v].clear();
            if (width >= best) break;
        }
        best = std::min(best, width);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

}  // namespace

TEST_CASE("validate_td examples") {
    Graph k3 = ts::complete_graph(3);
    TreeDecomposition single{1, {}, {{0, 1, 2}}};
    CHECK(validate_td(k3, single).empty());
    CHECK(single.width() == 2);

    Graph p3 = ts::path_graph(3);
    TreeDecomposition good{2, {{0, 1}}, {{0, 1}, {1, 2}}};
    CHECK(validate_td(p3, good).empty());
    CHECK(good.width() == 1);

    TreeDecomposition bad{2, {{0, 1}}, {{0, 1}, {2}}};
    auto v = validate_td(p3, bad);
    REQUIRE(!v.empty());
    CHECK(v[0].condition == "T2");

    TreeDecomposition cycle{3, {{0, 1}, {1, 2}, {0, 2}}, {{0, 1}, {1, 2}, {0, 2}}};
    auto v2 = validate_td(p3, cycle);
    REQUIRE(!v2.empty());
    CHECK(v2[0].condition == "TREE");

    // T3: vertex 0 appears in two disconnected bags
    Graph p4 = ts::path_graph(4);
    TreeDecomposition t3bad{3, {{0, 1}, {1, 2}}, {{0, 1}, {1, 2}, {0, 2, 3}}};
    bool found_t3 = false;
    for (const auto& viol : validate_td(p4, t3bad))
        if (viol.condition == "T3") found_t3 = true;
    CHECK(found_t3);
}

TEST_CASE("compute_td fixed widths") {
    CHECK(compute_td(ts::complete_graph(4)).width() == 3);
    CHECK(compute_td(ts::cycle_graph(5)).width() == 2);  // frozen from order enumeration
    CHECK(width_by_order_enumeration(ts::cycle_graph(5)) == 2);

    Graph tree6 = build_graph(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}});
    CHECK(compute_td(tree6).width() == 1);

    Graph empty = build_graph(0, {});
    TreeDecomposition etd = compute_td(empty);
    CHECK(etd.nodes == 1);
    CHECK(validate_td(empty, etd).empty());
}

TEST_CASE("compute_td always validates and matches exact width on small graphs") {
    Rng rng(23);
    for (int it = 0; it < 120; ++it) {
        int n = rng.range(1, 7);
        Graph g = ts::random_graph(rng, n, rng.range(0, n * (n - 1) / 2));
        TreeDecomposition td = compute_td(g);
        CHECK(validate_td(g, td).empty());
        CHECK(td.width() == width_by_order_enumeration(g));
        CHECK(exact_treewidth(g) == width_by_order_enumeration(g));
    }
    // disconnected graphs chain through empty bags and stay valid
    Graph dis = ts::disjoint_union(ts::complete_graph(3), ts::cycle_graph(4));
    dis = ts::disjoint_union(dis, build_graph(2, {}));
    TreeDecomposition td = compute_td(dis);
    CHECK(validate_td(dis, td).empty());
    CHECK(td.width() == 2);
}

TEST_CASE("make_nice structure") {
    Graph k3 = ts::complete_graph(3);
    TreeDecomposition single{1, {}, {{0, 1, 2}}};
    NiceTree nt = make_nice(k3, single);

    int introduces = 0, forgets = 0, edge_intros = 0, joins = 0, leaves = 0;
    for (const auto& nd : nt.nodes) {
        switch (nd.kind) {
            case NiceNode::introduce_vertex: ++introduces; break;
            case NiceNode::forget_vertex: ++forgets; break;
            case NiceNode::introduce_edge: ++edge_intros; break;
            case NiceNode::join: ++joins; break;
            case NiceNode::leaf: ++leaves; break;
        }
    }
    CHECK(introduces == 3);
    CHECK(forgets == 3);
    CHECK(edge_intros == 3);
    CHECK(joins == 0);
    CHECK(leaves == 1);
    CHECK(nt.nodes[nt.root].bag.empty());

    TreeDecomposition as_td = nice_as_td(nt);
    CHECK(validate_td(k3, as_td).empty());
    CHECK(as_td.width() == single.width());

    // empty graph
    Graph empty = build_graph(0, {});
    NiceTree nte = make_nice(empty, compute_td(empty));
    CHECK(nte.nodes.size() >= 1);

    CHECK_THROWS_AS(make_nice(k3, TreeDecomposition{1, {}, {{0, 1}}}), Error);
}

TEST_CASE("make_nice on random graphs: valid, same width, each edge once") {
    Rng rng(31);
    for (int it = 0; it < 60; ++it) {
        int n = rng.range(1, 9);
        Graph g = ts::random_graph(rng, n, rng.range(0, n + 5));
        TreeDecomposition td = compute_td(g);
        NiceTree nt = make_nice(g, td);
        TreeDecomposition as_td = nice_as_td(nt);
        CHECK(validate_td(g, as_td).empty());
        CHECK(as_td.width() <= td.width());

        std::map<Edge, int> seen;
        for (const auto& nd : nt.nodes)
            if (nd.kind == NiceNode::introduce_edge) seen[nd.edge]++;
        CHECK(seen.size() == g.edges.size());
        for (auto [e, cnt] : seen) {
            CHECK(cnt == 1);
            CHECK(g.has_edge(e.first, e.second));
        }
        // kind-local bag relations
        for (const auto& nd : nt.nodes) {
            if (nd.kind == NiceNode::introduce_vertex) {
                auto child_bag = nt.nodes[nd.child].bag;
                child_bag.insert(std::upper_bound(child_bag.begin(), child_bag.end(), nd.vertex),
                                 nd.vertex);
                CHECK(nd.bag == child_bag);
            } else if (nd.kind == NiceNode::forget_vertex) {
                auto bag = nd.bag;
                bag.insert(std::upper_bound(bag.begin(), bag.end(), nd.vertex), nd.vertex);
                CHECK(bag == nt.nodes[nd.child].bag);
            } else if (nd.kind == NiceNode::join) {
                CHECK(nd.bag == nt.nodes[nd.child].bag);
                CHECK(nd.bag == nt.nodes[nd.child2].bag);
            } else if (nd.kind == NiceNode::introduce_edge) {
                CHECK(nd.bag == nt.nodes[nd.child].bag);
                CHECK(std::binary_search(nd.bag.begin(), nd.bag.end(), nd.edge.first));
                CHECK(std::binary_search(nd.bag.begin(), nd.bag.end(), nd.edge.second));
            } else {
                CHECK(nd.bag.empty());
            }
        }
    }
}

TEST_CASE("window_td from spec examples") {
    // single-vertex factor: the path P5 placed along layers 1..5
    Graph h = build_graph(1, {});
    ProductEmbedding embed;
    embed.h = h;
    embed.h_td = compute_td(h);
    embed.path_length = 5;
    for (int i = 1; i <= 5; ++i) embed.placement.push_back({0, i});
    Graph p5 = ts::path_graph(5);
    validate_embedding(p5, embed);

    auto wd = window_td(p5, embed, {0, 1, 2}, 1, 3);
    CHECK(validate_td(wd.sub.graph, wd.td).empty());
    CHECK(wd.td.width() <= 3 * (embed.h_td.width() + 1) - 1);
    for (const auto& bag : wd.td.bags) CHECK(bag.size() <= 3);

    CHECK_THROWS_AS(window_td(p5, embed, {0, 1, 2, 3}, 1, 3), Error);
    try {
        window_td(p5, embed, {0, 1, 2, 3}, 1, 3);
    } catch (const Error& e) {
        CHECK(e.code == Err::layer_out_of_range);
    }

    // one-layer interval reproduces the factor decomposition restricted
    auto wd1 = window_td(p5, embed, {2}, 3, 3);
    CHECK(validate_td(wd1.sub.graph, wd1.td).empty());
    CHECK(wd1.td.width() <= embed.h_td.width() + 0 + 1 - 1);
}

TEST_CASE("window_td on random embeddings respects the product width bound") {
    Rng rng(37);
    for (int it = 0; it < 50; ++it) {
        int hn = rng.range(1, 4);
        Graph h = ts::random_graph(rng, hn, rng.range(0, hn * (hn - 1) / 2));
        int L = rng.range(3, 10);
        ProductEmbedding embed;
        embed.h = h;
        embed.h_td = compute_td(h);
        embed.path_length = L;
        // choose a random sub-multiset of product positions
        std::vector<std::pair<int, int>> spots;
        for (int x = 0; x < hn; ++x)
            for (int l = 1; l <= L; ++l)
                if (rng.below(2)) spots.push_back({x, l});
        if (spots.empty()) spots.push_back({0, 1});
        int gn = static_cast<int>(spots.size());
        std::vector<Edge> edges;
        for (int u = 0; u < gn; ++u)
            for (int v = u + 1; v < gn; ++v) {
                auto [hu, lu] = spots[u];
                auto [hv, lv] = spots[v];
                bool adj = (hu == hv || h.has_edge(hu, hv)) && std::abs(lu - lv) <= 1;
                if (adj && rng.below(2)) edges.push_back({u, v});
            }
        Graph g = build_graph(gn, edges);
        embed.placement = spots;
        validate_embedding(g, embed);

        int lo = rng.range(1, L), hi = rng.range(lo, L);
        std::vector<int> sub;
        for (int v = 0; v < gn; ++v)
            if (spots[v].second >= lo && spots[v].second <= hi) sub.push_back(v);
        auto wd = window_td(g, embed, sub, lo, hi);
        CHECK(validate_td(wd.sub.graph, wd.td).empty());
        CHECK(wd.td.width() <= (hi - lo + 1) * (embed.h_td.width() + 1) - 1);
    }
}

TEST_CASE("validate_embedding rejects bad placements") {
    Graph g = build_graph(2, {{0, 1}});
    ProductEmbedding e;
    e.h = build_graph(2, {});
    e.h_td = compute_td(e.h);
    e.path_length = 3;
    e.placement = {{0, 1}, {1, 3}};  // factor not adjacent, layers 2 apart
    CHECK_THROWS_AS(validate_embedding(g, e), Error);
    e.placement = {{0, 1}, {0, 1}};  // not injective
    CHECK_THROWS_AS(validate_embedding(g, e), Error);
    e.placement = {{0, 1}, {0, 2}};  // same factor vertex, adjacent layers: fine
    CHECK_NOTHROW(validate_embedding(g, e));
}
