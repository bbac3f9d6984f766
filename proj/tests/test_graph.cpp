#include <doctest.h>

#include "graph.hpp"
#include "test_support.hpp"

using namespace subfree;
namespace ts = subfree::testing;

TEST_CASE("build_graph basics") {
    Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.n == 3);
    CHECK(k3.edge_count() == 3);

    Graph empty2 = build_graph(2, {});
    CHECK(empty2.n == 2);
    CHECK(empty2.edge_count() == 0);

    Graph dedup = build_graph(3, {{0, 1}, {1, 0}});
    CHECK(dedup.edge_count() == 1);

    CHECK_THROWS_AS(build_graph(2, {{0, 2}}), Error);
    CHECK_THROWS_AS(build_graph(2, {{1, 1}}), Error);
    try {
        build_graph(2, {{1, 1}});
    } catch (const Error& e) {
        CHECK(e.code == Err::self_loop);
    }
}

TEST_CASE("connected components") {
    Graph k3 = ts::complete_graph(3);
    auto c1 = connected_components(k3);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0] == std::vector<int>{0, 1, 2});

    Graph two_edges = build_graph(4, {{0, 1}, {2, 3}});
    CHECK(connected_components(two_edges).size() == 2);

    Graph iso3 = build_graph(3, {});
    CHECK(connected_components(iso3).size() == 3);

    // blocks are pairwise nonadjacent
    Rng rng(7);
    for (int it = 0; it < 30; ++it) {
        Graph g = ts::random_graph(rng, rng.range(2, 9), rng.range(0, 8));
        auto blocks = connected_components(g);
        for (size_t a = 0; a < blocks.size(); ++a)
            for (size_t b = a + 1; b < blocks.size(); ++b)
                for (int u : blocks[a])
                    for (int v : blocks[b]) CHECK(!g.has_edge(u, v));
    }
}

TEST_CASE("find_copy on fixed examples") {
    Graph k3 = ts::complete_graph(3);
    Graph k4 = ts::complete_graph(4);
    Graph p4 = ts::path_graph(4);

    auto same = find_copy(k3, k3);
    REQUIRE(same.has_value());
    std::vector<int> sorted = same->mapping;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{0, 1, 2});

    CHECK(!find_copy(k3, p4).has_value());

    CHECK(find_copy(k4, k3).has_value());
    // frozen from the exhaustive vertex-set enumeration
    CHECK(ts::count_copy_vertex_sets(k4, k3) == 4);
}

TEST_CASE("find_copy agrees with exhaustive injection search") {
    Rng rng(11);
    auto pool = ts::pattern_pool();
    for (int it = 0; it < 200; ++it) {
        Graph host = ts::random_graph(rng, rng.range(1, 8), rng.range(0, 12));
        const Graph& pat = pool[rng.below(pool.size())];
        std::vector<Edge> forbidden;
        for (Edge e : host.edges)
            if (rng.below(4) == 0) forbidden.push_back(e);
        bool mine = find_copy(host, pat, forbidden).has_value();
        bool ref = ts::injection_exists(host, pat, forbidden);
        CHECK(mine == ref);
        if (mine) {
            auto emb = find_copy(host, pat, forbidden);
            // embedding actually realizes the pattern
            std::set<int> used;
            for (int x : emb->mapping) CHECK(used.insert(x).second);
            for (auto [u, v] : pat.edges) {
                Edge he = make_edge(emb->mapping[u], emb->mapping[v]);
                CHECK(host.has_edge(he.first, he.second));
                for (Edge f : forbidden) CHECK(he != f);
            }
        }
    }
}

TEST_CASE("is_family_free") {
    Graph p4 = ts::path_graph(4);
    PatternFamily famP4({p4});
    CHECK(is_family_free(p4, famP4, {{1, 2}}));

    Graph k4 = ts::complete_graph(4);
    PatternFamily famK3({ts::complete_graph(3)});
    CHECK(!is_family_free(k4, famK3, {}));

    Graph two_tri = ts::disjoint_union(ts::complete_graph(3), ts::complete_graph(3));
    PatternFamily fam2K3({two_tri});
    CHECK(is_family_free(two_tri, fam2K3, {{0, 1}}));

    CHECK_THROWS_AS(is_family_free(p4, famP4, {{0, 3}}), Error);
}

TEST_CASE("pattern family invariants") {
    Graph k3 = ts::complete_graph(3);
    Graph two_k2 = build_graph(4, {{0, 1}, {2, 3}});
    PatternFamily fam({k3, two_k2});
    CHECK(fam.r == 4);
    CHECK(fam.components[0].size() == 1);
    CHECK(fam.components[1].size() == 2);
    CHECK_THROWS_AS(PatternFamily({build_graph(0, {})}), Error);
}
