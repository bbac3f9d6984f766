#include <doctest.h>

#include "dp.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

using namespace subfree;
namespace ts = subfree::testing;

namespace {
SolveOutcome run_dp(const Graph& g, const PatternFamily& fam, int k) {
    return dp_solve(g, compute_td(g), fam, k);
}
}  // namespace

TEST_CASE("dp_solve on the fixed examples") {
    Graph k3 = ts::complete_graph(3);
    PatternFamily famK3({k3});
    auto r1 = run_dp(k3, famK3, 1);
    CHECK(r1.yes);
    CHECK(r1.cost == 1);
    CHECK(is_family_free(k3, famK3, r1.witness));

    Graph k4 = ts::complete_graph(4);
    CHECK(!run_dp(k4, famK3, 1).yes);  // every single deletion leaves triangles
    auto r2 = run_dp(k4, famK3, 2);
    CHECK(r2.yes);
    CHECK(r2.cost == 2);

    Graph p4 = ts::path_graph(4);
    PatternFamily famP4({p4});
    CHECK(!run_dp(p4, famP4, 0).yes);
    auto r3 = run_dp(p4, famP4, 1);
    CHECK(r3.yes);
    CHECK(r3.cost == 1);

    Graph two_tri = ts::disjoint_union(k3, k3);
    PatternFamily fam2K3({two_tri});
    CHECK(!run_dp(two_tri, fam2K3, 0).yes);
    auto r4 = run_dp(two_tri, fam2K3, 1);
    CHECK(r4.yes);
    CHECK(r4.cost == 1);
}

TEST_CASE("dp_solve edge cases") {
    Graph k3 = ts::complete_graph(3);

    // invalid decomposition is rejected
    TreeDecomposition bad{1, {}, {{0, 1}}};
    CHECK_THROWS_AS(dp_solve(k3, bad, PatternFamily({k3}), 1), Error);

    // budget beyond the edge count still returns the exact minimum
    auto r = run_dp(k3, PatternFamily({k3}), 99);
    CHECK(r.yes);
    CHECK(r.cost == 1);
    CHECK(!r.warning.empty());

    // edgeless pattern that fits: unremovable
    Graph iso2 = build_graph(2, {});
    CHECK(!run_dp(k3, PatternFamily({iso2}), 3).yes);

    // pattern larger than the host never appears
    Graph k5 = ts::complete_graph(5);
    CHECK(run_dp(k3, PatternFamily({k5}), 0).yes);

    // pattern with an isolated vertex: K3 plus spare vertex
    Graph k3_iso = build_graph(4, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(run_dp(k3, PatternFamily({k3_iso}), 0).yes);  // no spare vertex in K3
    Graph k3_plus_point = ts::disjoint_union(k3, build_graph(1, {}));
    CHECK(!run_dp(k3_plus_point, PatternFamily({k3_iso}), 0).yes);
    auto ri = run_dp(k3_plus_point, PatternFamily({k3_iso}), 1);
    CHECK(ri.yes);
    CHECK(ri.cost == 1);

    // empty host
    Graph none = build_graph(0, {});
    CHECK(run_dp(none, PatternFamily({k3}), 0).yes);
}

TEST_CASE("dp_solve detects copies straddling components") {
    // family {2K3} on two far-apart triangles: no at k = 0 even though each
    // component alone is 2K3-free
    Graph two_tri = ts::disjoint_union(ts::complete_graph(3), ts::complete_graph(3));
    PatternFamily fam({two_tri});
    auto td = compute_td(two_tri);  // chained per-component decomposition
    CHECK(!dp_solve(two_tri, td, fam, 0).yes);
    CHECK(dp_solve(two_tri, td, fam, 1).yes);
}

TEST_CASE("dp_solve equals the oracle on a randomized corpus") {
    Rng rng(101);
    auto pool = ts::pattern_pool();
    int checked = 0;
    for (int it = 0; it < 150; ++it) {
        int n = rng.range(3, 9);
        Graph g = ts::random_graph(rng, n, rng.range(0, n + 4));
        std::vector<Graph> pats{pool[rng.below(pool.size())]};
        if (rng.below(2)) pats.push_back(pool[rng.below(pool.size())]);
        PatternFamily fam(pats);
        int k = rng.range(0, 3);
        auto mine = run_dp(g, fam, k);
        auto ref = oracle_solve(g, fam, k);
        CHECK(mine.yes == ref.yes);
        if (mine.yes) {
            CHECK(mine.cost == ref.cost);
            CHECK(is_family_free(g, fam, mine.witness));
        }
        ++checked;
    }
    CHECK(checked == 150);
}

TEST_CASE("dp_solve monotone in the budget") {
    Rng rng(131);
    auto pool = ts::pattern_pool();
    for (int it = 0; it < 40; ++it) {
        int n = rng.range(3, 8);
        Graph g = ts::random_graph(rng, n, rng.range(1, n + 3));
        PatternFamily fam({pool[rng.below(pool.size())]});
        SolveOutcome prev;
        bool prev_yes = false;
        for (int k = 0; k <= 3; ++k) {
            auto r = run_dp(g, fam, k);
            if (prev_yes) {
                CHECK(r.yes);
                CHECK(r.cost == prev.cost);
            }
            prev = r;
            prev_yes = r.yes;
        }
    }
}
