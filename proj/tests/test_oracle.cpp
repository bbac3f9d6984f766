#include <doctest.h>

#include "oracle.hpp"
#include "test_support.hpp"

using namespace subfree;
namespace ts = subfree::testing;

TEST_CASE("oracle fixed examples") {
    Graph k3 = ts::complete_graph(3);
    PatternFamily famK3({k3});
    auto r = oracle_solve(k3, famK3, 1);
    CHECK(r.yes);
    CHECK(r.cost == 1);

    Graph k4 = ts::complete_graph(4);
    CHECK(!oracle_solve(k4, famK3, 1).yes);
    CHECK(!oracle_solve_by_enumeration(k4, famK3, 1).yes);

    // edgeless pattern present in the host: no at any budget
    Graph iso2 = build_graph(2, {});
    CHECK(!oracle_solve(k4, PatternFamily({iso2}), 5).yes);
}

TEST_CASE("branching oracle agrees with subset enumeration") {
    Rng rng(211);
    auto pool = ts::pattern_pool();
    for (int it = 0; it < 120; ++it) {
        int n = rng.range(2, 8);
        Graph g = ts::random_graph(rng, n, rng.range(0, std::min(12, n * (n - 1) / 2)));
        std::vector<Graph> pats{pool[rng.below(pool.size())]};
        if (rng.below(3) == 0) pats.push_back(pool[rng.below(pool.size())]);
        PatternFamily fam(pats);
        int k = rng.range(0, 3);
        auto a = oracle_solve(g, fam, k);
        auto b = oracle_solve_by_enumeration(g, fam, k);
        CHECK(a.yes == b.yes);
        if (a.yes) {
            CHECK(a.cost == b.cost);
            CHECK(is_family_free(g, fam, a.witness));
            CHECK(is_family_free(g, fam, b.witness));
        }
    }
}
