#ifndef SUBFREE_TREEWIDTH_HPP
#define SUBFREE_TREEWIDTH_HPP

#include <string>
#include <vector>

#include "graph.hpp"

namespace subfree {

/// Tree of bags. Conditions checked by validate_td:
///   T1 bags cover all vertices, T2 every edge lies inside some bag,
///   T3 the nodes holding any fixed vertex induce a connected subtree,
///   plus tree-ness of the node graph itself.
struct TreeDecomposition {
    int nodes = 0;
    std::vector<Edge> tree_edges;
    std::vector<std::vector<int>> bags;  // sorted

    int width() const {
        int w = -1;
        for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
        return w;
    }
};

struct TdViolation {
    std::string condition;  // "TREE", "T1", "T2", "T3"
    std::string detail;
};

std::vector<TdViolation> validate_td(const Graph& g, const TreeDecomposition& td);

/// Tree decomposition by min-fill, or exact width (subset dynamic program
/// over elimination orders) for components with at most `exact_threshold`
/// vertices. Disconnected graphs get per-component decompositions chained
/// through fresh empty bags.
TreeDecomposition compute_td(const Graph& g, int exact_threshold = 12);

/// Exact tree-width of g. Exposed for the window/solver paths and tests.
int exact_treewidth(const Graph& g);

/// Placement of a graph into the strong product of a factor graph h and a
/// path of length L: each vertex gets an (h vertex, layer) coordinate.
struct ProductEmbedding {
    Graph h;
    TreeDecomposition h_td;
    int path_length = 0;
    std::vector<std::pair<int, int>> placement;  // per G-vertex: (h vertex, layer in [1,L])
};

/// Checks injectivity, coordinate ranges, and the strong-product adjacency
/// rule for every edge of g. Throws InvalidEmbedding on failure.
void validate_embedding(const Graph& g, const ProductEmbedding& embed);

/// Decomposition of G[sub_vertices] obtained by widening each bag of the
/// factor decomposition across the layer interval [lo, hi]. The result is in
/// the induced subgraph's index space; width is at most
/// (hi-lo+1)*(width(h_td)+1) - 1.
struct WindowDecomposition {
    TreeDecomposition td;
    InducedSubgraph sub;
};
WindowDecomposition window_td(const Graph& g, const ProductEmbedding& embed,
                              const std::vector<int>& sub_vertices, int lo, int hi);

}  // namespace subfree

#endif
