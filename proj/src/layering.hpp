#ifndef SUBFREE_LAYERING_HPP
#define SUBFREE_LAYERING_HPP

#include <optional>
#include <variant>

#include "dp.hpp"
#include "treewidth.hpp"

namespace subfree {

/// Vertex-to-layer map where every edge spans at most one layer boundary.
struct Layering {
    std::vector<int> layer_of;  // per vertex, in [1, num_layers]
    int num_layers = 0;
};

/// Asserts layers lie in range and every edge spans <= 1. Throws InvalidInput.
void validate_layering(const Graph& g, const Layering& lay);

/// Layer = path coordinate of the product embedding. Throws InvalidEmbedding
/// when the embedding itself is broken.
Layering layering_from_embedding(const Graph& g, const ProductEmbedding& embed);

/// Layer = 1 + BFS distance from the root set (default: the minimum vertex of
/// each component).
Layering bfs_layering(const Graph& g, const std::vector<int>& roots = {});

/// Blocks of 3r consecutive layers tiling [1, 3r*ceil(L/3r)].
struct WindowPlan {
    int r = 0;
    struct Window {
        int lo, hi;                 // inclusive layer interval
        std::vector<int> vertices;  // sorted
    };
    std::vector<Window> windows;  // window j is windows[j-1]
};
WindowPlan window_plan(const Layering& lay, int r);

struct Infeasible {};
using ReduceResult = std::variant<PatternFamily, Infeasible>;

struct FrameworkOptions {
    int exact_threshold = 12;
    bool window_copy_check_by_dp = false;  // component detection via the solver instead of find_copy
};

/// Iterated family reduction: while some connected component C of a member F
/// has copies inside at least k+r odd windows, replace F by F minus C, or
/// report Infeasible when F is connected (or nothing of F remains). When
/// every member is connected, member copies in more than k odd windows also
/// force Infeasible. r stays the plan's r throughout.
ReduceResult reduce_family(const Graph& g, const WindowPlan& plan,
                           const PatternFamily& fam, int k,
                           const FrameworkOptions& opts = {});

/// Deletes the middle r layers of every odd window whose induced subgraph
/// holds no copy of any pattern component. Returns the surviving graph with
/// its vertex map back into g.
struct PrunedGraph {
    Graph graph;
    std::vector<int> orig_of;
};
PrunedGraph prune_middle_layers(const Graph& g, const Layering& lay,
                                const WindowPlan& plan, const PatternFamily& fam,
                                const FrameworkOptions& opts = {});

/// End-to-end layered solve: small layer counts go straight to the solver;
/// otherwise reduce the family, prune quiet windows, decompose the remainder
/// (per-component window decompositions when an embedding is given), solve,
/// and lift the witness back.
SolveOutcome layered_solve(const Graph& g, const Layering& lay, const PatternFamily& fam,
                           int k, const std::optional<ProductEmbedding>& embed = std::nullopt,
                           const FrameworkOptions& opts = {});

}  // namespace subfree

#endif
