#ifndef SUBFREE_GRAPH_HPP
#define SUBFREE_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "util.hpp"

namespace subfree {

// Unordered edge stored with u < v.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Simple undirected graph on vertices 0..n-1. Edge set is deduplicated and
/// kept sorted; adjacency lists are derived and sorted.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;           // sorted, u < v
    std::vector<std::vector<int>> adj; // sorted neighbor lists

    Graph() = default;

    int edge_count() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    bool operator==(const Graph& o) const { return n == o.n && edges == o.edges; }
};

/// Validating constructor. Rejects out-of-range endpoints and self-loops;
/// duplicate edges collapse.
Graph build_graph(int n, const std::vector<Edge>& edge_list);

/// Partition of the vertex set into connected components, each block sorted,
/// blocks ordered by minimum vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Subgraph induced on `verts` with vertices relabelled 0..|verts|-1.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> orig_of;  // new index -> original vertex
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& verts);

/// Injective map from pattern vertices to host vertices; every pattern edge
/// maps to a host edge.
struct Embedding {
    std::vector<int> mapping;  // pattern vertex -> host vertex
};

/// Searches for a copy of `pattern` in `host` avoiding `forbidden_edges`.
/// Backtracking over pattern vertices in a degree-descending,
/// connectivity-first order; deterministic for fixed inputs.
std::optional<Embedding> find_copy(const Graph& host, const Graph& pattern,
                                   const std::vector<Edge>& forbidden_edges = {});

/// Forbidden family: patterns plus their component structure and the
/// maximum pattern order r.
struct PatternFamily {
    std::vector<Graph> patterns;
    int r = 0;                                             // max pattern order
    std::vector<std::vector<std::vector<int>>> components; // per pattern

    PatternFamily() = default;
    explicit PatternFamily(std::vector<Graph> pats);
};

/// True iff host minus `deleted` contains no copy of any family member.
/// Throws UnknownEdge if `deleted` contains a non-edge of host.
bool is_family_free(const Graph& host, const PatternFamily& fam,
                    const std::vector<Edge>& deleted);

}  // namespace subfree

#endif
