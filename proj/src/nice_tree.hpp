#ifndef SUBFREE_NICE_TREE_HPP
#define SUBFREE_NICE_TREE_HPP

#include <map>
#include <vector>

#include "treewidth.hpp"

namespace subfree {

/// Rooted annotated decomposition where every node is one of five kinds and
/// every graph edge is handed to the solver exactly once. Edge nodes sit at
/// the top of the region where both endpoints share a bag, so an edge is
/// never processed while a pending partial copy could still need it lower in
/// the tree.
struct NiceNode {
    enum Kind { leaf, introduce_vertex, forget_vertex, introduce_edge, join } kind;
    std::vector<int> bag;  // sorted
    int child = -1;
    int child2 = -1;       // join only
    int vertex = -1;       // introduce_vertex / forget_vertex
    Edge edge{-1, -1};     // introduce_edge
    int tin = 0, tout = 0; // DFS interval; node s is in subtree(t) iff tin[t] <= tin[s] <= tout[t]
};

struct NiceTree {
    std::vector<NiceNode> nodes;
    int root = -1;
    std::vector<int> post_order;
    std::map<Edge, int> edge_node;  // graph edge -> the node that introduces it

    bool in_subtree(int node, int maybe_descendant) const {
        return nodes[node].tin <= nodes[maybe_descendant].tin &&
               nodes[maybe_descendant].tin <= nodes[node].tout;
    }
};

/// Converts a valid decomposition of g into nice form. The root bag is
/// empty, leaves are empty, and the width does not increase. Throws
/// InvalidDecomposition when td fails validate_td.
NiceTree make_nice(const Graph& g, const TreeDecomposition& td);

/// The nice tree as a plain TreeDecomposition (for validation and tests).
TreeDecomposition nice_as_td(const NiceTree& nt);

}  // namespace subfree

#endif
