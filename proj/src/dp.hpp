#ifndef SUBFREE_DP_HPP
#define SUBFREE_DP_HPP

#include <optional>
#include <string>
#include <vector>

#include "nice_tree.hpp"

namespace subfree {

/// Result of a deletion solve. When answer is yes, witness is a minimum-size
/// edge set whose removal kills every pattern copy; it is re-verified by
/// is_family_free before being returned.
struct SolveOutcome {
    bool yes = false;
    std::vector<Edge> witness;
    int cost = 0;
    std::string warning;  // e.g. budget at least the edge count
};

/// Decides whether g can be made family-subgraph-free by deleting at most k
/// edges, by dynamic programming over a nice form of td. States are sets of
/// partial pattern placements; a branch dies when a placement completes.
SolveOutcome dp_solve(const Graph& g, const TreeDecomposition& td,
                      const PatternFamily& fam, int k);

}  // namespace subfree

#endif
