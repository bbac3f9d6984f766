#include "oracle.hpp"

#include <algorithm>
#include <functional>

namespace subfree {

namespace {

// Find any copy of any member in g minus deleted; return its realized host
// edges (empty vector plus found=true for edgeless copies).
bool find_any_copy(const Graph& g, const PatternFamily& fam,
                   const std::vector<Edge>& deleted, std::vector<Edge>* copy_edges) {
    for (size_t pi = 0; pi < fam.patterns.size(); ++pi) {
        const Graph& p = fam.patterns[pi];
        auto emb = find_copy(g, p, deleted);
        if (!emb) continue;
        copy_edges->clear();
        for (auto [u, v] : p.edges)
            copy_edges->push_back(make_edge(emb->mapping[u], emb->mapping[v]));
        std::sort(copy_edges->begin(), copy_edges->end());
        return true;
    }
    return false;
}

bool branch(const Graph& g, const PatternFamily& fam, std::vector<Edge>& deleted,
            int budget, std::vector<Edge>* solution) {
    std::vector<Edge> copy_edges;
    if (!find_any_copy(g, fam, deleted, &copy_edges)) {
        *solution = deleted;
        return true;
    }
    if (budget == 0 || copy_edges.empty()) return false;  // edgeless copies are unremovable
    for (Edge e : copy_edges) {
        deleted.push_back(e);
        std::sort(deleted.begin(), deleted.end());
        if (branch(g, fam, deleted, budget - 1, solution)) return true;
        deleted.erase(std::find(deleted.begin(), deleted.end(), e));
    }
    return false;
}

}  // namespace

SolveOutcome oracle_solve(const Graph& g, const PatternFamily& fam, int k) {
    if (k < 0) throw Error(Err::invalid_input, "deletion budget must be nonnegative");
    SolveOutcome out;
    for (int budget = 0; budget <= k; ++budget) {
        std::vector<Edge> deleted, solution;
        if (branch(g, fam, deleted, budget, &solution)) {
            out.yes = true;
            out.witness = solution;
            std::sort(out.witness.begin(), out.witness.end());
            out.cost = static_cast<int>(out.witness.size());
            return out;
        }
    }
    out.yes = false;
    return out;
}

SolveOutcome oracle_solve_by_enumeration(const Graph& g, const PatternFamily& fam, int k) {
    SolveOutcome out;
    int m = g.edge_count();
    std::vector<int> pick;
    std::vector<Edge> chosen;
    // subsets in size order, lexicographic inside a size, so the first hit is minimal
    std::function<bool(int, int)> rec = [&](int start, int remaining) -> bool {
        if (remaining == 0) {
            chosen.clear();
            for (int i : pick) chosen.push_back(g.edges[i]);
            return is_family_free(g, fam, chosen);
        }
        for (int i = start; i + remaining <= m; ++i) {
            pick.push_back(i);
            if (rec(i + 1, remaining - 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    for (int size = 0; size <= std::min(k, m); ++size) {
        pick.clear();
        if (rec(0, size)) {
            out.yes = true;
            out.witness = chosen;
            out.cost = size;
            return out;
        }
    }
    out.yes = false;
    return out;
}

}  // namespace subfree
