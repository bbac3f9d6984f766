#include "dp.hpp"

#include <algorithm>
#include <map>

namespace subfree {

namespace {

// One partial copy: which pattern, which pattern vertices are embedded, and
// where the still-bag-visible ones sit. Vertices whose images were forgotten
// are existentially sealed: the closure rule guarantees all their pattern
// edges are already realized, so the boundary map is all the future needs.
struct Placement {
    int pat;
    uint32_t embedded;                      // bitmask over pattern core vertices
    std::vector<std::pair<int, int>> bmap;  // (pattern vertex, host vertex), sorted

    auto key() const { return std::tie(pat, embedded, bmap); }
    bool operator<(const Placement& o) const { return key() < o.key(); }
    bool operator==(const Placement& o) const { return key() == o.key(); }

    int host_of(int pv) const {
        for (auto [p, h] : bmap)
            if (p == pv) return h;
        return -1;
    }
};

using Trace = std::vector<Placement>;  // sorted, unique

void canonicalize(Trace& t) {
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
}

struct Entry {
    std::vector<Edge> deleted;
    int cost() const { return static_cast<int>(deleted.size()); }
};

// Pattern with its isolated vertices stripped. Edge deletion never removes
// vertices, so a copy of the core plus enough spare host vertices is a copy
// of the whole pattern; the spare check happens once up front.
struct PreparedPattern {
    Graph core;
    uint32_t full_mask;
};

struct Solver {
    const Graph& g;
    const NiceTree& nt;
    std::vector<PreparedPattern> pats;
    int kcap;

    using StateMap = std::map<Trace, Entry>;

    bool edge_processed(Edge e, int node) const {
        auto it = nt.edge_node.find(e);
        if (it == nt.edge_node.end()) return false;
        return nt.in_subtree(node, it->second);
    }

    // A placement is a full copy once every core vertex is embedded and every
    // core edge's host pair has passed its introduce-edge node. Pairs with a
    // forgotten endpoint were realized before the forget; visible pairs are
    // checked against the DFS intervals.
    bool complete(const Placement& pl, int node) const {
        const auto& pp = pats[pl.pat];
        if (pl.embedded != pp.full_mask) return false;
        for (Edge pe : pp.core.edges) {
            int hu = pl.host_of(pe.first);
            int hv = pl.host_of(pe.second);
            if (hu == -1 || hv == -1) continue;
            if (!edge_processed(make_edge(hu, hv), node)) return false;
        }
        return true;
    }

    bool any_complete(const Trace& t, int node) const {
        for (const auto& pl : t)
            if (complete(pl, node)) return true;
        return false;
    }

    // True when the placement has a pattern edge mapped onto this host pair;
    // deleting the pair then kills the copy.
    bool needs_pair(const Placement& pl, Edge host_edge) const {
        int pu = -1, pv = -1;
        for (auto [p, h] : pl.bmap) {
            if (h == host_edge.first) pu = p;
            if (h == host_edge.second) pv = p;
        }
        if (pu == -1 || pv == -1) return false;
        return pats[pl.pat].core.has_edge(pu, pv);
    }

    void emplace_min(StateMap& m, Trace t, Entry e) const {
        auto it = m.find(t);
        if (it == m.end())
            m.emplace(std::move(t), std::move(e));
        else if (e.cost() < it->second.cost() ||
                 (e.cost() == it->second.cost() && e.deleted < it->second.deleted))
            it->second = std::move(e);
    }

    // All extensions of the trace by mapping one more pattern vertex onto the
    // newly introduced host vertex x. Pattern edges into the existing part
    // must point at visible images adjacent to x in the host; edges to
    // not-yet-embedded pattern vertices stay pending.
    Trace spawn(const Trace& base, int x) const {
        Trace out = base;
        auto try_extend = [&](const Placement* src, int pat) {
            const auto& pp = pats[pat];
            for (int u = 0; u < pp.core.n; ++u) {
                if (src && (src->embedded & (1u << u))) continue;
                bool ok = true;
                for (int w : pp.core.adj[u]) {
                    if (!src || !(src->embedded & (1u << w))) continue;
                    int hw = src->host_of(w);
                    if (hw == -1 || !g.has_edge(x, hw)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                Placement np;
                np.pat = pat;
                np.embedded = (src ? src->embedded : 0u) | (1u << u);
                np.bmap = src ? src->bmap : std::vector<std::pair<int, int>>{};
                np.bmap.insert(std::upper_bound(np.bmap.begin(), np.bmap.end(),
                                                std::make_pair(u, x)),
                               {u, x});
                out.push_back(std::move(np));
            }
        };
        for (const auto& pl : base) try_extend(&pl, pl.pat);
        for (int p = 0; p < static_cast<int>(pats.size()); ++p) try_extend(nullptr, p);
        canonicalize(out);
        return out;
    }

    // Combine two partial copies meeting at a join. Shared pattern vertices
    // must be visible on both sides with equal images; exclusive visible
    // images must not collide; pattern edges crossing the two exclusive parts
    // must map onto actual host edges (they are still pending afterwards).
    bool merge(const Placement& a, const Placement& b, Placement& out) const {
        const auto& pp = pats[a.pat];
        uint32_t shared = a.embedded & b.embedded;
        for (int p = 0; p < pp.core.n; ++p) {
            if (!(shared & (1u << p))) continue;
            int ha = a.host_of(p), hb = b.host_of(p);
            if (ha == -1 || hb == -1 || ha != hb) return false;
        }
        std::vector<std::pair<int, int>> bmap = a.bmap;
        for (auto [p, h] : b.bmap) {
            if (shared & (1u << p)) continue;
            if (a.embedded & (1u << p)) return false;  // forgotten in a, visible in b
            bmap.push_back({p, h});
        }
        std::vector<int> hosts;
        for (auto [p, h] : bmap) hosts.push_back(h);
        std::sort(hosts.begin(), hosts.end());
        if (std::adjacent_find(hosts.begin(), hosts.end()) != hosts.end()) return false;
        std::sort(bmap.begin(), bmap.end());

        Placement m;
        m.pat = a.pat;
        m.embedded = a.embedded | b.embedded;
        m.bmap = std::move(bmap);
        uint32_t only_a = a.embedded & ~b.embedded;
        uint32_t only_b = b.embedded & ~a.embedded;
        for (Edge pe : pp.core.edges) {
            uint32_t mu = 1u << pe.first, mv = 1u << pe.second;
            bool cross = ((only_a & mu) && (only_b & mv)) || ((only_b & mu) && (only_a & mv));
            if (!cross) continue;
            int hu = m.host_of(pe.first), hv = m.host_of(pe.second);
            if (hu == -1 || hv == -1) return false;  // closure forbids this; reject defensively
            if (!g.has_edge(hu, hv)) return false;
        }
        out = std::move(m);
        return true;
    }

    StateMap process(int node, std::vector<StateMap>& states) const {
        const NiceNode& nd = nt.nodes[node];
        StateMap out;
        switch (nd.kind) {
            case NiceNode::leaf:
                out.emplace(Trace{}, Entry{});
                break;
            case NiceNode::introduce_vertex:
                for (const auto& [trace, entry] : states[nd.child]) {
                    Trace t = spawn(trace, nd.vertex);
                    if (any_complete(t, node)) continue;
                    emplace_min(out, std::move(t), entry);
                }
                break;
            case NiceNode::introduce_edge:
                for (const auto& [trace, entry] : states[nd.child]) {
                    // keep: pending placements over this pair become realized
                    if (!any_complete(trace, node)) emplace_min(out, trace, entry);
                    // delete: placements whose pattern edge sits on this pair die
                    if (entry.cost() + 1 <= kcap) {
                        Trace t;
                        for (const auto& pl : trace)
                            if (!needs_pair(pl, nd.edge)) t.push_back(pl);
                        Entry e = entry;
                        e.deleted.push_back(nd.edge);
                        std::sort(e.deleted.begin(), e.deleted.end());
                        emplace_min(out, std::move(t), std::move(e));
                    }
                }
                break;
            case NiceNode::forget_vertex:
                for (const auto& [trace, entry] : states[nd.child]) {
                    Trace t;
                    for (const auto& pl : trace) {
                        auto it = std::find_if(pl.bmap.begin(), pl.bmap.end(),
                                               [&](auto pr) { return pr.second == nd.vertex; });
                        if (it == pl.bmap.end()) {
                            t.push_back(pl);
                            continue;
                        }
                        int u = it->first;
                        bool closed = true;
                        for (int w : pats[pl.pat].core.adj[u])
                            if (!(pl.embedded & (1u << w))) {
                                closed = false;
                                break;
                            }
                        if (!closed) continue;  // copy can never finish; stop tracking
                        Placement np = pl;
                        np.bmap.erase(np.bmap.begin() + (it - pl.bmap.begin()));
                        t.push_back(std::move(np));
                    }
                    canonicalize(t);
                    if (any_complete(t, node)) continue;
                    emplace_min(out, std::move(t), entry);
                }
                break;
            case NiceNode::join:
                for (const auto& [tl, el] : states[nd.child]) {
                    for (const auto& [tr, er] : states[nd.child2]) {
                        if (el.cost() + er.cost() > kcap) continue;
                        Trace t = tl;
                        t.insert(t.end(), tr.begin(), tr.end());
                        for (const auto& a : tl)
                            for (const auto& b : tr) {
                                if (a.pat != b.pat) continue;
                                Placement m;
                                if (merge(a, b, m)) t.push_back(std::move(m));
                            }
                        canonicalize(t);
                        if (any_complete(t, node)) continue;
                        Entry e = el;
                        e.deleted.insert(e.deleted.end(), er.deleted.begin(), er.deleted.end());
                        std::sort(e.deleted.begin(), e.deleted.end());
                        emplace_min(out, std::move(t), std::move(e));
                    }
                }
                break;
        }
        return out;
    }
};

}  // namespace

SolveOutcome dp_solve(const Graph& g, const TreeDecomposition& td,
                      const PatternFamily& fam, int k) {
    if (k < 0) throw Error(Err::invalid_input, "deletion budget must be nonnegative");
    NiceTree nt = make_nice(g, td);  // throws InvalidDecomposition when td is bad

    SolveOutcome out;
    if (k >= g.edge_count() && g.edge_count() > 0)
        out.warning = "budget covers every edge; answer still computed exactly";

    std::vector<PreparedPattern> pats;
    for (const auto& p : fam.patterns) {
        if (g.n < p.n) continue;  // not enough host vertices: never present
        std::vector<int> core_verts;
        for (int v = 0; v < p.n; ++v)
            if (p.degree(v) > 0) core_verts.push_back(v);
        if (core_verts.empty()) {
            // edgeless pattern that fits the host: edge deletions cannot help
            out.yes = false;
            out.cost = 0;
            return out;
        }
        auto sub = induced_subgraph(p, core_verts);
        if (sub.graph.n > 30)
            throw Error(Err::too_large, "pattern too large for the solver state encoding");
        pats.push_back({sub.graph, (1u << sub.graph.n) - 1});
    }
    if (pats.empty()) {
        out.yes = true;
        out.cost = 0;
        return out;
    }

    Solver solver{g, nt, std::move(pats), std::min(k, g.edge_count())};
    std::vector<Solver::StateMap> states(nt.nodes.size());
    for (int node : nt.post_order) {
        states[node] = solver.process(node, states);
        const NiceNode& nd = nt.nodes[node];
        for (int c : {nd.child, nd.child2})
            if (c != -1) Solver::StateMap().swap(states[c]);
    }

    const Entry* best = nullptr;
    for (const auto& [trace, entry] : states[nt.root])
        if (!best || entry.cost() < best->cost() ||
            (entry.cost() == best->cost() && entry.deleted < best->deleted))
            best = &entry;
    if (!best || best->cost() > k) {
        out.yes = false;
        out.cost = 0;
        return out;
    }
    out.yes = true;
    out.witness = best->deleted;
    out.cost = best->cost();
    if (!is_family_free(g, fam, out.witness))
        throw Error(Err::internal, "solver produced an invalid witness");
    return out;
}

}  // namespace subfree
