#include "layering.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace subfree {

void validate_layering(const Graph& g, const Layering& lay) {
    if (static_cast<int>(lay.layer_of.size()) != g.n)
        throw Error(Err::invalid_input, "layering size does not match vertex count");
    for (int v = 0; v < g.n; ++v)
        if (lay.layer_of[v] < 1 || lay.layer_of[v] > lay.num_layers)
            throw Error(Err::invalid_input, "layer of vertex " + std::to_string(v) + " out of range");
    for (auto [u, v] : g.edges)
        if (std::abs(lay.layer_of[u] - lay.layer_of[v]) > 1)
            throw Error(Err::invalid_input,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") spans more than one layer");
}

Layering layering_from_embedding(const Graph& g, const ProductEmbedding& embed) {
    validate_embedding(g, embed);
    Layering lay;
    lay.num_layers = std::max(embed.path_length, 1);
    for (auto [hv, layer] : embed.placement) lay.layer_of.push_back(layer);
    validate_layering(g, lay);
    return lay;
}

Layering bfs_layering(const Graph& g, const std::vector<int>& roots) {
    Layering lay;
    lay.layer_of.assign(g.n, 0);
    std::deque<int> queue;
    if (roots.empty()) {
        for (const auto& comp : connected_components(g)) {
            lay.layer_of[comp[0]] = 1;
            queue.push_back(comp[0]);
        }
    } else {
        for (int r : roots) {
            if (r < 0 || r >= g.n) throw Error(Err::index_out_of_range, "root out of range");
            lay.layer_of[r] = 1;
            queue.push_back(r);
        }
    }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.adj[v])
            if (lay.layer_of[w] == 0) {
                lay.layer_of[w] = lay.layer_of[v] + 1;
                queue.push_back(w);
            }
    }
    for (int v = 0; v < g.n; ++v)
        if (lay.layer_of[v] == 0)
            throw Error(Err::invalid_input, "vertex " + std::to_string(v) + " unreachable from roots");
    lay.num_layers = 0;
    for (int l : lay.layer_of) lay.num_layers = std::max(lay.num_layers, l);
    if (g.n == 0) lay.num_layers = 0;
    validate_layering(g, lay);
    return lay;
}

WindowPlan window_plan(const Layering& lay, int r) {
    if (r < 1) throw Error(Err::invalid_input, "r must be positive");
    WindowPlan plan;
    plan.r = r;
    int L = std::max(lay.num_layers, 1);
    int count = (L + 3 * r - 1) / (3 * r);
    plan.windows.resize(count);
    for (int j = 1; j <= count; ++j) {
        plan.windows[j - 1].lo = 3 * (j - 1) * r + 1;
        plan.windows[j - 1].hi = 3 * j * r;
    }
    for (int v = 0; v < static_cast<int>(lay.layer_of.size()); ++v) {
        int j = (lay.layer_of[v] - 1) / (3 * r);
        plan.windows[j].vertices.push_back(v);
    }
    return plan;
}

namespace {

bool window_has_component_copy(const Graph& g, const WindowPlan::Window& win,
                               const Graph& component, const FrameworkOptions& opts) {
    if (win.vertices.empty()) return false;
    auto sub = induced_subgraph(g, win.vertices);
    if (opts.window_copy_check_by_dp) {
        PatternFamily single({component});
        auto td = compute_td(sub.graph, opts.exact_threshold);
        return !dp_solve(sub.graph, td, single, 0).yes;
    }
    return find_copy(sub.graph, component).has_value();
}

std::vector<Graph> component_graphs(const PatternFamily& fam) {
    std::vector<Graph> out;
    for (size_t i = 0; i < fam.patterns.size(); ++i)
        for (const auto& comp : fam.components[i])
            out.push_back(induced_subgraph(fam.patterns[i], comp).graph);
    return out;
}

int odd_windows_with_copy(const Graph& g, const WindowPlan& plan, const Graph& component,
                          const FrameworkOptions& opts) {
    int count = 0;
    for (size_t j = 1; j <= plan.windows.size(); j += 2)  // odd window indices
        if (window_has_component_copy(g, plan.windows[j - 1], component, opts)) ++count;
    return count;
}

}  // namespace

ReduceResult reduce_family(const Graph& g, const WindowPlan& plan,
                           const PatternFamily& fam, int k, const FrameworkOptions& opts) {
    return [&]() -> ReduceResult {
        // Fast path for all-connected families: disjoint odd windows each
        // holding a member copy each cost one deletion.
        bool all_connected = true;
        for (const auto& comps : fam.components)
            if (comps.size() != 1) all_connected = false;
        if (all_connected) {
            std::set<size_t> hot;
            for (size_t j = 1; j <= plan.windows.size(); j += 2)
                for (const auto& p : fam.patterns)
                    if (window_has_component_copy(g, plan.windows[j - 1], p, opts)) {
                        hot.insert(j);
                        break;
                    }
            if (static_cast<int>(hot.size()) > k) return Infeasible{};
        }

        std::vector<Graph> current = fam.patterns;
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < current.size() && !changed; ++i) {
                auto comps = connected_components(current[i]);
                for (const auto& comp : comps) {
                    Graph c = induced_subgraph(current[i], comp).graph;
                    if (odd_windows_with_copy(g, plan, c, opts) >= k + plan.r) {
                        if (comps.size() == 1) return Infeasible{};
                        std::vector<int> rest;
                        for (int v = 0; v < current[i].n; ++v)
                            if (!std::binary_search(comp.begin(), comp.end(), v)) rest.push_back(v);
                        current[i] = induced_subgraph(current[i], rest).graph;
                        changed = true;
                        break;
                    }
                }
            }
        }
        return PatternFamily(current);
    }();
}

PrunedGraph prune_middle_layers(const Graph& g, const Layering& lay,
                                const WindowPlan& plan, const PatternFamily& fam,
                                const FrameworkOptions& opts) {
    validate_layering(g, lay);
    auto comps = component_graphs(fam);
    std::vector<char> keep(g.n, 1);
    int r = plan.r;
    for (size_t j = 1; j <= plan.windows.size(); j += 2) {
        const auto& win = plan.windows[j - 1];
        bool has_copy = false;
        for (const auto& c : comps)
            if (window_has_component_copy(g, win, c, opts)) {
                has_copy = true;
                break;
            }
        if (has_copy) continue;  // quiet windows only
        int mid_lo = win.lo + r, mid_hi = win.lo + 2 * r - 1;
        for (int v : win.vertices)
            if (lay.layer_of[v] >= mid_lo && lay.layer_of[v] <= mid_hi) keep[v] = 0;
    }
    std::vector<int> kept;
    for (int v = 0; v < g.n; ++v)
        if (keep[v]) kept.push_back(v);
    auto sub = induced_subgraph(g, kept);
    return {sub.graph, sub.orig_of};
}

SolveOutcome layered_solve(const Graph& g, const Layering& lay, const PatternFamily& fam,
                           int k, const std::optional<ProductEmbedding>& embed,
                           const FrameworkOptions& opts) {
    validate_layering(g, lay);
    if (embed) {
        Layering from_embed = layering_from_embedding(g, *embed);
        if (from_embed.layer_of != lay.layer_of)
            throw Error(Err::invalid_input, "layering disagrees with the embedding");
    }
    int r = fam.r;
    int L = lay.num_layers;

    auto solve_whole = [&](const Graph& host, const PatternFamily& f,
                           const std::vector<int>& to_orig) -> SolveOutcome {
        TreeDecomposition td;
        if (embed && host.n == g.n) {
            auto wd = window_td(g, *embed, to_orig, 1, std::max(L, 1));
            td = wd.td;  // sub == whole graph here, index spaces match
        } else {
            td = compute_td(host, opts.exact_threshold);
        }
        return dp_solve(host, td, f, k);
    };

    std::vector<int> all(g.n);
    for (int v = 0; v < g.n; ++v) all[v] = v;

    if (L <= 6 * r) return solve_whole(g, fam, all);

    WindowPlan plan = window_plan(lay, r);
    ReduceResult reduced = reduce_family(g, plan, fam, k, opts);
    if (std::holds_alternative<Infeasible>(reduced)) {
        SolveOutcome out;
        out.yes = false;
        return out;
    }
    const PatternFamily& rfam = std::get<PatternFamily>(reduced);

    PrunedGraph pruned = prune_middle_layers(g, lay, plan, rfam, opts);

    TreeDecomposition td;
    if (embed) {
        // one window decomposition per surviving component, chained
        std::vector<int> newid(g.n, -1);
        for (size_t i = 0; i < pruned.orig_of.size(); ++i) newid[pruned.orig_of[i]] = static_cast<int>(i);
        auto comps = connected_components(pruned.graph);
        std::vector<TreeDecomposition> parts;
        for (const auto& comp : comps) {
            std::vector<int> orig;
            int lo = L, hi = 1;
            for (int v : comp) {
                orig.push_back(pruned.orig_of[v]);
                lo = std::min(lo, lay.layer_of[pruned.orig_of[v]]);
                hi = std::max(hi, lay.layer_of[pruned.orig_of[v]]);
            }
            auto wd = window_td(g, *embed, orig, lo, hi);
            TreeDecomposition part = wd.td;
            for (auto& bag : part.bags) {
                for (auto& v : bag) v = newid[wd.sub.orig_of[v]];
                std::sort(bag.begin(), bag.end());
            }
            parts.push_back(std::move(part));
        }
        if (parts.empty()) {
            td.nodes = 1;
            td.bags = {{}};
        } else if (parts.size() == 1) {
            td = parts[0];
        } else {
            std::vector<int> first_node(parts.size());
            for (size_t i = 0; i < parts.size(); ++i) {
                int off = td.nodes;
                first_node[i] = off;
                td.nodes += parts[i].nodes;
                for (const auto& b : parts[i].bags) td.bags.push_back(b);
                for (auto [a, b] : parts[i].tree_edges) td.tree_edges.push_back(make_edge(a + off, b + off));
            }
            for (size_t i = 0; i + 1 < parts.size(); ++i) {
                int link = td.nodes++;
                td.bags.push_back({});
                td.tree_edges.push_back(make_edge(first_node[i], link));
                td.tree_edges.push_back(make_edge(link, first_node[i + 1]));
            }
        }
    } else {
        td = compute_td(pruned.graph, opts.exact_threshold);
    }

    SolveOutcome inner = dp_solve(pruned.graph, td, rfam, k);
    if (!inner.yes) return inner;
    SolveOutcome out = inner;
    out.witness.clear();
    for (auto [u, v] : inner.witness)
        out.witness.push_back(make_edge(pruned.orig_of[u], pruned.orig_of[v]));
    std::sort(out.witness.begin(), out.witness.end());
    if (!is_family_free(g, fam, out.witness))
        throw Error(Err::internal, "layered solve produced an invalid witness");
    return out;
}

}  // namespace subfree
