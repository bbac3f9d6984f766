#include "gadgets.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace subfree {

namespace {

// incremental gadget assembly with named vertices and identification
struct Assembly {
    std::vector<std::string> names;
    std::map<std::string, int> index;
    std::vector<Edge> edges;

    int vertex(const std::string& name) {
        auto it = index.find(name);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(names.size());
        names.push_back(name);
        index[name] = id;
        return id;
    }

    void edge(const std::string& a, const std::string& b) {
        edges.push_back(make_edge(vertex(a), vertex(b)));
    }

    // merge vertex `b` into vertex `a`
    void identify(const std::string& a, const std::string& b) {
        int va = vertex(a), vb = vertex(b);
        if (va == vb) return;
        for (auto& [name, id] : index)
            if (id == vb) id = va;
        for (auto& e : edges) {
            int u = e.first == vb ? va : e.first;
            int v = e.second == vb ? va : e.second;
            e = make_edge(u, v);
        }
    }

    LabeledGadget finish(const std::vector<std::string>& port_names) {
        // compact indices (identification leaves holes)
        std::set<int> live;
        for (auto& [name, id] : index) live.insert(id);
        std::map<int, int> remap;
        int next = 0;
        for (int id : live) remap[id] = next++;
        LabeledGadget out;
        std::vector<Edge> es;
        for (auto e : edges) es.push_back(make_edge(remap[e.first], remap[e.second]));
        out.graph = build_graph(next, es);
        for (const auto& p : port_names) {
            auto it = index.find(p);
            if (it == index.end()) throw Error(Err::internal, "missing port " + p);
            out.ports[p] = remap[it->second];
        }
        return out;
    }
};

// the 14 edges of the arm, with `p` prefixing every vertex name
void add_arm(Assembly& a, const std::string& p) {
    const char* edges[][2] = {
        {"g", "h11"}, {"g", "h12"},  {"h11", "h12"}, {"h11", "h21"}, {"h11", "h22"},
        {"h12", "h23"}, {"h12", "h24"}, {"h21", "h22"}, {"h22", "h23"}, {"h23", "h24"},
        {"h21", "g1"}, {"h22", "g1"}, {"h23", "g2"}, {"h24", "g2"},
    };
    for (auto& e : edges) a.edge(p + e[0], p + e[1]);
}

void add_splitter(Assembly& a, const std::string& p) {
    add_arm(a, p + "m.");   // main arm: ports g, g1, g2
    add_arm(a, p + "c1.");  // first sub arm: its g1/g2 become h1/h2
    add_arm(a, p + "c2.");  // second sub arm: its g1 becomes h3
    a.identify(p + "m.g1", p + "c1.g");
    a.identify(p + "m.g2", p + "c2.g");
    a.edge(p + "c2.g2", p + "w1");
    a.edge(p + "c2.g2", p + "w2");
    a.edge(p + "w1", p + "w2");
    a.edge(p + "w1", p + "h");
    a.edge(p + "w2", p + "h");
}

}  // namespace

LabeledGadget build_arm() {
    Assembly a;
    add_arm(a, "");
    return a.finish({"g", "g1", "g2"});
}

LabeledGadget build_splitter() {
    Assembly a;
    add_splitter(a, "");
    LabeledGadget out = a.finish({"m.g", "h", "c1.g1", "c1.g2", "c2.g1"});
    LabeledGadget renamed;
    renamed.graph = out.graph;
    renamed.ports["g"] = out.ports["m.g"];
    renamed.ports["h"] = out.ports["h"];
    renamed.ports["h1"] = out.ports["c1.g1"];
    renamed.ports["h2"] = out.ports["c1.g2"];
    renamed.ports["h3"] = out.ports["c2.g1"];
    return renamed;
}

LabeledGadget build_clause_gadget() {
    Assembly a;
    auto nm = [](int k, int j) { return "a" + std::to_string(k) + "_" + std::to_string(j); };
    for (int j = 1; j <= 3; ++j) {
        // chorded 6-cycle: cycle edges plus chords 1-5, 2-4, 2-5
        int cyc[][2] = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}, {1, 5}, {2, 4}, {2, 5}};
        for (auto& e : cyc) a.edge(nm(e[0], j), nm(e[1], j));
    }
    for (int j = 1; j <= 3; ++j) {
        int jn = j % 3 + 1;
        a.identify(nm(1, j), nm(3, jn));
        a.edge(nm(2, j), nm(2, jn));
    }
    std::vector<std::string> ports;
    for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 6; ++k) ports.push_back(nm(k, j));
    return a.finish(ports);
}

LabeledGadget build_variable_gadget(const std::vector<bool>& occurrences) {
    int l = static_cast<int>(occurrences.size());
    if (l < 1) throw Error(Err::invalid_input, "variable gadget needs at least one occurrence");
    Assembly a;
    auto v = [](int t) { return "v" + std::to_string(t); };
    int len = 4 * l;
    for (int t = 1; t <= len; ++t) a.edge(v(t), v(t % len + 1));
    for (int t = 1; t <= len; t += 2) {
        int u = (t + 1) % len + 1;  // t+2 with wraparound
        if (u != t) a.edge(v(t), v(u));
    }
    for (int j = 1; j <= l; ++j) {
        std::string p = "s" + std::to_string(j) + ".";
        add_splitter(a, p);
        if (occurrences[j - 1]) {
            a.identify(v(4 * j), p + "m.g");
            a.identify(v(4 * j - 2), p + "h");
        } else {
            a.identify(v(4 * j - 2), p + "m.g");
            a.identify(v(4 * j), p + "h");
        }
    }
    std::vector<std::string> raw_ports;
    for (int j = 1; j <= l; ++j) {
        std::string p = "s" + std::to_string(j) + ".";
        raw_ports.push_back(p + "c1.g1");
        raw_ports.push_back(p + "c1.g2");
        raw_ports.push_back(p + "c2.g1");
    }
    LabeledGadget raw = a.finish(raw_ports);
    LabeledGadget out;
    out.graph = raw.graph;
    for (int j = 1; j <= l; ++j) {
        std::string p = "s" + std::to_string(j) + ".";
        out.ports["h1_" + std::to_string(j)] = raw.ports[p + "c1.g1"];
        out.ports["h2_" + std::to_string(j)] = raw.ports[p + "c1.g2"];
        out.ports["h3_" + std::to_string(j)] = raw.ports[p + "c2.g1"];
    }
    return out;
}

Cnf13Instance parse_cnf13(const std::string& text) {
    Cnf13Instance inst;
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    int expected_clauses = -1;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c") continue;
        if (first == "p") {
            std::string kind;
            if (!(ls >> kind >> inst.num_vars >> expected_clauses) || kind != "cnf")
                throw Error(Err::malformed_formula, "bad problem line: " + line);
            have_header = true;
            continue;
        }
        std::vector<int> lits;
        ls.clear();
        ls.str(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) break;
            lits.push_back(lit);
        }
        if (lits.empty()) continue;
        if (lits.size() != 3)
            throw Error(Err::malformed_formula, "clause must have exactly 3 literals: " + line);
        std::set<int> vars;
        for (int x : lits) {
            int v = std::abs(x);
            if (v < 1 || (have_header && v > inst.num_vars))
                throw Error(Err::malformed_formula, "literal out of range: " + std::to_string(x));
            if (!vars.insert(v).second)
                throw Error(Err::malformed_formula, "repeated variable in clause: " + line);
            inst.num_vars = std::max(inst.num_vars, v);
        }
        inst.clauses.push_back({lits[0], lits[1], lits[2]});
    }
    if (expected_clauses >= 0 && expected_clauses != static_cast<int>(inst.clauses.size()))
        throw Error(Err::malformed_formula, "clause count disagrees with the problem line");
    if (inst.clauses.empty()) throw Error(Err::malformed_formula, "no clauses");
    return inst;
}

LabeledGadget reduce_formula(const Cnf13Instance& inst) {
    int n = inst.num_vars;
    int m = static_cast<int>(inst.clauses.size());
    for (const auto& cl : inst.clauses) {
        std::set<int> vars;
        for (int lit : cl) {
            if (lit == 0 || std::abs(lit) > n)
                throw Error(Err::malformed_formula, "literal out of range");
            if (!vars.insert(std::abs(lit)).second)
                throw Error(Err::malformed_formula, "repeated variable in clause");
        }
    }

    // occurrence lists in drawing order (input order when no rotation given)
    std::vector<std::vector<int>> clauses_of(n + 1);
    if (inst.var_order) {
        if (static_cast<int>(inst.var_order->size()) != n)
            throw Error(Err::malformed_formula, "var_order size mismatch");
        for (int v = 1; v <= n; ++v) {
            clauses_of[v] = (*inst.var_order)[v - 1];
            for (int ci : clauses_of[v])
                if (ci < 0 || ci >= m)
                    throw Error(Err::malformed_formula, "var_order clause index out of range");
        }
    } else {
        for (int ci = 0; ci < m; ++ci)
            for (int lit : inst.clauses[ci]) clauses_of[std::abs(lit)].push_back(ci);
    }
    std::vector<std::vector<int>> vars_of(m);
    if (inst.clause_order) {
        if (static_cast<int>(inst.clause_order->size()) != m)
            throw Error(Err::malformed_formula, "clause_order size mismatch");
        vars_of = *inst.clause_order;
    } else {
        for (int ci = 0; ci < m; ++ci)
            for (int lit : inst.clauses[ci]) vars_of[ci].push_back(std::abs(lit));
    }
    auto polarity = [&](int var, int ci) {
        for (int lit : inst.clauses[ci])
            if (std::abs(lit) == var) return lit > 0;
        throw Error(Err::malformed_formula, "rotation references a variable not in the clause");
    };

    Assembly a;
    auto cl_nm = [](int ci, int k, int j) {
        return "c" + std::to_string(ci + 1) + ".a" + std::to_string(k) + "_" + std::to_string(j);
    };
    for (int ci = 0; ci < m; ++ci) {
        for (int j = 1; j <= 3; ++j) {
            int cyc[][2] = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}, {1, 5}, {2, 4}, {2, 5}};
            for (auto& e : cyc) a.edge(cl_nm(ci, e[0], j), cl_nm(ci, e[1], j));
        }
        for (int j = 1; j <= 3; ++j) {
            int jn = j % 3 + 1;
            a.identify(cl_nm(ci, 1, j), cl_nm(ci, 3, jn));
            a.edge(cl_nm(ci, 2, j), cl_nm(ci, 2, jn));
        }
    }
    auto var_pref = [](int v) { return "x" + std::to_string(v) + "."; };
    for (int v = 1; v <= n; ++v) {
        int l = static_cast<int>(clauses_of[v].size());
        if (l == 0) continue;  // unused variable: no gadget
        std::string pre = var_pref(v);
        auto vx = [&](int t) { return pre + "v" + std::to_string(t); };
        int len = 4 * l;
        for (int t = 1; t <= len; ++t) a.edge(vx(t), vx(t % len + 1));
        for (int t = 1; t <= len; t += 2) {
            int u = (t + 1) % len + 1;
            if (u != t) a.edge(vx(t), vx(u));
        }
        for (int j = 1; j <= l; ++j) {
            std::string sp = pre + "s" + std::to_string(j) + ".";
            add_splitter(a, sp);
            bool pos = polarity(v, clauses_of[v][j - 1]);
            if (pos) {
                a.identify(vx(4 * j), sp + "m.g");
                a.identify(vx(4 * j - 2), sp + "h");
            } else {
                a.identify(vx(4 * j - 2), sp + "m.g");
                a.identify(vx(4 * j), sp + "h");
            }
        }
    }
    // identify variable ports with clause ports along each incidence
    for (int v = 1; v <= n; ++v) {
        for (size_t j = 1; j <= clauses_of[v].size(); ++j) {
            int ci = clauses_of[v][j - 1];
            // position of v in the clause's drawing order
            int jp = -1;
            for (size_t t = 0; t < vars_of[ci].size(); ++t)
                if (vars_of[ci][t] == v) jp = static_cast<int>(t) + 1;
            if (jp == -1)
                throw Error(Err::malformed_formula, "rotation orders disagree on incidences");
            std::string sp = var_pref(v) + "s" + std::to_string(j) + ".";
            std::string hs[3] = {sp + "c1.g1", sp + "c1.g2", sp + "c2.g1"};
            bool pos = polarity(v, ci);
            for (int k = 1; k <= 3; ++k) {
                int target = pos ? k + 3 : 7 - k;
                a.identify(hs[k - 1], cl_nm(ci, target, jp));
            }
        }
    }

    std::vector<std::string> ports;
    for (int ci = 0; ci < m; ++ci)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 6; ++k) ports.push_back(cl_nm(ci, k, j));
    for (int v = 1; v <= n; ++v)
        for (size_t j = 1; j <= clauses_of[v].size(); ++j) {
            std::string sp = var_pref(v) + "s" + std::to_string(j) + ".";
            ports.push_back(sp + "c1.g1");
            ports.push_back(sp + "c1.g2");
            ports.push_back(sp + "c2.g1");
        }
    LabeledGadget raw = a.finish(ports);
    LabeledGadget out;
    out.graph = raw.graph;
    for (int ci = 0; ci < m; ++ci)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 6; ++k) {
                std::string nice = "c" + std::to_string(ci + 1) + ".a" + std::to_string(k) + "_" +
                                   std::to_string(j);
                out.ports[nice] = raw.ports[cl_nm(ci, k, j)];
            }
    for (int v = 1; v <= n; ++v)
        for (size_t j = 1; j <= clauses_of[v].size(); ++j) {
            std::string sp = var_pref(v) + "s" + std::to_string(j) + ".";
            std::string base = "x" + std::to_string(v) + ".h";
            out.ports[base + "1_" + std::to_string(j)] = raw.ports[sp + "c1.g1"];
            out.ports[base + "2_" + std::to_string(j)] = raw.ports[sp + "c1.g2"];
            out.ports[base + "3_" + std::to_string(j)] = raw.ports[sp + "c2.g1"];
        }
    return out;
}

namespace {

std::vector<Triangle> triangles_through(const Graph& g, int v) {
    std::vector<Triangle> out;
    const auto& nb = g.adj[v];
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
            if (g.has_edge(nb[i], nb[j])) out.push_back({v, nb[i], nb[j]});
    return out;
}

struct TilingSearch {
    const Graph& g;
    const std::vector<char>& required;
    const std::function<bool(const std::vector<Triangle>&)>& cb;
    std::vector<char> used;
    std::vector<Triangle> chosen;
    bool stopped = false;

    void run() {
        used.assign(g.n, 0);
        recurse();
    }

    void recurse() {
        if (stopped) return;
        int pivot = -1;
        for (int v = 0; v < g.n; ++v)
            if (required[v] && !used[v]) {
                pivot = v;
                break;
            }
        if (pivot == -1) {
            if (!cb(chosen)) stopped = true;
            return;
        }
        for (const auto& t : triangles_through(g, pivot)) {
            if (used[t[0]] || used[t[1]] || used[t[2]]) continue;
            for (int x : t) used[x] = 1;
            chosen.push_back(t);
            recurse();
            chosen.pop_back();
            for (int x : t) used[x] = 0;
            if (stopped) return;
        }
    }
};

}  // namespace

void enumerate_triangle_tilings(const Graph& g, const std::vector<char>& required,
                                const std::function<bool(const std::vector<Triangle>&)>& cb) {
    if (static_cast<int>(required.size()) != g.n)
        throw Error(Err::invalid_input, "required mask size mismatch");
    TilingSearch s{g, required, cb, {}, {}, false};
    s.run();
}

std::optional<std::vector<Triangle>> triangle_factor(const Graph& g) {
    if (g.n % 3 != 0) return std::nullopt;
    std::optional<std::vector<Triangle>> found;
    std::vector<char> required(g.n, 1);
    enumerate_triangle_tilings(g, required, [&](const std::vector<Triangle>& t) {
        found = t;
        return false;  // first one is enough
    });
    return found;
}

P4Instance p4_deletion_instance(const Graph& g) {
    P4Instance out;
    Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    out.family = PatternFamily({p4});
    out.k = g.edge_count() - g.n;
    if (out.k < 0) {
        out.feasible = false;
        out.k = 0;
    }
    return out;
}

std::optional<std::vector<bool>> solve_1in3(const Cnf13Instance& inst) {
    if (inst.num_vars > 24) throw Error(Err::too_large, "brute force limited to 24 variables");
    int n = inst.num_vars;
    // descending mask order = lexicographic with true preferred at low indexes
    for (long long mask = (1LL << n) - 1; mask >= 0; --mask) {
        bool ok = true;
        for (const auto& cl : inst.clauses) {
            int truecount = 0;
            for (int lit : cl) {
                bool val = (mask >> (n - std::abs(lit))) & 1;
                if (lit < 0) val = !val;
                truecount += val;
            }
            if (truecount != 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::vector<bool> asg(n);
            for (int v = 1; v <= n; ++v) asg[v - 1] = (mask >> (n - v)) & 1;
            return asg;
        }
    }
    return std::nullopt;
}

}  // namespace subfree
