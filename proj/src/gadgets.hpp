#ifndef SUBFREE_GADGETS_HPP
#define SUBFREE_GADGETS_HPP

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "graph.hpp"

namespace subfree {

/// Graph plus named anchor vertices. Port names are stable and serialized
/// with the graph so tests and downstream tools can address gadget internals.
struct LabeledGadget {
    Graph graph;
    std::map<std::string, int> ports;

    int port(const std::string& name) const {
        auto it = ports.find(name);
        if (it == ports.end()) throw Error(Err::invalid_input, "unknown port " + name);
        return it->second;
    }
};

/// 9-vertex, 14-edge arm used three times inside the splitter.
/// Ports: g, g1, g2.
LabeledGadget build_arm();

/// 28-vertex, 47-edge splitter. Ports: g, h, h1, h2, h3. Tilings covering
/// everything but the ports use exactly one of g, h, and the port trace is
/// either {g} or {h, h1, h2, h3}.
LabeledGadget build_splitter();

/// 15-vertex clause gadget made of three chorded 6-cycles glued in a ring.
/// Ports: a{k}_{j} for k in 1..6, j in 1..3 (identified names included).
/// Removing the port triples U_j of exactly two j leaves a perfectly tileable
/// graph; any other subset does not.
LabeledGadget build_clause_gadget();

/// Variable gadget over a 4*l cycle with chords, one splitter per occurrence.
/// `occurrences[j]` gives the polarity of the variable in its j-th clause
/// (true = positive). Ports: h{k}_{j} for k in 1..3, j in 1..l.
LabeledGadget build_variable_gadget(const std::vector<bool>& occurrences);

/// 3-CNF instance for the one-true-literal problem. Literals are signed
/// 1-based variable indexes.
struct Cnf13Instance {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;
    // optional drawing orders: per variable its clause indexes, per clause
    // its variable indexes
    std::optional<std::vector<std::vector<int>>> var_order;
    std::optional<std::vector<std::vector<int>>> clause_order;
};

/// DIMACS-style text: optional "c" comments, a "p cnf V C" line, clause
/// lines with three literals (trailing 0 optional).
Cnf13Instance parse_cnf13(const std::string& text);

/// The reduction graph: variable and clause gadgets with the
/// polarity-dependent port identifications. Has a triangle factor iff the
/// formula has an assignment with exactly one true literal per clause.
LabeledGadget reduce_formula(const Cnf13Instance& inst);

/// Exact backtracking cover of the lowest-index uncovered vertex.
using Triangle = std::array<int, 3>;
std::optional<std::vector<Triangle>> triangle_factor(const Graph& g);

/// Enumerates every vertex-disjoint triangle collection covering all
/// `required` vertices (others optional). The callback returns false to stop.
void enumerate_triangle_tilings(const Graph& g, const std::vector<char>& required,
                                const std::function<bool(const std::vector<Triangle>&)>& cb);

/// Deletion instance whose answer matches triangle-factor existence:
/// family {P4} with budget |E| - |V|. Budget below zero means no factor.
struct P4Instance {
    PatternFamily family;
    int k = 0;
    bool feasible = true;
};
P4Instance p4_deletion_instance(const Graph& g);

/// Brute-force one-true-literal solver; lexicographically first assignment
/// preferring true at low indexes. Limited to 24 variables.
std::optional<std::vector<bool>> solve_1in3(const Cnf13Instance& inst);

}  // namespace subfree

#endif
