#ifndef SUBFREE_ORACLE_HPP
#define SUBFREE_ORACLE_HPP

#include "dp.hpp"

namespace subfree {

/// Independent brute-force solver: bounded search tree branching on the
/// edges of a found copy. Ground truth for everything else; intended for
/// hosts up to ~20 vertices and budgets up to ~5.
SolveOutcome oracle_solve(const Graph& g, const PatternFamily& fam, int k);

/// Second, even dumber route: enumerate all edge subsets of size <= k.
/// Used to cross-check oracle_solve itself on small inputs.
SolveOutcome oracle_solve_by_enumeration(const Graph& g, const PatternFamily& fam, int k);

}  // namespace subfree

#endif
