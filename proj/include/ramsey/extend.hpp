#pragma once

#include <vector>

#include "ramsey/clauses.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

// One-point extension: every neighbourhood N of a new vertex such that the
// extended graph stays (s,t)-good.  N must contain no (s-1)-clique of the
// base and meet every independent (t-1)-set of the base.

// Membership-variable clause system over the base's vertices: (s-1)-cliques
// become clique clauses, independent (t-1)-sets become hit clauses.
ClauseSystem extension_clauses(const Graph& base, int s, int t);

// All extensions of base by one vertex, no isomorphism dedup, deterministic
// order.  Solved with the same three-valued propagation engine the gluing
// path uses.
std::vector<Graph> one_point_extensions(const Graph& base, int s, int t);

// true iff at least one extension exists; stops at the first solution
bool extendable(const Graph& base, int s, int t);

}  // namespace ramsey
