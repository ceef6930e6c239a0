#pragma once

#include <cstddef>
#include <vector>

#include "ramsey/clauses.hpp"

namespace ramsey {

// Second gluing engine: three-valued variables, per-clause UNKNOWN counters,
// and a stack of assigned-but-unscanned variables.  Logically equivalent to
// the interval engine, implemented independently.

enum class Tv : std::uint8_t { False, True, Unknown };

struct PropState {
  int num_vars = 0;
  std::vector<Tv> value;
  std::vector<std::uint16_t> stack;  // distinct: membership tracked in on_stack
  VarSet on_stack;
  // clique clauses: unknown count and FALSE count (FALSE satisfies);
  // independent clauses: unknown count and TRUE count.
  std::vector<std::uint8_t> cq_unknown, cq_false, iq_unknown, iq_true;
  std::vector<std::uint16_t> trail;  // assignment order, for undo
  int unknown_total = 0;
  bool failed = false;
};

// Variables forced by singleton clauses are assigned and pushed; everything
// else starts UNKNOWN.  Contradicting singletons fail immediately.
PropState csp_init(const ClauseSystem& cs);

// Assign at push time and update counters.
void csp_assign(PropState& st, const ClauseSystem& cs, int var, Tv val);

// Drain the stack: a FALSE variable scans its independent clauses, a TRUE
// variable its clique clauses; violated clauses fail, unit clauses assign and
// push their last UNKNOWN cell.  Returns false on FAIL.
bool csp_propagate(PropState& st, const ClauseSystem& cs);

void csp_undo_to(PropState& st, const ClauseSystem& cs, std::size_t trail_mark);

// Heuristic: the UNKNOWN variable in the most clauses that are one assignment
// away from becoming unit (unsatisfied, exactly two UNKNOWN cells); ties and
// the non-heuristic mode take the lowest index.
int csp_pick_branch(const PropState& st, const ClauseSystem& cs, bool heuristic);

// Slow reference mode: recompute all counters from scratch and compare.
bool csp_counters_consistent(const PropState& st, const ClauseSystem& cs);

struct CspOptions {
  bool heuristic_branching = false;
  std::size_t max_solutions = static_cast<std::size_t>(-1);
};

// Complete solution set (TRUE-cell bitsets), sorted.
std::vector<VarSet> csp_solve(const ClauseSystem& cs, const CspOptions& opt = {});

}  // namespace ramsey
