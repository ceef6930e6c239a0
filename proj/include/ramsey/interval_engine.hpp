#pragma once

#include <cstddef>
#include <vector>

#include "ramsey/clauses.hpp"

namespace ramsey {

// First gluing engine.  An interval [lo, hi] stands for every assignment X
// with lo <= X <= hi cellwise.  Collapsing rules force cells into lo or out
// of hi; FAIL means the interval contains no solution.

struct Interval {
  VarSet lo, hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

enum class Collapse { Ok, Fail };

Interval full_interval(int num_vars);

// Least fixpoint of the collapsing rules.  A clique clause with every cell
// but one in lo removes the last cell from hi; an independent clause with
// every cell but one out of hi forces the last cell into lo; a fully decided
// violated clause fails.  The result is independent of application order.
Collapse collapse(Interval& iv, const ClauseSystem& cs);

// d <= 7 enhancement: test both restrictions of every undecided cell, commit
// the survivor when one side fails, iterate to a fixpoint.  Expects a
// collapsed input interval.
Collapse probe_pairs(Interval& iv, const ClauseSystem& cs);

// Branch-cell priority: descending membership count in 2-cell independent
// clauses (the rules that fire off a single hi-removal), ties row-major.
std::vector<std::uint16_t> order_branch_cells(const ClauseSystem& cs);

struct IntervalOptions {
  bool enhancements = false;  // probe_pairs + branch-cell ordering
  std::size_t max_solutions = static_cast<std::size_t>(-1);
};

// Complete solution set, sorted.
std::vector<VarSet> interval_search(const ClauseSystem& cs, const IntervalOptions& opt = {});

}  // namespace ramsey
