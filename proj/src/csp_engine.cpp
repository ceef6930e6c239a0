#include "ramsey/csp_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramsey {

PropState csp_init(const ClauseSystem& cs) {
  if (cs.occ_clique.size() != static_cast<std::size_t>(cs.num_vars) && !(cs.clique.empty() && cs.indep.empty()))
    throw std::logic_error("csp_init: occurrence lists not built");
  PropState st;
  st.num_vars = cs.num_vars;
  st.value.assign(static_cast<std::size_t>(cs.num_vars), Tv::Unknown);
  st.unknown_total = cs.num_vars;
  st.cq_unknown.resize(cs.clique.size());
  st.cq_false.assign(cs.clique.size(), 0);
  st.iq_unknown.resize(cs.indep.size());
  st.iq_true.assign(cs.indep.size(), 0);
  for (std::size_t i = 0; i < cs.clique.size(); ++i) st.cq_unknown[i] = cs.clique[i].size;
  for (std::size_t i = 0; i < cs.indep.size(); ++i) st.iq_unknown[i] = cs.indep[i].size;
  for (const Clause& c : cs.indep)
    if (c.size == 1) {
      int v = c.cell[0];
      if (st.value[static_cast<std::size_t>(v)] == Tv::False) {
        st.failed = true;
        return st;
      }
      if (st.value[static_cast<std::size_t>(v)] == Tv::Unknown) csp_assign(st, cs, v, Tv::True);
    }
  for (const Clause& c : cs.clique)
    if (c.size == 1) {
      int v = c.cell[0];
      if (st.value[static_cast<std::size_t>(v)] == Tv::True) {
        st.failed = true;
        return st;
      }
      if (st.value[static_cast<std::size_t>(v)] == Tv::Unknown) csp_assign(st, cs, v, Tv::False);
    }
  return st;
}

void csp_assign(PropState& st, const ClauseSystem& cs, int var, Tv val) {
  st.value[static_cast<std::size_t>(var)] = val;
  st.trail.push_back(static_cast<std::uint16_t>(var));
  if (!st.on_stack.test(var)) {
    st.on_stack.set(var);
    st.stack.push_back(static_cast<std::uint16_t>(var));
  }
  --st.unknown_total;
  if (val == Tv::False) {
    for (auto i : cs.occ_clique[static_cast<std::size_t>(var)]) {
      --st.cq_unknown[i];
      ++st.cq_false[i];
    }
    for (auto i : cs.occ_indep[static_cast<std::size_t>(var)]) --st.iq_unknown[i];
  } else {
    for (auto i : cs.occ_clique[static_cast<std::size_t>(var)]) --st.cq_unknown[i];
    for (auto i : cs.occ_indep[static_cast<std::size_t>(var)]) {
      --st.iq_unknown[i];
      ++st.iq_true[i];
    }
  }
}

bool csp_propagate(PropState& st, const ClauseSystem& cs) {
  if (st.failed) return false;
  while (!st.stack.empty()) {
    int var = st.stack.back();
    st.stack.pop_back();
    st.on_stack.reset(var);
    if (st.value[static_cast<std::size_t>(var)] == Tv::False) {
      for (auto i : cs.occ_indep[static_cast<std::size_t>(var)]) {
        if (st.iq_true[i] > 0) continue;
        if (st.iq_unknown[i] == 0) {
          st.failed = true;
          return false;
        }
        if (st.iq_unknown[i] == 1) {
          for (auto v : cs.indep[i].cells())
            if (st.value[v] == Tv::Unknown) {
              csp_assign(st, cs, v, Tv::True);
              break;
            }
        }
      }
    } else {
      for (auto i : cs.occ_clique[static_cast<std::size_t>(var)]) {
        if (st.cq_false[i] > 0) continue;
        if (st.cq_unknown[i] == 0) {
          st.failed = true;
          return false;
        }
        if (st.cq_unknown[i] == 1) {
          for (auto v : cs.clique[i].cells())
            if (st.value[v] == Tv::Unknown) {
              csp_assign(st, cs, v, Tv::False);
              break;
            }
        }
      }
    }
  }
  return true;
}

void csp_undo_to(PropState& st, const ClauseSystem& cs, std::size_t trail_mark) {
  while (st.trail.size() > trail_mark) {
    int var = st.trail.back();
    st.trail.pop_back();
    Tv val = st.value[static_cast<std::size_t>(var)];
    if (val == Tv::False) {
      for (auto i : cs.occ_clique[static_cast<std::size_t>(var)]) {
        ++st.cq_unknown[i];
        --st.cq_false[i];
      }
      for (auto i : cs.occ_indep[static_cast<std::size_t>(var)]) ++st.iq_unknown[i];
    } else {
      for (auto i : cs.occ_clique[static_cast<std::size_t>(var)]) ++st.cq_unknown[i];
      for (auto i : cs.occ_indep[static_cast<std::size_t>(var)]) {
        ++st.iq_unknown[i];
        --st.iq_true[i];
      }
    }
    st.value[static_cast<std::size_t>(var)] = Tv::Unknown;
    ++st.unknown_total;
    st.on_stack.reset(var);
  }
  st.stack.clear();
  st.failed = false;
}

int csp_pick_branch(const PropState& st, const ClauseSystem& cs, bool heuristic) {
  if (!heuristic) {
    for (int v = 0; v < st.num_vars; ++v)
      if (st.value[static_cast<std::size_t>(v)] == Tv::Unknown) return v;
    return -1;
  }
  std::vector<int> score(static_cast<std::size_t>(st.num_vars), 0);
  for (std::size_t i = 0; i < cs.clique.size(); ++i)
    if (st.cq_false[i] == 0 && st.cq_unknown[i] == 2)
      for (auto v : cs.clique[i].cells())
        if (st.value[v] == Tv::Unknown) ++score[v];
  for (std::size_t i = 0; i < cs.indep.size(); ++i)
    if (st.iq_true[i] == 0 && st.iq_unknown[i] == 2)
      for (auto v : cs.indep[i].cells())
        if (st.value[v] == Tv::Unknown) ++score[v];
  int best = -1;
  for (int v = 0; v < st.num_vars; ++v) {
    if (st.value[static_cast<std::size_t>(v)] != Tv::Unknown) continue;
    if (best < 0 || score[static_cast<std::size_t>(v)] > score[static_cast<std::size_t>(best)]) best = v;
  }
  return best;
}

bool csp_counters_consistent(const PropState& st, const ClauseSystem& cs) {
  for (std::size_t i = 0; i < cs.clique.size(); ++i) {
    int unknown = 0, nfalse = 0;
    for (auto v : cs.clique[i].cells()) {
      if (st.value[v] == Tv::Unknown) ++unknown;
      if (st.value[v] == Tv::False) ++nfalse;
    }
    if (unknown != st.cq_unknown[i] || nfalse != st.cq_false[i]) return false;
  }
  for (std::size_t i = 0; i < cs.indep.size(); ++i) {
    int unknown = 0, ntrue = 0;
    for (auto v : cs.indep[i].cells()) {
      if (st.value[v] == Tv::Unknown) ++unknown;
      if (st.value[v] == Tv::True) ++ntrue;
    }
    if (unknown != st.iq_unknown[i] || ntrue != st.iq_true[i]) return false;
  }
  return true;
}

namespace {

void solve_rec(PropState& st, const ClauseSystem& cs, const CspOptions& opt,
               std::vector<VarSet>& out) {
  if (out.size() >= opt.max_solutions) return;
  if (st.unknown_total == 0) {
    VarSet sol;
    for (int v = 0; v < st.num_vars; ++v)
      if (st.value[static_cast<std::size_t>(v)] == Tv::True) sol.set(v);
    out.push_back(sol);
    return;
  }
  int var = csp_pick_branch(st, cs, opt.heuristic_branching);
  for (Tv val : {Tv::False, Tv::True}) {
    std::size_t mark = st.trail.size();
    csp_assign(st, cs, var, val);
    if (csp_propagate(st, cs)) solve_rec(st, cs, opt, out);
    csp_undo_to(st, cs, mark);
    if (out.size() >= opt.max_solutions) return;
  }
}

}  // namespace

std::vector<VarSet> csp_solve(const ClauseSystem& cs, const CspOptions& opt) {
  std::vector<VarSet> out;
  PropState st = csp_init(cs);
  if (!st.failed && csp_propagate(st, cs)) solve_rec(st, cs, opt, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ramsey
