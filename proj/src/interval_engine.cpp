#include "ramsey/interval_engine.hpp"

#include <algorithm>
#include <cassert>

namespace ramsey {

namespace {

struct Counters {
  // clique: cells in lo / cells out of hi; a clique clause is permanently
  // satisfied once any cell leaves hi.  Independent clauses dually.
  std::vector<std::uint8_t> cq_lo, cq_out, iq_lo, iq_out;
};

struct Work {
  // worklist of clause indices; kind 0 = clique, 1 = indep
  std::vector<std::uint32_t> items;
  std::vector<std::uint8_t> queued_cq, queued_iq;

  void push(int kind, std::uint32_t idx) {
    auto& flag = kind == 0 ? queued_cq[idx] : queued_iq[idx];
    if (flag) return;
    flag = 1;
    items.push_back((idx << 1) | static_cast<std::uint32_t>(kind));
  }
  bool pop(int& kind, std::uint32_t& idx) {
    if (items.empty()) return false;
    std::uint32_t v = items.back();
    items.pop_back();
    kind = static_cast<int>(v & 1);
    idx = v >> 1;
    (kind == 0 ? queued_cq[idx] : queued_iq[idx]) = 0;
    return true;
  }
};

class Propagator {
 public:
  Propagator(Interval& iv, const ClauseSystem& cs) : iv_(iv), cs_(cs) {
    if (cs.occ_clique.size() != static_cast<std::size_t>(cs.num_vars) && !(cs.clique.empty() && cs.indep.empty()))
      throw std::logic_error("collapse: occurrence lists not built");
    cnt_.cq_lo.assign(cs.clique.size(), 0);
    cnt_.cq_out.assign(cs.clique.size(), 0);
    cnt_.iq_lo.assign(cs.indep.size(), 0);
    cnt_.iq_out.assign(cs.indep.size(), 0);
    work_.queued_cq.assign(cs.clique.size(), 0);
    work_.queued_iq.assign(cs.indep.size(), 0);
    for (std::uint32_t i = 0; i < cs.clique.size(); ++i) {
      for (auto c : cs.clique[i].cells()) {
        if (iv.lo.test(c)) ++cnt_.cq_lo[i];
        if (!iv.hi.test(c)) ++cnt_.cq_out[i];
      }
      work_.push(0, i);
    }
    for (std::uint32_t i = 0; i < cs.indep.size(); ++i) {
      for (auto c : cs.indep[i].cells()) {
        if (iv.lo.test(c)) ++cnt_.iq_lo[i];
        if (!iv.hi.test(c)) ++cnt_.iq_out[i];
      }
      work_.push(1, i);
    }
  }

  Collapse run() {
    int kind;
    std::uint32_t idx;
    while (work_.pop(kind, idx)) {
      if (kind == 0) {
        const Clause& c = cs_.clique[idx];
        if (cnt_.cq_out[idx] > 0) continue;  // satisfied
        if (cnt_.cq_lo[idx] == c.size) return Collapse::Fail;
        if (cnt_.cq_lo[idx] + 1 == c.size) {
          for (auto v : c.cells())
            if (!iv_.lo.test(v)) {
              remove_from_hi(v);
              break;
            }
        }
      } else {
        const Clause& c = cs_.indep[idx];
        if (cnt_.iq_lo[idx] > 0) continue;  // satisfied
        if (cnt_.iq_out[idx] == c.size) return Collapse::Fail;
        if (cnt_.iq_out[idx] + 1 == c.size) {
          for (auto v : c.cells())
            if (iv_.hi.test(v)) {
              add_to_lo(v);
              break;
            }
        }
      }
    }
    return Collapse::Ok;
  }

 private:
  void remove_from_hi(int v) {
    iv_.hi.reset(v);
    for (auto i : cs_.occ_clique[static_cast<std::size_t>(v)]) ++cnt_.cq_out[i];
    for (auto i : cs_.occ_indep[static_cast<std::size_t>(v)]) {
      ++cnt_.iq_out[i];
      work_.push(1, i);
    }
  }
  void add_to_lo(int v) {
    iv_.lo.set(v);
    for (auto i : cs_.occ_indep[static_cast<std::size_t>(v)]) ++cnt_.iq_lo[i];
    for (auto i : cs_.occ_clique[static_cast<std::size_t>(v)]) {
      ++cnt_.cq_lo[i];
      work_.push(0, i);
    }
  }

  Interval& iv_;
  const ClauseSystem& cs_;
  Counters cnt_;
  Work work_;
};

}  // namespace

Interval full_interval(int num_vars) {
  Interval iv;
  for (int i = 0; i < num_vars; ++i) iv.hi.set(i);
  return iv;
}

Collapse collapse(Interval& iv, const ClauseSystem& cs) {
  Propagator p(iv, cs);
  return p.run();
}

Collapse probe_pairs(Interval& iv, const ClauseSystem& cs) {
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < cs.num_vars; ++v) {
      if (iv.lo.test(v) || !iv.hi.test(v)) continue;
      Interval without = iv;
      without.hi.reset(v);
      Collapse c0 = collapse(without, cs);
      Interval with = iv;
      with.lo.set(v);
      Collapse c1 = collapse(with, cs);
      if (c0 == Collapse::Fail && c1 == Collapse::Fail) return Collapse::Fail;
      if (c0 == Collapse::Fail) {
        iv = with;
        changed = true;
      } else if (c1 == Collapse::Fail) {
        iv = without;
        changed = true;
      }
    }
  }
  return Collapse::Ok;
}

std::vector<std::uint16_t> order_branch_cells(const ClauseSystem& cs) {
  std::vector<int> score(static_cast<std::size_t>(cs.num_vars), 0);
  for (const Clause& c : cs.indep)
    if (c.size == 2)
      for (auto v : c.cells()) ++score[v];
  std::vector<std::uint16_t> order(static_cast<std::size_t>(cs.num_vars));
  for (int i = 0; i < cs.num_vars; ++i) order[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint16_t a, std::uint16_t b) { return score[a] > score[b]; });
  return order;
}

namespace {

struct Search {
  const ClauseSystem& cs;
  const IntervalOptions& opt;
  std::vector<std::uint16_t> priority;
  std::vector<VarSet> solutions;

  void rec(Interval iv) {
    if (solutions.size() >= opt.max_solutions) return;
    if (collapse(iv, cs) == Collapse::Fail) return;
    if (opt.enhancements && probe_pairs(iv, cs) == Collapse::Fail) return;
    int branch = -1;
    for (auto v : priority)
      if (iv.hi.test(v) && !iv.lo.test(v)) {
        branch = v;
        break;
      }
    if (branch < 0) {
      solutions.push_back(iv.lo);
      return;
    }
    Interval without = iv;
    without.hi.reset(branch);
    rec(without);
    Interval with = iv;
    with.lo.set(branch);
    rec(with);
  }
};

}  // namespace

std::vector<VarSet> interval_search(const ClauseSystem& cs, const IntervalOptions& opt) {
  Search s{cs, opt, {}, {}};
  if (opt.enhancements) {
    s.priority = order_branch_cells(cs);
  } else {
    s.priority.resize(static_cast<std::size_t>(cs.num_vars));
    for (int i = 0; i < cs.num_vars; ++i) s.priority[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(i);
  }
  s.rec(full_interval(cs.num_vars));
  std::sort(s.solutions.begin(), s.solutions.end());
  return s.solutions;
}

}  // namespace ramsey
