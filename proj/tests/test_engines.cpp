#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "ramsey/csp_engine.hpp"
#include "ramsey/interval_engine.hpp"

using namespace ramsey;

namespace {

ClauseSystem random_system(std::mt19937_64& rng, int num_vars) {
  ClauseSystem cs;
  cs.num_vars = num_vars;
  int n_clique = static_cast<int>(rng() % 12);
  int n_indep = static_cast<int>(rng() % 12);
  auto random_clause = [&]() {
    int size = 1 + static_cast<int>(rng() % std::min(9, num_vars));
    std::vector<std::uint16_t> cells;
    while (static_cast<int>(cells.size()) < size) {
      std::uint16_t c = static_cast<std::uint16_t>(rng() % static_cast<std::uint64_t>(num_vars));
      if (std::find(cells.begin(), cells.end(), c) == cells.end()) cells.push_back(c);
    }
    std::sort(cells.begin(), cells.end());
    return cells;
  };
  for (int i = 0; i < n_clique; ++i) {
    auto cells = random_clause();
    cs.add_clique(std::span<const std::uint16_t>(cells));
  }
  for (int i = 0; i < n_indep; ++i) {
    auto cells = random_clause();
    cs.add_indep(std::span<const std::uint16_t>(cells));
  }
  cs.build_occurrence_lists();
  return cs;
}

VarSet decided_true(const PropState& st) {
  VarSet s;
  for (int v = 0; v < st.num_vars; ++v)
    if (st.value[static_cast<std::size_t>(v)] == Tv::True) s.set(v);
  return s;
}

VarSet decided_false(const PropState& st) {
  VarSet s;
  for (int v = 0; v < st.num_vars; ++v)
    if (st.value[static_cast<std::size_t>(v)] == Tv::False) s.set(v);
  return s;
}

}  // namespace

TEST_CASE("collapse forces singleton hit clauses into lo") {
  ClauseSystem cs;
  cs.num_vars = 4;
  cs.add_indep({2});
  cs.build_occurrence_lists();
  Interval iv = full_interval(4);
  CHECK(collapse(iv, cs) == Collapse::Ok);
  CHECK(iv.lo.test(2));
  CHECK(iv.lo.count() == 1);
  CHECK(iv.hi.count() == 4);
}

TEST_CASE("collapse fails when a clique clause is fully committed") {
  ClauseSystem cs;
  cs.num_vars = 4;
  cs.add_clique({0, 1, 2, 3});
  cs.build_occurrence_lists();
  Interval iv = full_interval(4);
  for (int c = 0; c < 4; ++c) iv.lo.set(c);
  CHECK(collapse(iv, cs) == Collapse::Fail);
}

TEST_CASE("collapse leaves an unconstrained interval unchanged") {
  ClauseSystem cs;
  cs.num_vars = 6;
  cs.build_occurrence_lists();
  Interval iv = full_interval(6);
  Interval before = iv;
  CHECK(collapse(iv, cs) == Collapse::Ok);
  CHECK(iv == before);
}

TEST_CASE("collapse is monotone and halves the candidate count per decision") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 50; ++it) {
    ClauseSystem cs = random_system(rng, 9);
    Interval iv = full_interval(9);
    int undecided_before = 9;
    if (collapse(iv, cs) == Collapse::Fail) continue;
    CHECK((iv.lo.w[0] & ~iv.hi.w[0]) == 0);  // lo subset of hi
    int undecided_after = (iv.hi.count() - iv.lo.count());
    CHECK(undecided_after <= undecided_before);
  }
}

TEST_CASE("csp init handles singleton clauses and contradictions") {
  ClauseSystem cs;
  cs.num_vars = 3;
  cs.build_occurrence_lists();
  PropState st = csp_init(cs);
  CHECK(!st.failed);
  CHECK(st.stack.empty());
  CHECK(st.unknown_total == 3);

  ClauseSystem one;
  one.num_vars = 3;
  one.add_indep({1});
  one.build_occurrence_lists();
  st = csp_init(one);
  CHECK(!st.failed);
  CHECK(st.value[1] == Tv::True);
  CHECK(st.stack.size() == 1);

  ClauseSystem contra;
  contra.num_vars = 3;
  contra.add_indep({1});
  contra.add_clique({1});
  contra.build_occurrence_lists();
  st = csp_init(contra);
  CHECK(st.failed);
}

TEST_CASE("propagation cascades through a chain of two-cell clauses") {
  // forcing cell 0 true propagates: clique {0,1} -> 1 false, indep {1,2} ->
  // 2 true, clique {2,3} -> 3 false
  ClauseSystem cs;
  cs.num_vars = 4;
  cs.add_indep({0});
  cs.add_clique({0, 1});
  cs.add_indep({1, 2});
  cs.add_clique({2, 3});
  cs.build_occurrence_lists();
  PropState st = csp_init(cs);
  CHECK(csp_propagate(st, cs));
  CHECK(st.value[0] == Tv::True);
  CHECK(st.value[1] == Tv::False);
  CHECK(st.value[2] == Tv::True);
  CHECK(st.value[3] == Tv::False);
  CHECK(st.unknown_total == 0);
  CHECK(csp_counters_consistent(st, cs));
}

TEST_CASE("propagation fails on an all-false hit clause") {
  ClauseSystem cs;
  cs.num_vars = 2;
  cs.add_indep({0, 1});
  cs.add_clique({0});  // forces 0 false
  cs.add_clique({1});  // forces 1 false, so the hit clause is violated
  cs.build_occurrence_lists();
  PropState st = csp_init(cs);
  CHECK((st.failed || !csp_propagate(st, cs)));
}

TEST_CASE("after propagation every clause is satisfied or has two unknowns") {
  std::mt19937_64 rng(22);
  for (int it = 0; it < 200; ++it) {
    ClauseSystem cs = random_system(rng, 10);
    PropState st = csp_init(cs);
    if (st.failed || !csp_propagate(st, cs)) continue;
    for (std::size_t i = 0; i < cs.clique.size(); ++i)
      CHECK((st.cq_false[i] > 0 || st.cq_unknown[i] >= 2));
    for (std::size_t i = 0; i < cs.indep.size(); ++i)
      CHECK((st.iq_true[i] > 0 || st.iq_unknown[i] >= 2));
    CHECK(csp_counters_consistent(st, cs));
  }
}

TEST_CASE("both engines equal exhaustive enumeration on random systems") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 300; ++it) {
    int num_vars = 4 + static_cast<int>(rng() % 13);  // up to 16 = 4x4 cells
    ClauseSystem cs = random_system(rng, num_vars);
    std::vector<VarSet> oracle = enumerate_satisfying(cs);
    CHECK(interval_search(cs) == oracle);
    CHECK(csp_solve(cs) == oracle);
    IntervalOptions enhanced;
    enhanced.enhancements = true;
    CHECK(interval_search(cs, enhanced) == oracle);
    CspOptions heuristic;
    heuristic.heuristic_branching = true;
    CHECK(csp_solve(cs, heuristic) == oracle);
  }
}

TEST_CASE("propagation fixpoints are order independent and engines agree") {
  std::mt19937_64 rng(24);
  for (int it = 0; it < 50; ++it) {
    ClauseSystem cs = random_system(rng, 12);
    Interval iv0 = full_interval(12);
    Collapse c0 = collapse(iv0, cs);
    PropState st0 = csp_init(cs);
    bool ok0 = !st0.failed && csp_propagate(st0, cs);

    CHECK((c0 == Collapse::Ok) == ok0);
    if (ok0) {
      CHECK(decided_true(st0) == iv0.lo);
      VarSet out;
      for (int v = 0; v < 12; ++v)
        if (!iv0.hi.test(v)) out.set(v);
      CHECK(decided_false(st0) == out);
    }

    for (int order = 0; order < 100; ++order) {
      ClauseSystem sh = shuffled(cs, static_cast<std::uint64_t>(order) * 977 + 13);
      Interval iv = full_interval(12);
      Collapse c = collapse(iv, sh);
      CHECK(c == c0);
      if (c == Collapse::Ok) CHECK(iv == iv0);
      PropState st = csp_init(sh);
      bool ok = !st.failed && csp_propagate(st, sh);
      CHECK(ok == ok0);
      if (ok && ok0) CHECK(st.value == st0.value);
    }
  }
}

TEST_CASE("propagated literals hold in every solution") {
  std::mt19937_64 rng(25);
  for (int it = 0; it < 200; ++it) {
    ClauseSystem cs = random_system(rng, 9);
    PropState st = csp_init(cs);
    if (st.failed || !csp_propagate(st, cs)) {
      CHECK(enumerate_satisfying(cs).empty());
      continue;
    }
    VarSet forced_true = decided_true(st), forced_false = decided_false(st);
    for (const VarSet& sol : enumerate_satisfying(cs)) {
      for (int v = 0; v < 9; ++v) {
        if (forced_true.test(v)) CHECK(sol.test(v));
        if (forced_false.test(v)) CHECK(!sol.test(v));
      }
    }
  }
}

TEST_CASE("probe_pairs detects dead cells and stays within the collapse") {
  // cell 0 true violates the clique clause, false violates the hit clause
  ClauseSystem cs;
  cs.num_vars = 1;
  cs.add_clique({0});
  cs.add_indep({0});
  cs.build_occurrence_lists();
  Interval iv = full_interval(1);
  CHECK(collapse(iv, cs) == Collapse::Fail);

  ClauseSystem pair;
  pair.num_vars = 2;
  pair.add_clique({0, 1});
  pair.add_indep({0, 1});
  pair.build_occurrence_lists();
  iv = full_interval(2);
  REQUIRE(collapse(iv, pair) == Collapse::Ok);
  CHECK(probe_pairs(iv, pair) == Collapse::Ok);

  std::mt19937_64 rng(26);
  for (int it = 0; it < 100; ++it) {
    ClauseSystem sys = random_system(rng, 9);
    Interval collapsed = full_interval(9);
    if (collapse(collapsed, sys) == Collapse::Fail) continue;
    Interval probed = collapsed;
    Collapse pc = probe_pairs(probed, sys);
    if (pc == Collapse::Fail) {
      CHECK(enumerate_satisfying(sys).empty());
      continue;
    }
    // sub-interval of the collapsed interval
    for (int v = 0; v < 9; ++v) {
      if (collapsed.lo.test(v)) CHECK(probed.lo.test(v));
      if (!collapsed.hi.test(v)) CHECK(!probed.hi.test(v));
    }
  }
}

TEST_CASE("branch-cell ordering prefers cells in two-cell hit clauses") {
  ClauseSystem cs;
  cs.num_vars = 9;
  cs.build_occurrence_lists();
  auto order = order_branch_cells(cs);
  for (int i = 0; i < 9; ++i) CHECK(order[static_cast<std::size_t>(i)] == i);

  ClauseSystem weighted;
  weighted.num_vars = 9;
  weighted.add_indep({0, 3});
  weighted.add_indep({0, 5});
  weighted.add_indep({0, 7});
  weighted.add_indep({2, 4});
  weighted.build_occurrence_lists();
  order = order_branch_cells(weighted);
  CHECK(order[0] == 0);
}

TEST_CASE("branch variable choice") {
  ClauseSystem cs;
  cs.num_vars = 6;
  cs.add_clique({1, 2});
  cs.add_clique({1, 4});
  cs.build_occurrence_lists();
  PropState st = csp_init(cs);
  REQUIRE(csp_propagate(st, cs));
  CHECK(csp_pick_branch(st, cs, false) == 0);
  CHECK(csp_pick_branch(st, cs, true) == 1);  // in two two-unknown clauses
}
