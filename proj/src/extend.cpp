#include "ramsey/extend.hpp"

#include <algorithm>
#include <stdexcept>

#include "ramsey/csp_engine.hpp"

namespace ramsey {

namespace {

std::vector<std::uint16_t> mask_cells(std::uint64_t mask) {
  std::vector<std::uint16_t> cells;
  while (mask) {
    cells.push_back(static_cast<std::uint16_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return cells;
}

}  // namespace

ClauseSystem extension_clauses(const Graph& base, int s, int t) {
  if (s < 2 || t < 2) throw std::invalid_argument("extension_clauses: targets must be >= 2");
  ClauseSystem cs;
  cs.num_vars = base.n;
  for_each_clique(base, s - 1, base.vertex_mask(), [&](std::uint64_t m) {
    auto cells = mask_cells(m);
    cs.add_clique(std::span<const std::uint16_t>(cells));
    return true;
  });
  for_each_independent(base, t - 1, base.vertex_mask(), [&](std::uint64_t m) {
    auto cells = mask_cells(m);
    cs.add_indep(std::span<const std::uint16_t>(cells));
    return true;
  });
  cs.build_occurrence_lists();
  return cs;
}

namespace {

Graph extend_with(const Graph& base, std::uint64_t neighbourhood) {
  Graph g = Graph::empty(base.n + 1);
  for (int v = 0; v < base.n; ++v) g.rows[v] = base.rows[v];
  int nv = base.n;
  std::uint64_t nb = neighbourhood;
  while (nb) {
    int u = std::countr_zero(nb);
    nb &= nb - 1;
    g.add_edge(u, nv);
  }
  return g;
}

}  // namespace

std::vector<Graph> one_point_extensions(const Graph& base, int s, int t) {
  ClauseSystem cs = extension_clauses(base, s, t);
  std::vector<VarSet> sols = csp_solve(cs);
  std::vector<Graph> out;
  out.reserve(sols.size());
  for (const VarSet& a : sols) out.push_back(extend_with(base, a.w[0]));
  return out;
}

bool extendable(const Graph& base, int s, int t) {
  ClauseSystem cs = extension_clauses(base, s, t);
  CspOptions opt;
  opt.max_solutions = 1;
  return !csp_solve(cs, opt).empty();
}

}  // namespace ramsey
