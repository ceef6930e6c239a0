#include "ramsey/gluing.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ramsey {

CrossMatrix CrossMatrix::transposed() const {
  CrossMatrix t;
  t.dprime = dprime;
  for (int i = 0; i < dprime; ++i)
    for (int j = 0; j < dprime; ++j)
      if (get(i, j)) t.set(j, i, true);
  return t;
}

std::string CrossMatrix::bit_string() const {
  std::string s;
  s.reserve(static_cast<std::size_t>(dprime) * dprime);
  for (int c = 0; c < dprime * dprime; ++c) s.push_back(bits.test(c) ? '1' : '0');
  return s;
}

std::vector<std::array<int, 3>> clique_triples(int s) {
  std::vector<std::array<int, 3>> out;
  for (int r = 0; r <= s; ++r)
    for (int p = 1; p + r <= s; ++p) {
      int q = s - r - p;
      if (q < 1) continue;
      if (r + p <= s - 2 && r + q <= s - 2) out.push_back({r, p, q});
    }
  return out;
}

std::vector<std::array<int, 3>> indep_triples(int t) {
  std::vector<std::array<int, 3>> out;
  for (int r = 0; r <= t; ++r)
    for (int p = 1; p + r <= t; ++p) {
      int q = t - r - p;
      if (q < 1) continue;
      if (r + p <= t - 1 && r + q <= t - 1 && p <= t - 2 && q <= t - 2) out.push_back({r, p, q});
    }
  return out;
}

namespace {

bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Graph assemble_skeleton(const PointedGraph& lhs, const PointedGraph& rhs, const Perm& pi_inv,
                        int d, int dprime) {
  int order = d + 2 + 2 * dprime;
  Graph f = Graph::empty(order);
  // left graph sits verbatim on 0..d+dprime
  for (int v = 0; v < lhs.g.n; ++v) f.rows[v] = lhs.g.rows[v];
  int a = d;
  int b = d + dprime + 1;
  f.add_edge(a, b);
  for (int k = 0; k < d; ++k) f.add_edge(b, k);
  for (int i = 0; i < dprime; ++i) {
    f.add_edge(b, d + 1 + i);      // b sees the whole left private side
    f.add_edge(a, b + 1 + i);      // a sees the whole right private side
  }
  // right private side: K-edges mapped through the overlap automorphism
  for (int j = 0; j < dprime; ++j) {
    int bj = rhs.d + 1 + j;
    for (int k = 0; k < d; ++k)
      if (rhs.g.has_edge(bj, k)) f.add_edge(b + 1 + j, pi_inv[static_cast<std::size_t>(k)]);
    for (int i = j + 1; i < dprime; ++i)
      if (rhs.g.has_edge(bj, rhs.d + 1 + i)) f.add_edge(b + 1 + j, b + 1 + i);
  }
  return f;
}

}  // namespace

GluingProblem build_problem(const PointedGraph& lhs, const PointedGraph& rhs, const Perm& pi,
                            int s, int t, std::string id) {
  if (lhs.type_bytes != rhs.type_bytes) throw ValidationError("build_problem: type mismatch");
  if (lhs.g.n != rhs.g.n) throw ValidationError("build_problem: order mismatch");
  if (lhs.d != rhs.d) throw ValidationError("build_problem: point degree mismatch");
  int d = lhs.d;
  int dprime = lhs.g.n - d - 1;
  if (dprime < 0 || dprime > kMaxDprime)
    throw ValidationError("build_problem: unsupported private side size");
  if (static_cast<int>(pi.size()) != d || !is_permutation(pi))
    throw ValidationError("build_problem: pi is not a permutation of the overlap");
  std::uint64_t kmask = d == 0 ? 0 : (std::uint64_t{1} << d) - 1;
  if (induced(lhs.g, kmask) != induced(rhs.g, kmask))
    throw ValidationError("build_problem: overlap blocks differ");
  for (int u = 0; u < d; ++u)
    for (int v = u + 1; v < d; ++v)
      if (lhs.g.has_edge(u, v) !=
          lhs.g.has_edge(pi[static_cast<std::size_t>(u)], pi[static_cast<std::size_t>(v)]))
        throw ValidationError("build_problem: pi is not an automorphism of the overlap");
  // Clause shapes below assume both inputs free of (s-1)-cliques and
  // independent t-sets; this also rules out violating sets confined to one side.
  if (!is_good(lhs.g, s - 1, t) || !is_good(rhs.g, s - 1, t))
    throw ValidationError("build_problem: inputs are not (s-1,t)-good");

  GluingProblem p;
  p.lhs = lhs;
  p.rhs = rhs;
  p.pi = pi;
  p.pi_inv = inverse_perm(pi);
  p.s_target = s;
  p.t_target = t;
  p.d = d;
  p.dprime = dprime;
  p.id = std::move(id);
  p.skeleton = assemble_skeleton(lhs, rhs, p.pi_inv, d, dprime);
  return p;
}

namespace {

std::uint64_t map_through(std::uint64_t mask, const Perm& pi) {
  std::uint64_t out = 0;
  while (mask) {
    int v = std::countr_zero(mask);
    mask &= mask - 1;
    out |= Graph::bit(pi[static_cast<std::size_t>(v)]);
  }
  return out;
}

}  // namespace

ClauseSystem enumerate_clauses(const GluingProblem& p) {
  const Graph& gl = p.lhs.g;
  const Graph& gr = p.rhs.g;
  int d = p.d, dp = p.dprime;
  std::uint64_t kmask = d == 0 ? 0 : (std::uint64_t{1} << d) - 1;
  std::uint64_t side = ((dp == 0 ? 0 : (std::uint64_t{1} << dp) - 1)) << (d + 1);

  std::set<std::vector<std::uint16_t>> clique_cells, indep_cells;

  auto cross_cells = [&](std::uint64_t xmask, std::uint64_t ymask) {
    std::vector<std::uint16_t> cells;
    std::uint64_t xs = xmask;
    while (xs) {
      int x = std::countr_zero(xs);
      xs &= xs - 1;
      int i = x - (d + 1);
      std::uint64_t ys = ymask;
      while (ys) {
        int y = std::countr_zero(ys);
        ys &= ys - 1;
        cells.push_back(static_cast<std::uint16_t>(i * dp + (y - (d + 1))));
      }
    }
    std::sort(cells.begin(), cells.end());
    return cells;
  };

  for (auto [r, pp, qq] : clique_triples(p.s_target)) {
    for_each_clique(gl, r, kmask, [&](std::uint64_t w) {
      std::uint64_t common_l = side, common_r = side;
      std::uint64_t wr = map_through(w, p.pi);
      std::uint64_t ws = w;
      while (ws) {
        int v = std::countr_zero(ws);
        ws &= ws - 1;
        common_l &= gl.rows[v];
      }
      ws = wr;
      while (ws) {
        int v = std::countr_zero(ws);
        ws &= ws - 1;
        common_r &= gr.rows[v];
      }
      for_each_clique(gl, pp, common_l, [&](std::uint64_t x) {
        for_each_clique(gr, qq, common_r, [&](std::uint64_t y) {
          clique_cells.insert(cross_cells(x, y));
          return true;
        });
        return true;
      });
      return true;
    });
  }

  for (auto [r, pp, qq] : indep_triples(p.t_target)) {
    for_each_independent(gl, r, kmask, [&](std::uint64_t w) {
      std::uint64_t avoid_l = 0, avoid_r = 0;
      std::uint64_t wr = map_through(w, p.pi);
      std::uint64_t ws = w;
      while (ws) {
        int v = std::countr_zero(ws);
        ws &= ws - 1;
        avoid_l |= gl.rows[v];
      }
      ws = wr;
      while (ws) {
        int v = std::countr_zero(ws);
        ws &= ws - 1;
        avoid_r |= gr.rows[v];
      }
      for_each_independent(gl, pp, side & ~avoid_l, [&](std::uint64_t x) {
        for_each_independent(gr, qq, side & ~avoid_r, [&](std::uint64_t y) {
          indep_cells.insert(cross_cells(x, y));
          return true;
        });
        return true;
      });
      return true;
    });
  }

  ClauseSystem cs;
  cs.num_vars = dp * dp;
  for (const auto& cells : clique_cells) cs.add_clique(std::span<const std::uint16_t>(cells));
  for (const auto& cells : indep_cells) cs.add_indep(std::span<const std::uint16_t>(cells));
  auto by_size = [](const Clause& a, const Clause& b) {
    if (a.size != b.size) return a.size < b.size;
    return std::lexicographical_compare(a.cells().begin(), a.cells().end(), b.cells().begin(),
                                        b.cells().end());
  };
  std::sort(cs.clique.begin(), cs.clique.end(), by_size);
  std::sort(cs.indep.begin(), cs.indep.end(), by_size);
  cs.build_occurrence_lists();
  return cs;
}

Graph assemble(const GluingProblem& p, const CrossMatrix& m) {
  if (m.dprime != p.dprime) throw ValidationError("assemble: matrix dimension mismatch");
  Graph f = p.skeleton;
  for (int i = 0; i < p.dprime; ++i)
    for (int j = 0; j < p.dprime; ++j)
      if (m.get(i, j)) f.add_edge(p.a_side_pos(i), p.b_side_pos(j));
  return f;
}

bool verify_solution(const GluingProblem& p, const CrossMatrix& m) {
  Graph f = assemble(p, m);
  bool good = is_good(f, p.s_target, p.t_target);
  // The marked vertices never participate in a violating set: the left one's
  // closed non-neighbourhood is its private side, whose independent sets stay
  // below t-1 by input goodness; its neighbourhood induces the right graph.
  if (!vertex_in_no_violating_set(f, p.a_pos(), p.s_target, p.t_target) ||
      !vertex_in_no_violating_set(f, p.b_pos(), p.s_target, p.t_target))
    throw std::logic_error("verify_solution: marked vertex in a violating set");
  return good;
}

std::vector<CrossMatrix> brute_force(const GluingProblem& p, int max_dprime) {
  if (p.dprime > max_dprime) throw ValidationError("brute_force: side size above guard");
  int cells = p.dprime * p.dprime;
  std::uint64_t limit = std::uint64_t{1} << cells;
  std::vector<CrossMatrix> out;
#ifdef _OPENMP
#pragma omp parallel
  {
    std::vector<CrossMatrix> local;
    Graph f = p.skeleton;
#pragma omp for schedule(static)
    for (long long x = 0; x < static_cast<long long>(limit); ++x) {
      for (int c = 0; c < cells; ++c)
        f.set_edge(p.a_side_pos(c / p.dprime), p.b_side_pos(c % p.dprime), (x >> c) & 1);
      if (is_good(f, p.s_target, p.t_target)) {
        CrossMatrix m;
        m.dprime = p.dprime;
        m.bits.w[0] = static_cast<std::uint64_t>(x);
        local.push_back(m);
      }
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
#else
  Graph f = p.skeleton;
  for (std::uint64_t x = 0; x < limit; ++x) {
    for (int c = 0; c < cells; ++c)
      f.set_edge(p.a_side_pos(c / p.dprime), p.b_side_pos(c % p.dprime), (x >> c) & 1);
    if (is_good(f, p.s_target, p.t_target)) {
      CrossMatrix m;
      m.dprime = p.dprime;
      m.bits.w[0] = x;
      out.push_back(m);
    }
  }
#endif
  std::sort(out.begin(), out.end());
  return out;
}

CrossMatrix matrix_from_assignment(int dprime, const VarSet& assignment) {
  CrossMatrix m;
  m.dprime = dprime;
  m.bits = assignment;
  return m;
}

std::vector<CrossMatrix> matrices_from_assignments(int dprime, const std::vector<VarSet>& a) {
  std::vector<CrossMatrix> out;
  out.reserve(a.size());
  for (const VarSet& v : a) out.push_back(matrix_from_assignment(dprime, v));
  return out;
}

}  // namespace ramsey
