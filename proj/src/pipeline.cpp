#include "ramsey/pipeline.hpp"

#include <algorithm>

#include "ramsey/csp_engine.hpp"
#include "ramsey/extend.hpp"
#include "ramsey/interval_engine.hpp"

namespace ramsey {

DegreeCheck check_degree_argument(int n, int s, int t, int r_s1_t, int r_s_t1) {
  if (s < 2 || t < 2 || n < 0) throw ValidationError("check_degree_argument: bad parameters");
  DegreeCheck dc;
  dc.n = n;
  // neighbourhoods must avoid (s-1,t) violations, non-neighbourhoods (s,t-1)
  dc.degree_high = r_s1_t - 1;
  dc.degree_low = n - r_s_t1;
  if (n == 0) {
    dc.applicable = true;
    dc.closes = true;  // vacuous
    return dc;
  }
  if (dc.degree_low > dc.degree_high) {
    dc.window_empty = true;
    dc.closes = true;  // no graph admits any degree at all
    return dc;
  }
  if (dc.degree_high - dc.degree_low > 1) return dc;  // argument needs a two-value window

  dc.applicable = true;
  // Split the vertices into the top-degree class W and the rest.  If no
  // top-degree vertex has `threshold` top-degree neighbours in either the
  // graph or its complement, both sides need at least
  // (degree_high - threshold + 1) cross edges per vertex, which must fit in
  // the bipartite capacity |W| * (n - |W|).
  dc.threshold = (dc.degree_high + 1) / 2;
  long long coeff = dc.degree_high - (dc.threshold - 1);
  dc.demand = coeff * n;
  dc.closes = true;
  dc.margins.resize(static_cast<std::size_t>(n) + 1);
  for (int w = 0; w <= n; ++w) {
    long long capacity = static_cast<long long>(w) * (n - w);
    dc.margins[static_cast<std::size_t>(w)] = dc.demand - capacity;
    if (dc.margins[static_cast<std::size_t>(w)] <= 0) dc.closes = false;
  }
  return dc;
}

FixtureReport run_worked_example_fixture() {
  WorkedExample ex = worked_example();
  FixtureReport rep;
  rep.left_good = ex.left.n == 24 && is_good(ex.left, 4, 5);
  rep.right_good = ex.right.n == 24 && is_good(ex.right, 4, 5);
  rep.overlap_good = ex.overlap.n == 11 && is_good(ex.overlap, 3, 5);
  rep.assembled_good = ex.f.n == 37 && is_good(ex.f, 5, 5);
  rep.not_extendable = !extendable(ex.f, 5, 5);

  // Point the two halves at their marked vertices.  The overlap blocks of
  // both relabellings realize the same canonical representative, so composing
  // one neighbourhood labelling with the inverse of the other is the overlap
  // automorphism that reproduces the bundled assembly.
  int a_in_left = 0;           // left = induced(f, {a} + left side + overlap)
  int b_in_right = 23;         // right = induced(f, overlap + right side + b)
  PointedExtraction pl = pointed_at(ex.left, a_in_left);
  PointedExtraction pr = pointed_at(ex.right, b_in_right);

  int d = pl.pg.d;
  Perm kappa_l(static_cast<std::size_t>(d)), kappa_r(static_cast<std::size_t>(d));
  // left overlap vertices sit at 13..23, right overlap vertices at 0..10
  for (int k = 0; k < d; ++k) {
    kappa_l[static_cast<std::size_t>(k)] = pl.sigma[static_cast<std::size_t>(13 + k)];
    kappa_r[static_cast<std::size_t>(k)] = pr.sigma[static_cast<std::size_t>(k)];
  }
  Perm pi = compose(kappa_r, inverse_perm(kappa_l));

  GluingProblem problem = build_problem(pl.pg, pr.pg, pi, 5, 5, "worked-example");
  std::uint64_t kmask = (std::uint64_t{1} << d) - 1;
  auto auts = canonicalize(induced(pl.pg.g, kmask)).automorphisms;
  for (std::size_t i = 0; i < auts.size(); ++i)
    if (auts[i] == pi) rep.pi_index = static_cast<int>(i);

  // bundled cross block in problem coordinates
  CrossMatrix want;
  want.dprime = problem.dprime;
  for (int i = 0; i < 12; ++i) {
    int row = pl.sigma[static_cast<std::size_t>(1 + i)] - (d + 1);  // left side at 1..12
    for (int j = 0; j < 12; ++j) {
      int col = pr.sigma[static_cast<std::size_t>(11 + j)] - (d + 1);  // right side at 11..22
      if (ex.cross.get(i, j)) want.set(row, col, true);
    }
  }

  ClauseSystem cs = enumerate_clauses(problem);
  std::vector<CrossMatrix> from_interval =
      matrices_from_assignments(problem.dprime, interval_search(cs));
  std::vector<CrossMatrix> from_csp = matrices_from_assignments(problem.dprime, csp_solve(cs));
  rep.solutions = from_interval.size();
  rep.matrix_found_interval =
      std::binary_search(from_interval.begin(), from_interval.end(), want);
  rep.matrix_found_csp = std::binary_search(from_csp.begin(), from_csp.end(), want);
  rep.assembled_matches =
      canonical_form(assemble(problem, want)).bytes == canonical_form(ex.f).bytes;

  // swapped roles: same solutions transposed
  GluingProblem swapped = build_problem(pr.pg, pl.pg, inverse_perm(pi), 5, 5, "worked-example-t");
  std::vector<CrossMatrix> swapped_sols =
      matrices_from_assignments(swapped.dprime, interval_search(enumerate_clauses(swapped)));
  std::vector<CrossMatrix> transposed;
  transposed.reserve(from_interval.size());
  for (const CrossMatrix& m : from_interval) transposed.push_back(m.transposed());
  std::sort(transposed.begin(), transposed.end());
  rep.transpose_ok = swapped_sols == transposed &&
                     std::binary_search(swapped_sols.begin(), swapped_sols.end(),
                                        want.transposed());
  return rep;
}

}  // namespace ramsey
