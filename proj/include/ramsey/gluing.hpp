#pragma once

#include <string>
#include <vector>

#include "ramsey/catalogue.hpp"
#include "ramsey/clauses.hpp"

namespace ramsey {

// The unknown cross-adjacency block of a gluing: cell (i,j) = 1 means an edge
// between the i-th private vertex of the left graph and the j-th of the right.
struct CrossMatrix {
  int dprime = 0;
  VarSet bits;  // cell (i,j) at index i*dprime + j

  bool get(int i, int j) const { return bits.test(i * dprime + j); }
  void set(int i, int j, bool v) { bits.assign(i * dprime + j, v); }
  CrossMatrix transposed() const;
  std::string bit_string() const;  // row-major '0'/'1'

  friend bool operator==(const CrossMatrix&, const CrossMatrix&) = default;
  auto operator<=>(const CrossMatrix&) const = default;
};

// Two pointed graphs of the same type overlapped along their common
// neighbourhood graph K through an automorphism pi of K.  Assembled vertex
// layout: K = 0..d-1, a = d, A = d+1..d+d', b = d+d'+1, B = d+d'+2 .. end.
struct GluingProblem {
  PointedGraph lhs, rhs;
  Perm pi, pi_inv;  // assembled K position u carries rhs K vertex pi[u]
  int s_target = 0, t_target = 0;
  int d = 0, dprime = 0;
  std::string id;
  Graph skeleton;  // assembled graph with every cross cell 0

  int order() const { return d + 2 + 2 * dprime; }
  int a_pos() const { return d; }
  int b_pos() const { return d + dprime + 1; }
  int a_side_pos(int i) const { return d + 1 + i; }
  int b_side_pos(int j) const { return d + dprime + 2 + j; }
};

// Validates the pairing (equal type and order, pi an automorphism of K,
// inputs (s-1,t)-good so the clause shapes below are exhaustive) and
// precomputes the assembled skeleton.
GluingProblem build_problem(const PointedGraph& lhs, const PointedGraph& rhs, const Perm& pi,
                            int s, int t, std::string id = "");

// The (r,p,q) shapes of cross 5-sets that generate constraints: cliques are
// bounded by the inputs having no (s-1)-clique, independent sets by the
// absence of independent t-sets plus the marked vertex joining any
// independent subset of its own private side.
std::vector<std::array<int, 3>> clique_triples(int s);
std::vector<std::array<int, 3>> indep_triples(int t);

// Every potential cross clique/independent set becomes a clause over the
// cells it can still be decided by; exact duplicates removed.
ClauseSystem enumerate_clauses(const GluingProblem& p);

Graph assemble(const GluingProblem& p, const CrossMatrix& m);

// true iff the assembled graph is (s,t)-good.  Also checks the structural
// guarantee that the two marked vertices sit in no violating set.
bool verify_solution(const GluingProblem& p, const CrossMatrix& m);

// Exhaustive semantics: every cross matrix whose assembled graph is good,
// by direct goodness checks.  Guarded by dprime <= max_dprime.
std::vector<CrossMatrix> brute_force(const GluingProblem& p, int max_dprime = 5);

CrossMatrix matrix_from_assignment(int dprime, const VarSet& assignment);

std::vector<CrossMatrix> matrices_from_assignments(int dprime, const std::vector<VarSet>& a);

}  // namespace ramsey
