#pragma once

#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

using Perm = std::vector<std::uint8_t>;  // perm[v] = new label of v

struct CanonicalForm {
  std::string bytes;  // equal iff the graphs are isomorphic
  Perm perm;          // one relabelling realizing bytes
};

struct CanonicalResult {
  CanonicalForm form;
  std::vector<Perm> automorphisms;  // the full group, lexicographically sorted
};

// Canonical labelling by iterative partition refinement with backtracking over
// the cells of the first non-singleton class.  Only byte equality is
// contractual; the automorphism list is the full group.
CanonicalResult canonicalize(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
std::vector<Perm> automorphisms(const Graph& g);

Graph apply_perm(const Graph& g, const Perm& p);
Perm inverse_perm(const Perm& p);
Perm compose(const Perm& a, const Perm& b);  // (a*b)[v] = a[b[v]]

inline Graph canonical_representative(const Graph& g) {
  return apply_perm(g, canonical_form(g).perm);
}

std::string bytes_to_hex(const std::string& bytes);

}  // namespace ramsey
