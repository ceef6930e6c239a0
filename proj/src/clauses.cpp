#include "ramsey/clauses.hpp"

#include <algorithm>
#include <random>

namespace ramsey {

void ClauseSystem::build_occurrence_lists() {
  occ_clique.assign(static_cast<std::size_t>(num_vars), {});
  occ_indep.assign(static_cast<std::size_t>(num_vars), {});
  for (std::uint32_t i = 0; i < clique.size(); ++i)
    for (auto c : clique[i].cells()) occ_clique[c].push_back(i);
  for (std::uint32_t i = 0; i < indep.size(); ++i)
    for (auto c : indep[i].cells()) occ_indep[c].push_back(i);
}

ClauseSystem shuffled(const ClauseSystem& cs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ClauseSystem out;
  out.num_vars = cs.num_vars;
  out.clique = cs.clique;
  out.indep = cs.indep;
  std::shuffle(out.clique.begin(), out.clique.end(), rng);
  std::shuffle(out.indep.begin(), out.indep.end(), rng);
  out.build_occurrence_lists();
  return out;
}

bool satisfies(const ClauseSystem& cs, const VarSet& a) {
  for (const Clause& c : cs.clique) {
    bool all_true = true;
    for (auto v : c.cells())
      if (!a.test(v)) {
        all_true = false;
        break;
      }
    if (all_true) return false;
  }
  for (const Clause& c : cs.indep) {
    bool all_false = true;
    for (auto v : c.cells())
      if (a.test(v)) {
        all_false = false;
        break;
      }
    if (all_false) return false;
  }
  return true;
}

std::vector<VarSet> enumerate_satisfying(const ClauseSystem& cs, int max_vars) {
  if (cs.num_vars > max_vars) throw std::invalid_argument("enumerate_satisfying: universe too large");
  std::vector<VarSet> out;
  std::uint64_t limit = std::uint64_t{1} << cs.num_vars;
  for (std::uint64_t x = 0; x < limit; ++x) {
    VarSet a;
    a.w[0] = x;
    if (satisfies(cs, a)) out.push_back(a);
  }
  return out;
}

}  // namespace ramsey
