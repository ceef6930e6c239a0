#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "ramsey/bits.hpp"

namespace ramsey {

// A clause is a set of 1..9 variable indices.  Clique clauses forbid the
// all-TRUE assignment of their cells, independent-set clauses forbid all-FALSE.
struct Clause {
  std::array<std::uint16_t, 9> cell{};
  std::uint8_t size = 0;

  std::span<const std::uint16_t> cells() const { return {cell.data(), size}; }
};

struct ClauseSystem {
  int num_vars = 0;
  std::vector<Clause> clique;
  std::vector<Clause> indep;
  // per-variable occurrence lists (indices into clique/indep)
  std::vector<std::vector<std::uint32_t>> occ_clique, occ_indep;

  void add_clique(std::span<const std::uint16_t> cells) { clique.push_back(make(cells)); }
  void add_indep(std::span<const std::uint16_t> cells) { indep.push_back(make(cells)); }
  void add_clique(std::initializer_list<std::uint16_t> cells) {
    add_clique(std::span<const std::uint16_t>(cells.begin(), cells.size()));
  }
  void add_indep(std::initializer_list<std::uint16_t> cells) {
    add_indep(std::span<const std::uint16_t>(cells.begin(), cells.size()));
  }

  void build_occurrence_lists();

 private:
  Clause make(std::span<const std::uint16_t> cells) const {
    if (cells.empty() || cells.size() > 9) throw std::invalid_argument("clause size out of range");
    Clause c;
    c.size = static_cast<std::uint8_t>(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i] >= num_vars) throw std::invalid_argument("clause cell out of range");
      c.cell[i] = cells[i];
    }
    return c;
  }
};

// Copy with both clause lists permuted by a seeded RNG; used to exercise
// order independence of the propagation fixpoints.
ClauseSystem shuffled(const ClauseSystem& cs, std::uint64_t seed);

// Exhaustive oracle: all assignments over num_vars satisfying every clause.
// Guarded to small universes.
std::vector<VarSet> enumerate_satisfying(const ClauseSystem& cs, int max_vars = 25);

bool satisfies(const ClauseSystem& cs, const VarSet& assignment);

}  // namespace ramsey
