#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ramsey/bits.hpp"

namespace ramsey {

// Dense undirected graph on at most 64 vertices, one 64-bit adjacency row per
// vertex.  Invariants: rows are symmetric, the diagonal is zero, and bits at
// positions >= n are zero.
struct Graph {
  int n = 0;
  std::array<std::uint64_t, kMaxOrder> rows{};

  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  static Graph empty(int order) {
    if (order < 0 || order > kMaxOrder) throw std::invalid_argument("graph order out of range");
    Graph g;
    g.n = order;
    return g;
  }

  std::uint64_t vertex_mask() const {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }
  bool has_edge(int u, int v) const { return (rows[u] >> v) & 1; }
  void add_edge(int u, int v) {
    rows[u] |= bit(v);
    rows[v] |= bit(u);
  }
  void remove_edge(int u, int v) {
    rows[u] &= ~bit(v);
    rows[v] &= ~bit(u);
  }
  void set_edge(int u, int v, bool present) { present ? add_edge(u, v) : remove_edge(u, v); }
  std::uint64_t neighbours(int v) const { return rows[v]; }
  int degree(int v) const { return std::popcount(rows[v]); }

  long long edge_count() const {
    long long d = 0;
    for (int v = 0; v < n; ++v) d += degree(v);
    return d / 2;
  }

  bool valid() const;

  friend bool operator==(const Graph&, const Graph&) = default;
};

struct GraphStats {
  int n = 0;
  long long e = 0;
  long long c3 = 0;            // triangles
  long long i3 = 0, i4 = 0, i5 = 0;  // independent sets by size
  int delta = 0, Delta = 0;    // min/max degree
};

Graph complement(const Graph& g);

// Subgraph induced by the vertex set `vertices`, renumbered in ascending
// original order.  Throws std::out_of_range on stray bits.
Graph induced(const Graph& g, std::uint64_t vertices);

bool has_clique(const Graph& g, int k);
bool has_independent(const Graph& g, int k);

// true iff g has no s-clique and no independent t-set
bool is_good(const Graph& g, int s, int t);

GraphStats count_sets(const Graph& g);

namespace detail {

// Enumerates cliques of exactly size k with all vertices in `cand`, extending
// `cur`, in ascending vertex order.  Callback returns false to abort.
template <class F>
bool clique_rec(const Graph& g, int k, std::uint64_t cand, std::uint64_t cur, F& f) {
  if (k == 0) return f(cur);
  while (cand) {
    if (std::popcount(cand) < k) return true;
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    if (!clique_rec(g, k - 1, cand & g.rows[v], cur | Graph::bit(v), f)) return false;
  }
  return true;
}

template <class F>
bool indep_rec(const Graph& g, int k, std::uint64_t cand, std::uint64_t cur, F& f) {
  if (k == 0) return f(cur);
  while (cand) {
    if (std::popcount(cand) < k) return true;
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    if (!indep_rec(g, k - 1, cand & ~g.rows[v], cur | Graph::bit(v), f)) return false;
  }
  return true;
}

}  // namespace detail

// k == 0 yields the empty set once.  Return false from the callback to stop;
// the function returns false iff the enumeration was aborted.
template <class F>
bool for_each_clique(const Graph& g, int k, std::uint64_t allowed, F&& f) {
  return detail::clique_rec(g, k, allowed & g.vertex_mask(), 0, f);
}

template <class F>
bool for_each_independent(const Graph& g, int k, std::uint64_t allowed, F&& f) {
  return detail::indep_rec(g, k, allowed & g.vertex_mask(), 0, f);
}

std::vector<std::uint64_t> cliques_of_size(const Graph& g, int k, std::uint64_t allowed);
std::vector<std::uint64_t> independents_of_size(const Graph& g, int k, std::uint64_t allowed);

// true iff no s-clique through v and no independent t-set through v
bool vertex_in_no_violating_set(const Graph& g, int v, int s, int t);

}  // namespace ramsey
