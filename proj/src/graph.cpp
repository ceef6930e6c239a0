#include "ramsey/graph.hpp"

namespace ramsey {

bool Graph::valid() const {
  if (n < 0 || n > kMaxOrder) return false;
  std::uint64_t mask = vertex_mask();
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~mask) return false;
    if (rows[v] & bit(v)) return false;
  }
  for (int v = n; v < kMaxOrder; ++v)
    if (rows[v]) return false;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (has_edge(u, v) != has_edge(v, u)) return false;
  return true;
}

Graph complement(const Graph& g) {
  Graph c = Graph::empty(g.n);
  std::uint64_t mask = g.vertex_mask();
  for (int v = 0; v < g.n; ++v) c.rows[v] = ~g.rows[v] & mask & ~Graph::bit(v);
  return c;
}

Graph induced(const Graph& g, std::uint64_t vertices) {
  if (vertices & ~g.vertex_mask()) throw std::out_of_range("induced: vertex out of range");
  int order = std::popcount(vertices);
  Graph h = Graph::empty(order);
  std::array<int, kMaxOrder> map{};
  int next = 0;
  std::uint64_t vs = vertices;
  while (vs) {
    int v = std::countr_zero(vs);
    vs &= vs - 1;
    map[v] = next++;
  }
  vs = vertices;
  while (vs) {
    int v = std::countr_zero(vs);
    vs &= vs - 1;
    std::uint64_t nb = g.rows[v] & vertices;
    while (nb) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      h.rows[map[v]] |= Graph::bit(map[u]);
    }
  }
  return h;
}

bool has_clique(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("has_clique: negative size");
  bool found = false;
  for_each_clique(g, k, g.vertex_mask(), [&](std::uint64_t) {
    found = true;
    return false;
  });
  return found;
}

bool has_independent(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("has_independent: negative size");
  bool found = false;
  for_each_independent(g, k, g.vertex_mask(), [&](std::uint64_t) {
    found = true;
    return false;
  });
  return found;
}

bool is_good(const Graph& g, int s, int t) { return !has_clique(g, s) && !has_independent(g, t); }

GraphStats count_sets(const Graph& g) {
  GraphStats st;
  st.n = g.n;
  st.e = g.edge_count();
  if (g.n > 0) {
    st.delta = st.Delta = g.degree(0);
    for (int v = 1; v < g.n; ++v) {
      int d = g.degree(v);
      if (d < st.delta) st.delta = d;
      if (d > st.Delta) st.Delta = d;
    }
  }
  auto count_cliques = [&](int k) {
    long long c = 0;
    for_each_clique(g, k, g.vertex_mask(), [&](std::uint64_t) {
      ++c;
      return true;
    });
    return c;
  };
  auto count_indep = [&](int k) {
    long long c = 0;
    for_each_independent(g, k, g.vertex_mask(), [&](std::uint64_t) {
      ++c;
      return true;
    });
    return c;
  };
  st.c3 = count_cliques(3);
  st.i3 = count_indep(3);
  st.i4 = count_indep(4);
  st.i5 = count_indep(5);
  return st;
}

std::vector<std::uint64_t> cliques_of_size(const Graph& g, int k, std::uint64_t allowed) {
  std::vector<std::uint64_t> out;
  for_each_clique(g, k, allowed, [&](std::uint64_t m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::vector<std::uint64_t> independents_of_size(const Graph& g, int k, std::uint64_t allowed) {
  std::vector<std::uint64_t> out;
  for_each_independent(g, k, allowed, [&](std::uint64_t m) {
    out.push_back(m);
    return true;
  });
  return out;
}

bool vertex_in_no_violating_set(const Graph& g, int v, int s, int t) {
  Graph nb = induced(g, g.rows[v]);
  if (has_clique(nb, s - 1)) return false;
  std::uint64_t rest = g.vertex_mask() & ~g.rows[v] & ~Graph::bit(v);
  Graph nonnb = induced(g, rest);
  if (has_independent(nonnb, t - 1)) return false;
  return true;
}

}  // namespace ramsey
