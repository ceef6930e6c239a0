#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "ramsey/catalogue.hpp"
#include "ramsey/graph.hpp"

namespace ramsey::testing {

inline Graph make_cycle(int n) {
  Graph g = Graph::empty(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph make_path(int n) {
  Graph g = Graph::empty(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph make_complete(int n) {
  Graph g = Graph::empty(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph make_circulant(int n, std::initializer_list<int> offsets) {
  Graph g = Graph::empty(n);
  for (int v = 0; v < n; ++v)
    for (int o : offsets) g.add_edge(v, (v + o) % n);
  return g;
}

inline Graph make_complete_bipartite(int a, int b) {
  Graph g = Graph::empty(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
  Graph g = Graph::empty(n);
  std::bernoulli_distribution edge(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

inline Perm random_perm(std::mt19937_64& rng, int n) {
  Perm p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// subset-based reference implementations, no bit tricks shared with the library

inline bool naive_is_clique(const Graph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.has_edge(vs[i], vs[j])) return false;
  return true;
}

inline bool naive_is_independent(const Graph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.has_edge(vs[i], vs[j])) return false;
  return true;
}

template <class F>
inline void for_each_subset(int n, int k, F&& f) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  if (k > n) return;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline long long naive_count_cliques(const Graph& g, int k) {
  long long c = 0;
  for_each_subset(g.n, k, [&](const std::vector<int>& vs) {
    if (naive_is_clique(g, vs)) ++c;
  });
  return c;
}

inline long long naive_count_independent(const Graph& g, int k) {
  long long c = 0;
  for_each_subset(g.n, k, [&](const std::vector<int>& vs) {
    if (naive_is_independent(g, vs)) ++c;
  });
  return c;
}

inline bool naive_has_clique(const Graph& g, int k) { return naive_count_cliques(g, k) > 0; }
inline bool naive_has_independent(const Graph& g, int k) {
  return naive_count_independent(g, k) > 0;
}

// all n! permutations mapping g onto itself; n <= 8
inline std::vector<Perm> naive_automorphisms(const Graph& g) {
  Perm p(static_cast<std::size_t>(g.n));
  for (int i = 0; i < g.n; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  std::vector<Perm> out;
  do {
    bool ok = true;
    for (int u = 0; u < g.n && ok; ++u)
      for (int v = u + 1; v < g.n && ok; ++v)
        if (g.has_edge(u, v) !=
            g.has_edge(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)]))
          ok = false;
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// every graph on n labelled vertices, as edge masks over the pair index
template <class F>
inline void for_each_labelled_graph(int n, F&& f) {
  int pairs = n * (n - 1) / 2;
  std::uint64_t limit = std::uint64_t{1} << pairs;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    Graph g = Graph::empty(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bit)
        if ((mask >> bit) & 1) g.add_edge(u, v);
    f(g);
  }
}

}  // namespace ramsey::testing
