#include "ramsey/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace ramsey {

namespace {

using Cells = std::vector<std::vector<std::uint8_t>>;

std::uint64_t mask_of(const std::vector<std::uint8_t>& cell) {
  std::uint64_t m = 0;
  for (auto v : cell) m |= Graph::bit(v);
  return m;
}

// Equitable refinement: split every cell by neighbour counts into every other
// cell until stable.  Subcells replace their parent in count-ascending order,
// so the resulting ordered partition is isomorphism-invariant.
void refine(const Graph& g, Cells& cells) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t si = 0; si < cells.size() && !changed; ++si) {
      std::uint64_t smask = mask_of(cells[si]);
      for (std::size_t ti = 0; ti < cells.size() && !changed; ++ti) {
        auto& target = cells[ti];
        if (target.size() < 2) continue;
        auto cnt = [&](std::uint8_t v) { return std::popcount(g.rows[v] & smask); };
        bool uniform = true;
        int c0 = cnt(target[0]);
        for (std::size_t i = 1; i < target.size(); ++i)
          if (cnt(target[i]) != c0) {
            uniform = false;
            break;
          }
        if (uniform) continue;
        std::stable_sort(target.begin(), target.end(),
                         [&](std::uint8_t a, std::uint8_t b) { return cnt(a) < cnt(b); });
        Cells groups;
        for (std::uint8_t v : target) {
          if (groups.empty() || cnt(groups.back().back()) != cnt(v)) groups.emplace_back();
          groups.back().push_back(v);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ti));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ti), groups.begin(), groups.end());
        changed = true;
      }
    }
  }
}

std::string leaf_bytes(const Graph& g, const Perm& perm) {
  std::array<std::uint64_t, kMaxOrder> r{};
  for (int v = 0; v < g.n; ++v) {
    std::uint64_t nb = g.rows[v];
    while (nb) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      r[perm[v]] |= Graph::bit(perm[u]);
    }
  }
  std::string s;
  s.push_back(static_cast<char>(g.n));
  int acc = 0, nbits = 0;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j) {
      acc = (acc << 1) | static_cast<int>((r[i] >> j) & 1);
      if (++nbits == 8) {
        s.push_back(static_cast<char>(acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits) s.push_back(static_cast<char>(acc << (8 - nbits)));
  return s;
}

struct Searcher {
  const Graph& g;
  std::string best;
  std::vector<Perm> best_perms;
  bool have = false;

  explicit Searcher(const Graph& graph) : g(graph) {}

  void run() {
    Cells cells;
    if (g.n > 0) {
      std::vector<std::uint8_t> all(static_cast<std::size_t>(g.n));
      std::iota(all.begin(), all.end(), std::uint8_t{0});
      cells.push_back(std::move(all));
    }
    rec(std::move(cells));
  }

  void rec(Cells cells) {
    refine(g, cells);
    int target = -1;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1) {
        target = static_cast<int>(i);
        break;
      }
    if (target < 0) {
      Perm perm(static_cast<std::size_t>(g.n));
      int pos = 0;
      for (auto& c : cells) perm[c[0]] = static_cast<std::uint8_t>(pos++);
      std::string b = leaf_bytes(g, perm);
      if (!have || b < best) {
        best = std::move(b);
        best_perms.clear();
        best_perms.push_back(std::move(perm));
        have = true;
      } else if (b == best) {
        best_perms.push_back(std::move(perm));
      }
      return;
    }
    auto cell = cells[static_cast<std::size_t>(target)];
    for (std::uint8_t v : cell) {
      Cells child = cells;
      std::vector<std::uint8_t> rest;
      for (std::uint8_t u : cell)
        if (u != v) rest.push_back(u);
      child[static_cast<std::size_t>(target)] = {v};
      child.insert(child.begin() + target + 1, std::move(rest));
      rec(std::move(child));
    }
  }
};

}  // namespace

CanonicalResult canonicalize(const Graph& g) {
  Searcher s(g);
  s.run();
  CanonicalResult res;
  res.form.bytes = s.best;
  res.form.perm = s.best_perms[0];
  Perm inv0 = inverse_perm(s.best_perms[0]);
  res.automorphisms.reserve(s.best_perms.size());
  for (const Perm& p : s.best_perms) res.automorphisms.push_back(compose(inv0, p));
  std::sort(res.automorphisms.begin(), res.automorphisms.end());
  return res;
}

CanonicalForm canonical_form(const Graph& g) {
  Searcher s(g);
  s.run();
  return {s.best, s.best_perms[0]};
}

std::vector<Perm> automorphisms(const Graph& g) { return canonicalize(g).automorphisms; }

Graph apply_perm(const Graph& g, const Perm& p) {
  Graph h = Graph::empty(g.n);
  for (int v = 0; v < g.n; ++v) {
    std::uint64_t nb = g.rows[v];
    while (nb) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      h.rows[p[static_cast<std::size_t>(v)]] |= Graph::bit(p[static_cast<std::size_t>(u)]);
    }
  }
  return h;
}

Perm inverse_perm(const Perm& p) {
  Perm inv(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) inv[p[v]] = static_cast<std::uint8_t>(v);
  return inv;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (std::size_t v = 0; v < b.size(); ++v) c[v] = a[b[v]];
  return c;
}

std::string bytes_to_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

}  // namespace ramsey
