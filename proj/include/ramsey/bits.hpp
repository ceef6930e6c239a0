#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>

namespace ramsey {

inline constexpr int kMaxOrder = 64;   // vertices per graph, one machine word per row
inline constexpr int kMaxDprime = 19;  // largest gluing side the cell indexing supports
inline constexpr int kMaxVars = 384;   // >= kMaxDprime^2 and >= kMaxOrder

// Fixed-width bit set indexed by clause variable.  Covers the largest gluing
// grid (19*19 cells) and one-point-extension membership problems (<= 64 vars).
struct VarSet {
  static constexpr int kWords = kMaxVars / 64;
  std::array<std::uint64_t, kWords> w{};

  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void assign(int i, bool v) { v ? set(i) : reset(i); }

  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  void clear() { w.fill(0); }

  friend bool operator==(const VarSet&, const VarSet&) = default;
  auto operator<=>(const VarSet&) const = default;

  template <class F>
  void for_each(int limit, F&& f) const {
    for (int wi = 0; wi * 64 < limit; ++wi) {
      std::uint64_t x = w[wi];
      while (x) {
        int b = wi * 64 + std::countr_zero(x);
        if (b >= limit) return;
        f(b);
        x &= x - 1;
      }
    }
  }
};

}  // namespace ramsey
