#include "ramsey/graph6.hpp"

namespace ramsey {

// graph6 packs the upper triangle in column order, x(0,1), x(0,2), x(1,2),
// x(0,3), ... as 6-bit groups, each offset by 63 into the printable range.

std::string g6_encode(const Graph& g) {
  if (g.n > 62) throw std::invalid_argument("g6_encode: order > 62 not supported");
  std::string out;
  out.push_back(static_cast<char>(63 + g.n));
  int acc = 0, nbits = 0;
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph g6_decode(std::string_view text) {
  if (text.empty()) throw Graph6Error("g6_decode: empty input", 0);
  unsigned char first = static_cast<unsigned char>(text[0]);
  if (first == 126) throw Graph6Error("g6_decode: multi-byte order form not supported", 0);
  if (first < 63 || first > 63 + 62) throw Graph6Error("g6_decode: invalid order byte", 0);
  int n = first - 63;
  Graph g = Graph::empty(n);
  std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() < 1 + nbytes) throw Graph6Error("g6_decode: input truncated", text.size());
  if (text.size() > 1 + nbytes) throw Graph6Error("g6_decode: trailing bytes", 1 + nbytes);
  std::size_t bi = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bi) {
      std::size_t byte = 1 + bi / 6;
      unsigned char c = static_cast<unsigned char>(text[byte]);
      if (c < 63 || c > 126) throw Graph6Error("g6_decode: invalid data byte", byte);
      int shift = 5 - static_cast<int>(bi % 6);
      if ((c - 63) >> shift & 1) g.add_edge(i, j);
    }
  }
  if (nbits % 6 != 0) {
    unsigned char last = static_cast<unsigned char>(text[nbytes]);
    int pad = 6 - static_cast<int>(nbits % 6);
    if ((last - 63) & ((1 << pad) - 1))
      throw Graph6Error("g6_decode: nonzero padding bits", nbytes);
  }
  return g;
}

}  // namespace ramsey
