#include <stdexcept>
#include <string>

#include "ramsey/pipeline.hpp"

namespace ramsey {

namespace {

// Bundled 37-vertex example of two order-24 graphs overlapped on an 11-vertex
// graph, with the 12x12 cross block that completes a (5,5)-good assembly.
// Vertex layout: a = 0, left side = 1..12, overlap = 13..23, right side =
// 24..35, b = 36.  The redundant transposed blocks are kept so construction
// can cross-check the transcription.

const char* kSideSide[12] = {
    "010000111010", "100000011001", "000111001010", "001000001111",
    "001001101100", "001010100010", "100011000101", "110000000110",
    "111110000001", "000110110001", "101101010000", "010100101100",
};

const char* kSideOverlap[12] = {
    "10011100000", "01101100100", "00100101010", "00111010001",
    "10011000110", "01010101101", "10100111000", "01110011011",
    "10010011100", "01010110110", "10001010111", "11001001011",
};

const char* kCross[12] = {
    "111011111000", "101110001111", "110011011101", "111100100100",
    "111001100101", "101101011011", "100110111100", "010111110010",
    "101101110001", "011010101011", "010101000101", "011001011111",
};

const char* kOverlapOverlap[11] = {
    "00000010011", "00000001101", "00001110001", "00001101001", "00110000110",
    "00110000110", "10100001100", "01010010010", "01001110000", "10001101000",
    "11110000000",
};

const char* kOverlapSide[11] = {
    "100010101011", "010001010101", "011100110000", "100111011100",
    "110110000011", "111001100100", "000100111110", "001001111001",
    "010011001110", "001010010111", "000101010011",
};

const char* kOverlapRight[11] = {
    "010101000101", "100000111011", "100111011100", "011010101000",
    "111001100100", "110010001011", "001101110001", "000110110110",
    "001100001111", "010001011110", "000111000011",
};

const char* kRightRight[12] = {
    "010100110010", "100100010001", "000011011010", "110000000110",
    "001000010111", "001000101010", "100001001101", "111010001001",
    "001001110100", "000110101001", "101111000000", "010010110100",
};

const char* kRightOverlap[12] = {
    "01101100000", "10011100010", "00011010100", "10100011101",
    "00110101001", "10101010011", "01011011000", "01100011010",
    "01110100110", "10101001110", "01000101111", "11000110101",
};

const char* kRightLeft[12] = {
    "111111101000", "101110010111", "110111001101", "010101111010",
    "111000110100", "101011011011", "100110111100", "101001111001",
    "111001100101", "011110100011", "010001010101", "011011001111",
};

bool cell(const char* const* block, int i, int j) { return block[i][j] == '1'; }

void check_symmetric(const char* const* block, int n, const char* name) {
  for (int i = 0; i < n; ++i) {
    if (block[i][i] != '0') throw std::logic_error(std::string("fixture: diagonal in ") + name);
    for (int j = i + 1; j < n; ++j)
      if (block[i][j] != block[j][i])
        throw std::logic_error(std::string("fixture: asymmetric block ") + name);
  }
}

void check_transposed(const char* const* rows, int nr, const char* const* cols, int nc,
                      const char* name) {
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j)
      if (rows[i][j] != cols[j][i])
        throw std::logic_error(std::string("fixture: transposed blocks differ: ") + name);
}

}  // namespace

WorkedExample worked_example() {
  check_symmetric(kSideSide, 12, "left side");
  check_symmetric(kOverlapOverlap, 11, "overlap");
  check_symmetric(kRightRight, 12, "right side");
  check_transposed(kSideOverlap, 12, kOverlapSide, 11, "side/overlap");
  check_transposed(kCross, 12, kRightLeft, 12, "cross");
  check_transposed(kOverlapRight, 11, kRightOverlap, 12, "overlap/right");

  WorkedExample ex;
  ex.a = 0;
  ex.b = 36;
  Graph f = Graph::empty(37);
  auto left_v = [](int i) { return 1 + i; };      // 0..11 -> vertex
  auto over_v = [](int k) { return 13 + k; };     // 0..10
  auto right_v = [](int j) { return 24 + j; };    // 0..11

  for (int k = 0; k < 11; ++k) f.add_edge(ex.a, over_v(k));
  for (int j = 0; j < 12; ++j) f.add_edge(ex.a, right_v(j));
  f.add_edge(ex.a, ex.b);
  for (int k = 0; k < 11; ++k) f.add_edge(ex.b, over_v(k));
  for (int i = 0; i < 12; ++i) f.add_edge(ex.b, left_v(i));

  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j) {
      if (cell(kSideSide, i, j)) f.add_edge(left_v(i), left_v(j));
      if (cell(kRightRight, i, j)) f.add_edge(right_v(i), right_v(j));
    }
  for (int i = 0; i < 11; ++i)
    for (int j = i + 1; j < 11; ++j)
      if (cell(kOverlapOverlap, i, j)) f.add_edge(over_v(i), over_v(j));
  for (int i = 0; i < 12; ++i)
    for (int k = 0; k < 11; ++k)
      if (cell(kSideOverlap, i, k)) f.add_edge(left_v(i), over_v(k));
  for (int k = 0; k < 11; ++k)
    for (int j = 0; j < 12; ++j)
      if (cell(kOverlapRight, k, j)) f.add_edge(over_v(k), right_v(j));
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j)
      if (cell(kCross, i, j)) f.add_edge(left_v(i), right_v(j));

  ex.f = f;
  std::uint64_t left_mask = 0, right_mask = 0, overlap_mask = 0;
  for (int v = 0; v <= 23; ++v) left_mask |= Graph::bit(v);
  for (int v = 13; v <= 36; ++v) right_mask |= Graph::bit(v);
  for (int v = 13; v <= 23; ++v) overlap_mask |= Graph::bit(v);
  ex.left = induced(f, left_mask);
  ex.right = induced(f, right_mask);
  ex.overlap = induced(f, overlap_mask);
  ex.cross.dprime = 12;
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j)
      if (cell(kCross, i, j)) ex.cross.set(i, j, true);
  return ex;
}

}  // namespace ramsey
