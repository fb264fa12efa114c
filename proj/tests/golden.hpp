#pragma once

#include <cstddef>
#include <sstream>
#include <string>

namespace nilrigid::testing {

// Minimal admissible module dimensions transcribed from the published table,
// rows s = 0..8, columns r = 0..8. Suffix x: two inequivalent minimal
// modules; suffix b: sum of two non-isomorphic irreducibles.
inline const char* const kTable1[9] = {
    "1 2 4 4x 8 8 8 8x 16",
    "2b 4b 8b 8 16b 16 16 16 32b",
    "4b 4xb 8b 8 16 16x 32 32 64b",
    "8b 8b 8b 8 16 32 64b 64 128b",
    "8 8 8 8x 16 32 64 64x 128",
    "16b 16 16 16 32b 64b 128b 128 256b",
    "16 16x 32 32 64b 64xb 128b 128 256",
    "16 32 64b 64 128b 128b 128b 128 256",
    "16 32 64 64x 128 128 128 128x 256",
};

struct Cell {
  std::size_t dim;
  bool twin;
  bool bold;
};

inline Cell table1_cell(std::size_t r, std::size_t s) {
  std::istringstream row(kTable1[s]);
  std::string tok;
  for (std::size_t c = 0; c <= r; ++c) row >> tok;
  return {std::stoul(tok), tok.find('x') != std::string::npos, tok.find('b') != std::string::npos};
}

// (3,4): sign of P_j J_k = ± J_k P_j for the quadruples
// (1,2,4,5), (1,2,6,7), (1,3,5,7).
inline const int kTable2Signs[3][7] = {
    {-1, -1, 1, -1, -1, 1, 1},
    {-1, -1, 1, 1, 1, -1, -1},
    {-1, 1, -1, 1, -1, 1, -1},
};

// (3,4) eigenvector columns after the first (w alone); each entry is
// J_a J_b w, or J_a w when b = 0.
inline const std::size_t kTable3Columns[7][4][2] = {
    {{3, 0}, {1, 2}, {4, 5}, {6, 7}}, {{6, 0}, {1, 5}, {2, 4}, {3, 7}}, {{7, 0}, {1, 4}, {2, 5}, {3, 6}},
    {{4, 0}, {1, 7}, {2, 6}, {3, 5}}, {{5, 0}, {1, 6}, {2, 7}, {3, 4}}, {{2, 0}, {1, 3}, {4, 6}, {5, 7}},
    {{1, 0}, {2, 3}, {4, 7}, {5, 6}},
};

}  // namespace nilrigid::testing
