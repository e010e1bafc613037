// Exact ranks of small dense integer matrices: fraction-free elimination over
// the integers (rank over Q) and Gaussian elimination over Z/p.
#pragma once

#include <cstdint>
#include <vector>

namespace linres {

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  std::int64_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  std::int64_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// Bareiss one-step fraction-free elimination; divisions are exact, products
// are overflow-checked (std::overflow_error on failure, which desk-scale
// boundary matrices never reach).
int rank_over_rationals(IntMatrix m);

// Rank over Z/p for a prime p < 2^15. Entries are reduced into [0, p) first.
int rank_mod_p(IntMatrix m, std::uint32_t p);

}  // namespace linres
