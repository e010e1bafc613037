#include "linres/rank.hpp"

#include <stdexcept>

#include "linres/kernels.hpp"

namespace linres {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("rank_over_rationals: intermediate overflow");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out))
    throw std::overflow_error("rank_over_rationals: intermediate overflow");
  return out;
}

std::uint32_t pow_mod(std::uint32_t base, std::uint32_t exp, std::uint32_t p) {
  std::uint64_t acc = 1, b = base % p;
  while (exp > 0) {
    if (exp & 1u) acc = acc * b % p;
    b = b * b % p;
    exp >>= 1u;
  }
  return static_cast<std::uint32_t>(acc);
}

}  // namespace

int rank_over_rationals(IntMatrix m) {
  int rank = 0;
  std::int64_t prev = 1;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(row, c));
    const std::int64_t p = m.at(row, col);
    for (int r = row + 1; r < m.rows; ++r) {
      const std::int64_t f = m.at(r, col);
      for (int c = col + 1; c < m.cols; ++c) {
        std::int64_t num = checked_sub(checked_mul(p, m.at(r, c)), checked_mul(f, m.at(row, c)));
        // One-step fraction-free update: division by the previous pivot is exact.
        m.at(r, c) = num / prev;
      }
      m.at(r, col) = 0;
    }
    prev = p;
    ++row;
    ++rank;
  }
  return rank;
}

int rank_mod_p(IntMatrix m, std::uint32_t p) {
  if (p < 2 || p >= (1u << 15)) throw std::invalid_argument("rank_mod_p: modulus out of range");
  const int rows = m.rows, cols = m.cols;
  std::vector<std::uint32_t> a(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      std::int64_t v = m.at(r, c) % static_cast<std::int64_t>(p);
      if (v < 0) v += p;
      a[static_cast<std::size_t>(r) * cols + c] = static_cast<std::uint32_t>(v);
    }

  auto row_ptr = [&](int r) { return a.data() + static_cast<std::size_t>(r) * cols; };
  int rank = 0;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r)
      if (row_ptr(r)[col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int c = 0; c < cols; ++c) std::swap(row_ptr(pivot)[c], row_ptr(row)[c]);
    const std::uint32_t inv = pow_mod(row_ptr(row)[col], p - 2, p);  // Fermat inverse, p prime
    for (int r = row + 1; r < rows; ++r) {
      const std::uint32_t lead = row_ptr(r)[col];
      if (lead == 0) continue;
      // dst += (p - lead*inv) * pivot_row clears the leading entry mod p.
      const std::uint32_t mult =
          (p - static_cast<std::uint32_t>(static_cast<std::uint64_t>(lead) * inv % p)) % p;
      kernels::row_axpy_mod(row_ptr(r) + col, row_ptr(row) + col, mult, p,
                            static_cast<std::size_t>(cols - col));
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace linres
