// Batched exact kernels used by the hot loops: packed exponent-vector
// divisibility scans (ideal membership) and modular row updates (exact rank
// elimination). Each kernel has a scalar reference implementation and an
// AVX2 variant selected at runtime; the two are equivalence-tested.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace linres::kernels {

enum class Backend { scalar, avx2 };

// True when the running CPU can execute the AVX2 variants.
bool cpu_supports_avx2();

// Backend resolved once per process: AVX2 when compiled in and supported,
// unless the LINRES_FORCE_SCALAR environment variable is set.
Backend active_backend();

// Test hook. Requests for an unavailable backend fall back to scalar.
void set_backend(Backend backend);

// Table of exponent vectors, each row padded with zeros to a fixed stride of
// int16 lanes (4, 8, 16, or a multiple of 16). Rows past count() up to the
// allocation boundary hold INT16_MAX sentinels, which never divide anything,
// so vector code may scan whole registers without masking the tail.
class PackedExponents {
 public:
  PackedExponents() = default;
  explicit PackedExponents(int num_vars);

  void push_row(std::span<const int> exponents);
  void reserve_rows(int rows);

  int num_vars() const { return num_vars_; }
  int stride() const { return stride_; }
  int count() const { return count_; }
  const std::int16_t* row(int i) const { return lanes_.data() + static_cast<std::size_t>(i) * stride_; }
  const std::int16_t* data() const { return lanes_.data(); }
  // Rows in the backing store, including sentinel padding.
  int padded_count() const { return static_cast<int>(lanes_.size()) / (stride_ == 0 ? 1 : stride_); }

 private:
  void grow_to(int rows);

  int num_vars_ = 0;
  int stride_ = 0;
  int count_ = 0;
  std::vector<std::int16_t> lanes_;
};

// True iff some row divides the query componentwise (row[j] <= query[j] for
// every variable). Empty tables never divide.
bool any_row_divides(const PackedExponents& rows, std::span<const int> query);

// out[i] = 1 iff some row of `rows` divides row i of `queries`; returns the
// number of marked queries. Both tables must agree on num_vars.
std::size_t mark_divisible(const PackedExponents& rows, const PackedExponents& queries,
                           std::uint8_t* out);

// Count-only variant of mark_divisible.
std::size_t count_divisible(const PackedExponents& rows, const PackedExponents& queries);

// dst[i] = (dst[i] + mult * src[i]) mod p for i < len.
// Requires dst[i], src[i], mult < p and p < 2^15 so intermediates fit 32 bits.
void row_axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t mult,
                  std::uint32_t p, std::size_t len);

namespace detail {

// Scalar reference implementations (always available; the baseline the SIMD
// variants are checked against).
bool any_row_divides_scalar(const PackedExponents& rows, const std::int16_t* query);
std::size_t mark_divisible_scalar(const PackedExponents& rows, const PackedExponents& queries,
                                  std::uint8_t* out);
void row_axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t mult,
                         std::uint32_t p, std::size_t len);

#if defined(LINRES_WITH_AVX2)
bool any_row_divides_avx2(const PackedExponents& rows, const std::int16_t* query);
std::size_t mark_divisible_avx2(const PackedExponents& rows, const PackedExponents& queries,
                                std::uint8_t* out);
void row_axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t mult,
                       std::uint32_t p, std::size_t len);
#endif

}  // namespace detail

}  // namespace linres::kernels
