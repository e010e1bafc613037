// Packed table layout, scalar reference kernels, and runtime backend dispatch.
#include "linres/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace linres::kernels {

namespace {

int stride_for(int num_vars) {
  if (num_vars <= 4) return 4;
  if (num_vars <= 8) return 8;
  if (num_vars <= 16) return 16;
  return ((num_vars + 15) / 16) * 16;
}

// Lanes per 32-byte register; padding keeps whole-register loads in bounds.
constexpr int kLanesPerVector = 16;

std::atomic<int> g_backend{-1};

Backend resolve_backend() {
#if defined(LINRES_WITH_AVX2)
  if (cpu_supports_avx2() && std::getenv("LINRES_FORCE_SCALAR") == nullptr)
    return Backend::avx2;
#endif
  return Backend::scalar;
}

}  // namespace

bool cpu_supports_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

Backend active_backend() {
  int b = g_backend.load(std::memory_order_relaxed);
  if (b < 0) {
    b = static_cast<int>(resolve_backend());
    g_backend.store(b, std::memory_order_relaxed);
  }
  return static_cast<Backend>(b);
}

void set_backend(Backend backend) {
#if defined(LINRES_WITH_AVX2)
  if (backend == Backend::avx2 && !cpu_supports_avx2()) backend = Backend::scalar;
#else
  backend = Backend::scalar;
#endif
  g_backend.store(static_cast<int>(backend), std::memory_order_relaxed);
}

PackedExponents::PackedExponents(int num_vars)
    : num_vars_(num_vars), stride_(stride_for(num_vars)) {
  if (num_vars < 1) throw std::invalid_argument("PackedExponents: num_vars must be positive");
}

void PackedExponents::grow_to(int rows) {
  // Round the allocation up so a full vector of rows is always addressable.
  int rows_per_vec = kLanesPerVector / stride_;
  if (rows_per_vec < 1) rows_per_vec = 1;
  int padded = ((rows + rows_per_vec - 1) / rows_per_vec) * rows_per_vec;
  lanes_.resize(static_cast<std::size_t>(padded) * stride_,
                std::numeric_limits<std::int16_t>::max());
}

void PackedExponents::reserve_rows(int rows) {
  lanes_.reserve(static_cast<std::size_t>(rows + kLanesPerVector) * stride_);
}

void PackedExponents::push_row(std::span<const int> exponents) {
  if (static_cast<int>(exponents.size()) != num_vars_)
    throw std::invalid_argument("PackedExponents: exponent count mismatch");
  grow_to(count_ + 1);
  std::int16_t* dst = lanes_.data() + static_cast<std::size_t>(count_) * stride_;
  for (int j = 0; j < num_vars_; ++j) {
    int e = exponents[j];
    if (e < 0 || e > std::numeric_limits<std::int16_t>::max() - 1)
      throw std::invalid_argument("PackedExponents: exponent out of range");
    dst[j] = static_cast<std::int16_t>(e);
  }
  for (int j = num_vars_; j < stride_; ++j) dst[j] = 0;
  ++count_;
}

namespace detail {

bool any_row_divides_scalar(const PackedExponents& rows, const std::int16_t* query) {
  const int stride = rows.stride();
  const int n = rows.num_vars();
  for (int i = 0; i < rows.count(); ++i) {
    const std::int16_t* r = rows.data() + static_cast<std::size_t>(i) * stride;
    bool ok = true;
    for (int j = 0; j < n; ++j) {
      if (r[j] > query[j]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

std::size_t mark_divisible_scalar(const PackedExponents& rows, const PackedExponents& queries,
                                  std::uint8_t* out) {
  std::size_t hits = 0;
  for (int q = 0; q < queries.count(); ++q) {
    bool hit = any_row_divides_scalar(rows, queries.row(q));
    out[q] = hit ? 1 : 0;
    hits += hit ? 1 : 0;
  }
  return hits;
}

void row_axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t mult,
                         std::uint32_t p, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i)
    dst[i] = (dst[i] + mult * src[i]) % p;
}

}  // namespace detail

namespace {

// int16 copy of the query, padded to the table stride. Queries beyond int16
// range cannot be divisible by any in-range row anyway, so they clamp.
struct QueryLanes {
  std::int16_t lanes[64];
  explicit QueryLanes(const PackedExponents& rows, std::span<const int> query) {
    if (static_cast<int>(query.size()) != rows.num_vars())
      throw std::invalid_argument("any_row_divides: query length mismatch");
    const int stride = rows.stride() > 64 ? 64 : rows.stride();
    for (int j = 0; j < stride; ++j) lanes[j] = 0;
    for (int j = 0; j < rows.num_vars() && j < stride; ++j) {
      int e = query[j];
      if (e < 0) e = -1;  // exponents are nonnegative; a negative query matches nothing
      // Clamp below the sentinel value so padding rows stay indivisible.
      const int cap = std::numeric_limits<std::int16_t>::max() - 1;
      if (e > cap) e = cap;
      lanes[j] = static_cast<std::int16_t>(e);
    }
  }
};

}  // namespace

bool any_row_divides(const PackedExponents& rows, std::span<const int> query) {
  if (rows.count() == 0) return false;
  QueryLanes q(rows, query);
  if (rows.stride() > 64) {
    // Wide rows take the plain loop; only reachable for num_vars > 64.
    return detail::any_row_divides_scalar(rows, q.lanes);
  }
#if defined(LINRES_WITH_AVX2)
  if (active_backend() == Backend::avx2 && rows.stride() <= 16)
    return detail::any_row_divides_avx2(rows, q.lanes);
#endif
  return detail::any_row_divides_scalar(rows, q.lanes);
}

std::size_t mark_divisible(const PackedExponents& rows, const PackedExponents& queries,
                           std::uint8_t* out) {
  if (rows.num_vars() != queries.num_vars())
    throw std::invalid_argument("mark_divisible: num_vars mismatch");
#if defined(LINRES_WITH_AVX2)
  if (active_backend() == Backend::avx2 && rows.stride() <= 16)
    return detail::mark_divisible_avx2(rows, queries, out);
#endif
  return detail::mark_divisible_scalar(rows, queries, out);
}

std::size_t count_divisible(const PackedExponents& rows, const PackedExponents& queries) {
  std::vector<std::uint8_t> marks(static_cast<std::size_t>(queries.count()) + 1);
  return mark_divisible(rows, queries, marks.data());
}

void row_axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t mult,
                  std::uint32_t p, std::size_t len) {
  if (p == 0 || p >= (1u << 15)) throw std::invalid_argument("row_axpy_mod: modulus out of range");
#if defined(LINRES_WITH_AVX2)
  if (active_backend() == Backend::avx2) {
    detail::row_axpy_mod_avx2(dst, src, mult, p, len);
    return;
  }
#endif
  detail::row_axpy_mod_scalar(dst, src, mult, p, len);
}

}  // namespace linres::kernels
