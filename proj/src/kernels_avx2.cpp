// AVX2 variants of the batched kernels. Compiled with -mavx2 and reached only
// through the runtime dispatch in kernels.cpp.
#include "linres/kernels.hpp"

#if defined(LINRES_WITH_AVX2)

#include <immintrin.h>

#include <cstring>

namespace linres::kernels::detail {

namespace {

// A 256-bit compare produces one movemask byte-pair per int16 lane. A row of
// stride s occupies 2*s consecutive mask bits; the row divides the query iff
// its group is all zero (no lane had row > query).
inline bool has_zero_group(std::uint32_t mask, int stride) {
  switch (stride) {
    case 4:
      return ((mask - 0x01010101u) & ~mask & 0x80808080u) != 0;
    case 8:
      return ((mask - 0x00010001u) & ~mask & 0x80008000u) != 0;
    default:  // stride 16: one row per vector
      return mask == 0;
  }
}

inline __m256i broadcast_query(const std::int16_t* q, int stride) {
  if (stride == 4) {
    std::int64_t bits;
    std::memcpy(&bits, q, sizeof(bits));
    return _mm256_set1_epi64x(bits);
  }
  if (stride == 8) {
    __m128i half = _mm_loadu_si128(reinterpret_cast<const __m128i*>(q));
    return _mm256_broadcastsi128_si256(half);
  }
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(q));
}

inline bool scan_rows(const PackedExponents& rows, __m256i query_vec) {
  const int stride = rows.stride();
  const int rows_per_vec = 16 / stride;
  const int vectors = rows.padded_count() / rows_per_vec;
  const std::int16_t* base = rows.data();
  for (int v = 0; v < vectors; ++v) {
    __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(base + v * 16));
    __m256i gt = _mm256_cmpgt_epi16(r, query_vec);
    auto mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(gt));
    if (has_zero_group(mask, stride)) return true;
  }
  return false;
}

}  // namespace

bool any_row_divides_avx2(const PackedExponents& rows, const std::int16_t* query) {
  return scan_rows(rows, broadcast_query(query, rows.stride()));
}

std::size_t mark_divisible_avx2(const PackedExponents& rows, const PackedExponents& queries,
                                std::uint8_t* out) {
  std::size_t hits = 0;
  for (int q = 0; q < queries.count(); ++q) {
    bool hit = scan_rows(rows, broadcast_query(queries.row(q), rows.stride()));
    out[q] = hit ? 1 : 0;
    hits += hit ? 1 : 0;
  }
  return hits;
}

void row_axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t mult,
                       std::uint32_t p, std::size_t len) {
  // Entries and mult are < p < 2^15, so t = dst + mult*src < 2^31 exactly in
  // 32-bit lanes. Reduction is Barrett with M = floor(2^32/p): the estimated
  // quotient is off by at most one, fixed with a single conditional subtract.
  const __m256i vmult = _mm256_set1_epi32(static_cast<int>(mult));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const auto magic = static_cast<long long>((static_cast<std::uint64_t>(1) << 32) / p);
  const __m256i vmagic = _mm256_set1_epi64x(magic);

  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i t = _mm256_add_epi32(d, _mm256_mullo_epi32(vmult, s));

    __m256i q_even = _mm256_srli_epi64(_mm256_mul_epu32(t, vmagic), 32);
    __m256i t_odd = _mm256_srli_epi64(t, 32);
    __m256i q_odd = _mm256_srli_epi64(_mm256_mul_epu32(t_odd, vmagic), 32);
    __m256i q = _mm256_blend_epi32(q_even, _mm256_slli_epi64(q_odd, 32), 0b10101010);

    __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(q, vp));
    __m256i lt = _mm256_cmpgt_epi32(vp, r);
    r = _mm256_sub_epi32(r, _mm256_andnot_si256(lt, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
  }
  for (; i < len; ++i) dst[i] = (dst[i] + mult * src[i]) % p;
}

}  // namespace linres::kernels::detail

#endif  // LINRES_WITH_AVX2
