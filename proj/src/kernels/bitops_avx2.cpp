#include "lig/kernels/bitops.hpp"

#include <immintrin.h>

#include <bit>

// Four words per 256-bit lane; the tail is handled word-wise.

namespace lig::kernels {
namespace {

inline __m256i load(const Word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(Word* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

bool and_any(const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    if (!_mm256_testz_si256(load(a + i), load(b + i))) return true;
  }
  for (; i < n; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

bool and3_any(const Word* a, const Word* b, const Word* c, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i ab = _mm256_and_si256(load(a + i), load(b + i));
    if (!_mm256_testz_si256(ab, load(c + i))) return true;
  }
  for (; i < n; ++i)
    if (a[i] & b[i] & c[i]) return true;
  return false;
}

void and_into(Word* dst, const Word* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_and_si256(load(dst + i), load(a + i)));
  for (; i < n; ++i) dst[i] &= a[i];
}

void or_into(Word* dst, const Word* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_or_si256(load(dst + i), load(a + i)));
  for (; i < n; ++i) dst[i] |= a[i];
}

void andnot_into(Word* dst, const Word* a, std::size_t n) {
  std::size_t i = 0;
  // _mm256_andnot_si256(x, y) computes ~x & y
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_andnot_si256(load(a + i), load(dst + i)));
  for (; i < n; ++i) dst[i] &= ~a[i];
}

void and_to(Word* dst, const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_and_si256(load(a + i), load(b + i)));
  for (; i < n; ++i) dst[i] = a[i] & b[i];
}

std::size_t popcount(const Word* a, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(_mm_popcnt_u64(a[i]));
  return c;
}

std::size_t and_popcount(const Word* a, const Word* b, std::size_t n) {
  std::size_t c = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    alignas(32) Word tmp[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), _mm256_and_si256(load(a + i), load(b + i)));
    c += static_cast<std::size_t>(_mm_popcnt_u64(tmp[0]) + _mm_popcnt_u64(tmp[1]) +
                                  _mm_popcnt_u64(tmp[2]) + _mm_popcnt_u64(tmp[3]));
  }
  for (; i < n; ++i) c += static_cast<std::size_t>(_mm_popcnt_u64(a[i] & b[i]));
  return c;
}

bool equal(const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i x = _mm256_xor_si256(load(a + i), load(b + i));
    if (!_mm256_testz_si256(x, x)) return false;
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool subset(const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    // testc(b, a) is 1 iff (~b & a) == 0
    if (!_mm256_testc_si256(load(b + i), load(a + i))) return false;
  }
  for (; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

}  // namespace

const BitOps* avx2_ops() {
  static const BitOps table{"avx2",   Isa::Avx2,   and_any,      and3_any, and_into, or_into,
                            andnot_into, and_to,   popcount,     and_popcount, equal, subset};
  return &table;
}

}  // namespace lig::kernels
