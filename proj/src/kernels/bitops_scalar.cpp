#include "lig/kernels/bitops.hpp"

#include <bit>

namespace lig::kernels {
namespace {

bool and_any(const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

bool and3_any(const Word* a, const Word* b, const Word* c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] & b[i] & c[i]) return true;
  return false;
}

void and_into(Word* dst, const Word* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] &= a[i];
}

void or_into(Word* dst, const Word* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] |= a[i];
}

void andnot_into(Word* dst, const Word* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] &= ~a[i];
}

void and_to(Word* dst, const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

std::size_t popcount(const Word* a, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i]));
  return c;
}

std::size_t and_popcount(const Word* a, const Word* b, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

bool equal(const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool subset(const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

}  // namespace

const BitOps& scalar_ops() {
  static const BitOps table{"scalar",     Isa::Scalar, and_any,      and3_any,
                            and_into,     or_into,     andnot_into,  and_to,
                            popcount,     and_popcount, equal,       subset};
  return table;
}

}  // namespace lig::kernels
