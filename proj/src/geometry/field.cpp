#include "lig/geometry/field.hpp"

#include <utility>

#include "lig/core/types.hpp"

namespace lig::geometry {

bool is_prime(unsigned v) {
  if (v < 2) return false;
  for (unsigned d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

FieldPrime::FieldPrime(unsigned p) : p_(p) {
  if (!is_prime(p) || p > 13)
    throw Error(ErrorCode::NonPrimeField, "field order " + std::to_string(p) + " is not a supported prime (2..13)");
  add_.resize(p * p);
  mul_.resize(p * p);
  neg_.resize(p);
  inv_.assign(p, 0);
  for (unsigned a = 0; a < p; ++a) {
    neg_[a] = static_cast<Elem>((p - a) % p);
    for (unsigned b = 0; b < p; ++b) {
      add_[a * p + b] = static_cast<Elem>((a + b) % p);
      mul_[a * p + b] = static_cast<Elem>((a * b) % p);
      if ((a * b) % p == 1) inv_[a] = static_cast<Elem>(b);
    }
  }
}

unsigned rank(const FieldPrime& f, std::vector<Elem>& m, std::size_t rows, std::size_t cols) {
  unsigned r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m[piv * cols + k], m[r * cols + k]);
    const Elem s = f.inv(m[r * cols + c]);
    for (std::size_t k = c; k < cols; ++k) m[r * cols + k] = f.mul(m[r * cols + k], s);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i * cols + c] == 0) continue;
      const Elem t = m[i * cols + c];
      for (std::size_t k = c; k < cols; ++k)
        m[i * cols + k] = f.sub(m[i * cols + k], f.mul(t, m[r * cols + k]));
    }
    ++r;
  }
  return r;
}

}  // namespace lig::geometry
