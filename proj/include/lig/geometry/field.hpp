#pragma once

#include <cstdint>
#include <vector>

namespace lig::geometry {

using Elem = std::uint8_t;

/// Arithmetic over GF(p) for a prime 2 <= p <= 13, table driven.
class FieldPrime {
 public:
  explicit FieldPrime(unsigned p);

  unsigned p() const noexcept { return p_; }
  Elem add(Elem a, Elem b) const { return add_[a * p_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * p_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * p_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  /// Multiplicative inverse; inv(0) is 0 by convention and never used.
  Elem inv(Elem a) const { return inv_[a]; }

 private:
  unsigned p_;
  std::vector<Elem> add_, mul_, neg_, inv_;
};

bool is_prime(unsigned v);

/// Rank of a row-major matrix (rows x cols) over GF(p). The matrix is consumed.
unsigned rank(const FieldPrime& f, std::vector<Elem>& m, std::size_t rows, std::size_t cols);

}  // namespace lig::geometry
