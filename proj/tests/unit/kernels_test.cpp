#include <random>
#include <vector>

#include "doctest.h"
#include "lig/kernels/bitops.hpp"
#include "lig/model/line_set.hpp"

using namespace lig::kernels;

namespace {

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n, int density) {
  std::vector<Word> v(n);
  for (auto& w : v) {
    w = rng();
    for (int i = 0; i < density; ++i) w &= rng();  // sparser words hit the all-zero paths
  }
  return v;
}

void compare(const BitOps& a, const BitOps& b) {
  std::mt19937_64 rng(7);
  for (std::size_t n = 0; n <= 37; ++n) {
    for (int density = 0; density < 6; ++density) {
      auto x = random_words(rng, n, density);
      auto y = random_words(rng, n, density);
      auto z = random_words(rng, n, density);
      CHECK(a.and_any(x.data(), y.data(), n) == b.and_any(x.data(), y.data(), n));
      CHECK(a.and3_any(x.data(), y.data(), z.data(), n) == b.and3_any(x.data(), y.data(), z.data(), n));
      CHECK(a.popcount(x.data(), n) == b.popcount(x.data(), n));
      CHECK(a.and_popcount(x.data(), y.data(), n) == b.and_popcount(x.data(), y.data(), n));
      CHECK(a.equal(x.data(), y.data(), n) == b.equal(x.data(), y.data(), n));
      CHECK(a.equal(x.data(), x.data(), n) == b.equal(x.data(), x.data(), n));
      CHECK(a.subset(x.data(), y.data(), n) == b.subset(x.data(), y.data(), n));

      auto sub = x;
      for (std::size_t i = 0; i < n; ++i) sub[i] &= y[i];
      CHECK(a.subset(sub.data(), x.data(), n));
      CHECK(b.subset(sub.data(), x.data(), n));

      auto d1 = x, d2 = x;
      a.and_into(d1.data(), y.data(), n);
      b.and_into(d2.data(), y.data(), n);
      CHECK(d1 == d2);
      d1 = x, d2 = x;
      a.or_into(d1.data(), y.data(), n);
      b.or_into(d2.data(), y.data(), n);
      CHECK(d1 == d2);
      d1 = x, d2 = x;
      a.andnot_into(d1.data(), y.data(), n);
      b.andnot_into(d2.data(), y.data(), n);
      CHECK(d1 == d2);
      std::vector<Word> e1(n, 1), e2(n, 2);
      a.and_to(e1.data(), y.data(), z.data(), n);
      b.and_to(e2.data(), y.data(), z.data(), n);
      CHECK(e1 == e2);
    }
  }
}

}  // namespace

TEST_CASE("scalar kernels behave like a bit-by-bit reference") {
  const BitOps& s = scalar_ops();
  std::vector<Word> x{0b1011, 0, Word{1} << 63}, y{0b0100, 0, Word{1} << 63};
  CHECK(s.and_any(x.data(), y.data(), 3));
  CHECK_FALSE(s.and_any(x.data(), y.data(), 2));
  CHECK(s.popcount(x.data(), 3) == 4);
  CHECK(s.and_popcount(x.data(), y.data(), 3) == 1);
  CHECK_FALSE(s.subset(x.data(), y.data(), 3));
  s.or_into(y.data(), x.data(), 3);
  CHECK(y[0] == 0b1111);
  s.andnot_into(y.data(), x.data(), 3);
  CHECK(y[0] == 0b0100);
  CHECK(y[2] == 0);
}

TEST_CASE("AVX2 kernels match the scalar ones") {
  const BitOps* v = avx2_ops();
  if (v == nullptr || !cpu_has_avx2()) {
    MESSAGE("AVX2 kernels unavailable on this host, skipping");
    return;
  }
  CHECK(v->isa == Isa::Avx2);
  compare(scalar_ops(), *v);
}

TEST_CASE("runtime selection switches the active table") {
  const Isa before = ops().isa;
  CHECK(select(Isa::Scalar));
  CHECK(ops().isa == Isa::Scalar);
  if (avx2_ops() != nullptr && cpu_has_avx2()) {
    CHECK(select(Isa::Avx2));
    CHECK(ops().isa == Isa::Avx2);
  } else {
    CHECK_FALSE(select(Isa::Avx2));
  }
  select(before);
}

TEST_CASE("LineSet operations under both kernels") {
  for (Isa isa : {Isa::Scalar, Isa::Avx2}) {
    if (!select(isa)) continue;
    lig::LineSet a = lig::LineSet::of(300, {0, 5, 64, 200, 299});
    lig::LineSet b = lig::LineSet::of(300, {5, 200, 250});
    CHECK((a & b).to_vector() == std::vector<lig::LineId>{5, 200});
    CHECK((a | b).count() == 6);
    CHECK((a - b).to_vector() == std::vector<lig::LineId>{0, 64, 299});
    CHECK(a.intersects(b));
    CHECK((a & b).subset_of(a));
    CHECK(lig::LineSet::full(300).count() == 300);
    CHECK(a.next(64) == 200);
    CHECK(a.next(299) == lig::kNoLine);
  }
  select(cpu_has_avx2() && avx2_ops() ? Isa::Avx2 : Isa::Scalar);
}
