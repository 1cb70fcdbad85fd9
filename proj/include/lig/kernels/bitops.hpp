#pragma once

// Word-level bitset kernels. Every adjacency query, pencil lookup and
// quantifier prune in the engine bottoms out in one of these loops, so they
// come in a scalar reference flavour and an AVX2 flavour chosen at runtime.

#include <cstddef>
#include <cstdint>

namespace lig::kernels {

using Word = std::uint64_t;

enum class Isa { Scalar, Avx2 };

struct BitOps {
  const char* name;
  Isa isa;
  // any(a & b)
  bool (*and_any)(const Word* a, const Word* b, std::size_t n);
  // any(a & b & c)
  bool (*and3_any)(const Word* a, const Word* b, const Word* c, std::size_t n);
  // dst &= a
  void (*and_into)(Word* dst, const Word* a, std::size_t n);
  // dst |= a
  void (*or_into)(Word* dst, const Word* a, std::size_t n);
  // dst &= ~a
  void (*andnot_into)(Word* dst, const Word* a, std::size_t n);
  // dst = a & b
  void (*and_to)(Word* dst, const Word* a, const Word* b, std::size_t n);
  std::size_t (*popcount)(const Word* a, std::size_t n);
  std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t n);
  bool (*equal)(const Word* a, const Word* b, std::size_t n);
  // (a & ~b) == 0, i.e. a is a subset of b
  bool (*subset)(const Word* a, const Word* b, std::size_t n);
};

const BitOps& scalar_ops();

/// nullptr when the AVX2 variant was not compiled in.
const BitOps* avx2_ops();

bool cpu_has_avx2();

/// Process-wide kernel table. Defaults to the widest supported ISA; the
/// LIG_ISA environment variable (`scalar` or `avx2`) overrides at first use.
const BitOps& ops();

/// Switch the active table. Returns false if the ISA is unavailable.
bool select(Isa isa);

}  // namespace lig::kernels
