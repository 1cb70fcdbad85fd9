#include <atomic>
#include <cstdlib>
#include <string_view>

#include "lig/kernels/bitops.hpp"

namespace lig::kernels {

#ifndef LIG_HAVE_AVX2_KERNELS
const BitOps* avx2_ops() { return nullptr; }
#endif

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

namespace {

const BitOps* initial_table() {
  const BitOps* avx2 = (avx2_ops() != nullptr && cpu_has_avx2()) ? avx2_ops() : nullptr;
  if (const char* env = std::getenv("LIG_ISA")) {
    std::string_view want(env);
    if (want == "scalar") return &scalar_ops();
    if (want == "avx2" && avx2 != nullptr) return avx2;
  }
  return avx2 != nullptr ? avx2 : &scalar_ops();
}

std::atomic<const BitOps*>& active() {
  static std::atomic<const BitOps*> table{initial_table()};
  return table;
}

}  // namespace

const BitOps& ops() { return *active().load(std::memory_order_relaxed); }

bool select(Isa isa) {
  if (isa == Isa::Scalar) {
    active().store(&scalar_ops());
    return true;
  }
  if (avx2_ops() == nullptr || !cpu_has_avx2()) return false;
  active().store(avx2_ops());
  return true;
}

}  // namespace lig::kernels
