#pragma once

#include <cstddef>
#include <vector>

#include "lig/core/types.hpp"
#include "lig/kernels/bitops.hpp"

namespace lig {

using kernels::Word;

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

/// A set of line ids as a bitset over a fixed universe.
class LineSet {
 public:
  LineSet() = default;
  explicit LineSet(std::size_t universe) : universe_(universe), words_(words_for(universe), 0) {}
  LineSet(std::size_t universe, const Word* bits) : universe_(universe), words_(bits, bits + words_for(universe)) {}

  static LineSet full(std::size_t universe);
  static LineSet of(std::size_t universe, std::initializer_list<LineId> ids);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  const Word* data() const noexcept { return words_.data(); }
  Word* data() noexcept { return words_.data(); }

  bool test(LineId id) const { return id < universe_ && ((words_[id >> 6] >> (id & 63)) & 1u); }
  void set(LineId id) { words_[id >> 6] |= Word{1} << (id & 63); }
  void reset(LineId id) { words_[id >> 6] &= ~(Word{1} << (id & 63)); }
  void clear();

  std::size_t count() const;
  bool empty() const;
  bool intersects(const LineSet& o) const;
  bool subset_of(const LineSet& o) const;
  /// Lowest member, or kNoLine.
  LineId first() const;
  /// Next member strictly above `after`, or kNoLine.
  LineId next(LineId after) const;
  std::vector<LineId> to_vector() const;

  LineSet& operator&=(const LineSet& o);
  LineSet& operator|=(const LineSet& o);
  LineSet& operator-=(const LineSet& o);
  LineSet& and_words(const Word* w);
  LineSet& or_words(const Word* w);
  friend LineSet operator&(LineSet a, const LineSet& b) { return a &= b; }
  friend LineSet operator|(LineSet a, const LineSet& b) { return a |= b; }
  friend LineSet operator-(LineSet a, const LineSet& b) { return a -= b; }
  bool operator==(const LineSet& o) const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<LineId>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  /// Like for_each, but stops as soon as f returns true; returns that result.
  template <class F>
  bool any_of(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        if (f(static_cast<LineId>(w * 64 + static_cast<std::size_t>(b)))) return true;
        bits &= bits - 1;
      }
    }
    return false;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace lig
