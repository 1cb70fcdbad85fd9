#include "lig/model/line_set.hpp"

#include <algorithm>

namespace lig {

LineSet LineSet::full(std::size_t universe) {
  LineSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  if (universe % 64) s.words_.back() = (Word{1} << (universe % 64)) - 1;
  return s;
}

LineSet LineSet::of(std::size_t universe, std::initializer_list<LineId> ids) {
  LineSet s(universe);
  for (LineId id : ids) s.set(id);
  return s;
}

void LineSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

std::size_t LineSet::count() const { return kernels::ops().popcount(words_.data(), words_.size()); }

bool LineSet::empty() const {
  for (Word w : words_)
    if (w) return false;
  return true;
}

bool LineSet::intersects(const LineSet& o) const {
  return kernels::ops().and_any(words_.data(), o.words_.data(), words_.size());
}

bool LineSet::subset_of(const LineSet& o) const {
  return kernels::ops().subset(words_.data(), o.words_.data(), words_.size());
}

LineId LineSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<LineId>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[w])));
  return kNoLine;
}

LineId LineSet::next(LineId after) const {
  std::size_t id = static_cast<std::size_t>(after) + 1;
  if (id >= universe_) return kNoLine;
  std::size_t w = id >> 6;
  Word bits = words_[w] & (~Word{0} << (id & 63));
  while (true) {
    if (bits) return static_cast<LineId>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
    if (++w == words_.size()) return kNoLine;
    bits = words_[w];
  }
}

std::vector<LineId> LineSet::to_vector() const {
  std::vector<LineId> out;
  for_each([&](LineId id) { out.push_back(id); });
  return out;
}

LineSet& LineSet::operator&=(const LineSet& o) {
  kernels::ops().and_into(words_.data(), o.words_.data(), words_.size());
  return *this;
}

LineSet& LineSet::operator|=(const LineSet& o) {
  kernels::ops().or_into(words_.data(), o.words_.data(), words_.size());
  return *this;
}

LineSet& LineSet::operator-=(const LineSet& o) {
  kernels::ops().andnot_into(words_.data(), o.words_.data(), words_.size());
  return *this;
}

LineSet& LineSet::and_words(const Word* w) {
  kernels::ops().and_into(words_.data(), w, words_.size());
  return *this;
}

LineSet& LineSet::or_words(const Word* w) {
  kernels::ops().or_into(words_.data(), w, words_.size());
  return *this;
}

bool LineSet::operator==(const LineSet& o) const {
  return universe_ == o.universe_ && kernels::ops().equal(words_.data(), o.words_.data(), words_.size());
}

}  // namespace lig
