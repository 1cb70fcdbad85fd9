#include "lig/model/intersection_model.hpp"

namespace lig {

IntersectionModel::IntersectionModel(SpaceParams params, std::size_t line_count, std::vector<Word> rows)
    : params_(params), n_(line_count), w_(words_for(line_count)), adj_(std::move(rows)) {
  if (adj_.size() != n_ * w_)
    throw Error(ErrorCode::AsymmetricAdjacency, "adjacency has " + std::to_string(adj_.size()) + " words, expected " +
                                                    std::to_string(n_ * w_));
  for (std::size_t a = 0; a < n_; ++a) {
    if ((adj_[a * w_ + (a >> 6)] >> (a & 63)) & 1u)
      throw Error(ErrorCode::AsymmetricAdjacency, "line " + std::to_string(a) + " is adjacent to itself");
    for (std::size_t b = a + 1; b < n_; ++b) {
      const bool ab = (adj_[a * w_ + (b >> 6)] >> (b & 63)) & 1u;
      const bool ba = (adj_[b * w_ + (a >> 6)] >> (a & 63)) & 1u;
      if (ab != ba)
        throw Error(ErrorCode::AsymmetricAdjacency,
                    "edge (" + std::to_string(ab ? a : b) + "," + std::to_string(ab ? b : a) + ") has no reverse");
    }
    if (n_ % 64 && (adj_[a * w_ + w_ - 1] >> (n_ % 64)))
      throw Error(ErrorCode::InvalidId, "adjacency row " + std::to_string(a) + " has bits past the universe");
  }
}

LineSet IntersectionModel::common_neighbors(std::span<const LineId> lines) const {
  LineSet s = universe();
  for (LineId l : lines) s.and_words(row(l));
  return s;
}

std::size_t IntersectionModel::degree(LineId a) const { return kernels::ops().popcount(row(a), w_); }

}  // namespace lig
