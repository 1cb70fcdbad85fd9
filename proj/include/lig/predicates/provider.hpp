#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "lig/core/types.hpp"

namespace lig::pred {

using Triple = std::array<LineId, 3>;

/// Candidate witnesses for existential blocks. Everything returned here is
/// a suggestion; the evaluator re-checks it against ~ before use. The
/// default implementation has no suggestions.
class WitnessProvider {
 public:
  virtual ~WitnessProvider() = default;

  // projective n >= 4
  virtual std::optional<std::vector<LineId>> proj_extension(LineId a1, LineId b1) const;
  /// b_2 .. b_{m+1} for the even definition.
  virtual std::optional<std::vector<LineId>> proj_chain_even(const std::vector<LineId>& a, LineId b1, LineId g) const;
  /// (b_2 .. b_{m+1}, c_2 .. c_{m+1}) for the odd definition.
  virtual std::optional<std::pair<std::vector<LineId>, std::vector<LineId>>> proj_chain_odd(
      const std::vector<LineId>& a, LineId b1, LineId g) const;
  /// Lines g to try first when refuting; may be empty.
  virtual std::vector<LineId> proj_refutation_order(const std::vector<LineId>& a, LineId b1) const;

  // 3-space
  virtual std::optional<Triple> t_witness(const Triple& a, LineId g1, LineId g2) const;
  /// x[i][j] flattened as x11 x12 x13 x21 x22 x23.
  virtual std::optional<std::array<LineId, 6>> equiv_plus_witness(const Triple& t1, const Triple& t2, LineId g) const;
  virtual std::optional<std::pair<LineId, LineId>> equiv_minus_witness(const Triple& t1, const Triple& t2,
                                                                       LineId g) const;
  virtual std::optional<Triple> equiv_oplus_witness(const Triple& t1, const Triple& t2) const;
  /// (x, a1, a2, b1, b2)
  virtual std::optional<std::array<LineId, 5>> sigma_witness(LineId a, LineId b, LineId g) const;

  // affine
  virtual std::optional<std::vector<LineId>> affine_extension(LineId a1, LineId a2) const;
  /// Chain b_1 .. b_k (k <= steps) reaching target.
  virtual std::optional<std::vector<LineId>> mr_chain(const std::vector<LineId>& a, LineId target,
                                                      unsigned steps) const;
  /// A line h inside the span of a that is coplanar with g.
  virtual std::optional<LineId> delta0_partner(const std::vector<LineId>& a, LineId g) const;
};

}  // namespace lig::pred
