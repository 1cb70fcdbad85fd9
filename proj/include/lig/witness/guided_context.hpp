#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lig/geometry/space.hpp"
#include "lig/geometry/subspace.hpp"
#include "lig/model/intersection_model.hpp"
#include "lig/predicates/provider.hpp"

namespace lig::witness {

using geometry::Space;
using geometry::Subspace;
using pred::Triple;

/// Space plus model. Providers read coordinates through it; nothing they
/// return is trusted until the evaluator re-checks it against ~.
struct GuidedContext {
  const Space& space;
  const IntersectionModel& model;
  std::uint64_t seed = 0;
};

// Small incidence helpers shared by the constructions.
std::vector<PointId> common_points(const Space& s, LineId a, LineId b);
std::optional<PointId> meet_point(const Space& s, LineId a, LineId b);
/// Lines through p lying in u, ascending.
std::vector<LineId> lines_through_in(const Space& s, PointId p, const Subspace& u);
/// Points of line l lying in u.
std::vector<PointId> points_in(const Space& s, LineId l, const Subspace& u);

// #
std::pair<LineId, LineId> provide_hash_witness(const GuidedContext& ctx, LineId a1, LineId b1, LineId a2, LineId b2,
                                               LineId g);

// projective n >= 4
std::vector<LineId> provide_independent_extension(const GuidedContext& ctx, LineId a1, LineId b1);
struct ProjChain {
  std::vector<LineId> b;  // b_2 .. b_{m+1}
  std::vector<LineId> c;  // c_2 .. c_{m+1}, odd n only
};
/// `a` is a_1 .. a_m.
ProjChain provide_chain(const GuidedContext& ctx, const std::vector<LineId>& a, LineId b1, LineId g);

// 3-space
Triple provide_t_witness(const GuidedContext& ctx, const Triple& a, LineId g1, LineId g2);
std::array<LineId, 6> provide_equiv_plus_witness(const GuidedContext& ctx, const Triple& t1, const Triple& t2,
                                                 LineId g);
std::pair<LineId, LineId> provide_equiv_minus_witness(const GuidedContext& ctx, const Triple& t1, const Triple& t2,
                                                      LineId g);
Triple provide_oplus_witness(const GuidedContext& ctx, const Triple& t1, const Triple& t2);
std::array<LineId, 5> provide_sigma_witness(const GuidedContext& ctx, LineId a, LineId b, LineId g);

// affine
std::vector<LineId> provide_affine_extension(const GuidedContext& ctx, LineId a1, LineId a2);
/// Chain b_1..b_k, k <= steps, with M(a b_1..b_{i-1} b_i) each and M(a b.. target).
std::vector<LineId> provide_mr_chain(const GuidedContext& ctx, const std::vector<LineId>& a, LineId target,
                                     unsigned steps);
LineId provide_delta0_partner(const GuidedContext& ctx, const std::vector<LineId>& a, LineId g);

/// WitnessProvider backed by the constructions above.
class GeometricProvider : public pred::WitnessProvider {
 public:
  explicit GeometricProvider(GuidedContext ctx) : ctx_(ctx) {}

  std::optional<std::vector<LineId>> proj_extension(LineId a1, LineId b1) const override;
  std::optional<std::vector<LineId>> proj_chain_even(const std::vector<LineId>& a, LineId b1,
                                                     LineId g) const override;
  std::optional<std::pair<std::vector<LineId>, std::vector<LineId>>> proj_chain_odd(const std::vector<LineId>& a,
                                                                                    LineId b1,
                                                                                    LineId g) const override;
  std::vector<LineId> proj_refutation_order(const std::vector<LineId>& a, LineId b1) const override;
  std::optional<Triple> t_witness(const Triple& a, LineId g1, LineId g2) const override;
  std::optional<std::array<LineId, 6>> equiv_plus_witness(const Triple& t1, const Triple& t2,
                                                          LineId g) const override;
  std::optional<std::pair<LineId, LineId>> equiv_minus_witness(const Triple& t1, const Triple& t2,
                                                               LineId g) const override;
  std::optional<Triple> equiv_oplus_witness(const Triple& t1, const Triple& t2) const override;
  std::optional<std::array<LineId, 5>> sigma_witness(LineId a, LineId b, LineId g) const override;
  std::optional<std::vector<LineId>> affine_extension(LineId a1, LineId a2) const override;
  std::optional<std::vector<LineId>> mr_chain(const std::vector<LineId>& a, LineId target,
                                              unsigned steps) const override;
  std::optional<LineId> delta0_partner(const std::vector<LineId>& a, LineId g) const override;

 private:
  GuidedContext ctx_;
};

}  // namespace lig::witness
