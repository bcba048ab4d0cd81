#pragma once

#include "hjsl/grid.hpp"
#include "hjsl/lagrangian.hpp"

namespace hjsl::detail {

/// Nodewise evaluation of x -> min_y { I[u](y) + t L((x-y)/t) } shared by the
/// discrete step (t = h) and the Hopf-Lax semigroup. The coarse pass scans
/// grid-aligned displacements |x-y| <= window (interpolation-exact); a
/// per-axis golden-section pass then refines inside the winning cell pair.
/// Equal coarse minima are broken toward the smallest displacement.
struct InfConvParams {
  double t;                  // penalty time weight
  double window;             // displacement window, in y units
  double refine_tol;         // golden-section tolerance, in y units
  Eigen::Index stride = 1;   // evaluate every stride-th node per axis
  const char* exhausted_msg = "search radius exhausted";
};

GridFunction inf_convolve(const GridFunction& u, const LagrangianModel& model,
                          const InfConvParams& params);

}  // namespace hjsl::detail
