#pragma once

#include "hjsl/grid.hpp"
#include "hjsl/lagrangian.hpp"

namespace hjsl {

/// Continuous semigroup S_t f(x) = inf_y { f(y) + t L((x-y)/t) }, evaluated
/// nodewise by an aligned coarse scan (step dx) over the ball
/// |y - x| <= t*(q_radius) + dx followed by per-axis golden-section
/// refinement. `q_radius <= 0` derives lipschitz_estimate(f) + 1. Throws
/// "Hopf-Lax search radius exhausted" if a coarse minimizer lands on the
/// scan boundary.
GridFunction hopf_lax(const GridFunction& f, double t,
                      const LagrangianModel& model, double refine_tol = 1e-10,
                      double q_radius = 0.0);

/// Same minimization, evaluated only on every stride-th node per axis of
/// f's grid; the result lives on the subsampled grid. Used to build refined
/// reference solutions restricted to a coarse grid.
GridFunction hopf_lax_strided(const GridFunction& f, double t,
                              const LagrangianModel& model, Eigen::Index stride,
                              double refine_tol = 1e-10, double q_radius = 0.0);

/// Closed-form evolution of the quadratic profile f = -b L(x - xbar):
/// S_t f = -(b/(1-tb)) L(x - xbar) with L(q) = |q|^2/2. Requires t*b < 1,
/// else throws "blow-up time reached".
GridFunction analytic_quadratic(const Grid& g, double b, const Vec& xbar,
                                double t);

/// Closed-form evolution of affine data: x -> p.x - t |p|^2/2.
GridFunction analytic_affine(const Grid& g, const Vec& p, double t);

}  // namespace hjsl
