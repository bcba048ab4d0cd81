#pragma once

#include "hjsl/grid.hpp"
#include "hjsl/lagrangian.hpp"

#include <vector>

namespace hjsl {

/// Parameters of the discrete-time step. A nonpositive q_radius derives the
/// search-ball radius from the data as lipschitz_estimate(u) + 1, recomputed
/// before every step (the evolved Lipschitz constant can grow on a truncated
/// box, e.g. for quadratic profiles).
struct SchemeConfig {
  double h = 0.1;               // time step
  double q_radius = 0.0;        // velocity search-ball radius; <= 0 -> auto
  double q_refine_tol = 1e-10;  // golden-section tolerance, in q units
  Grid grid;

  static SchemeConfig defaults(const Grid& g, double h) {
    SchemeConfig c{.h = h, .q_radius = 0.0, .q_refine_tol = 1e-10, .grid = g};
    return c;
  }
};

/// The search radius sl_step will use for data u under this config.
double effective_q_radius(const GridFunction& u, const SchemeConfig& cfg);

/// One discrete step: x -> inf_{|q| <= radius} { I[u](x - h q) + h L(q) }.
/// Coarse scan over q with step dx/h (grid-aligned displacements), then
/// golden-section refinement. Throws "q search radius exhausted" if a coarse
/// minimizer lands on the ball boundary.
GridFunction sl_step(const GridFunction& u, const SchemeConfig& cfg,
                     const LagrangianModel& model);

/// n-fold composition of sl_step; n = 0 returns f unchanged.
GridFunction evolve(const GridFunction& f, int n, const SchemeConfig& cfg,
                    const LagrangianModel& model);

struct EvolveTrace {
  GridFunction result;
  std::vector<double> radii;  // effective search radius of each step, q units
  double travel = 0.0;        // h * sum(radii): displacement reach of the data
};

EvolveTrace evolve_traced(const GridFunction& f, int n, const SchemeConfig& cfg,
                          const LagrangianModel& model);

/// Per-step structural quantities of the evolution, for k = 0..n, measured on
/// nodes at least `interior_margin` nodes from the boundary. Violation checks
/// are left to the caller; reported_c is the observed sup |u_{k+1}-u_k| / h.
struct StructuralReport {
  std::vector<double> sup_norm;
  std::vector<double> lipschitz;
  std::vector<double> semiconcavity;
  std::vector<double> step_diff;  // k = 0..n-1
  double growth_bound_per_step = 0.0;
  double reported_c = 0.0;
  Eigen::Index interior_margin = 0;
};

StructuralReport property_report(const GridFunction& f, int n,
                                 const SchemeConfig& cfg,
                                 const LagrangianModel& model);

}  // namespace hjsl
