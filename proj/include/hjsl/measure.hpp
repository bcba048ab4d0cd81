#pragma once

#include "hjsl/grid.hpp"

namespace hjsl {

enum class MeasureKind { GaussianStd, Lebesgue };

/// Reference measure on a quadrature box. GaussianStd is the canonical
/// Gaussian (density (2*pi)^{-N/2} exp(-|x|^2/2)) with log-Sobolev constant
/// rho; the box must be wide enough that the truncated mass stays within
/// 1e-8 of 1 (R >= 8 in 1D is ample).
struct MeasureSpec {
  MeasureKind kind = MeasureKind::GaussianStd;
  double rho = 1.0;
  Grid grid;

  static MeasureSpec gaussian_std(const Grid& g, double rho = 1.0) {
    return {MeasureKind::GaussianStd, rho, g};
  }
  static MeasureSpec lebesgue(const Grid& g) {
    return {MeasureKind::Lebesgue, 1.0, g};
  }
};

/// Tensorized trapezoid rule on the grid's own nodes, combined with the
/// measure's log density into per-node log weights.
struct QuadratureRule {
  Eigen::ArrayXd log_weight;  // log(trapezoid weight * density)

  static QuadratureRule for_measure(const MeasureSpec& mu);
};

/// Total mass of the measure over the quadrature box.
double measure_mass(const MeasureSpec& mu);

/// log ||e^u||_p = (1/p) log integral e^{p u} d(mu), computed entirely in the
/// log domain (log-sum-exp), so it never overflows for large p*u.
double log_lp_norm_exp(const GridFunction& u, double p, const MeasureSpec& mu);

/// Same, plus the log of the fraction of the integral carried by boundary
/// nodes (for box-size diagnostics of Lebesgue integrals).
struct LogNormDetail {
  double log_norm;
  double log_boundary_fraction;
};
LogNormDetail log_lp_norm_exp_detail(const GridFunction& u, double p,
                                     const MeasureSpec& mu);

/// Ent_mu(g) = integral g log g - (integral g) log (integral g), with
/// 0 log 0 = 0. Requires g >= 0 nodewise and a GaussianStd measure.
double entropy(const GridFunction& usq, const MeasureSpec& mu);

/// (2/rho) integral |Du|^2 d(mu) - Ent_mu(u^2), with Du by centered
/// differences (one-sided at the boundary). Nonnegative when mu satisfies
/// the log-Sobolev inequality with constant rho.
double lsi_residual(const GridFunction& u, const MeasureSpec& mu);

}  // namespace hjsl
