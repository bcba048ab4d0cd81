#pragma once

#include "hjsl/grid.hpp"
#include "hjsl/hyper.hpp"
#include "hjsl/measure.hpp"
#include "hjsl/scheme.hpp"

#include <functional>
#include <iosfwd>
#include <vector>

namespace hjsl {

using ScalarField = std::function<double(const Vec&)>;

/// How the reference solution S_{nh} f is produced: Hopf-Lax on a grid
/// refined `refine`-fold with a `tol_tighten`-times tighter minimization,
/// restricted back to the experiment grid. In oracle mode the discrete path
/// is replaced by the same reference solver (errors vanish by construction).
struct ReferenceConfig {
  Eigen::Index refine = 4;
  double tol_tighten = 100.0;
  bool oracle_mode = false;
};

/// Exponential norms of the truncation error S_n f - Q_n f in both signs,
/// the fitted minimal per-step constant of the product bound
/// prod_k (1 + C lambda_k^2 h^2)^{1/lambda_k}, and that bound's log.
/// All values are exactly zero at n = 0.
struct ErrorNormReport {
  double log_norm_plus = 0.0;   // log ||e^{S_n f - Q_n f}||_{lambda_n}
  double log_norm_minus = 0.0;  // log ||e^{Q_n f - S_n f}||_{lambda_n}
  double log_bound = 0.0;
  double fitted_c = 0.0;
};

ErrorNormReport exp_error_norms(const ScalarField& f, int n,
                                const LambdaSchedule& sched,
                                const SchemeConfig& cfg, const MeasureSpec& mu,
                                const ReferenceConfig& ref = {});

struct MeanErrorReport {
  double q_minus_s = 0.0;  // integral (Q_n f - S_n f) d mu
  double s_minus_q = 0.0;
  double abs_error = 0.0;  // integral |Q_n f - S_n f| d mu
};

MeanErrorReport mean_error(const ScalarField& f, int n, double h,
                           const SchemeConfig& cfg, const MeasureSpec& mu,
                           const ReferenceConfig& ref = {});

/// mu{ x : |S_n f(x) - Q_n f(x)| >= h^p }, 0 < p < 1, as quadrature mass of
/// the nodal indicator.
double tail_measure(const ScalarField& f, int n, double h, double p,
                    const SchemeConfig& cfg, const MeasureSpec& mu,
                    const ReferenceConfig& ref = {});

struct OrderStudyRow {
  double h = 0.0;
  int n = 0;
  double sup_err = 0.0;
};

struct OrderStudy {
  std::vector<OrderStudyRow> rows;
  double fitted_order = 0.0;
  bool floor_reached = false;  // sup errors sit at the minimizer-tolerance floor
};

/// Sup-norm error of evolve(f, T/h) against the refined Hopf-Lax reference
/// for each h, with the grid spacing tied to the time step
/// (dx ~ h^2 * dx_scale) so spatial error cannot dominate, and the
/// least-squares slope of log error against log h. Rows whose error sits
/// below the 1e-9 floor are excluded from the fit; if fewer than two rows
/// remain the study reports floor_reached instead of an order.
OrderStudy convergence_order(const ScalarField& f, double T,
                             const std::vector<double>& hs,
                             double box_half_width, double dx_scale = 1.0,
                             double q_refine_tol = 1e-10,
                             const ReferenceConfig& ref = {});

/// CSV ladder schema shared by the concentration and order experiments.
struct LadderRow {
  double h = 0.0;
  int n = 0;
  double p = 0.0;
  double tail_mass = 0.0;
  double mean_err = 0.0;
  double sup_err = 0.0;
  double fitted_order = 0.0;
};

void write_ladder_csv(const std::vector<LadderRow>& rows, std::ostream& os);

}  // namespace hjsl
