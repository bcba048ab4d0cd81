#include "hjsl/concentration.hpp"

#include "hjsl/detail/format.hpp"
#include "hjsl/hopf_lax.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace hjsl {

namespace {

constexpr double kOrderFloor = 1e-9;

Grid refined_grid(const Grid& g, Eigen::Index refine) {
  return Grid(g.dim(), g.half_width(), (g.points_per_axis() - 1) * refine + 1);
}

// S_{t} f on g's nodes: Hopf-Lax on the refine-fold grid, sampled from the
// analytic field, restricted back to g.
GridFunction reference_solution(const ScalarField& f, const Grid& g, double t,
                                double base_tol, const ReferenceConfig& ref) {
  const GridFunction fine =
      GridFunction::sample(refined_grid(g, ref.refine), f);
  return hopf_lax_strided(fine, t, LagrangianModel::quadratic(), ref.refine,
                          base_tol / ref.tol_tighten);
}

GridFunction discrete_solution(const ScalarField& f, int n,
                               const SchemeConfig& cfg,
                               const ReferenceConfig& ref) {
  if (ref.oracle_mode)
    return reference_solution(f, cfg.grid, double(n) * cfg.h,
                              cfg.q_refine_tol * cfg.h, ref);
  const GridFunction coarse = GridFunction::sample(cfg.grid, f);
  return evolve(coarse, n, cfg, LagrangianModel::quadratic());
}

Eigen::ArrayXd quad_weights(const MeasureSpec& mu) {
  return QuadratureRule::for_measure(mu).log_weight.exp();
}

}  // namespace

ErrorNormReport exp_error_norms(const ScalarField& f, int n,
                                const LambdaSchedule& sched,
                                const SchemeConfig& cfg, const MeasureSpec& mu,
                                const ReferenceConfig& ref) {
  if (n < 0) throw std::invalid_argument("step count must be nonnegative");
  ErrorNormReport rep;
  if (n == 0) return rep;  // Q_0 f = S_0 f = f, so F_0 = 1 exactly

  const auto model = LagrangianModel::quadratic();
  GridFunction q = GridFunction::sample(cfg.grid, f);

  std::vector<double> log_plus(size_t(n) + 1, 0.0), log_minus(size_t(n) + 1, 0.0);
  for (int k = 1; k <= n; ++k) {
    q = ref.oracle_mode
            ? discrete_solution(f, k, cfg, ref)
            : sl_step(q, cfg, model);
    const GridFunction s =
        reference_solution(f, cfg.grid, double(k) * cfg.h,
                           cfg.q_refine_tol * cfg.h, ref);
    const double lam = sched.lambda(k);
    if (lam == 0.0) throw std::domain_error("exponent crosses zero");
    const GridFunction diff(cfg.grid, s.values() - q.values(), q.extension());
    const GridFunction ndiff(cfg.grid, q.values() - s.values(), q.extension());
    log_plus[size_t(k)] = log_lp_norm_exp(diff, lam, mu);
    log_minus[size_t(k)] = log_lp_norm_exp(ndiff, lam, mu);
  }

  rep.log_norm_plus = log_plus[size_t(n)];
  rep.log_norm_minus = log_minus[size_t(n)];

  bool first = true;
  for (int k = 0; k < n; ++k) {
    const double lam1 = sched.lambda(k + 1);
    const double denom = lam1 * lam1 * sched.h * sched.h;
    for (const auto* seq : {&log_plus, &log_minus}) {
      const double c =
          std::expm1(lam1 * ((*seq)[size_t(k) + 1] - (*seq)[size_t(k)])) / denom;
      rep.fitted_c = first ? c : std::max(rep.fitted_c, c);
      first = false;
    }
  }
  for (int k = 1; k <= n; ++k) {
    const double lam = sched.lambda(k);
    const double base = 1.0 + rep.fitted_c * lam * lam * sched.h * sched.h;
    if (!(base > 0.0)) throw std::domain_error("invalid bound factor");
    rep.log_bound += std::log(base) / lam;
  }
  return rep;
}

MeanErrorReport mean_error(const ScalarField& f, int n, double h,
                           const SchemeConfig& cfg, const MeasureSpec& mu,
                           const ReferenceConfig& ref) {
  if (n < 0) throw std::invalid_argument("step count must be nonnegative");
  MeanErrorReport rep;
  if (n == 0) return rep;

  SchemeConfig run_cfg = cfg;
  run_cfg.h = h;
  const GridFunction q = discrete_solution(f, n, run_cfg, ref);
  const GridFunction s = reference_solution(f, run_cfg.grid, double(n) * h,
                                            run_cfg.q_refine_tol * h, ref);
  const Eigen::ArrayXd w = quad_weights(mu);
  const Eigen::ArrayXd d = q.values() - s.values();
  rep.q_minus_s = (w * d).sum();
  rep.s_minus_q = -rep.q_minus_s;
  rep.abs_error = (w * d.abs()).sum();
  return rep;
}

double tail_measure(const ScalarField& f, int n, double h, double p,
                    const SchemeConfig& cfg, const MeasureSpec& mu,
                    const ReferenceConfig& ref) {
  if (!(p > 0.0) || !(p < 1.0))
    throw std::invalid_argument("tail exponent must lie in (0, 1)");
  if (n < 0) throw std::invalid_argument("step count must be nonnegative");
  if (n == 0) return 0.0;

  SchemeConfig run_cfg = cfg;
  run_cfg.h = h;
  const GridFunction q = discrete_solution(f, n, run_cfg, ref);
  const GridFunction s = reference_solution(f, run_cfg.grid, double(n) * h,
                                            run_cfg.q_refine_tol * h, ref);
  const double threshold = std::pow(h, p);
  const Eigen::ArrayXd w = quad_weights(mu);
  double mass = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (std::abs(q.values()[i] - s.values()[i]) >= threshold) mass += w[i];
  return mass;
}

OrderStudy convergence_order(const ScalarField& f, double T,
                             const std::vector<double>& hs,
                             double box_half_width, double dx_scale,
                             double q_refine_tol, const ReferenceConfig& ref) {
  if (hs.size() < 3) throw std::invalid_argument("need at least 3 step sizes");
  if (!(T > 0.0)) throw std::invalid_argument("horizon must be positive");

  OrderStudy study;
  for (const double h : hs) {
    const double steps = T / h;
    if (std::abs(steps - std::round(steps)) > 1e-9 * steps)
      throw std::runtime_error("T not a multiple of h");
    const int n = int(std::llround(steps));

    const double dx_target = h * h * dx_scale;
    auto m = Eigen::Index(std::llround(2.0 * box_half_width / dx_target)) + 1;
    if (m % 2 == 0) ++m;  // keep the origin on a node
    const Grid grid(1, box_half_width, m);

    SchemeConfig cfg{.h = h, .q_radius = 0.0, .q_refine_tol = q_refine_tol,
                     .grid = grid};
    const GridFunction coarse = GridFunction::sample(grid, f);
    double travel = 0.0;
    GridFunction q = coarse;
    if (ref.oracle_mode) {
      q = discrete_solution(f, n, cfg, ref);
      travel = T * (lipschitz_estimate(coarse) + 1.0);
    } else {
      const auto trace = evolve_traced(coarse, n, cfg, LagrangianModel::quadratic());
      q = trace.result;
      travel = trace.travel;
    }
    const GridFunction s =
        reference_solution(f, grid, T, q_refine_tol * h, ref);
    const double ref_travel = T * (lipschitz_estimate(coarse) + 1.0) + grid.spacing();
    const auto margin =
        Eigen::Index(std::ceil(std::max(travel, ref_travel) / grid.spacing())) + 1;
    study.rows.push_back({h, n, max_interior_diff(q, s, margin)});
  }

  std::vector<double> lx, ly;
  for (const auto& r : study.rows)
    if (r.sup_err > kOrderFloor) {
      lx.push_back(std::log(r.h));
      ly.push_back(std::log(r.sup_err));
    }
  if (lx.size() < 2) {
    study.floor_reached = true;
    study.fitted_order = 0.0;
    return study;
  }
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < lx.size(); ++i) { mx += lx[i]; my += ly[i]; }
  mx /= double(lx.size());
  my /= double(lx.size());
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < lx.size(); ++i) {
    num += (lx[i] - mx) * (ly[i] - my);
    den += (lx[i] - mx) * (lx[i] - mx);
  }
  study.fitted_order = num / den;
  return study;
}

void write_ladder_csv(const std::vector<LadderRow>& rows, std::ostream& os) {
  os << "h,n,p,tailMass,meanErr,supErr,fittedOrder\n";
  for (const auto& r : rows) {
    detail::format_double(os, r.h);
    os << ',' << r.n << ',';
    detail::format_double(os, r.p);
    os << ',';
    detail::format_double(os, r.tail_mass);
    os << ',';
    detail::format_double(os, r.mean_err);
    os << ',';
    detail::format_double(os, r.sup_err);
    os << ',';
    detail::format_double(os, r.fitted_order);
    os << '\n';
  }
}

}  // namespace hjsl
