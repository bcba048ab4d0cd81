#include "hjsl/hyper.hpp"

#include "hjsl/detail/format.hpp"
#include "hjsl/detail/golden.hpp"
#include "hjsl/hopf_lax.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace hjsl {

namespace {

constexpr double kLog2Pi = 1.8378770664093454836;
// Boundary nodes may carry at most 1e-12 of a Lebesgue integral.
constexpr double kLogBoundaryTol = -27.631021115928547;  // log(1e-12)

void check_schedule(const LambdaSchedule& sched, int n) {
  if (!(sched.rho > 0.0)) throw std::invalid_argument("rho must be positive");
  if (!(sched.h > 0.0)) throw std::invalid_argument("h must be positive");
  for (int k = 0; k <= n; ++k)
    if (sched.lambda(k) == 0.0) throw std::domain_error("exponent crosses zero");
}

void check_exponent_pair(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta >= alpha))
    throw std::domain_error("invalid exponent pair");
}

}  // namespace

BetaSchedule::BetaSchedule(std::vector<double> b) : betas(std::move(b)) {
  if (betas.empty() || !(betas.front() > 0.0))
    throw std::invalid_argument("beta schedule must start positive");
  for (size_t k = 1; k < betas.size(); ++k)
    if (!(betas[k] > betas[k - 1]))
      throw std::invalid_argument("beta schedule must be strictly increasing");
}

BetaSchedule BetaSchedule::arithmetic(double beta0, double rho, double h, int n) {
  std::vector<double> b(size_t(n) + 1);
  for (int k = 0; k <= n; ++k) b[size_t(k)] = beta0 + rho * double(k) * h;
  return BetaSchedule(std::move(b));
}

HyperChainReport gauss_hyper_chain(const GridFunction& f,
                                   const LambdaSchedule& sched, int n,
                                   const SchemeConfig& cfg,
                                   const MeasureSpec& mu) {
  if (n < 0) throw std::invalid_argument("step count must be nonnegative");
  if (mu.kind != MeasureKind::GaussianStd)
    throw std::invalid_argument("gaussian chain requires a GaussianStd measure");
  check_schedule(sched, n);

  const auto model = LagrangianModel::quadratic();
  HyperChainReport rep;
  std::vector<double> log_f(size_t(n) + 1);
  GridFunction u = f;
  for (int k = 0; k <= n; ++k) {
    log_f[size_t(k)] = log_lp_norm_exp(u, sched.lambda(k), mu);
    if (k < n) u = sl_step(u, cfg, model);
  }

  rep.fitted_c = 0.0;
  for (int k = 0; k < n; ++k) {
    const double lam_k = sched.lambda(k), lam_k1 = sched.lambda(k + 1);
    const double c =
        std::expm1(lam_k1 * (log_f[size_t(k) + 1] - log_f[size_t(k)])) /
        (lam_k * sched.h);
    rep.fitted_c = k == 0 ? c : std::max(rep.fitted_c, c);
  }

  rep.log_rhs_bound = log_f[0];
  for (int k = 0; k <= n; ++k) {
    double factor = 1.0;
    if (k >= 1) {
      const double base = 1.0 + rep.fitted_c * sched.lambda(k - 1) * sched.h;
      if (!(base > 0.0)) throw std::domain_error("invalid bound factor");
      factor = std::pow(base, 1.0 / sched.lambda(k));
      rep.log_rhs_bound += std::log(base) / sched.lambda(k);
    }
    rep.steps.push_back({k, sched.lambda(k), log_f[size_t(k)], factor});
  }
  rep.bound_satisfied = log_f[size_t(n)] <= rep.log_rhs_bound + 1e-12;
  return rep;
}

double gauss_constant_product(double c, const LambdaSchedule& sched, int n) {
  check_schedule(sched, n);
  double log_prod = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double base = 1.0 + c * sched.lambda(k - 1) * sched.h;
    if (!(base > 0.0)) throw std::domain_error("invalid bound factor");
    log_prod += std::log(base) / sched.lambda(k);
  }
  return std::exp(log_prod);
}

HyperCheck continuous_hyper_check(const GridFunction& f, double a, double rho,
                                  double t, const MeasureSpec& mu) {
  if (mu.kind != MeasureKind::GaussianStd)
    throw std::invalid_argument("continuous check requires a GaussianStd measure");
  if (a == 0.0 || a + rho * t == 0.0)
    throw std::domain_error("exponent must be nonzero");
  const GridFunction st = hopf_lax(f, t, LagrangianModel::quadratic());
  HyperCheck out;
  out.lhs_log = log_lp_norm_exp(st, a + rho * t, mu);
  out.rhs_log = log_lp_norm_exp(f, a, mu);
  return out;
}

double lebesgue_hyper_bound(double alpha, double beta, int n, double h,
                            int dim_n) {
  check_exponent_pair(alpha, beta);
  const double t = double(n) * h;
  if (!(t > 0.0)) throw std::invalid_argument("n h must be positive");
  if (alpha == beta) return 0.0;
  const double nn = double(dim_n);
  const double lead = (nn / (alpha * beta)) * 0.5 * (alpha + beta) *
                      std::log(alpha / beta);
  const double tail = 0.5 * nn * (beta - alpha) / (alpha * beta) *
                      (std::log((beta - alpha) / t) - kLog2Pi);
  return lead + tail;
}

std::optional<double> solve_optimality_time(double alpha, double beta,
                                            double b) {
  check_exponent_pair(alpha, beta);
  if (!(b > 0.0)) throw std::invalid_argument("profile coefficient must be positive");
  if (alpha == beta) return std::nullopt;  // forces T = 0: no admissible time

  const double kappa = (beta - alpha) / alpha;
  auto residual = [&](double t) {
    return t - (beta - alpha * std::pow(t, -kappa)) / (b * beta);
  };

  const double lo = 1e-9 / b, hi = (1.0 - 1e-9) / b;
  // The residual is convex (linear plus a positive power of 1/T): locate its
  // minimum first, since equality times are typically tangential roots.
  const auto [tmin, gmin] = detail::golden_min(residual, lo, hi, 1e-13 / b);
  if (gmin > 1e-9) return std::nullopt;
  if (gmin >= -1e-9) return tmin;

  double a = lo, c = tmin;
  if (!(residual(a) > 0.0)) return std::nullopt;
  while (c - a > 1e-15 * c) {
    const double mid = 0.5 * (a + c);
    (residual(mid) > 0.0 ? a : c) = mid;
  }
  return 0.5 * (a + c);
}

HyperCheck ultracontractive_check(double b, const Vec& xbar, int n, double h,
                                  const Grid& grid) {
  if (!(b > 0.0)) throw std::invalid_argument("profile coefficient must be positive");
  if (xbar.size() != grid.dim()) throw std::invalid_argument("xbar dimension mismatch");
  const double t = double(n) * h;
  if (!(t > 0.0)) throw std::invalid_argument("n h must be positive");
  if (t * b > 1.0 + 1e-12) throw std::runtime_error("blow-up time reached");

  const GridFunction f = GridFunction::sample(grid, [&](const Vec& x) {
    return -b * 0.5 * (x - xbar).squaredNorm();
  });
  const auto leb = MeasureSpec::lebesgue(grid);
  const auto rhs_norm = log_lp_norm_exp_detail(f, 1.0, leb);

  HyperCheck out;
  const double nn = double(grid.dim());
  out.rhs_log = rhs_norm.log_norm - 0.5 * nn * (std::log(t) + kLog2Pi);
  out.domain_ok = rhs_norm.log_boundary_fraction < kLogBoundaryTol;

  if (std::abs(t * b - 1.0) <= 1e-12) {
    out.lhs_log = 0.0;  // evolved profile collapses to its peak, sup e^{Q_n f} = 1
  } else {
    const auto cfg = SchemeConfig::defaults(grid, h);
    const GridFunction q = evolve(f, n, cfg, LagrangianModel::quadratic());
    out.lhs_log = q.values().maxCoeff();
  }
  return out;
}

double lebesgue_constant_product(const BetaSchedule& sched, double h,
                                 int dim_n) {
  if (!(h > 0.0)) throw std::invalid_argument("h must be positive");
  const double nn = double(dim_n);
  double log_prod = 0.0;
  for (size_t k = 1; k < sched.betas.size(); ++k) {
    const double bp = sched.betas[k - 1], bk = sched.betas[k];
    log_prod += (nn / bp) * std::log(bp / bk);
    log_prod -= (bk - bp) / (2.0 * bk * bp) *
                std::log(2.0 * M_PI * bp * bk * h / (bk - bp));
  }
  return log_prod;
}

HyperCheck lebesgue_hyper_check(const GridFunction& f, double alpha,
                                double beta, int n, double h,
                                const SchemeConfig& cfg) {
  check_exponent_pair(alpha, beta);
  const auto leb = MeasureSpec::lebesgue(f.grid());
  SchemeConfig step_cfg = cfg;
  step_cfg.h = h;
  const GridFunction q = evolve(f, n, step_cfg, LagrangianModel::quadratic());

  const auto lhs = log_lp_norm_exp_detail(q, beta, leb);
  const auto rhs = log_lp_norm_exp_detail(f, alpha, leb);
  HyperCheck out;
  out.lhs_log = lhs.log_norm;
  out.rhs_log = rhs.log_norm + lebesgue_hyper_bound(alpha, beta, n, h, f.grid().dim());
  out.domain_ok = lhs.log_boundary_fraction < kLogBoundaryTol &&
                  rhs.log_boundary_fraction < kLogBoundaryTol;
  return out;
}

void write_chain_csv(const HyperChainReport& report, std::ostream& os) {
  os << "n,lambda,logF,boundFactor,fittedC\n";
  for (const auto& s : report.steps) {
    os << s.n << ',';
    detail::format_double(os, s.lambda);
    os << ',';
    detail::format_double(os, s.log_f);
    os << ',';
    detail::format_double(os, s.bound_factor);
    os << ',';
    detail::format_double(os, report.fitted_c);
    os << '\n';
  }
}

void write_sweep_csv(const std::vector<std::pair<double, double>>& rows,
                     std::ostream& os, const char* xname) {
  os << xname << ",value\n";
  for (const auto& [x, v] : rows) {
    detail::format_double(os, x);
    os << ',';
    detail::format_double(os, v);
    os << '\n';
  }
}

void write_check_csv(const std::vector<CheckRow>& rows, std::ostream& os) {
  os << "alpha,beta,n,h,lhsLog,rhsLog,gap,pass\n";
  for (const auto& r : rows) {
    detail::format_double(os, r.alpha);
    os << ',';
    detail::format_double(os, r.beta);
    os << ',' << r.n << ',';
    detail::format_double(os, r.h);
    os << ',';
    detail::format_double(os, r.lhs_log);
    os << ',';
    detail::format_double(os, r.rhs_log);
    os << ',';
    detail::format_double(os, r.rhs_log - r.lhs_log);
    os << ',' << (r.pass ? 1 : 0) << '\n';
  }
}

}  // namespace hjsl
