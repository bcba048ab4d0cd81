#include "hjsl/measure.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace hjsl {

namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // log(2*pi)/2

double log_density(const MeasureSpec& mu, const Vec& x) {
  if (mu.kind == MeasureKind::Lebesgue) return 0.0;
  return -0.5 * x.squaredNorm() - double(x.size()) * kHalfLog2Pi;
}

// log of the trapezoid weight of node i: dx per axis, halved on box faces.
double log_trapezoid_weight(const Grid& g, Eigen::Index flat) {
  const double log_dx = std::log(g.spacing());
  const Eigen::Index m = g.points_per_axis();
  double lw = double(g.dim()) * log_dx;
  const Eigen::Index ix = g.dim() == 1 ? flat : flat / m;
  const Eigen::Index iy = g.dim() == 1 ? 0 : flat % m;
  if (ix == 0 || ix == m - 1) lw -= std::numbers::ln2;
  if (g.dim() == 2 && (iy == 0 || iy == m - 1)) lw -= std::numbers::ln2;
  return lw;
}

bool is_boundary(const Grid& g, Eigen::Index flat) {
  const Eigen::Index m = g.points_per_axis();
  if (g.dim() == 1) return flat == 0 || flat == m - 1;
  const Eigen::Index ix = flat / m, iy = flat % m;
  return ix == 0 || ix == m - 1 || iy == 0 || iy == m - 1;
}

double log_sum_exp(const Eigen::ArrayXd& t) {
  const double mx = t.maxCoeff();
  return mx + std::log((t - mx).exp().sum());
}

void check_gaussian_mass(const MeasureSpec& mu) {
  if (mu.kind != MeasureKind::GaussianStd) return;
  const double mass = measure_mass(mu);
  if (mass < 1.0 - 1e-8 || mass > 1.0 + 1e-8)
    throw std::domain_error("gaussian quadrature box too small");
}

}  // namespace

QuadratureRule QuadratureRule::for_measure(const MeasureSpec& mu) {
  QuadratureRule rule;
  rule.log_weight.resize(mu.grid.node_count());
  for (Eigen::Index i = 0; i < mu.grid.node_count(); ++i)
    rule.log_weight[i] =
        log_trapezoid_weight(mu.grid, i) + log_density(mu, mu.grid.node(i));
  return rule;
}

double measure_mass(const MeasureSpec& mu) {
  return std::exp(log_sum_exp(QuadratureRule::for_measure(mu).log_weight));
}

LogNormDetail log_lp_norm_exp_detail(const GridFunction& u, double p,
                                     const MeasureSpec& mu) {
  if (p == 0.0) throw std::domain_error("exponent must be nonzero");
  if (!(u.grid() == mu.grid))
    throw std::invalid_argument("measure and function grids differ");
  check_gaussian_mass(mu);

  const auto rule = QuadratureRule::for_measure(mu);
  const Eigen::ArrayXd t = p * u.values() + rule.log_weight;
  const double log_total = log_sum_exp(t);

  double log_boundary = -std::numeric_limits<double>::infinity();
  const double mx = t.maxCoeff();
  double bsum = 0.0;
  for (Eigen::Index i = 0; i < t.size(); ++i)
    if (is_boundary(u.grid(), i)) bsum += std::exp(t[i] - mx);
  if (bsum > 0.0) log_boundary = mx + std::log(bsum);

  return {log_total / p, log_boundary - log_total};
}

double log_lp_norm_exp(const GridFunction& u, double p, const MeasureSpec& mu) {
  return log_lp_norm_exp_detail(u, p, mu).log_norm;
}

double entropy(const GridFunction& usq, const MeasureSpec& mu) {
  if (mu.kind != MeasureKind::GaussianStd)
    throw std::invalid_argument("entropy requires a probability measure");
  if (!(usq.grid() == mu.grid))
    throw std::invalid_argument("measure and function grids differ");
  check_gaussian_mass(mu);

  const auto rule = QuadratureRule::for_measure(mu);
  double mean = 0.0, mean_glogg = 0.0;
  for (Eigen::Index i = 0; i < usq.values().size(); ++i) {
    double g = usq.values()[i];
    if (g < -1e-12) throw std::domain_error("nonnegative data required");
    if (g < 0.0) g = 0.0;
    const double w = std::exp(rule.log_weight[i]);
    mean += w * g;
    if (g > 0.0) mean_glogg += w * g * std::log(g);
  }
  if (mean <= 0.0) return 0.0;
  return mean_glogg - mean * std::log(mean);
}

double lsi_residual(const GridFunction& u, const MeasureSpec& mu) {
  if (mu.kind != MeasureKind::GaussianStd)
    throw std::invalid_argument("lsi residual requires a GaussianStd measure");
  if (!(u.grid() == mu.grid))
    throw std::invalid_argument("measure and function grids differ");
  const Grid& g = u.grid();
  const Eigen::Index m = g.points_per_axis();
  const double inv2dx = 0.5 / g.spacing(), invdx = 1.0 / g.spacing();

  auto d1 = [&](auto&& value, Eigen::Index i, Eigen::Index m_axis) {
    if (i == 0) return (value(1) - value(0)) * invdx;
    if (i == m_axis - 1) return (value(m_axis - 1) - value(m_axis - 2)) * invdx;
    return (value(i + 1) - value(i - 1)) * inv2dx;
  };

  Eigen::ArrayXd grad_sq(g.node_count());
  if (g.dim() == 1) {
    for (Eigen::Index i = 0; i < m; ++i) {
      const double d = d1([&](Eigen::Index k) { return u.values()[k]; }, i, m);
      grad_sq[i] = d * d;
    }
  } else {
    for (Eigen::Index ix = 0; ix < m; ++ix)
      for (Eigen::Index iy = 0; iy < m; ++iy) {
        const double dxv =
            d1([&](Eigen::Index k) { return u.at(k, iy); }, ix, m);
        const double dyv =
            d1([&](Eigen::Index k) { return u.at(ix, k); }, iy, m);
        grad_sq[g.flat(ix, iy)] = dxv * dxv + dyv * dyv;
      }
  }

  const auto rule = QuadratureRule::for_measure(mu);
  const double dirichlet = (rule.log_weight.exp() * grad_sq).sum();
  const GridFunction usq(g, u.values().square(), u.extension());
  return (2.0 / mu.rho) * dirichlet - entropy(usq, mu);
}

}  // namespace hjsl
