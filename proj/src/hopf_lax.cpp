#include "hjsl/hopf_lax.hpp"

#include "hjsl/detail/infconv.hpp"

#include <stdexcept>

namespace hjsl {

GridFunction hopf_lax_strided(const GridFunction& f, double t,
                              const LagrangianModel& model, Eigen::Index stride,
                              double refine_tol, double q_radius) {
  if (!(t > 0.0)) throw std::invalid_argument("hopf_lax requires t > 0");
  const double radius = q_radius > 0.0 ? q_radius : lipschitz_estimate(f) + 1.0;
  detail::InfConvParams p;
  p.t = t;
  p.window = t * radius + f.grid().spacing();
  p.refine_tol = refine_tol;
  p.stride = stride;
  p.exhausted_msg = "Hopf-Lax search radius exhausted";
  return detail::inf_convolve(f, model, p);
}

GridFunction hopf_lax(const GridFunction& f, double t,
                      const LagrangianModel& model, double refine_tol,
                      double q_radius) {
  return hopf_lax_strided(f, t, model, 1, refine_tol, q_radius);
}

GridFunction analytic_quadratic(const Grid& g, double b, const Vec& xbar,
                                double t) {
  if (xbar.size() != g.dim()) throw std::invalid_argument("xbar dimension mismatch");
  if (t * b >= 1.0) throw std::runtime_error("blow-up time reached");
  const double coef = b / (1.0 - t * b);
  return GridFunction::sample(g, [&](const Vec& x) {
    return -coef * 0.5 * (x - xbar).squaredNorm();
  });
}

GridFunction analytic_affine(const Grid& g, const Vec& p, double t) {
  if (p.size() != g.dim()) throw std::invalid_argument("slope dimension mismatch");
  const double drop = t * 0.5 * p.squaredNorm();
  return GridFunction::sample(g, [&](const Vec& x) { return p.dot(x) - drop; });
}

}  // namespace hjsl
