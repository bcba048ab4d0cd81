#include "hjsl/scheme.hpp"

#include "hjsl/detail/infconv.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hjsl {

namespace {

void validate(const GridFunction& u, const SchemeConfig& cfg) {
  if (!(cfg.h > 0.0)) throw std::invalid_argument("time step must be positive");
  if (!(cfg.q_refine_tol > 0.0))
    throw std::invalid_argument("refinement tolerance must be positive");
  if (!(u.grid() == cfg.grid))
    throw std::invalid_argument("scheme config grid mismatch");
}

}  // namespace

double effective_q_radius(const GridFunction& u, const SchemeConfig& cfg) {
  return cfg.q_radius > 0.0 ? cfg.q_radius : lipschitz_estimate(u) + 1.0;
}

GridFunction sl_step(const GridFunction& u, const SchemeConfig& cfg,
                     const LagrangianModel& model) {
  validate(u, cfg);
  detail::InfConvParams p;
  p.t = cfg.h;
  p.window = cfg.h * effective_q_radius(u, cfg);
  p.refine_tol = cfg.h * cfg.q_refine_tol;
  p.exhausted_msg = "q search radius exhausted";
  return detail::inf_convolve(u, model, p);
}

GridFunction evolve(const GridFunction& f, int n, const SchemeConfig& cfg,
                    const LagrangianModel& model) {
  if (n < 0) throw std::invalid_argument("step count must be nonnegative");
  GridFunction u = f;
  for (int k = 0; k < n; ++k) u = sl_step(u, cfg, model);
  return u;
}

EvolveTrace evolve_traced(const GridFunction& f, int n, const SchemeConfig& cfg,
                          const LagrangianModel& model) {
  if (n < 0) throw std::invalid_argument("step count must be nonnegative");
  EvolveTrace trace{f, {}, 0.0};
  for (int k = 0; k < n; ++k) {
    const double r = effective_q_radius(trace.result, cfg);
    trace.radii.push_back(r);
    trace.travel += cfg.h * r;
    trace.result = sl_step(trace.result, cfg, model);
  }
  return trace;
}

StructuralReport property_report(const GridFunction& f, int n,
                                 const SchemeConfig& cfg,
                                 const LagrangianModel& model) {
  if (n < 1) throw std::invalid_argument("property report needs n >= 1");
  validate(f, cfg);

  // All estimates use the final interior margin so the k-series compare on a
  // common region untouched by boundary extension.
  std::vector<GridFunction> states{f};
  double travel = 0.0;
  for (int k = 0; k < n; ++k) {
    travel += cfg.h * effective_q_radius(states.back(), cfg);
    states.push_back(sl_step(states.back(), cfg, model));
  }
  const double dx = cfg.grid.spacing();
  auto margin = Eigen::Index(std::ceil(travel / dx)) + 1;
  const Eigen::Index m = cfg.grid.points_per_axis();
  if (2 * margin + 2 >= m)
    throw std::invalid_argument("grid too small for the requested evolution");

  StructuralReport rep;
  rep.interior_margin = margin;
  const Vec origin = Vec::Zero(cfg.grid.dim());
  rep.growth_bound_per_step =
      cfg.h * std::max(-hamiltonian(model, origin), legendre(model, origin));

  const Eigen::Index lo = margin, hi = m - 1 - margin;
  auto sup_interior = [&](const GridFunction& u) {
    double best = 0.0;
    if (cfg.grid.dim() == 1) {
      for (Eigen::Index i = lo; i <= hi; ++i)
        best = std::max(best, std::abs(u.values()[i]));
    } else {
      for (Eigen::Index ix = lo; ix <= hi; ++ix)
        for (Eigen::Index iy = lo; iy <= hi; ++iy)
          best = std::max(best, std::abs(u.at(ix, iy)));
    }
    return best;
  };

  for (int k = 0; k <= n; ++k) {
    rep.sup_norm.push_back(sup_interior(states[k]));
    rep.lipschitz.push_back(lipschitz_estimate(states[k], margin));
    rep.semiconcavity.push_back(semiconcavity_estimate(states[k], margin));
    if (k < n)
      rep.step_diff.push_back(max_interior_diff(states[k + 1], states[k], margin));
  }
  rep.reported_c =
      *std::max_element(rep.step_diff.begin(), rep.step_diff.end()) / cfg.h;
  return rep;
}

}  // namespace hjsl
