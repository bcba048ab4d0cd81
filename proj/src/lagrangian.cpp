#include "hjsl/lagrangian.hpp"

#include "hjsl/detail/golden.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace hjsl {

LagrangianModel LagrangianModel::general(
    std::function<double(const Vec&)> hamiltonian, double search_radius,
    double tol) {
  if (!hamiltonian) throw std::invalid_argument("missing hamiltonian evaluator");
  if (!(search_radius > 0.0)) throw std::invalid_argument("search radius must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  LagrangianModel m;
  m.kind_ = Kind::GeneralConvex;
  m.hamiltonian_ = std::move(hamiltonian);
  m.search_radius_ = search_radius;
  m.tol_ = tol;
  return m;
}

double hamiltonian(const LagrangianModel& model, const Vec& p) {
  if (model.kind() == LagrangianModel::Kind::Quadratic) return 0.5 * p.squaredNorm();
  return model.evaluate_hamiltonian(p);
}

namespace {

constexpr Eigen::Index kCoarsePerAxis = 128;

// sup_p { p.q - H(p) } by coarse scan + cyclic per-axis golden sections.
double conjugate_general(const LagrangianModel& model, const Vec& q) {
  const double r = model.search_radius();
  const int dim = int(q.size());
  const double step = 2.0 * r / double(kCoarsePerAxis);

  auto objective = [&](const Vec& p) {
    return p.dot(q) - model.evaluate_hamiltonian(p);
  };

  Vec best = Vec::Zero(dim);
  double best_val = objective(best);
  Vec p(dim);
  if (dim == 1) {
    for (Eigen::Index i = 0; i <= kCoarsePerAxis; ++i) {
      p[0] = -r + double(i) * step;
      const double v = objective(p);
      if (v > best_val) { best_val = v; best = p; }
    }
  } else {
    for (Eigen::Index i = 0; i <= kCoarsePerAxis; ++i)
      for (Eigen::Index j = 0; j <= kCoarsePerAxis; ++j) {
        p[0] = -r + double(i) * step;
        p[1] = -r + double(j) * step;
        const double v = objective(p);
        if (v > best_val) { best_val = v; best = p; }
      }
  }

  const int sweeps = dim == 1 ? 2 : 4;
  for (int s = 0; s < sweeps; ++s)
    for (int axis = 0; axis < dim; ++axis) {
      const double lo = std::max(-r, best[axis] - step);
      const double hi = std::min(r, best[axis] + step);
      auto slice = [&](double t) {
        Vec pt = best;
        pt[axis] = t;
        return -objective(pt);
      };
      const auto [arg, neg] = detail::golden_min(slice, lo, hi, model.tol());
      best[axis] = arg;
      best_val = -neg;
    }

  for (int axis = 0; axis < dim; ++axis)
    if (std::abs(best[axis]) >= r - step)
      throw std::runtime_error("conjugate search radius exhausted");
  return best_val;
}

}  // namespace

double legendre(const LagrangianModel& model, const Vec& q) {
  if (model.kind() == LagrangianModel::Kind::Quadratic) return 0.5 * q.squaredNorm();
  return conjugate_general(model, q);
}

}  // namespace hjsl
