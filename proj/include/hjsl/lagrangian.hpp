#pragma once

#include "hjsl/grid.hpp"

#include <functional>
#include <utility>

namespace hjsl {

/// A convex-conjugate Hamiltonian/Lagrangian pair.
///
/// Quadratic is the analytic case H(p) = |p|^2/2, L(q) = |q|^2/2 and is
/// never routed through the numerical conjugate. GeneralConvex wraps a
/// black-box convex superlinear H; its Legendre transform is computed by a
/// coarse scan over the search ball followed by per-axis golden-section
/// refinement.
class LagrangianModel {
 public:
  enum class Kind { Quadratic, GeneralConvex };

  static LagrangianModel quadratic() { return LagrangianModel(); }

  static LagrangianModel general(std::function<double(const Vec&)> hamiltonian,
                                 double search_radius, double tol = 1e-10);

  Kind kind() const { return kind_; }
  double search_radius() const { return search_radius_; }
  double tol() const { return tol_; }
  double evaluate_hamiltonian(const Vec& p) const { return hamiltonian_(p); }

 private:
  LagrangianModel() : kind_(Kind::Quadratic) {}

  Kind kind_;
  std::function<double(const Vec&)> hamiltonian_;
  double search_radius_ = 0.0;
  double tol_ = 1e-10;
};

/// H(p); |p|^2/2 for the quadratic model.
double hamiltonian(const LagrangianModel& model, const Vec& p);

/// L(q) = sup_p { p.q - H(p) }. Exact for Quadratic; within tolerance for
/// GeneralConvex. Throws "conjugate search radius exhausted" if the
/// maximizer touches the search-ball boundary.
double legendre(const LagrangianModel& model, const Vec& q);

}  // namespace hjsl
