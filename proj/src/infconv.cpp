#include "hjsl/detail/infconv.hpp"

#include "hjsl/detail/golden.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hjsl::detail {

namespace {

struct Candidate {
  double value;
  Eigen::Index kx;
  Eigen::Index ky;
};

// Smaller displacement wins ties; then the lexicographically smaller offset.
bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value < b.value;
  const auto ra = a.kx * a.kx + a.ky * a.ky;
  const auto rb = b.kx * b.kx + b.ky * b.ky;
  if (ra != rb) return ra < rb;
  if (a.kx != b.kx) return a.kx < b.kx;
  return a.ky < b.ky;
}

double penalty(const LagrangianModel& model, double t, double dx_disp) {
  if (model.kind() == LagrangianModel::Kind::Quadratic)
    return dx_disp * dx_disp / (2.0 * t);
  return t * legendre(model, vec1(dx_disp / t));
}

double penalty2(const LagrangianModel& model, double t, double dx_disp,
                double dy_disp) {
  if (model.kind() == LagrangianModel::Kind::Quadratic)
    return (dx_disp * dx_disp + dy_disp * dy_disp) / (2.0 * t);
  return t * legendre(model, vec2(dx_disp / t, dy_disp / t));
}

Grid output_grid(const Grid& g, Eigen::Index stride) {
  if (stride == 1) return g;
  if ((g.points_per_axis() - 1) % stride != 0)
    throw std::invalid_argument("stride does not divide the grid");
  return Grid(g.dim(), g.half_width(), (g.points_per_axis() - 1) / stride + 1);
}

GridFunction inf_convolve_1d(const GridFunction& u, const LagrangianModel& model,
                             const InfConvParams& p) {
  const Grid& g = u.grid();
  const Eigen::Index m = g.points_per_axis();
  const double dx = g.spacing();
  const double t = p.t;
  const auto w = std::max<Eigen::Index>(1, Eigen::Index(std::ceil(p.window / dx - 1e-12)));

  std::vector<double> padded(size_t(m + 2 * w));
  for (Eigen::Index i = -w; i < m + w; ++i)
    padded[size_t(i + w)] = nodal_extended(u, i);

  // penalty by scan position: candidate i in [0, 2w] has offset k = w - i
  std::vector<double> pen(size_t(2 * w + 1));
  for (Eigen::Index i = 0; i <= 2 * w; ++i)
    pen[size_t(i)] = penalty(model, t, double(w - i) * dx);

  const Grid out_grid = output_grid(g, p.stride);
  Eigen::ArrayXd out(out_grid.node_count());

  for (Eigen::Index jc = 0; jc < out_grid.points_per_axis(); ++jc) {
    const Eigen::Index j = jc * p.stride;
    const double* pv = padded.data() + j;
    Candidate best{pv[0] + pen[0], w, 0};
    for (Eigen::Index i = 1; i <= 2 * w; ++i) {
      const Candidate c{pv[i] + pen[size_t(i)], w - i, 0};
      if (better(c, best)) best = c;
    }
    if (std::abs(best.kx) == w) throw std::runtime_error(p.exhausted_msg);

    const double x = g.coord(j);
    const double yb = x - double(best.kx) * dx;
    auto objective = [&](double y) {
      return interpolate(u, y) + penalty(model, t, x - y);
    };
    const auto [yr, vr] = golden_min(objective, yb - dx, yb + dx, p.refine_tol);
    (void)yr;
    out[jc] = std::min(best.value, vr);
  }
  return GridFunction(out_grid, std::move(out), u.extension());
}

GridFunction inf_convolve_2d(const GridFunction& u, const LagrangianModel& model,
                             const InfConvParams& p) {
  const Grid& g = u.grid();
  const Eigen::Index m = g.points_per_axis();
  const double dx = g.spacing();
  const double t = p.t;
  const auto w = std::max<Eigen::Index>(1, Eigen::Index(std::ceil(p.window / dx - 1e-12)));

  const Eigen::Index mp = m + 2 * w;
  std::vector<double> padded(size_t(mp * mp));
  for (Eigen::Index ix = -w; ix < m + w; ++ix)
    for (Eigen::Index iy = -w; iy < m + w; ++iy)
      padded[size_t((ix + w) * mp + (iy + w))] = nodal_extended(u, ix, iy);

  std::vector<double> pen(size_t((2 * w + 1) * (2 * w + 1)));
  for (Eigen::Index i = 0; i <= 2 * w; ++i)
    for (Eigen::Index j = 0; j <= 2 * w; ++j)
      pen[size_t(i * (2 * w + 1) + j)] =
          penalty2(model, t, double(w - i) * dx, double(w - j) * dx);

  const Grid out_grid = output_grid(g, p.stride);
  Eigen::ArrayXd out(out_grid.node_count());
  const Eigen::Index mc = out_grid.points_per_axis();

  for (Eigen::Index jcx = 0; jcx < mc; ++jcx)
    for (Eigen::Index jcy = 0; jcy < mc; ++jcy) {
      const Eigen::Index jx = jcx * p.stride, jy = jcy * p.stride;
      Candidate best{padded[size_t(jx * mp + jy)] + pen[0], w, w};
      for (Eigen::Index i = 0; i <= 2 * w; ++i) {
        const double* pv = padded.data() + (jx + i) * mp + jy;
        const double* pp = pen.data() + i * (2 * w + 1);
        for (Eigen::Index j = 0; j <= 2 * w; ++j) {
          const Candidate c{pv[j] + pp[j], w - i, w - j};
          if (better(c, best)) best = c;
        }
      }
      if (std::abs(best.kx) == w || std::abs(best.ky) == w)
        throw std::runtime_error(p.exhausted_msg);

      const double x0 = g.coord(jx), x1 = g.coord(jy);
      Vec y = vec2(x0 - double(best.kx) * dx, x1 - double(best.ky) * dx);
      double val = best.value;
      for (int sweep = 0; sweep < 2; ++sweep)
        for (int axis = 0; axis < 2; ++axis) {
          auto slice = [&](double yc) {
            Vec yy = y;
            yy[axis] = yc;
            return interpolate(u, yy) +
                   penalty2(model, t, x0 - yy[0], x1 - yy[1]);
          };
          const auto [arg, v] =
              golden_min(slice, y[axis] - dx, y[axis] + dx, p.refine_tol);
          y[axis] = arg;
          val = std::min(val, v);
        }
      out[out_grid.flat(jcx, jcy)] = val;
    }
  return GridFunction(out_grid, std::move(out), u.extension());
}

}  // namespace

GridFunction inf_convolve(const GridFunction& u, const LagrangianModel& model,
                          const InfConvParams& params) {
  if (!(params.t > 0.0)) throw std::invalid_argument("time step must be positive");
  if (!(params.window > 0.0)) throw std::invalid_argument("search window must be positive");
  if (u.grid().dim() == 1) return inf_convolve_1d(u, model, params);
  return inf_convolve_2d(u, model, params);
}

}  // namespace hjsl::detail
