#include "hjsl/grid.hpp"

#include "hjsl/detail/format.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hjsl {

namespace {

using detail::format_double;

// Per-axis cell location: clamped cell index plus local coordinate.
// For LinearExtrapolate the local coordinate may leave [0, 1], which
// extends the edge cell linearly. Coordinates within 1e-9 of a node are
// snapped so that interpolation at node coordinates is exact.
struct AxisPos {
  Eigen::Index cell;
  double theta;
};

AxisPos locate(double x, double half_width, double dx, Eigen::Index m,
               Extension ext) {
  double s = (x + half_width) / dx;
  if (ext == Extension::ClampToEdge) s = std::clamp(s, 0.0, double(m - 1));
  const double r = std::round(s);
  if (std::abs(s - r) < 1e-9) s = r;
  auto cell = Eigen::Index(std::floor(s));
  cell = std::clamp(cell, Eigen::Index(0), m - 2);
  return {cell, s - double(cell)};
}

}  // namespace

Grid::Grid(int dim, double half_width, Eigen::Index points_per_axis)
    : dim_(dim), half_width_(half_width), m_(points_per_axis) {
  if (dim != 1 && dim != 2) throw std::invalid_argument("grid dimension must be 1 or 2");
  if (!(half_width > 0.0)) throw std::invalid_argument("grid half-width must be positive");
  if (m_ < 2) throw std::invalid_argument("grid needs at least 2 points per axis");
}

GridFunction::GridFunction(Grid grid, Eigen::ArrayXd values, Extension ext)
    : grid_(grid), values_(std::move(values)), ext_(ext) {
  if (values_.size() != grid_.node_count())
    throw std::invalid_argument("grid function value count mismatch");
  if (!values_.allFinite())
    throw std::invalid_argument("grid function values must be finite");
}

double interpolate(const GridFunction& gf, double x) {
  const Grid& g = gf.grid();
  if (g.dim() != 1) throw std::invalid_argument("1D interpolate on a 2D grid");
  const auto [c, th] =
      locate(x, g.half_width(), g.spacing(), g.points_per_axis(), gf.extension());
  const auto& v = gf.values();
  return v[c] + (v[c + 1] - v[c]) * th;
}

double interpolate(const GridFunction& gf, const Vec& x) {
  const Grid& g = gf.grid();
  if (x.size() != g.dim()) throw std::invalid_argument("point dimension mismatch");
  if (g.dim() == 1) return interpolate(gf, x[0]);
  const auto ax =
      locate(x[0], g.half_width(), g.spacing(), g.points_per_axis(), gf.extension());
  const auto ay =
      locate(x[1], g.half_width(), g.spacing(), g.points_per_axis(), gf.extension());
  const double v00 = gf.at(ax.cell, ay.cell);
  const double v01 = gf.at(ax.cell, ay.cell + 1);
  const double v10 = gf.at(ax.cell + 1, ay.cell);
  const double v11 = gf.at(ax.cell + 1, ay.cell + 1);
  const double lo = v00 + (v01 - v00) * ay.theta;
  const double hi = v10 + (v11 - v10) * ay.theta;
  return lo + (hi - lo) * ax.theta;
}

namespace {

double extended_1d(const Eigen::ArrayXd& v, Eigen::Index m, Eigen::Index i,
                   Extension ext) {
  if (i >= 0 && i < m) return v[i];
  if (ext == Extension::ClampToEdge) return i < 0 ? v[0] : v[m - 1];
  if (i < 0) return v[0] + (v[1] - v[0]) * double(i);
  return v[m - 1] + (v[m - 1] - v[m - 2]) * double(i - (m - 1));
}

}  // namespace

double nodal_extended(const GridFunction& gf, Eigen::Index ix) {
  const Grid& g = gf.grid();
  if (g.dim() != 1) throw std::invalid_argument("1D nodal_extended on a 2D grid");
  return extended_1d(gf.values(), g.points_per_axis(), ix, gf.extension());
}

double nodal_extended(const GridFunction& gf, Eigen::Index ix, Eigen::Index iy) {
  const Grid& g = gf.grid();
  if (g.dim() != 2) throw std::invalid_argument("2D nodal_extended on a 1D grid");
  const Eigen::Index m = g.points_per_axis();
  const Extension ext = gf.extension();
  auto clamp_cell = [m](Eigen::Index i) {
    return std::clamp(i, Eigen::Index(0), m - 2);
  };
  if (ext == Extension::ClampToEdge) {
    ix = std::clamp(ix, Eigen::Index(0), m - 1);
    iy = std::clamp(iy, Eigen::Index(0), m - 1);
    return gf.at(ix, iy);
  }
  const Eigen::Index cx = clamp_cell(ix), cy = clamp_cell(iy);
  const double tx = double(ix - cx), ty = double(iy - cy);
  const double v00 = gf.at(cx, cy), v01 = gf.at(cx, cy + 1);
  const double v10 = gf.at(cx + 1, cy), v11 = gf.at(cx + 1, cy + 1);
  const double lo = v00 + (v01 - v00) * ty;
  const double hi = v10 + (v11 - v10) * ty;
  return lo + (hi - lo) * tx;
}

double lipschitz_estimate(const GridFunction& gf, Eigen::Index margin) {
  const Grid& g = gf.grid();
  const Eigen::Index m = g.points_per_axis();
  const double inv_dx = 1.0 / g.spacing();
  const Eigen::Index lo = margin, hi = m - 1 - margin;
  if (hi <= lo) throw std::invalid_argument("margin leaves no interior nodes");
  double best = 0.0;
  if (g.dim() == 1) {
    for (Eigen::Index i = lo; i < hi; ++i)
      best = std::max(best, std::abs(gf.values()[i + 1] - gf.values()[i]) * inv_dx);
    return best;
  }
  for (Eigen::Index ix = lo; ix <= hi; ++ix)
    for (Eigen::Index iy = lo; iy <= hi; ++iy) {
      if (ix < hi)
        best = std::max(best, std::abs(gf.at(ix + 1, iy) - gf.at(ix, iy)) * inv_dx);
      if (iy < hi)
        best = std::max(best, std::abs(gf.at(ix, iy + 1) - gf.at(ix, iy)) * inv_dx);
    }
  return best;
}

double semiconcavity_estimate(const GridFunction& gf, Eigen::Index margin) {
  const Grid& g = gf.grid();
  const Eigen::Index m = g.points_per_axis();
  if (m < 3) throw std::invalid_argument("semiconcavity estimate needs m >= 3");
  const double inv_dx2 = 1.0 / (g.spacing() * g.spacing());
  const Eigen::Index lo = std::max<Eigen::Index>(1, margin);
  const Eigen::Index hi = m - 1 - lo;
  if (hi < lo) throw std::invalid_argument("margin leaves no interior nodes");
  double best = 0.0;
  if (g.dim() == 1) {
    for (Eigen::Index i = lo; i <= hi; ++i) {
      const double d2 =
          (gf.values()[i - 1] - 2.0 * gf.values()[i] + gf.values()[i + 1]) * inv_dx2;
      best = std::max(best, d2);
    }
    return best;
  }
  for (Eigen::Index ix = lo; ix <= hi; ++ix)
    for (Eigen::Index iy = lo; iy <= hi; ++iy) {
      const double dxx =
          (gf.at(ix - 1, iy) - 2.0 * gf.at(ix, iy) + gf.at(ix + 1, iy)) * inv_dx2;
      const double dyy =
          (gf.at(ix, iy - 1) - 2.0 * gf.at(ix, iy) + gf.at(ix, iy + 1)) * inv_dx2;
      best = std::max({best, dxx, dyy});
    }
  return best;
}

double max_interior_diff(const GridFunction& a, const GridFunction& b,
                         Eigen::Index margin) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("grid mismatch");
  const Grid& g = a.grid();
  const Eigen::Index m = g.points_per_axis();
  const Eigen::Index lo = margin, hi = m - 1 - margin;
  if (hi < lo) throw std::invalid_argument("margin leaves no interior nodes");
  double best = 0.0;
  if (g.dim() == 1) {
    for (Eigen::Index i = lo; i <= hi; ++i)
      best = std::max(best, std::abs(a.values()[i] - b.values()[i]));
    return best;
  }
  for (Eigen::Index ix = lo; ix <= hi; ++ix)
    for (Eigen::Index iy = lo; iy <= hi; ++iy)
      best = std::max(best, std::abs(a.at(ix, iy) - b.at(ix, iy)));
  return best;
}

void write_csv(const GridFunction& gf, std::ostream& os) {
  const Grid& g = gf.grid();
  os << (g.dim() == 1 ? "x,value\n" : "x,y,value\n");
  for (Eigen::Index i = 0; i < g.node_count(); ++i) {
    const Vec x = g.node(i);
    format_double(os, x[0]);
    if (g.dim() == 2) {
      os << ',';
      format_double(os, x[1]);
    }
    os << ',';
    format_double(os, gf.values()[i]);
    os << '\n';
  }
}

GridFunction read_csv(std::istream& is, Extension ext) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("empty grid function csv");
  const int dim = line == "x,value" ? 1 : line == "x,y,value" ? 2 : 0;
  if (dim == 0) throw std::runtime_error("unrecognized grid function csv header");
  std::vector<double> xs, vals;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string tok;
    std::vector<double> fields;
    while (std::getline(row, tok, ',')) fields.push_back(std::stod(tok));
    if (fields.size() != size_t(dim) + 1)
      throw std::runtime_error("malformed grid function csv row");
    xs.push_back(fields[0]);
    vals.push_back(fields.back());
  }
  if (vals.size() < 2) throw std::runtime_error("grid function csv too short");
  const auto n = Eigen::Index(vals.size());
  Eigen::Index m = n;
  if (dim == 2) {
    m = Eigen::Index(std::llround(std::sqrt(double(n))));
    if (m * m != n) throw std::runtime_error("grid function csv is not a square grid");
  }
  const double half_width = std::abs(xs.back());
  Eigen::ArrayXd v = Eigen::Map<Eigen::ArrayXd>(vals.data(), n);
  return GridFunction(Grid(dim, half_width, m), std::move(v), ext);
}

}  // namespace hjsl
