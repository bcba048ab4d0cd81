#pragma once

#include <Eigen/Core>

#include <iosfwd>
#include <utility>

namespace hjsl {

/// Spatial point of runtime dimension 1 or 2 (stack allocated, no heap).
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, 2, 1>;

inline Vec vec1(double x) {
  Vec v(1);
  v << x;
  return v;
}

inline Vec vec2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

/// How a grid function is evaluated outside its box.
enum class Extension { LinearExtrapolate, ClampToEdge };

/// Uniform node-centered grid on the box [-R, R]^N, N in {1, 2}.
/// Spacing is 2R/(m-1); the extreme nodes land on -R and R exactly.
class Grid {
 public:
  Grid(int dim, double half_width, Eigen::Index points_per_axis);

  int dim() const { return dim_; }
  double half_width() const { return half_width_; }
  Eigen::Index points_per_axis() const { return m_; }
  double spacing() const { return 2.0 * half_width_ / double(m_ - 1); }
  Eigen::Index node_count() const { return dim_ == 1 ? m_ : m_ * m_; }

  /// Coordinate of the i-th node along an axis, exact at both extremes.
  double coord(Eigen::Index i) const {
    if (i == 0) return -half_width_;
    if (i == m_ - 1) return half_width_;
    return -half_width_ + double(i) * spacing();
  }

  Eigen::Index flat(Eigen::Index ix, Eigen::Index iy = 0) const {
    return dim_ == 1 ? ix : ix * m_ + iy;
  }

  Vec node(Eigen::Index flat_index) const {
    if (dim_ == 1) return vec1(coord(flat_index));
    return vec2(coord(flat_index / m_), coord(flat_index % m_));
  }

  bool operator==(const Grid&) const = default;

 private:
  int dim_;
  double half_width_;
  Eigen::Index m_;
};

/// Scalar function sampled on a Grid. Immutable after construction; all
/// values are required to be finite. Carries the boundary extension policy
/// used by interpolate().
class GridFunction {
 public:
  GridFunction(Grid grid, Eigen::ArrayXd values,
               Extension ext = Extension::LinearExtrapolate);

  template <class F>
  static GridFunction sample(const Grid& g, F&& f,
                             Extension ext = Extension::LinearExtrapolate) {
    Eigen::ArrayXd v(g.node_count());
    for (Eigen::Index i = 0; i < g.node_count(); ++i) v[i] = f(g.node(i));
    return GridFunction(g, std::move(v), ext);
  }

  const Grid& grid() const { return grid_; }
  const Eigen::ArrayXd& values() const { return values_; }
  Extension extension() const { return ext_; }

  double at(Eigen::Index ix, Eigen::Index iy = 0) const {
    return values_[grid_.flat(ix, iy)];
  }

 private:
  Grid grid_;
  Eigen::ArrayXd values_;
  Extension ext_;
};

/// Multilinear interpolation; exact on nodes, extension policy outside.
double interpolate(const GridFunction& gf, const Vec& x);
double interpolate(const GridFunction& gf, double x);  // 1D shortcut

/// Nodal value at an arbitrary integer index, applying the extension
/// policy outside [0, m-1]. Agrees with interpolate() at node coordinates.
double nodal_extended(const GridFunction& gf, Eigen::Index ix);
double nodal_extended(const GridFunction& gf, Eigen::Index ix, Eigen::Index iy);

/// Discrete Lipschitz constant: max over adjacent node pairs (per axis) of
/// |dv|/dx. `margin` nodes per side are excluded when positive.
double lipschitz_estimate(const GridFunction& gf, Eigen::Index margin = 0);

/// Discrete semiconcavity constant: max over interior nodes (per axis) of
/// the positive part of (v[i-1] - 2 v[i] + v[i+1]) / dx^2.
double semiconcavity_estimate(const GridFunction& gf, Eigen::Index margin = 0);

/// Max nodewise |a - b| over nodes at least `margin` nodes from the boundary.
double max_interior_diff(const GridFunction& a, const GridFunction& b,
                         Eigen::Index margin);

/// CSV serialization: header `x[,y],value`, one node per line, row-major.
void write_csv(const GridFunction& gf, std::ostream& os);
GridFunction read_csv(std::istream& is,
                      Extension ext = Extension::LinearExtrapolate);

}  // namespace hjsl
