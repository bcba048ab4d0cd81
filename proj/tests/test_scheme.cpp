#include "hjsl/scheme.hpp"

#include "hjsl/hopf_lax.hpp"
#include "hjsl/profiles.hpp"

#include <doctest.h>

#include <cmath>

using namespace hjsl;

namespace {

const LagrangianModel kQuad = LagrangianModel::quadratic();

// Independent oracle for one step: dense q-scan of u(x - h q) + h q^2/2
// with u given analytically.
double brute_force_step(double x, double h, double (*u)(double), double qmax) {
  double best = 1e300;
  for (int i = 0; i <= 400000; ++i) {
    const double q = -qmax + 2.0 * qmax * double(i) / 400000.0;
    best = std::min(best, u(x - h * q) + 0.5 * h * q * q);
  }
  return best;
}

double abs_sample(double x) { return std::abs(x); }

}  // namespace

TEST_CASE("constants are fixed points of the step") {
  const Grid g(1, 4.0, 257);
  const auto u = GridFunction::sample(g, [](const Vec&) { return 2.5; });
  const auto v = sl_step(u, SchemeConfig::defaults(g, 0.1), kQuad);
  CHECK((v.values() - 2.5).abs().maxCoeff() <= 1e-15);
}

TEST_CASE("one step of |x| is its quadratic envelope") {
  const Grid g(1, 4.0, 2049);
  const auto u = GridFunction::sample(g, [](const Vec& x) { return x.norm(); });
  const auto v = sl_step(u, SchemeConfig::defaults(g, 0.1), kQuad);
  // x - h/2 on the linear branch; independent scan agrees
  CHECK(brute_force_step(1.0, 0.1, abs_sample, 10.0) ==
        doctest::Approx(0.95).epsilon(1e-9));
  CHECK(interpolate(v, 1.0) == doctest::Approx(0.95).epsilon(1e-9));
}

TEST_CASE("one step of the quadratic profile matches the closed-form coefficient") {
  const Grid g(1, 8.0, 4097);
  const auto u = GridFunction::sample(
      g, [](const Vec& x) { return -0.25 * x.squaredNorm(); });
  const auto cfg = SchemeConfig::defaults(g, 0.1);
  const auto v = sl_step(u, cfg, kQuad);
  const auto exact = analytic_quadratic(g, 0.5, vec1(0.0), 0.1);
  const auto margin = Eigen::Index(
      std::ceil(0.1 * effective_q_radius(u, cfg) / g.spacing())) + 1;
  CHECK(max_interior_diff(v, exact, margin) <= 5e-6);
}

TEST_CASE("zero steps return the data unchanged") {
  const Grid g(1, 4.0, 129);
  const auto f = GridFunction::sample(g, [](const Vec& x) { return std::sin(x[0]); });
  const auto v = evolve(f, 0, SchemeConfig::defaults(g, 0.1), kQuad);
  CHECK((v.values() == f.values()).all());
}

TEST_CASE("two steps of the quadratic profile compound the coefficient") {
  const Grid g(1, 8.0, 4097);
  const auto f = GridFunction::sample(
      g, [](const Vec& x) { return -0.25 * x.squaredNorm(); });
  const auto cfg = SchemeConfig::defaults(g, 0.1);
  const auto trace = evolve_traced(f, 2, cfg, kQuad);
  const auto exact = analytic_quadratic(g, 0.5, vec1(0.0), 0.2);  // -(0.5/0.9) L
  const auto margin =
      Eigen::Index(std::ceil(trace.travel / g.spacing())) + 1;
  CHECK(max_interior_diff(trace.result, exact, margin) <= 1e-5);
}

TEST_CASE("evolution commutes with constants") {
  const Grid g(1, 6.0, 1025);
  const auto f = GridFunction::sample(
      g, [](const Vec& x) { return -std::sqrt(1.0 + x.squaredNorm()); });
  const GridFunction fc(g, f.values() + 3.7, f.extension());
  const auto cfg = SchemeConfig::defaults(g, 0.1);
  const auto v = evolve(f, 5, cfg, kQuad);
  const auto vc = evolve(fc, 5, cfg, kQuad);
  CHECK((vc.values() - v.values() - 3.7).abs().maxCoeff() <= 1e-9);
}

TEST_CASE("discrete semigroup composition") {
  const Grid g(1, 6.0, 1025);
  const auto f = GridFunction::sample(
      g, [](const Vec& x) { return -std::sqrt(1.0 + x.squaredNorm()); });
  const auto cfg = SchemeConfig::defaults(g, 0.1);
  const auto direct = evolve(f, 5, cfg, kQuad);
  const auto composed = evolve(evolve(f, 2, cfg, kQuad), 3, cfg, kQuad);
  CHECK((direct.values() - composed.values()).abs().maxCoeff() <= 1e-13);
}

TEST_CASE("one step coincides with the continuous evolution at t = h") {
  const Grid g(1, 8.0, 2049);
  const auto cfg = SchemeConfig::defaults(g, 0.1);
  for (const auto& name : standard_profile_suite()) {
    CAPTURE(name);
    const auto f = GridFunction::sample(g, parse_profile(name, 1).fn);
    const auto stepped = sl_step(f, cfg, kQuad);
    const auto continuous = hopf_lax(f, 0.1, kQuad);
    const auto margin = Eigen::Index(std::ceil(
        (0.1 * (lipschitz_estimate(f) + 1.0) + g.spacing()) / g.spacing())) + 1;
    CHECK(max_interior_diff(stepped, continuous, margin) <= 1e-6);
  }
}

TEST_CASE("monotone in the data") {
  const Grid g(1, 4.0, 257);
  const auto f = GridFunction::sample(g, [](const Vec& x) { return -x.norm(); });
  const auto gfn = GridFunction::sample(g, [](const Vec& x) {
    return -x.norm() + 0.2 * std::cos(x[0]) + 0.2;
  });
  const auto cfg = SchemeConfig::defaults(g, 0.1);
  const auto vf = evolve(f, 4, cfg, kQuad);
  const auto vg = evolve(gfn, 4, cfg, kQuad);
  CHECK((vg.values() - vf.values()).minCoeff() >= -1e-12);
}

TEST_CASE("the evolution is nonincreasing when L(0) = 0") {
  const Grid g(1, 4.0, 513);
  const auto f = GridFunction::sample(
      g, [](const Vec& x) { return -std::tanh(x[0]); });
  const auto cfg = SchemeConfig::defaults(g, 0.1);
  GridFunction u = f;
  for (int k = 0; k < 5; ++k) {
    const auto next = sl_step(u, cfg, kQuad);
    CHECK((next.values() - u.values()).maxCoeff() <= 1e-15);
    u = next;
  }
}

TEST_CASE("a too-small search ball is reported") {
  const Grid g(1, 4.0, 257);
  const auto f = GridFunction::sample(g, [](const Vec& x) { return 5.0 * x[0]; });
  auto cfg = SchemeConfig::defaults(g, 0.1);
  cfg.q_radius = 0.5;  // minimizer sits at q = 5
  CHECK_THROWS_WITH_AS(sl_step(f, cfg, kQuad), "q search radius exhausted",
                       std::runtime_error);
}

TEST_CASE("config validation") {
  const Grid g(1, 4.0, 257);
  const auto f = GridFunction::sample(g, [](const Vec&) { return 0.0; });
  auto cfg = SchemeConfig::defaults(g, 0.1);
  cfg.h = 0.0;
  CHECK_THROWS_AS(sl_step(f, cfg, kQuad), std::invalid_argument);
  auto cfg2 = SchemeConfig::defaults(Grid(1, 4.0, 129), 0.1);
  CHECK_THROWS_AS(sl_step(f, cfg2, kQuad), std::invalid_argument);
  CHECK_THROWS_AS(evolve(f, -1, SchemeConfig::defaults(g, 0.1), kQuad),
                  std::invalid_argument);
}

TEST_CASE("structural report on affine data") {
  const Grid g(1, 8.0, 513);
  const auto f = GridFunction::sample(g, [](const Vec& x) { return x[0]; });
  const auto rep = property_report(f, 5, SchemeConfig::defaults(g, 0.1), kQuad);
  for (const double lip : rep.lipschitz)
    CHECK(lip == doctest::Approx(1.0).epsilon(1e-10));
  for (const double sc : rep.semiconcavity) CHECK(sc <= 1e-10);
  // affine data slides down by h |p|^2/2 each step
  for (const double d : rep.step_diff)
    CHECK(d == doctest::Approx(0.05).epsilon(1e-9));
  CHECK(rep.reported_c == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("structural report on a semiconcave profile") {
  const Grid g(1, 8.0, 1025);
  const double dx = g.spacing();
  const auto f = GridFunction::sample(
      g, [](const Vec& x) { return -std::sqrt(1.0 + x.squaredNorm()); });
  const auto rep = property_report(f, 10, SchemeConfig::defaults(g, 0.05), kQuad);
  const double lip0 = rep.lipschitz.front();
  for (int k = 0; k <= 10; ++k) {
    CHECK(rep.lipschitz[size_t(k)] <= lip0 + 10.0 * dx);
    if (k > 0)
      CHECK(rep.semiconcavity[size_t(k)] <=
            rep.semiconcavity[size_t(k) - 1] + 10.0 * dx);
  }
  CHECK(rep.growth_bound_per_step == 0.0);
  CHECK(std::isfinite(rep.reported_c));
}

TEST_CASE("sup norm of bounded data respects the per-step growth bound") {
  // the growth bound needs bounded data; unbounded profiles fall outside it
  const Grid g(1, 8.0, 1025);
  const auto f = GridFunction::sample(
      g, [](const Vec& x) { return -std::tanh(x.sum()); });
  const auto rep = property_report(f, 10, SchemeConfig::defaults(g, 0.05), kQuad);
  for (size_t k = 1; k < rep.sup_norm.size(); ++k)
    CHECK(rep.sup_norm[k] <=
          rep.sup_norm[k - 1] + rep.growth_bound_per_step + 1e-12);
}

TEST_CASE("structural report on constants") {
  const Grid g(1, 8.0, 257);
  const auto f = GridFunction::sample(g, [](const Vec&) { return -1.25; });
  const auto rep = property_report(f, 4, SchemeConfig::defaults(g, 0.1), kQuad);
  for (const double s : rep.sup_norm)
    CHECK(s == doctest::Approx(1.25).epsilon(1e-14));
}

TEST_CASE("box size does not leak into the interior") {
  // same spacing on [-12,12] and [-18,18]; nodes outside the data's
  // displacement reach of the boundary must agree
  const Grid small(1, 12.0, 2049), large(1, 18.0, 3073);
  REQUIRE(small.spacing() == doctest::Approx(large.spacing()).epsilon(1e-15));
  auto quad = [](const Vec& x) { return -0.25 * x.squaredNorm(); };
  const auto us = evolve_traced(GridFunction::sample(small, quad), 5,
                                SchemeConfig::defaults(small, 0.1), kQuad);
  const auto ul = evolve(GridFunction::sample(large, quad), 5,
                         SchemeConfig::defaults(large, 0.1), kQuad);
  const auto margin = Eigen::Index(std::ceil(us.travel / small.spacing())) + 1;
  const Eigen::Index offset = (large.points_per_axis() - small.points_per_axis()) / 2;
  double worst = 0.0;
  for (Eigen::Index i = margin; i < small.points_per_axis() - margin; ++i)
    worst = std::max(
        worst, std::abs(us.result.values()[i] - ul.values()[i + offset]));
  CHECK(worst <= 1e-9);
}

TEST_CASE("2D step: constants fixed, quadratic profile compounds") {
  const Grid g(2, 4.0, 65);
  const auto c = GridFunction::sample(g, [](const Vec&) { return 1.0; });
  const auto cfg = SchemeConfig::defaults(g, 0.1);
  CHECK((sl_step(c, cfg, kQuad).values() - 1.0).abs().maxCoeff() <= 1e-15);

  auto tiny = cfg;
  tiny.q_radius = 0.25;
  const auto steep =
      GridFunction::sample(g, [](const Vec& x) { return 4.0 * x[0] - 3.0 * x[1]; });
  CHECK_THROWS_WITH_AS(sl_step(steep, tiny, kQuad), "q search radius exhausted",
                       std::runtime_error);

  const auto f = GridFunction::sample(
      g, [](const Vec& x) { return -0.25 * x.squaredNorm(); });
  const auto trace = evolve_traced(f, 2, cfg, kQuad);
  const auto exact = analytic_quadratic(g, 0.5, vec2(0.0, 0.0), 0.2);
  const auto margin = Eigen::Index(std::ceil(trace.travel / g.spacing())) + 1;
  // two steps of bilinear sag at dx = 0.125
  CHECK(max_interior_diff(trace.result, exact, margin) <= 1e-2);
}
