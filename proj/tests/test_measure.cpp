#include "hjsl/measure.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace hjsl;

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

GridFunction sample1(const Grid& g, double (*f)(double)) {
  return GridFunction::sample(g, [f](const Vec& x) { return f(x[0]); });
}

}  // namespace

TEST_CASE("gaussian quadrature mass is within 1e-8 of one") {
  CHECK(std::abs(measure_mass(MeasureSpec::gaussian_std(Grid(1, 8.0, 257))) - 1.0) <=
        1e-8);
  CHECK(std::abs(measure_mass(MeasureSpec::gaussian_std(Grid(1, 12.0, 4097))) - 1.0) <=
        1e-12);
  CHECK(std::abs(measure_mass(MeasureSpec::gaussian_std(Grid(2, 8.0, 129))) - 1.0) <=
        1e-8);
}

TEST_CASE("a too-small gaussian box is rejected") {
  const Grid g(1, 3.0, 257);
  const auto mu = MeasureSpec::gaussian_std(g);
  const auto u = GridFunction::sample(g, [](const Vec&) { return 0.0; });
  CHECK_THROWS_AS(log_lp_norm_exp(u, 1.0, mu), std::domain_error);
}

TEST_CASE("log norm of a vanishing exponent is zero") {
  const Grid g(1, 10.0, 1025);
  const auto mu = MeasureSpec::gaussian_std(g);
  const auto u = GridFunction::sample(g, [](const Vec&) { return 0.0; });
  for (const double p : {0.5, 1.0, 2.0, 7.0})
    CHECK(std::abs(log_lp_norm_exp(u, p, mu)) <= 1e-12);
  CHECK_THROWS_WITH_AS(log_lp_norm_exp(u, 0.0, mu), "exponent must be nonzero",
                       std::domain_error);
}

TEST_CASE("gaussian moment generating values") {
  const Grid g(1, 12.0, 4097);
  const auto mu = MeasureSpec::gaussian_std(g);
  const auto u = sample1(g, [](double x) { return x; });
  // ||e^x||_2 = e since E[e^{2X}] = e^2
  CHECK(log_lp_norm_exp(u, 2.0, mu) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(log_lp_norm_exp(u, 1.0, mu) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("lebesgue gaussian integral in the log domain") {
  const Grid g(1, 12.0, 4097);
  const auto leb = MeasureSpec::lebesgue(g);
  const auto u = sample1(g, [](double x) { return -0.5 * x * x; });
  CHECK(log_lp_norm_exp(u, 1.0, leb) ==
        doctest::Approx(0.5 * std::log(2.0 * std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("log norms survive exponents that would overflow linearly") {
  const Grid g(1, 12.0, 2049);
  const auto leb = MeasureSpec::lebesgue(g);
  const auto u = sample1(g, [](double x) { return -0.5 * x * x + 500.0; });
  // e^{500} overflows; the log-domain value is exact arithmetic away from it
  const double expected = 500.0 + 0.5 * std::log(2.0 * std::numbers::pi);
  CHECK(log_lp_norm_exp(u, 1.0, leb) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("norm is monotone in the exponent under a probability measure") {
  const Grid g(1, 10.0, 2049);
  const auto mu = MeasureSpec::gaussian_std(g);
  const auto u = sample1(g, [](double x) { return std::tanh(x); });
  double prev = -1e300;
  for (const double p : {0.5, 1.0, 2.0, 4.0}) {
    const double v = log_lp_norm_exp(u, p, mu);
    CHECK(v >= prev - 1e-12);
    prev = v;
  }
}

TEST_CASE("adding a constant shifts the log norm exactly") {
  const Grid g(1, 10.0, 1025);
  const auto mu = MeasureSpec::gaussian_std(g);
  const auto u = sample1(g, [](double x) { return std::sin(x); });
  const GridFunction uc(g, u.values() + 2.31, u.extension());
  for (const double p : {0.7, 3.0})
    CHECK(log_lp_norm_exp(uc, p, mu) ==
          doctest::Approx(log_lp_norm_exp(u, p, mu) + 2.31).epsilon(1e-12));
}

TEST_CASE("entropy of constants vanishes") {
  const Grid g(1, 10.0, 1025);
  const auto mu = MeasureSpec::gaussian_std(g);
  const auto c = GridFunction::sample(g, [](const Vec&) { return 2.5; });
  CHECK(std::abs(entropy(c, mu)) <= 1e-12);
}

TEST_CASE("entropy of e^x under the gaussian") {
  const Grid g(1, 12.0, 4097);
  const auto mu = MeasureSpec::gaussian_std(g);
  const auto usq = sample1(g, [](double x) { return std::exp(x); });
  CHECK(entropy(usq, mu) ==
        doctest::Approx(0.5 * std::exp(0.5)).epsilon(1e-8));
}

TEST_CASE("entropy is nonnegative for unit-mass bumps") {
  const Grid g(1, 10.0, 2049);
  const auto mu = MeasureSpec::gaussian_std(g);
  auto bump = GridFunction::sample(g, [](const Vec& x) {
    return std::exp(-8.0 * (x[0] - 0.5) * (x[0] - 0.5));
  });
  const auto rule = QuadratureRule::for_measure(mu);
  const double mass = (rule.log_weight.exp() * bump.values()).sum();
  const GridFunction scaled(g, bump.values() / mass, bump.extension());
  CHECK(entropy(scaled, mu) >= -1e-12);
}

TEST_CASE("entropy rejects negative data beyond the tolerance") {
  const Grid g(1, 10.0, 257);
  const auto mu = MeasureSpec::gaussian_std(g);
  Eigen::ArrayXd v = Eigen::ArrayXd::Constant(257, 1.0);
  v[100] = -1e-13;  // within tolerance, clamped
  CHECK_NOTHROW(entropy(GridFunction(g, v), mu));
  v[100] = -1e-6;
  CHECK_THROWS_WITH_AS(entropy(GridFunction(g, v), mu),
                       "nonnegative data required", std::domain_error);
}

TEST_CASE("lsi residual vanishes on constants") {
  const Grid g(1, 10.0, 1025);
  const auto mu = MeasureSpec::gaussian_std(g);
  const auto c = GridFunction::sample(g, [](const Vec&) { return 1.7; });
  CHECK(std::abs(lsi_residual(c, mu)) <= 1e-12);
}

TEST_CASE("exponentials saturate the gaussian inequality") {
  const Grid g(1, 12.0, 8193);
  const auto mu = MeasureSpec::gaussian_std(g);
  const auto u = sample1(g, [](double x) { return std::exp(0.5 * x); });
  CHECK(std::abs(lsi_residual(u, mu)) <= 1e-5);
}

TEST_CASE("linear data leaves the known entropy slack") {
  const Grid g(1, 12.0, 4097);
  const auto mu = MeasureSpec::gaussian_std(g);
  const auto u = sample1(g, [](double x) { return x; });
  const double res = lsi_residual(u, mu);
  // Ent(x^2) = 2 - gamma - log 2 for the standard gaussian
  const double expected = 2.0 - (2.0 - kEulerGamma - std::numbers::ln2);
  CHECK(res >= 0.0);
  CHECK(res == doctest::Approx(expected).epsilon(1e-4));
}

TEST_CASE("residual is nonnegative across random Lipschitz data") {
  const Grid g(1, 10.0, 2049);
  const auto mu = MeasureSpec::gaussian_std(g);
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> amp(-1.5, 1.5), width(0.3, 2.0),
      shift(-2.0, 2.0);
  for (int s = 0; s < 20; ++s) {
    const double a1 = amp(rng), b1 = width(rng), c1 = shift(rng);
    const double a2 = amp(rng), b2 = width(rng), c2 = shift(rng);
    const auto u = GridFunction::sample(g, [&](const Vec& x) {
      return a1 * std::tanh(b1 * (x[0] - c1)) +
             a2 * std::sin(b2 * x[0]) * std::exp(-x[0] * x[0] / 8.0) + c2;
    });
    CHECK(lsi_residual(u, mu) >= -1e-6);
  }
}

TEST_CASE("2D gaussian norms and residuals") {
  const Grid g(2, 8.0, 129);
  const auto mu = MeasureSpec::gaussian_std(g);
  const auto u = GridFunction::sample(g, [](const Vec& x) { return x[0]; });
  CHECK(log_lp_norm_exp(u, 2.0, mu) == doctest::Approx(1.0).epsilon(1e-8));
  const auto c = GridFunction::sample(g, [](const Vec&) { return 0.4; });
  CHECK(std::abs(lsi_residual(c, mu)) <= 1e-12);
}

TEST_CASE("entropy requires the probability measure") {
  const Grid g(1, 10.0, 257);
  const auto leb = MeasureSpec::lebesgue(g);
  const auto u = GridFunction::sample(g, [](const Vec&) { return 1.0; });
  CHECK_THROWS_AS(entropy(u, leb), std::invalid_argument);
}
