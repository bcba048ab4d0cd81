// Experiment runner: each subcommand evaluates one experiment family,
// writes deterministic CSV output to --out, echoes the effective parameters
// into run.meta, and prints one PASS/FAIL line per assertion. Exit status is
// 0 iff every assertion passed, 2 on usage errors.

#include "hjsl/concentration.hpp"
#include "hjsl/detail/format.hpp"
#include "hjsl/hopf_lax.hpp"
#include "hjsl/hyper.hpp"
#include "hjsl/measure.hpp"
#include "hjsl/profiles.hpp"
#include "hjsl/scheme.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace hjsl;

struct Reporter {
  bool all_pass = true;

  void check(bool ok, const std::string& what, double measured = NAN) {
    all_pass = all_pass && ok;
    std::cout << (ok ? "PASS: " : "FAIL: ") << what;
    if (!std::isnan(measured)) std::cout << " [" << measured << "]";
    std::cout << "\n";
  }
  void note(const std::string& what) { std::cout << "note: " << what << "\n"; }
};

std::string fmt(double v) {
  std::ostringstream os;
  hjsl::detail::format_double(os, v);
  return os.str();
}

using Meta = std::vector<std::pair<std::string, std::string>>;

void write_meta(const std::filesystem::path& dir, const std::string& cmd,
                const Meta& meta) {
  std::ofstream os(dir / "run.meta");
  os << "subcommand=" << cmd << "\n";
  for (const auto& [k, v] : meta) os << k << "=" << v << "\n";
}

void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream os(p);
  os << content;
}

// Optional key=value config file; command-line flags take precedence, so
// only keys absent from the command line are injected.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string path;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + long(i), args.begin() + long(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + long(i));
      break;
    }
  }
  if (path.empty()) return args;
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open config file: " + path);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("malformed config line: " + line);
    const std::string key = "--" + line.substr(0, eq);
    bool given = false;
    for (const auto& a : args)
      given = given || a == key || a.rfind(key + "=", 0) == 0;
    if (!given) {
      args.push_back(key);
      args.push_back(line.substr(eq + 1));
    }
  }
  return args;
}

// "A:B" halves from A down to B; "a,b,c" is an explicit list. Numbers may be
// written as powers, e.g. 2^-10.
double parse_number(const std::string& s) {
  const auto caret = s.find('^');
  if (caret == std::string::npos) return std::stod(s);
  return std::pow(std::stod(s.substr(0, caret)), std::stod(s.substr(caret + 1)));
}

std::vector<double> parse_ladder(const std::string& s) {
  std::vector<double> out;
  if (s.find(':') != std::string::npos) {
    const auto colon = s.find(':');
    const double start = parse_number(s.substr(0, colon));
    const double stop = parse_number(s.substr(colon + 1));
    if (!(start > 0) || !(stop > 0) || stop > start)
      throw CLI::ValidationError("--h-ladder", "needs start >= stop > 0");
    for (double h = start; h > stop * (1.0 - 1e-12); h *= 0.5) out.push_back(h);
    return out;
  }
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(parse_number(tok));
  if (out.empty()) throw CLI::ValidationError("--h-ladder", "empty ladder");
  return out;
}

template <class F>
auto parallel_map(int jobs, Eigen::Index count, F&& fn) {
  using Result = decltype(fn(Eigen::Index(0)));
  auto results = std::vector<Result>(size_t(count));
  if (jobs <= 1) {
    for (Eigen::Index i = 0; i < count; ++i) results[size_t(i)] = fn(i);
    return results;
  }
  std::vector<std::future<Result>> futures;
  futures.reserve(size_t(count));
  for (Eigen::Index i = 0; i < count; ++i)
    futures.push_back(std::async(std::launch::deferred | std::launch::async,
                                 [&fn, i] { return fn(i); }));
  for (Eigen::Index i = 0; i < count; ++i) results[size_t(i)] = futures[size_t(i)].get();
  return results;
}

struct GridFlags {
  Eigen::Index m = 4097;
  double r = 12.0;

  Grid make() const { return Grid(1, r, m); }
  void attach(CLI::App* cmd) {
    cmd->add_option("--m", m, "grid points per axis");
    cmd->add_option("--R", r, "box half-width");
  }
  void meta(Meta& out) const {
    out.emplace_back("m", std::to_string(m));
    out.emplace_back("R", fmt(r));
  }
};

int run_hyper_gauss(const std::filesystem::path& out, const GridFlags& gf,
                    double a, double rho, double h, int n,
                    const std::string& profile) {
  const Grid grid = gf.make();
  const Profile prof = parse_profile(profile, grid.dim());
  const auto f = GridFunction::sample(grid, prof.fn);
  const auto mu = MeasureSpec::gaussian_std(grid, rho);
  const LambdaSchedule sched{a, rho, h};
  const auto cfg = SchemeConfig::defaults(grid, h);

  const auto report = gauss_hyper_chain(f, sched, n, cfg, mu);
  std::ostringstream csv;
  write_chain_csv(report, csv);
  write_file(out / "chain.csv", csv.str());

  Meta meta{{"a", fmt(a)},       {"rho", fmt(rho)}, {"h", fmt(h)},
            {"n", std::to_string(n)}, {"profile", profile}};
  gf.meta(meta);
  meta.emplace_back("fittedC", fmt(report.fitted_c));
  write_meta(out, "hyper-gauss", meta);

  Reporter rep;
  rep.check(std::isfinite(report.fitted_c), "fitted per-step constant is finite",
            report.fitted_c);
  rep.check(report.bound_satisfied, "cumulative norm bound holds",
            report.steps.back().log_f - report.log_rhs_bound);
  return rep.all_pass ? 0 : 1;
}

int run_hyper_lebesgue(const std::filesystem::path& out, const GridFlags& gf,
                       double alpha, double beta, double h, int n,
                       const std::string& profile, double equality_b) {
  const Grid grid = gf.make();
  const Profile prof = parse_profile(profile, grid.dim());
  const auto f = GridFunction::sample(grid, prof.fn);
  const auto cfg = SchemeConfig::defaults(grid, h);

  Reporter rep;
  std::vector<CheckRow> rows;
  const auto check = lebesgue_hyper_check(f, alpha, beta, n, h, cfg);
  rows.push_back({alpha, beta, n, h, check.lhs_log, check.rhs_log,
                  check.lhs_log <= check.rhs_log + 1e-6});
  rep.check(check.domain_ok, "integration box large enough");
  rep.check(check.lhs_log <= check.rhs_log + 1e-6,
            "lebesgue norm bound holds", check.gap());

  Meta meta{{"alpha", fmt(alpha)}, {"beta", fmt(beta)}, {"h", fmt(h)},
            {"n", std::to_string(n)}, {"profile", profile}};
  gf.meta(meta);

  if (equality_b > 0.0) {
    const auto time = solve_optimality_time(alpha, beta, equality_b);
    if (!time) {
      rep.note("no admissible equality time");
      meta.emplace_back("equalityTime", "none");
    } else {
      const int ne = std::max(1, int(std::llround(*time / h)));
      const double he = *time / double(ne);
      const Profile eq_prof =
          parse_profile("quad:b=" + fmt(equality_b), grid.dim());
      const auto fe = GridFunction::sample(grid, eq_prof.fn);
      const auto eq = lebesgue_hyper_check(fe, alpha, beta, ne, he, cfg);
      rows.push_back({alpha, beta, ne, he, eq.lhs_log, eq.rhs_log,
                      std::abs(eq.gap()) <= 1e-4});
      rep.check(std::abs(eq.gap()) <= 1e-4,
                "equality attained at the optimality time", eq.gap());
      meta.emplace_back("equalityTime", fmt(*time));
    }
  }

  std::ostringstream csv;
  write_check_csv(rows, csv);
  write_file(out / "check.csv", csv.str());
  write_meta(out, "hyper-lebesgue", meta);
  return rep.all_pass ? 0 : 1;
}

int run_ultra(const std::filesystem::path& out, const GridFlags& gf, double b,
              double xbar, int n, double h) {
  const Grid grid = gf.make();
  const auto check = ultracontractive_check(b, Vec::Constant(1, xbar), n, h, grid);
  const bool analytic = std::abs(double(n) * h * b - 1.0) <= 1e-12;

  Reporter rep;
  rep.check(check.domain_ok, "integration box large enough");
  if (analytic)
    rep.check(std::abs(check.gap()) <= 1e-10, "sup-norm bound tight at nh=1/b",
              check.gap());
  else
    rep.check(check.lhs_log < check.rhs_log, "sup-norm bound strict", check.gap());

  std::vector<CheckRow> rows{{1.0, INFINITY, n, h, check.lhs_log, check.rhs_log,
                              rep.all_pass}};
  std::ostringstream csv;
  write_check_csv(rows, csv);
  write_file(out / "check.csv", csv.str());

  Meta meta{{"b", fmt(b)}, {"xbar", fmt(xbar)}, {"n", std::to_string(n)},
            {"h", fmt(h)}, {"analyticPath", analytic ? "1" : "0"}};
  gf.meta(meta);
  write_meta(out, "ultra", meta);
  return rep.all_pass ? 0 : 1;
}

int run_constants(const std::filesystem::path& out, int figure, double c,
                  double rho, double a, double beta0, int n,
                  const std::string& ladder_text, int jobs) {
  Reporter rep;
  std::vector<std::pair<double, double>> rows;
  const char* xname = "h";
  Meta meta{{"figure", std::to_string(figure)}, {"n", std::to_string(n)},
            {"rho", fmt(rho)}};

  if (figure == 1) {
    const auto hs = parse_ladder(ladder_text);
    rows = parallel_map(jobs, Eigen::Index(hs.size()), [&](Eigen::Index i) {
      const double h = hs[size_t(i)];
      return std::make_pair(h, gauss_constant_product(c, {a, rho, h}, n));
    });
    bool monotone = true, above_one = true;
    for (size_t i = 0; i < rows.size(); ++i) {
      above_one = above_one && rows[i].second >= 1.0;
      if (i > 0) monotone = monotone && rows[i].second <= rows[i - 1].second;
    }
    rep.check(above_one, "product stays >= 1");
    rep.check(monotone, "product decreases toward 1 as h drops");
    meta.emplace_back("C", fmt(c));
    meta.emplace_back("a", fmt(a));
  } else if (figure == 2) {
    xname = "beta";
    for (double beta = 0.5; beta <= 8.0 + 1e-12; beta += 0.0625)
      rows.emplace_back(beta,
                        std::exp(lebesgue_hyper_bound(beta / 2.0, beta, 1, 1.0, 1)));
    bool finite = true;
    for (const auto& r : rows) finite = finite && std::isfinite(r.second);
    rep.check(finite, "constant curve finite on the beta range");
  } else if (figure == 3) {
    const auto hs = parse_ladder(ladder_text);
    rows = parallel_map(jobs, Eigen::Index(hs.size()), [&](Eigen::Index i) {
      const double h = hs[size_t(i)];
      const auto betas = BetaSchedule::arithmetic(beta0, rho, h, n);
      return std::make_pair(h, std::exp(lebesgue_constant_product(betas, h, 1)));
    });
    bool monotone = true, below_one = true;
    for (size_t i = 0; i < rows.size(); ++i) {
      below_one = below_one && rows[i].second <= 1.0;
      if (i > 0) monotone = monotone && rows[i].second >= rows[i - 1].second;
    }
    rep.check(below_one, "product stays <= 1");
    rep.check(monotone, "product increases toward 1 as h drops");
    rep.note("per-factor bracket uses beta_k * h, not n h; see recursive form");
    meta.emplace_back("beta0", fmt(beta0));
  } else {
    throw CLI::ValidationError("--figure", "must be 1, 2 or 3");
  }

  std::ostringstream csv;
  write_sweep_csv(rows, csv, xname);
  write_file(out / "constants.csv", csv.str());
  write_meta(out, "constants", meta);
  return rep.all_pass ? 0 : 1;
}

int run_concentration(const std::filesystem::path& out, const GridFlags& gf,
                      const std::string& profile, double T, double p,
                      const std::string& ladder_text, double a, double rho,
                      int jobs) {
  const Grid grid = gf.make();
  const Profile prof = parse_profile(profile, grid.dim());
  const auto mu = MeasureSpec::gaussian_std(grid, rho);
  const auto hs = parse_ladder(ladder_text);

  const auto rows = parallel_map(jobs, Eigen::Index(hs.size()), [&](Eigen::Index i) {
    const double h = hs[size_t(i)];
    const int n = std::max(1, int(std::llround(T / h)));
    const auto cfg = SchemeConfig::defaults(grid, h);
    LadderRow row;
    row.h = h;
    row.n = n;
    row.p = p;
    row.tail_mass = tail_measure(prof.fn, n, h, p, cfg, mu);
    const auto mean = mean_error(prof.fn, n, h, cfg, mu);
    row.mean_err = mean.q_minus_s;
    const auto norms = exp_error_norms(prof.fn, n, {a, rho, h}, cfg, mu);
    row.sup_err = std::max(norms.log_norm_plus, norms.log_norm_minus);
    return row;
  });

  // slope of log(mass) against -1/h^{1-p}; zero masses are excluded
  std::vector<double> xs, ys;
  for (const auto& r : rows)
    if (r.tail_mass > 0.0) {
      xs.push_back(-std::pow(r.h, p - 1.0));
      ys.push_back(std::log(r.tail_mass));
    }
  double slope = 0.0;
  if (xs.size() >= 2) {
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) { mx += xs[i]; my += ys[i]; }
    mx /= double(xs.size());
    my /= double(xs.size());
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
      num += (xs[i] - mx) * (ys[i] - my);
      den += (xs[i] - mx) * (xs[i] - mx);
    }
    slope = num / den;
  }

  auto final_rows = rows;
  for (auto& r : final_rows) r.fitted_order = slope;
  std::ostringstream csv;
  write_ladder_csv(final_rows, csv);
  write_file(out / "ladder.csv", csv.str());

  Reporter rep;
  bool nonincreasing = true;
  for (size_t i = 1; i < rows.size(); ++i)
    nonincreasing = nonincreasing && rows[i].tail_mass <= rows[i - 1].tail_mass + 1e-15;
  rep.check(nonincreasing, "tail mass nonincreasing along the ladder");
  if (xs.size() >= 2)
    rep.check(slope <= 0.0, "tail mass decays with the threshold rate", slope);
  else
    rep.note("tail masses all below threshold; decay fit skipped");

  Meta meta{{"profile", profile}, {"T", fmt(T)},   {"p", fmt(p)},
            {"a", fmt(a)},        {"rho", fmt(rho)}};
  gf.meta(meta);
  write_meta(out, "concentration", meta);
  return rep.all_pass ? 0 : 1;
}

int run_order(const std::filesystem::path& out, const std::string& profile,
              double T, const std::string& ladder_text, double box_r,
              double dx_scale, double min_order) {
  const Profile prof = parse_profile(profile, 1);
  const auto study =
      convergence_order(prof.fn, T, parse_ladder(ladder_text), box_r, dx_scale);

  std::vector<LadderRow> rows;
  for (const auto& r : study.rows)
    rows.push_back({r.h, r.n, NAN, NAN, NAN, r.sup_err, study.fitted_order});
  std::ostringstream csv;
  write_ladder_csv(rows, csv);
  write_file(out / "ladder.csv", csv.str());

  Reporter rep;
  if (study.floor_reached)
    rep.note("errors at the minimizer-tolerance floor; order fit skipped");
  rep.check(study.floor_reached || study.fitted_order >= min_order,
            "convergence order at least the classical rate", study.fitted_order);

  Meta meta{{"profile", profile}, {"T", fmt(T)},
            {"boxR", fmt(box_r)}, {"dxScale", fmt(dx_scale)},
            {"fittedOrder", fmt(study.fitted_order)},
            {"floorReached", study.floor_reached ? "1" : "0"}};
  write_meta(out, "order", meta);
  return rep.all_pass ? 0 : 1;
}

int run_lsi_check(const std::filesystem::path& out, const GridFlags& gf,
                  double rho, int samples, unsigned seed) {
  const Grid grid = gf.make();
  const auto mu = MeasureSpec::gaussian_std(grid, rho);

  Reporter rep;
  std::vector<std::pair<double, double>> rows;

  const auto saturating = GridFunction::sample(
      grid, [](const Vec& x) { return std::exp(0.5 * x[0]); });
  const double sat = lsi_residual(saturating, mu);
  rows.emplace_back(0.0, sat);
  rep.check(std::abs(sat) <= 1e-5, "exponential data saturates the inequality", sat);

  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> amp(-1.5, 1.5), width(0.3, 2.0),
      shift(-2.0, 2.0);
  double worst = INFINITY;
  for (int s = 0; s < samples; ++s) {
    const double a1 = amp(rng), b1 = width(rng), c1 = shift(rng);
    const double a2 = amp(rng), b2 = width(rng), c2 = shift(rng);
    const auto u = GridFunction::sample(grid, [&](const Vec& x) {
      return a1 * std::tanh(b1 * (x[0] - c1)) +
             a2 * std::sin(b2 * x[0]) * std::exp(-x[0] * x[0] / 8.0) + c2;
    });
    const double res = lsi_residual(u, mu);
    worst = std::min(worst, res);
    rows.emplace_back(double(s + 1), res);
  }
  rep.check(worst >= -1e-6, "residual nonnegative on random Lipschitz data", worst);

  std::ostringstream csv;
  write_sweep_csv(rows, csv, "case");
  write_file(out / "lsi.csv", csv.str());

  Meta meta{{"rho", fmt(rho)}, {"samples", std::to_string(samples)},
            {"seed", std::to_string(seed)}};
  gf.meta(meta);
  write_meta(out, "lsi-check", meta);
  return rep.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-Lagrangian Hamilton-Jacobi evolution and norm-improvement experiments"};
  app.set_help_flag("--help", "print help");
  app.footer("--config FILE   key=value defaults; command-line flags take precedence");
  app.require_subcommand(1);

  std::string out_dir = ".";
  int jobs = 1;
  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  app.add_option("--jobs", jobs, "parallel parameter tuples")->capture_default_str();

  GridFlags gf;
  auto subcommand = [&app](const char* name, const char* desc) {
    auto* cmd = app.add_subcommand(name, desc);
    cmd->set_help_flag("--help", "print help");
    cmd->fallthrough();  // --out/--jobs may follow the subcommand
    return cmd;
  };

  auto* hg = subcommand("hyper-gauss", "Gaussian norm chain of the discrete evolution");
  double hg_a = 1.0, hg_rho = 1.0, hg_h = 0.1;
  int hg_n = 10;
  std::string hg_profile = "quad:b=0.5";
  hg->add_option("--a", hg_a);
  hg->add_option("--rho", hg_rho);
  hg->add_option("--h", hg_h);
  hg->add_option("--n", hg_n);
  hg->add_option("--profile", hg_profile);
  gf.attach(hg);

  auto* hl = subcommand("hyper-lebesgue", "sharp Lebesgue norm bound and equality case");
  double hl_alpha = 1.0, hl_beta = 2.0, hl_h = 0.05, hl_b = 0.0;
  int hl_n = 10;
  std::string hl_profile = "quad:b=1";
  hl->add_option("--alpha", hl_alpha);
  hl->add_option("--beta", hl_beta);
  hl->add_option("--h", hl_h);
  hl->add_option("--n", hl_n);
  hl->add_option("--profile", hl_profile);
  hl->add_option("--equality-b", hl_b, "profile coefficient for the equality-time check");
  gf.attach(hl);

  auto* ul = subcommand("ultra", "sup-norm bound of the evolved exponential");
  double ul_b = 1.0, ul_xbar = 0.0, ul_h = 0.1;
  int ul_n = 10;
  ul->add_option("--b", ul_b);
  ul->add_option("--xbar", ul_xbar);
  ul->add_option("--h", ul_h);
  ul->add_option("--n", ul_n);
  gf.attach(ul);

  auto* ct = subcommand("constants", "bound-constant curves");
  int ct_fig = 1, ct_n = 10;
  double ct_c = 0.01, ct_rho = 1.0, ct_a = 1.0, ct_beta0 = 1.0;
  std::string ct_ladder = "1:2^-10";
  ct->add_option("--figure", ct_fig, "1, 2 or 3");
  ct->add_option("--C", ct_c);
  ct->add_option("--rho", ct_rho);
  ct->add_option("--a", ct_a);
  ct->add_option("--beta0", ct_beta0);
  ct->add_option("--n", ct_n);
  ct->add_option("--h-ladder", ct_ladder);

  auto* cc = subcommand("concentration", "truncation-error tail and mean estimates");
  std::string cc_profile = "sqrt1px2", cc_ladder = "0.2:0.0125";
  double cc_t = 0.5, cc_p = 0.5, cc_a = 1.0, cc_rho = 1.0;
  cc->add_option("--profile", cc_profile);
  cc->add_option("--T", cc_t);
  cc->add_option("--p", cc_p);
  cc->add_option("--h-ladder", cc_ladder);
  cc->add_option("--a", cc_a);
  cc->add_option("--rho", cc_rho);
  gf.attach(cc);

  auto* od = subcommand("order", "sup-norm convergence-order study");
  std::string od_profile = "negabs", od_ladder = "0.1:0.0125";
  double od_t = 0.5, od_r = 2.0, od_scale = 1.0, od_min = 0.45;
  od->add_option("--profile", od_profile);
  od->add_option("--T", od_t);
  od->add_option("--h-ladder", od_ladder);
  od->add_option("--R", od_r);
  od->add_option("--dx-scale", od_scale);
  od->add_option("--min-order", od_min);

  auto* ls = subcommand("lsi-check", "log-Sobolev residual checks");
  double ls_rho = 1.0;
  int ls_samples = 20;
  unsigned ls_seed = 20240211;
  ls->add_option("--rho", ls_rho);
  ls->add_option("--samples", ls_samples);
  ls->add_option("--seed", ls_seed);
  gf.attach(ls);

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = merge_config(std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const std::filesystem::path out(out_dir);
    std::filesystem::create_directories(out);
    if (hg->parsed())
      return run_hyper_gauss(out, gf, hg_a, hg_rho, hg_h, hg_n, hg_profile);
    if (hl->parsed())
      return run_hyper_lebesgue(out, gf, hl_alpha, hl_beta, hl_h, hl_n,
                                hl_profile, hl_b);
    if (ul->parsed()) return run_ultra(out, gf, ul_b, ul_xbar, ul_n, ul_h);
    if (ct->parsed())
      return run_constants(out, ct_fig, ct_c, ct_rho, ct_a, ct_beta0, ct_n,
                           ct_ladder, jobs);
    if (cc->parsed())
      return run_concentration(out, gf, cc_profile, cc_t, cc_p, cc_ladder,
                               cc_a, cc_rho, jobs);
    if (od->parsed())
      return run_order(out, od_profile, od_t, od_ladder, od_r, od_scale, od_min);
    if (ls->parsed()) return run_lsi_check(out, gf, ls_rho, ls_samples, ls_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
