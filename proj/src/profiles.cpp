#include "hjsl/profiles.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hjsl {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, sep)) out.push_back(tok);
  return out;
}

double parse_num(const std::string& s) {
  size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("malformed number: " + s);
  return v;
}

}  // namespace

Profile parse_profile(const std::string& text, int dim) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const std::string args =
      colon == std::string::npos ? "" : text.substr(colon + 1);

  if (name == "const") {
    const double c = args.empty() ? 1.0 : parse_num(args);
    return {text, [c](const Vec&) { return c; }};
  }
  if (name == "affine") {
    Vec p = Vec::Constant(dim, 1.0);
    if (!args.empty()) {
      const auto parts = split(args, ',');
      if (Eigen::Index(parts.size()) != dim)
        throw std::invalid_argument("affine profile needs one slope per axis");
      for (int i = 0; i < dim; ++i) p[i] = parse_num(parts[size_t(i)]);
    }
    return {text, [p](const Vec& x) { return p.dot(x); }};
  }
  if (name == "quad") {
    double b = 1.0, xbar = 0.0;
    for (const auto& kv : args.empty() ? std::vector<std::string>{} : split(args, ',')) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("quad profile takes b=...[,xbar=...]");
      const std::string key = kv.substr(0, eq);
      const double val = parse_num(kv.substr(eq + 1));
      if (key == "b") b = val;
      else if (key == "xbar") xbar = val;
      else throw std::invalid_argument("unknown quad parameter: " + key);
    }
    const Vec center = Vec::Constant(dim, xbar);
    return {text, [b, center](const Vec& x) {
              return -0.5 * b * (x - center).squaredNorm();
            }};
  }
  if (name == "abs") return {text, [](const Vec& x) { return x.norm(); }};
  if (name == "negabs") return {text, [](const Vec& x) { return -x.norm(); }};
  if (name == "sqrt1px2")
    return {text, [](const Vec& x) { return -std::sqrt(1.0 + x.squaredNorm()); }};
  if (name == "tanh")
    return {text, [](const Vec& x) { return -std::tanh(x.sum()); }};
  throw std::invalid_argument("unknown profile: " + text);
}

const std::vector<std::string>& standard_profile_suite() {
  static const std::vector<std::string> suite = {
      "const:1", "affine:1", "quad:b=0.5", "abs",
      "negabs",  "sqrt1px2", "tanh"};
  return suite;
}

}  // namespace hjsl
