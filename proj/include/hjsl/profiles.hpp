#pragma once

#include "hjsl/concentration.hpp"
#include "hjsl/grid.hpp"

#include <string>
#include <vector>

namespace hjsl {

/// A named initial datum from the closed experiment set:
///   const:c      constant c                     (default c = 1)
///   affine:p     p . x (comma list per axis)    (default p = 1)
///   quad:b=B[,xbar=X]   -(B/2) |x - xbar|^2
///   abs          |x|
///   negabs       -|x|
///   sqrt1px2     -sqrt(1 + |x|^2)
///   tanh         -tanh(sum of coordinates)
struct Profile {
  std::string name;  // canonical text, e.g. "quad:b=0.5"
  ScalarField fn;
};

Profile parse_profile(const std::string& text, int dim);

/// The profile names exercised by the cross-operator identities.
const std::vector<std::string>& standard_profile_suite();

}  // namespace hjsl
