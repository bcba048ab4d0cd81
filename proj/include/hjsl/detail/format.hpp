#pragma once

#include <cstdio>
#include <ostream>

namespace hjsl::detail {

/// Shortest round-trip decimal form; keeps CSV output byte-deterministic.
inline void format_double(std::ostream& os, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  os << buf;
}

}  // namespace hjsl::detail
