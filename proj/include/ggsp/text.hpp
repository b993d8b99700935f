#pragma once

#include <cstdio>
#include <string>

namespace ggsp {

/// Shortest round-trip decimal for CSV output (printf %.17g).
inline std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace ggsp
