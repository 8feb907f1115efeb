#pragma once

#include <cstdio>
#include <string>

namespace chebcap {

/// Shortest text that carries 17 significant digits ("%.17g").
inline std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace chebcap
