#pragma once

#include <cstdio>
#include <string>

namespace bclink {

/// Round-trippable fixed formatting used by every text output ("%.17g").
inline std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace bclink
