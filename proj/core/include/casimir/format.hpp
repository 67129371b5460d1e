#pragma once

#include <cstdio>
#include <string>

namespace casimir {

/// Fixed 9-significant-digit formatting used for all CSV and report output,
/// so repeated runs are byte-identical.
inline std::string fmt_g9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace casimir
