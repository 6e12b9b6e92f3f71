#include "ldcell/rate.hpp"

#include <cstdio>

namespace ldcell {

std::string Rate::decimal() const {
  std::int64_t d = den_;
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  char buf[64];
  if (d == 1) {
    // Terminating expansion; at most a handful of digits for the
    // denominators that occur here.
    std::snprintf(buf, sizeof buf, "%.10g", to_double());
  } else {
    std::snprintf(buf, sizeof buf, "%.6f", to_double());
  }
  return buf;
}

}  // namespace ldcell
