#include "citerank/format.hpp"

#include <cmath>
#include <cstdio>

namespace citerank {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  char buf[32];
  const int len = std::snprintf(buf, sizeof buf, "%.17g", value);
  return std::string(buf, static_cast<std::size_t>(len));
}

}  // namespace citerank
