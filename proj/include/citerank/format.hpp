#pragma once

#include <string>

namespace citerank {

// 17 significant digits, enough to round-trip any double. NaN prints as "nan".
std::string format_double(double value);

}  // namespace citerank
