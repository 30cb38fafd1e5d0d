#pragma once

#include <string>

namespace cflk {

/// Formats x with 17 significant digits ("%.17g"), locale-independent.
std::string format_value(double x);

}  // namespace cflk
