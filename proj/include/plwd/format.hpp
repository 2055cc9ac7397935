#pragma once

#include <string>

namespace plwd {

/// Shortest decimal text that reads back to the same double.
std::string format_shortest(double value);

/// Six significant digits, "inf" for infinity.
std::string format_human(double value);

}  // namespace plwd
