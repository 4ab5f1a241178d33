#pragma once

#include <string>

namespace nlosc {

// Shortest-faithful rendering used for every floating-point value that ends
// up in a CSV: %.17g round-trips doubles exactly, which is what makes the
// byte-identical-output contract testable.
std::string format_double(double x);

}  // namespace nlosc
