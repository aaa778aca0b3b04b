// Text forms for table coefficients: a compact exact grammar built from the
// golden ratio constants, and parsing of that grammar back to exact values.
#pragma once

#include <string>

#include "icosa/cyclo.hpp"

namespace icosa {

// Parses one coefficient token: '-'? factor ('*' factor)* where factor is
// "i", "q", "sqrt5", "e^K", "p^K", "p", or an integer; "e" denotes
// exp(-2 pi i / 5) and K may be negative. "0" parses to zero.
Cyclo parse_coeff_token(const std::string& s);

// Renders a value as a token of the same grammar, or throws if the value is
// not a rational multiple of i^e sqrt5^f e^k q^h p^m.
std::string coeff_token(const Cyclo& v);

// LaTeX form of a parsed token, for table output.
std::string coeff_token_latex(const std::string& token);

}  // namespace icosa
