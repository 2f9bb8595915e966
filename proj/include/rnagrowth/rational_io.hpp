#ifndef RNAGROWTH_RATIONAL_IO_HPP
#define RNAGROWTH_RATIONAL_IO_HPP

#include <gmpxx.h>

#include <string>

namespace rnagrowth {

// Parses "p/q" or a plain integer, both base 10. Throws on anything else.
mpq_class parse_rational(const std::string& text);

// "p/q" when the denominator is not 1, otherwise just "p".
std::string rational_to_string(const mpq_class& value);

// Fixed-point decimal with `frac_digits` digits after the point,
// round-half-even. frac_digits must be >= 1.
std::string format_decimal(const mpq_class& value, int frac_digits);

// Exact power of ten as a rational, exponent may be negative.
mpq_class pow10_exact(int exponent);

}  // namespace rnagrowth

#endif
