#ifndef INVOLUTE_RATIONAL_HPP
#define INVOLUTE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace involute {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational in lowest terms with positive denominator (GMP keeps
/// mpq values canonical across arithmetic).
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error if den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed text
/// and std::domain_error on a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

bool is_integer(const Rational& value);

/// Converts a non-negative integer that is known to be small. Throws
/// std::overflow_error otherwise.
std::size_t to_size(const Integer& value);

}  // namespace involute

#endif  // INVOLUTE_RATIONAL_HPP
