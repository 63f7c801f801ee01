#ifndef HMODULI_RATIONAL_HPP
#define HMODULI_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hmoduli {

// Exact arbitrary-precision rationals. cpp_rational keeps values in lowest
// terms with positive denominator, which is exactly the canonical form the
// rest of the library assumes. No floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders "p" or "p/q" with q > 0.
std::string to_string(const Rational& r);

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Exact binomial coefficient C(n, k); zero when k > n.
Rational binomial(unsigned n, unsigned k);

}  // namespace hmoduli

#endif
