#ifndef HMODULI_DIAGONAL_FILE_HPP
#define HMODULI_DIAGONAL_FILE_HPP

#include <iosfwd>
#include <string>
#include <utility>

#include "hmoduli/loop.hpp"

namespace hmoduli {

/// Fibre-model description file:
///
///   # comment
///   truncation 12            (optional; raised to min_truncation if lower)
///   generator y 2
///   generator z 4
///   diagonal y = 1*y@1 + 1*y@2
///   diagonal z = 1*z@1 + 1*z@2 + 1*y@1.y@2
///
/// Generator lines come first; every generator needs a diagonal line whose
/// right-hand side is an element of the tensor square (@1/@2 factor names).
/// Counit violations are rejected naming the offending generator; syntax
/// errors report the line number.
std::pair<Algebra, Diagonal> parse_diagonal_stream(std::istream& in,
                                                   unsigned min_truncation);
std::pair<Algebra, Diagonal> parse_diagonal_file(const std::string& path,
                                                 unsigned min_truncation);

}  // namespace hmoduli

#endif
