#ifndef HMODULI_LATIN_HPP
#define HMODULI_LATIN_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hmoduli/tags.hpp"

namespace hmoduli {

/// Multiplication table of a finite loop: a normalized Latin square whose
/// element 0 is the unit. Entries are row * column.
struct CayleyTable {
  unsigned order = 0;
  std::vector<std::uint8_t> entries;  // row-major, order x order

  unsigned at(unsigned row, unsigned col) const {
    return entries[row * order + col];
  }

  bool operator==(const CayleyTable&) const = default;
};

/// True iff entries form a Latin square with identity first row and column.
bool validate(const CayleyTable& t);

/// Exhaustive check of one multiplication law; throws on an invalid table.
bool has_property(const CayleyTable& t, PropertyTag tag);

/// All normalized Latin squares of the given order with unit 0, in
/// lexicographic order of the flattened table. Refuses orders above 6.
std::vector<CayleyTable> enumerate_loops(unsigned order);

struct ImplicationSurvey {
  unsigned order = 0;
  std::size_t total = 0;
  std::array<std::size_t, 4> property_counts{};  // indexed like kAllTags
  // The two implications the survey certifies.
  std::size_t moufang_not_inversive = 0;
  std::size_t moufang_not_flexible = 0;
  std::size_t flexible_not_power_associative = 0;
  // Evidence that inversivity and power associativity are independent.
  std::size_t power_associative_not_inversive = 0;
  std::size_t inversive_not_power_associative = 0;
  std::optional<CayleyTable> pa_not_inv_witness;  // lexicographically least
  std::optional<CayleyTable> inv_not_pa_witness;
};

ImplicationSurvey implication_survey(unsigned order);

/// Table file format: first line the order, then order whitespace-separated
/// rows. Parse errors report the offending line.
CayleyTable read_table(std::istream& in);
void write_table(std::ostream& out, const CayleyTable& t);

}  // namespace hmoduli

#endif
