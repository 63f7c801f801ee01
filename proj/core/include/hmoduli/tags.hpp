#ifndef HMODULI_TAGS_HPP
#define HMODULI_TAGS_HPP

#include <array>
#include <string_view>

namespace hmoduli {

/// The four multiplication laws under study, shared by the rational moduli
/// computation and the finite-loop oracle.
enum class PropertyTag { Inversive, PowerAssociative, Moufang, SymmetricallyAssociative };

inline constexpr std::array<PropertyTag, 4> kAllTags = {
    PropertyTag::Inversive, PropertyTag::PowerAssociative,
    PropertyTag::Moufang, PropertyTag::SymmetricallyAssociative};

constexpr std::string_view tag_name(PropertyTag tag) {
  switch (tag) {
    case PropertyTag::Inversive: return "inv";
    case PropertyTag::PowerAssociative: return "pa";
    case PropertyTag::Moufang: return "mo";
    case PropertyTag::SymmetricallyAssociative: return "sa";
  }
  return "?";
}

}  // namespace hmoduli

#endif
