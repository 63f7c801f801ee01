#include "hmoduli/latin.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hmoduli {

bool validate(const CayleyTable& t) {
  const unsigned q = t.order;
  if (q == 0 || t.entries.size() != static_cast<std::size_t>(q) * q)
    return false;
  for (unsigned i = 0; i < q; ++i)
    if (t.at(0, i) != i || t.at(i, 0) != i) return false;
  for (unsigned r = 0; r < q; ++r) {
    std::vector<bool> seen_row(q, false), seen_col(q, false);
    for (unsigned c = 0; c < q; ++c) {
      const unsigned a = t.at(r, c), b = t.at(c, r);
      if (a >= q || b >= q || seen_row[a] || seen_col[b]) return false;
      seen_row[a] = seen_col[b] = true;
    }
  }
  return true;
}

bool has_property(const CayleyTable& t, PropertyTag tag) {
  if (!validate(t)) throw std::invalid_argument("invalid Cayley table");
  const unsigned q = t.order;
  const auto mul = [&](unsigned a, unsigned b) { return t.at(a, b); };
  switch (tag) {
    case PropertyTag::Inversive:
      for (unsigned x = 0; x < q; ++x) {
        unsigned two_sided = 0;
        for (unsigned y = 0; y < q; ++y)
          if (mul(y, x) == 0 && mul(x, y) == 0) ++two_sided;
        if (two_sided != 1) return false;
      }
      return true;
    case PropertyTag::PowerAssociative:
      for (unsigned x = 0; x < q; ++x)
        if (mul(x, mul(x, x)) != mul(mul(x, x), x)) return false;
      return true;
    case PropertyTag::Moufang:
      for (unsigned x = 0; x < q; ++x)
        for (unsigned y = 0; y < q; ++y)
          for (unsigned z = 0; z < q; ++z)
            if (mul(mul(x, mul(y, z)), x) != mul(mul(x, y), mul(z, x)))
              return false;
      return true;
    case PropertyTag::SymmetricallyAssociative:
      for (unsigned x = 0; x < q; ++x)
        for (unsigned y = 0; y < q; ++y)
          if (mul(mul(x, y), x) != mul(x, mul(y, x))) return false;
      return true;
  }
  throw std::logic_error("unreachable");
}

namespace {

void extend(CayleyTable& t, unsigned r, unsigned c,
            std::vector<CayleyTable>& out) {
  const unsigned q = t.order;
  if (r == q) {
    out.push_back(t);
    return;
  }
  const auto [next_r, next_c] =
      (c + 1 < q) ? std::pair{r, c + 1} : std::pair{r + 1, 1u};
  for (unsigned v = 0; v < q; ++v) {
    bool free = true;
    for (unsigned j = 0; j < c && free; ++j)
      if (t.at(r, j) == v) free = false;
    for (unsigned i = 0; i < r && free; ++i)
      if (t.at(i, c) == v) free = false;
    if (!free) continue;
    t.entries[r * q + c] = v;
    extend(t, next_r, next_c, out);
  }
  t.entries[r * q + c] = 0;
}

}  // namespace

std::vector<CayleyTable> enumerate_loops(unsigned order) {
  if (order == 0) throw std::invalid_argument("order must be positive");
  if (order > 6)
    throw std::invalid_argument(
        "loop enumeration is limited to orders up to 6");
  CayleyTable t;
  t.order = order;
  t.entries.assign(static_cast<std::size_t>(order) * order, 0);
  for (unsigned i = 0; i < order; ++i) {
    t.entries[i] = static_cast<std::uint8_t>(i);
    t.entries[i * order] = static_cast<std::uint8_t>(i);
  }
  std::vector<CayleyTable> out;
  if (order == 1) {
    out.push_back(t);
    return out;
  }
  extend(t, 1, 1, out);
  return out;
}

ImplicationSurvey implication_survey(unsigned order) {
  ImplicationSurvey survey;
  survey.order = order;
  for (const CayleyTable& t : enumerate_loops(order)) {
    ++survey.total;
    std::array<bool, 4> has{};
    for (std::size_t i = 0; i < kAllTags.size(); ++i) {
      has[i] = has_property(t, kAllTags[i]);
      if (has[i]) ++survey.property_counts[i];
    }
    const bool inv = has[0], pa = has[1], mo = has[2], sa = has[3];
    if (mo && !inv) ++survey.moufang_not_inversive;
    if (mo && !sa) ++survey.moufang_not_flexible;
    if (sa && !pa) ++survey.flexible_not_power_associative;
    if (pa && !inv) {
      ++survey.power_associative_not_inversive;
      if (!survey.pa_not_inv_witness) survey.pa_not_inv_witness = t;
    }
    if (inv && !pa) {
      ++survey.inversive_not_power_associative;
      if (!survey.inv_not_pa_witness) survey.inv_not_pa_witness = t;
    }
  }
  return survey;
}

CayleyTable read_table(std::istream& in) {
  CayleyTable t;
  std::string line;
  std::size_t lineno = 0;
  const auto fail = [&](const std::string& what) {
    throw std::invalid_argument("table line " + std::to_string(lineno) + ": " +
                                what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream row(line);
    if (t.order == 0) {
      long q = 0;
      if (!(row >> q) || q <= 0 || q > 255) fail("expected a positive order");
      t.order = static_cast<unsigned>(q);
      continue;
    }
    if (t.entries.size() == static_cast<std::size_t>(t.order) * t.order) break;
    long v = 0;
    unsigned count = 0;
    while (row >> v) {
      if (v < 0 || v >= static_cast<long>(t.order)) fail("entry out of range");
      t.entries.push_back(static_cast<std::uint8_t>(v));
      ++count;
    }
    if (count != t.order) fail("expected " + std::to_string(t.order) +
                               " entries in a row");
  }
  if (t.order == 0) throw std::invalid_argument("empty table file");
  if (t.entries.size() != static_cast<std::size_t>(t.order) * t.order)
    throw std::invalid_argument("table file is missing rows");
  return t;
}

void write_table(std::ostream& out, const CayleyTable& t) {
  out << t.order << "\n";
  for (unsigned r = 0; r < t.order; ++r) {
    for (unsigned c = 0; c < t.order; ++c)
      out << (c ? " " : "") << t.at(r, c);
    out << "\n";
  }
}

}  // namespace hmoduli
