#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "hmoduli/latin.hpp"

using namespace hmoduli;

namespace {

// Cyclic group table of the given order.
CayleyTable cyclic(unsigned n) {
  CayleyTable t{n, std::vector<std::uint8_t>(n * n)};
  for (unsigned r = 0; r < n; ++r)
    for (unsigned c = 0; c < n; ++c)
      t.entries[r * n + c] = std::uint8_t((r + c) % n);
  return t;
}

// Conjugate t by a permutation fixing 0; the result is again normalized.
CayleyTable relabel(const CayleyTable& t, const std::vector<unsigned>& perm) {
  std::vector<unsigned> inv(t.order);
  for (unsigned i = 0; i < t.order; ++i) inv[perm[i]] = i;
  CayleyTable out{t.order, std::vector<std::uint8_t>(t.order * t.order)};
  for (unsigned r = 0; r < t.order; ++r)
    for (unsigned c = 0; c < t.order; ++c)
      out.entries[r * t.order + c] =
          std::uint8_t(perm[t.at(inv[r], inv[c])]);
  return out;
}

}  // namespace

TEST_CASE("validation accepts groups and rejects broken tables") {
  CHECK(validate(cyclic(1)));
  CHECK(validate(cyclic(5)));
  CayleyTable broken = cyclic(3);
  broken.entries[4] = 0;  // duplicate in row 1
  CHECK(!validate(broken));
  CayleyTable shifted = cyclic(3);
  std::rotate(shifted.entries.begin(), shifted.entries.begin() + 3,
              shifted.entries.end());  // unit no longer first
  CHECK(!validate(shifted));
}

TEST_CASE("groups satisfy all four laws") {
  for (unsigned n : {1u, 2u, 3u, 4u, 5u, 6u}) {
    CayleyTable g = cyclic(n);
    for (PropertyTag tag : kAllTags) {
      CAPTURE(n);
      CAPTURE(tag_name(tag));
      CHECK(has_property(g, tag));
    }
  }
}

TEST_CASE("property checks refuse invalid tables") {
  CayleyTable broken = cyclic(3);
  broken.entries[4] = 0;
  CHECK_THROWS(has_property(broken, PropertyTag::Moufang));
}

TEST_CASE("normalized Latin square counts for small orders") {
  CHECK(enumerate_loops(1).size() == 1);
  CHECK(enumerate_loops(2).size() == 1);
  CHECK(enumerate_loops(3).size() == 1);
  CHECK(enumerate_loops(4).size() == 4);
  CHECK(enumerate_loops(5).size() == 56);
  CHECK_THROWS(enumerate_loops(7));
  CHECK_THROWS(enumerate_loops(0));
}

TEST_CASE("enumeration output is sorted, unique and valid") {
  auto loops = enumerate_loops(5);
  CHECK(std::is_sorted(loops.begin(), loops.end(),
                       [](const CayleyTable& a, const CayleyTable& b) {
                         return a.entries < b.entries;
                       }));
  CHECK(std::adjacent_find(loops.begin(), loops.end()) == loops.end());
  for (const auto& t : loops) CHECK(validate(t));
}

namespace {

// Independent enumeration filling column-by-column instead of row-by-row.
void extend_col(CayleyTable& t, unsigned c, unsigned r, std::size_t& count) {
  const unsigned q = t.order;
  if (c == q) {
    ++count;
    return;
  }
  const auto [nc, nr] = (r + 1 < q) ? std::pair{c, r + 1} : std::pair{c + 1, 1u};
  for (unsigned v = 0; v < q; ++v) {
    bool free = true;
    for (unsigned i = 0; i < r && free; ++i)
      if (t.at(i, c) == v) free = false;
    for (unsigned j = 0; j < c && free; ++j)
      if (t.at(r, j) == v) free = false;
    if (!free) continue;
    t.entries[r * q + c] = std::uint8_t(v);
    extend_col(t, nc, nr, count);
  }
  t.entries[r * q + c] = 0;
}

std::size_t count_by_columns(unsigned q) {
  CayleyTable t = cyclic(q);
  for (unsigned r = 1; r < q; ++r)
    for (unsigned c = 1; c < q; ++c) t.entries[r * q + c] = 0;
  std::size_t count = 0;
  extend_col(t, 1, 1, count);
  return count;
}

}  // namespace

TEST_CASE("counts agree with an independent fill order") {
  for (unsigned q : {2u, 3u, 4u, 5u})
    CHECK(enumerate_loops(q).size() == count_by_columns(q));
}

TEST_CASE("property verdicts are isomorphism invariants") {
  std::mt19937 rng(7401);
  auto loops = enumerate_loops(5);
  std::vector<unsigned> perm = {0, 1, 2, 3, 4};
  for (int t = 0; t < 8; ++t) {
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    const CayleyTable& pick = loops[rng() % loops.size()];
    CayleyTable moved = relabel(pick, perm);
    CHECK(validate(moved));
    for (PropertyTag tag : kAllTags)
      CHECK(has_property(pick, tag) == has_property(moved, tag));
  }
}

TEST_CASE("order-5 survey: the certified implications have no counterexample") {
  ImplicationSurvey s = implication_survey(5);
  CHECK(s.order == 5);
  CHECK(s.total == 56);
  CHECK(s.moufang_not_inversive == 0);
  CHECK(s.moufang_not_flexible == 0);
  // at this order the two independent laws happen to coincide
  CHECK(s.power_associative_not_inversive == 0);
  CHECK(s.inversive_not_power_associative == 0);
  CHECK(!s.pa_not_inv_witness.has_value());
}

TEST_CASE("order-6 survey separates the independent pair of laws") {
  ImplicationSurvey s = implication_survey(6);
  CHECK(s.total == 9408);
  CHECK(s.moufang_not_inversive == 0);
  CHECK(s.moufang_not_flexible == 0);
  CHECK(s.power_associative_not_inversive == 80);
  CHECK(s.inversive_not_power_associative == 1230);
  REQUIRE(s.pa_not_inv_witness.has_value());
  const CayleyTable& w = *s.pa_not_inv_witness;
  CHECK(validate(w));
  CHECK(has_property(w, PropertyTag::PowerAssociative));
  CHECK(!has_property(w, PropertyTag::Inversive));
  REQUIRE(s.inv_not_pa_witness.has_value());
  CHECK(has_property(*s.inv_not_pa_witness, PropertyTag::Inversive));
  CHECK(!has_property(*s.inv_not_pa_witness, PropertyTag::PowerAssociative));
}

TEST_CASE("small-order surveys are degenerate") {
  for (unsigned n : {1u, 2u, 3u}) {
    ImplicationSurvey s = implication_survey(n);
    CHECK(s.total == 1);
    CHECK(s.moufang_not_inversive == 0);
  }
  ImplicationSurvey s4 = implication_survey(4);
  CHECK(s4.total == 4);
  CHECK(s4.moufang_not_inversive == 0);
  CHECK(s4.moufang_not_flexible == 0);
}

TEST_CASE("table files round-trip and report parse errors by line") {
  CayleyTable g = cyclic(5);
  std::ostringstream out;
  write_table(out, g);
  std::istringstream in(out.str());
  CHECK(read_table(in) == g);

  std::istringstream bad("3\n0 1 2\n1 2\n2 0 1\n");
  try {
    read_table(bad);
    CHECK(false);
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find("3") != std::string::npos);
  }
}
