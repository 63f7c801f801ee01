#include "hmoduli/moduli.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hmoduli {

ExtensionProblem ExtensionProblem::make(std::vector<GeneratorSpec> x1,
                                        Algebra x2, Diagonal mu2) {
  if (x1.empty()) throw std::invalid_argument("base needs a generator");
  if (!(mu2.source() == x2))
    throw std::invalid_argument("diagonal does not belong to the fibre model");
  for (const auto& g : x1)
    if (g.degree == 0)
      throw std::invalid_argument("base generator degree must be positive");
  return ExtensionProblem{std::move(x1), std::move(x2), std::move(mu2)};
}

ExtensionProblem ExtensionProblem::eilenberg_maclane(
    unsigned deg_x, unsigned deg_y, std::optional<unsigned> truncation) {
  return eilenberg_maclane_multi({deg_x}, deg_y, truncation);
}

ExtensionProblem ExtensionProblem::eilenberg_maclane_multi(
    const std::vector<unsigned>& deg_xs, unsigned deg_y,
    std::optional<unsigned> truncation) {
  if (deg_xs.empty()) throw std::invalid_argument("no base degrees given");
  unsigned cap = deg_y;
  for (unsigned d : deg_xs) cap = std::max(cap, d);
  if (truncation) cap = std::max(cap, *truncation);
  Algebra a({{"y", deg_y}}, cap);
  Diagonal nu = Diagonal::primitive(a);
  std::vector<GeneratorSpec> x1;
  for (std::size_t i = 0; i < deg_xs.size(); ++i)
    x1.push_back({deg_xs.size() == 1 ? std::string("x")
                                     : "x" + std::to_string(i + 1),
                  deg_xs[i]});
  return make(std::move(x1), std::move(a), std::move(nu));
}

namespace {

/// A morphism out of the smash-square model, assembled from one component
/// pullback per tensor factor.
Morphism slot(const Algebra& square, const Morphism& left,
              const Morphism& right) {
  const std::size_t n = left.source().generators().size();
  std::vector<Element> images;
  for (std::size_t i = 0; i < square.generators().size(); ++i) {
    const std::size_t orig = i % n;
    images.push_back(square.factor_of(i) == 0 ? left.image(orig)
                                              : right.image(orig));
  }
  return Morphism(square, left.target(), std::move(images));
}

/// Pullback of the twisted multiplication along two component pullbacks:
/// g goes to the contraction of nu(g) against (c1, c2).
Morphism mu_pullback(const Diagonal& nu, const Morphism& c1,
                     const Morphism& c2) {
  const Algebra& a = nu.source();
  std::vector<Element> images;
  for (std::size_t i = 0; i < a.generators().size(); ++i)
    images.push_back(contract_pair(nu.morphism().image(i), c1, c2));
  return Morphism(a, c1.target(), std::move(images));
}

struct ResidualSlots {
  std::vector<Morphism> plus;   // pullbacks on the left-hand side
  std::vector<Morphism> minus;  // pullbacks on the right-hand side
  Algebra target;
};

ResidualSlots build_slots(const ExtensionProblem& p, PropertyTag tag) {
  const Algebra& a = p.x2;
  const Algebra square = tensor_square(a);
  ResidualSlots slots;
  switch (tag) {
    case PropertyTag::Inversive: {
      const Morphism id = Morphism::identity(a);
      const Morphism lambda = left_inverse(p.mu2);
      const Morphism rho = right_inverse(p.mu2);
      slots.target = a;
      slots.plus = {slot(square, lambda, id)};
      slots.minus = {slot(square, id, rho)};
      break;
    }
    case PropertyTag::PowerAssociative: {
      const Morphism id = Morphism::identity(a);
      // Multiply the diagonal back down: g -> m(nu(g)).
      const Morphism fold = mu_pullback(p.mu2, id, id);
      slots.target = a;
      slots.plus = {slot(square, fold, id)};
      slots.minus = {slot(square, id, fold)};
      break;
    }
    case PropertyTag::SymmetricallyAssociative: {
      const Algebra t2 = square;
      const Morphism pa = embedding(a, t2, 0);
      const Morphism pb = embedding(a, t2, 1);
      const Morphism mu_ba = mu_pullback(p.mu2, pb, pa);
      const Morphism mu_ab = mu_pullback(p.mu2, pa, pb);
      slots.target = t2;
      // (xy)x side: the pairs (b, a) and (a, mu(b, a)).
      slots.plus = {slot(square, pb, pa), slot(square, pa, mu_ba)};
      // x(yx) side: the pairs (a, b) and (mu(a, b), a).
      slots.minus = {slot(square, pa, pb), slot(square, mu_ab, pa)};
      break;
    }
    case PropertyTag::Moufang: {
      const Algebra t3 = tensor_cube(a);
      const Morphism pa = embedding(a, t3, 0);
      const Morphism pb = embedding(a, t3, 1);
      const Morphism pc = embedding(a, t3, 2);
      const Morphism mu_ab = mu_pullback(p.mu2, pa, pb);
      const Morphism mu_ca = mu_pullback(p.mu2, pc, pa);
      const Morphism mu_bc = mu_pullback(p.mu2, pb, pc);
      const Morphism mu_a_bc = mu_pullback(p.mu2, pa, mu_bc);
      slots.target = t3;
      // (xy)(zx) side: (a,b), (c,a), (mu(a,b), mu(c,a)).
      slots.plus = {slot(square, pa, pb), slot(square, pc, pa),
                    slot(square, mu_ab, mu_ca)};
      // (x(yz))x side: (a, mu(b,c)), (b,c), (mu(a, mu(b,c)), a).
      slots.minus = {slot(square, pa, mu_bc), slot(square, pb, pc),
                     slot(square, mu_a_bc, pa)};
      break;
    }
  }
  return slots;
}

Element apply_slots(const ResidualSlots& slots, const Element& w) {
  Element out = Element::zero(slots.target);
  for (const auto& s : slots.plus) out = out + s.apply(w);
  for (const auto& s : slots.minus) out = out - s.apply(w);
  return out;
}

}  // namespace

Element residual_inv(const ExtensionProblem& p, const Element& w) {
  return apply_slots(build_slots(p, PropertyTag::Inversive), w);
}
Element residual_pa(const ExtensionProblem& p, const Element& w) {
  return apply_slots(build_slots(p, PropertyTag::PowerAssociative), w);
}
Element residual_sa(const ExtensionProblem& p, const Element& w) {
  return apply_slots(build_slots(p, PropertyTag::SymmetricallyAssociative), w);
}
Element residual_mo(const ExtensionProblem& p, const Element& w) {
  return apply_slots(build_slots(p, PropertyTag::Moufang), w);
}

Element residual(const ExtensionProblem& p, PropertyTag tag, const Element& w) {
  return apply_slots(build_slots(p, tag), w);
}

Subspace property_subspace(const ExtensionProblem& p, std::size_t gen,
                           PropertyTag tag) {
  const unsigned n = p.x1.at(gen).degree;
  const Algebra square = tensor_square(p.x2);
  const std::vector<Monomial> smash = smash_basis(square, n);
  if (smash.empty()) return Subspace::zero(0);

  const ResidualSlots slots = build_slots(p, tag);
  const std::vector<Monomial> target = basis_of_degree(slots.target, n);
  Matrix m(target.size(), smash.size());
  for (std::size_t j = 0; j < smash.size(); ++j) {
    const Element r = apply_slots(slots, Element::monomial(square, smash[j]));
    const std::vector<Rational> col = coordinates(r, target);
    for (std::size_t i = 0; i < target.size(); ++i) m.at(i, j) = col[i];
  }
  return kernel(m);
}

Subspace im_hd_subspace(const ExtensionProblem& p, std::size_t gen) {
  const unsigned n = p.x1.at(gen).degree;
  const Algebra square = tensor_square(p.x2);
  const std::vector<Monomial> smash = smash_basis(square, n);
  if (smash.empty()) return Subspace::zero(0);
  const std::vector<Monomial> fibre = basis_of_degree(p.x2, n);
  if (fibre.empty()) return Subspace::zero(smash.size());

  Matrix rows(fibre.size(), smash.size());
  for (std::size_t i = 0; i < fibre.size(); ++i) {
    const Element image =
        reduced_diagonal_of(p.mu2, Element::monomial(p.x2, fibre[i]));
    const std::vector<Rational> coords = coordinates(image, smash);
    for (std::size_t j = 0; j < smash.size(); ++j) rows.at(i, j) = coords[j];
  }
  return Subspace::span_of(rows);
}

namespace {

std::string classify(const ExtensionProblem& p, unsigned n,
                     std::size_t smash_dim) {
  if (smash_dim == 0) return "zero";
  if (p.x2.generators().size() != 1) return "general";
  const unsigned m = p.x2.generators()[0].degree;
  if (m % 2 == 1) return "odd-generator";
  if (n % m != 0) return "zero";
  const unsigned k = n / m;
  if (k == 2) return "k2";
  if (k == 3) return "k3";
  return k % 2 == 0 ? "even-k" : "odd-k";
}

const std::array<const char*, 6> kSpaceNames = {"V",  "inv", "pa",
                                                "mo", "sa",  "imhd"};

}  // namespace

ModuliReport moduli_report(const ExtensionProblem& p) {
  ModuliReport report;
  std::map<std::string, std::size_t> totals;
  const Algebra square = tensor_square(p.x2);
  for (std::size_t gen = 0; gen < p.x1.size(); ++gen) {
    GeneratorReport gr;
    gr.generator = p.x1[gen];
    const unsigned n = p.x1[gen].degree;
    const std::vector<Monomial> smash = smash_basis(square, n);
    for (const auto& mono : smash)
      gr.ambient_basis.push_back(
          format_element(Element::monomial(square, mono)));
    gr.dim_v = smash.size();

    const Subspace v = Subspace::full(smash.size());
    const Subspace inv = property_subspace(p, gen, PropertyTag::Inversive);
    const Subspace pa = property_subspace(p, gen, PropertyTag::PowerAssociative);
    const Subspace mo = property_subspace(p, gen, PropertyTag::Moufang);
    const Subspace sa =
        property_subspace(p, gen, PropertyTag::SymmetricallyAssociative);
    const Subspace imhd = im_hd_subspace(p, gen);

    gr.spaces = {{"V", v},   {"inv", inv}, {"pa", pa},
                 {"mo", mo}, {"sa", sa},   {"imhd", imhd}};

    for (const auto& s : gr.spaces) {
      if (s.name == "V" || s.name == "imhd") continue;
      if (!contains(s.space, imhd))
        throw std::runtime_error(
            "deviation image escapes the " + s.name +
            " subspace; the fibre multiplication lacks that property");
    }

    gr.quotients = {{"S_inv", quotient_dim(inv, imhd)},
                    {"S_pa", quotient_dim(pa, imhd)},
                    {"S_mo", quotient_dim(mo, imhd)},
                    {"S_sa", quotient_dim(sa, imhd)},
                    {"V/imhd", quotient_dim(v, imhd)}};

    for (const auto* outer : kSpaceNames)
      for (const auto* inner : kSpaceNames) {
        if (std::string_view(outer) == inner) continue;
        const auto find = [&](std::string_view name) -> const Subspace& {
          for (const auto& s : gr.spaces)
            if (s.name == name) return s.space;
          throw std::logic_error("unknown space name");
        };
        gr.lattice.push_back(
            {outer, inner, contains(find(outer), find(inner))});
      }

    gr.case_label = classify(p, n, smash.size());

    for (const auto& s : gr.spaces) totals[s.name] += s.space.dim();
    for (const auto& [name, d] : gr.quotients) totals[name] += d;
    report.per_generator.push_back(std::move(gr));
  }
  for (const auto& [name, d] : totals) report.totals.emplace_back(name, d);
  return report;
}

Subspace closed_form_subspace(unsigned k, PropertyTag tag) {
  if (k < 2) throw std::invalid_argument("degree ratio must be at least 2");
  const std::size_t dim = k - 1;
  switch (tag) {
    case PropertyTag::Inversive: {
      if (k % 2 == 0) return Subspace::full(dim);
      Matrix row(1, dim);
      for (std::size_t j = 1; j < k; ++j)
        row.at(0, j - 1) = (j % 2 == 1) ? 1 : -1;
      return kernel(row);
    }
    case PropertyTag::PowerAssociative: {
      Matrix row(1, dim);
      for (std::size_t j = 1; j < k; ++j)
        row.at(0, j - 1) = Rational(Integer(1) << j) -
                           Rational(Integer(1) << (k - j));
      return kernel(row);
    }
    case PropertyTag::SymmetricallyAssociative: {
      const std::size_t pairs = (k - 1) / 2;
      if (pairs == 0) return Subspace::full(dim);
      Matrix rows(pairs, dim);
      for (std::size_t l = 1; l <= pairs; ++l) {
        rows.at(l - 1, l - 1) = 1;
        rows.at(l - 1, k - l - 1) -= 1;
      }
      return kernel(rows);
    }
    case PropertyTag::Moufang:
      throw std::invalid_argument(
          "no published closed form for the Moufang kernel");
  }
  throw std::logic_error("unreachable");
}

Subspace closed_form_imhd(unsigned k) {
  if (k < 2) throw std::invalid_argument("degree ratio must be at least 2");
  Matrix row(1, k - 1);
  for (unsigned j = 1; j < k; ++j) row.at(0, j - 1) = binomial(k, j);
  return Subspace::span_of(row);
}

namespace {

// Plain dense polynomials in up to three commuting variables whose
// coefficients are linear forms in the smash coordinates. Deliberately
// shares nothing with the graded-algebra machinery.
using Exponents = std::array<unsigned, 3>;
using ScalarPoly = std::map<Exponents, Rational>;
using FormPoly = std::map<Exponents, std::vector<Rational>>;

ScalarPoly variable(std::size_t i) {
  Exponents e{0, 0, 0};
  e[i] = 1;
  return {{e, Rational(1)}};
}

ScalarPoly add(const ScalarPoly& a, const ScalarPoly& b) {
  ScalarPoly out = a;
  for (const auto& [e, c] : b) {
    out[e] += c;
    if (out[e] == 0) out.erase(e);
  }
  return out;
}

ScalarPoly mul(const ScalarPoly& a, const ScalarPoly& b) {
  ScalarPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      out[e] += ca * cb;
      if (out[e] == 0) out.erase(e);
    }
  return out;
}

ScalarPoly power(const ScalarPoly& a, unsigned n) {
  ScalarPoly out{{Exponents{0, 0, 0}, Rational(1)}};
  for (unsigned i = 0; i < n; ++i) out = mul(out, a);
  return out;
}

/// Adds sign * sum_j r_j U^j V^(k-j) into acc.
void accumulate_slot(FormPoly& acc, const ScalarPoly& u, const ScalarPoly& v,
                     int sign, unsigned k) {
  for (unsigned j = 1; j < k; ++j) {
    const ScalarPoly term = mul(power(u, j), power(v, k - j));
    for (const auto& [e, c] : term) {
      auto& form = acc[e];
      form.resize(k - 1);
      form[j - 1] += sign > 0 ? c : -c;
    }
  }
}

Subspace kernel_of_forms(const FormPoly& forms, unsigned k) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& [e, form] : forms) {
    std::vector<Rational> row = form;
    row.resize(k - 1);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return Subspace::full(k - 1);
  return kernel(Matrix::from_rows(rows));
}

}  // namespace

Subspace sa_polynomial_subspace(unsigned k) {
  if (k < 2) throw std::invalid_argument("degree ratio must be at least 2");
  const ScalarPoly a = variable(0), b = variable(1);
  const ScalarPoly ab = add(a, b);
  FormPoly acc;
  // (xy)x side minus x(yx) side, slot by slot.
  accumulate_slot(acc, b, a, +1, k);
  accumulate_slot(acc, a, ab, +1, k);
  accumulate_slot(acc, a, b, -1, k);
  accumulate_slot(acc, ab, a, -1, k);
  return kernel_of_forms(acc, k);
}

Subspace moufang_polynomial_subspace(unsigned k) {
  if (k < 2) throw std::invalid_argument("degree ratio must be at least 2");
  const ScalarPoly a = variable(0), b = variable(1), c = variable(2);
  const ScalarPoly ab = add(a, b), ca = add(c, a), bc = add(b, c);
  const ScalarPoly abc = add(ab, c);
  FormPoly acc;
  // (xy)(zx) side.
  accumulate_slot(acc, a, b, +1, k);
  accumulate_slot(acc, c, a, +1, k);
  accumulate_slot(acc, ab, ca, +1, k);
  // (x(yz))x side.
  accumulate_slot(acc, a, bc, -1, k);
  accumulate_slot(acc, b, c, -1, k);
  accumulate_slot(acc, abc, a, -1, k);
  return kernel_of_forms(acc, k);
}

ClosedFormCheck closed_form_check(unsigned k, unsigned deg_y) {
  ClosedFormCheck check;
  check.k = k;
  check.deg_y = deg_y;
  const ExtensionProblem p =
      ExtensionProblem::eilenberg_maclane(k * deg_y, deg_y);
  const bool even = deg_y % 2 == 0;

  const auto computed = [&](PropertyTag tag) {
    return property_subspace(p, 0, tag);
  };

  const auto reference_for = [&](PropertyTag tag) -> Subspace {
    if (even) return closed_form_subspace(k, tag);
    // Odd fibre generator: only the squared degree carries a class and every
    // property subspace is the full line; other ratios are empty.
    return k == 2 ? Subspace::full(1) : Subspace::zero(0);
  };

  for (PropertyTag tag : {PropertyTag::Inversive, PropertyTag::PowerAssociative,
                          PropertyTag::SymmetricallyAssociative}) {
    SpaceComparison cmp;
    cmp.space = std::string(tag_name(tag));
    cmp.computed = computed(tag);
    cmp.reference = reference_for(tag);
    cmp.match = cmp.computed == cmp.reference;
    check.comparisons.push_back(std::move(cmp));
  }
  {
    SpaceComparison cmp;
    cmp.space = "mo";
    cmp.oracle_only = true;
    cmp.computed = computed(PropertyTag::Moufang);
    cmp.reference = even ? moufang_polynomial_subspace(k)
                         : (k == 2 ? Subspace::full(1) : Subspace::zero(0));
    cmp.match = cmp.computed == cmp.reference;
    check.comparisons.push_back(std::move(cmp));
  }
  {
    SpaceComparison cmp;
    cmp.space = "imhd";
    cmp.computed = im_hd_subspace(p, 0);
    cmp.reference = even ? closed_form_imhd(k)
                         : (k == 2 ? Subspace::zero(1) : Subspace::zero(0));
    cmp.match = cmp.computed == cmp.reference;
    check.comparisons.push_back(std::move(cmp));
  }
  check.all_match =
      std::all_of(check.comparisons.begin(), check.comparisons.end(),
                  [](const SpaceComparison& c) { return c.match; });
  return check;
}

namespace {

bool strictly_contained(const Subspace& small, const Subspace& big) {
  return contains(big, small) && small.dim() < big.dim();
}

}  // namespace

AssertionRecord assertion_classification(unsigned deg_x, unsigned deg_y) {
  AssertionRecord record;
  record.deg_x = deg_x;
  record.deg_y = deg_y;
  const bool multiple = deg_x % deg_y == 0;
  record.k = multiple ? deg_x / deg_y : 0;
  const bool even_fibre = deg_y % 2 == 0;
  if (even_fibre && multiple && record.k >= 4)
    record.expected_case = record.k % 2 == 0 ? 1 : 2;
  else
    record.expected_case = 3;

  const ExtensionProblem p = ExtensionProblem::eilenberg_maclane(deg_x, deg_y);
  const Subspace inv = property_subspace(p, 0, PropertyTag::Inversive);
  const Subspace pa = property_subspace(p, 0, PropertyTag::PowerAssociative);
  const Subspace mo = property_subspace(p, 0, PropertyTag::Moufang);
  const Subspace imhd = im_hd_subspace(p, 0);

  // Quotient comparisons happen on V-level sums with the deviation image;
  // those are canonical where quotient coordinates are not.
  const Subspace s_inv = sum(inv, imhd);
  const Subspace s_pa = sum(pa, imhd);
  const Subspace s_mo = sum(mo, imhd);

  if (record.expected_case == 1) {
    record.relations.push_back(
        {"S_mo strictly inside S_pa", s_mo, s_pa, strictly_contained(s_mo, s_pa)});
    record.relations.push_back({"S_pa strictly inside S_inv", s_pa, s_inv,
                                strictly_contained(s_pa, s_inv)});
  } else if (record.expected_case == 2) {
    const Subspace both = sum(intersect(pa, inv), imhd);
    record.relations.push_back({"S_mo strictly inside S_pa ^ S_inv", s_mo,
                                both, strictly_contained(s_mo, both)});
    record.relations.push_back({"S_pa ^ S_inv strictly inside S_pa", both,
                                s_pa, strictly_contained(both, s_pa)});
    record.relations.push_back({"S_pa ^ S_inv strictly inside S_inv", both,
                                s_inv, strictly_contained(both, s_inv)});
  } else {
    record.relations.push_back(
        {"S_inv equals S_pa", s_inv, s_pa, s_inv == s_pa});
    record.relations.push_back({"S_pa equals S_mo", s_pa, s_mo, s_pa == s_mo});
  }
  record.agrees = std::all_of(record.relations.begin(), record.relations.end(),
                              [](const Relation& r) { return r.holds; });
  return record;
}

}  // namespace hmoduli
