#include "hmoduli/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hmoduli {

namespace {

bool is_odd(const GeneratorSpec& g) { return g.degree % 2 == 1; }

}  // namespace

Algebra::Algebra(std::vector<GeneratorSpec> generators,
                 unsigned truncation_degree) {
  auto data = std::make_shared<Data>();
  for (const auto& g : generators) {
    if (g.degree == 0)
      throw std::invalid_argument("generator degree must be positive: " +
                                  g.name);
    if (g.degree > truncation_degree)
      throw std::invalid_argument("truncation below generator degree: " +
                                  g.name);
  }
  data->factor.assign(generators.size(), 0);
  data->generators = std::move(generators);
  data->truncation = truncation_degree;
  data_ = std::move(data);
}

const std::vector<GeneratorSpec>& Algebra::generators() const {
  static const std::vector<GeneratorSpec> empty;
  return data_ ? data_->generators : empty;
}

unsigned Algebra::truncation() const { return data_ ? data_->truncation : 0; }

std::size_t Algebra::factor_count() const {
  return data_ ? data_->factor_count : 1;
}

std::size_t Algebra::factor_of(std::size_t i) const {
  return data_->factor[i];
}

bool Algebra::operator==(const Algebra& rhs) const {
  if (data_ == rhs.data_) return true;
  if (!data_ || !rhs.data_) return false;
  return data_->generators == rhs.data_->generators &&
         data_->truncation == rhs.data_->truncation &&
         data_->factor == rhs.data_->factor;
}

Algebra tensor_power(const Algebra& a, std::size_t p) {
  if (a.factor_count() != 1)
    throw std::invalid_argument("tensor power of a tensor algebra");
  auto data = std::make_shared<Algebra::Data>();
  data->truncation = a.truncation();
  data->factor_count = p;
  for (std::size_t t = 0; t < p; ++t)
    for (const auto& g : a.generators()) {
      data->generators.push_back(
          {g.name + "@" + std::to_string(t + 1), g.degree});
      data->factor.push_back(t);
    }
  return Algebra(std::move(data));
}

Algebra tensor_square(const Algebra& a) { return tensor_power(a, 2); }
Algebra tensor_cube(const Algebra& a) { return tensor_power(a, 3); }

unsigned monomial_degree(const Algebra& a, const Monomial& m) {
  unsigned d = 0;
  for (std::size_t i = 0; i < m.exponents.size(); ++i)
    d += m.exponents[i] * a.generators()[i].degree;
  return d;
}

namespace {

void check_monomial(const Algebra& a, const Monomial& m) {
  if (m.exponents.size() != a.generators().size())
    throw std::invalid_argument("monomial length does not match algebra");
  for (std::size_t i = 0; i < m.exponents.size(); ++i)
    if (is_odd(a.generators()[i]) && m.exponents[i] > 1)
      throw std::invalid_argument("odd generator with exponent > 1: " +
                                  a.generators()[i].name);
  if (monomial_degree(a, m) > a.truncation())
    throw std::invalid_argument("monomial degree exceeds truncation");
}

/// Product of two monomials. Returns false when it vanishes (repeated odd
/// generator); otherwise fills out and flips sign per Koszul crossings.
bool monomial_product(const Algebra& a, const Monomial& u, const Monomial& v,
                      Monomial& out, int& sign) {
  const auto& gens = a.generators();
  const std::size_t n = gens.size();
  out.exponents.assign(n, 0);
  sign = 1;
  // Each odd generator of v moves left past every odd occurrence of u with a
  // strictly larger index; count the crossings.
  std::vector<std::size_t> odd_u_suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    odd_u_suffix[i] = odd_u_suffix[i + 1] +
                      ((is_odd(gens[i]) && u.exponents[i] == 1) ? 1 : 0);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned e = u.exponents[i] + v.exponents[i];
    if (is_odd(gens[i])) {
      if (e > 1) return false;
      if (v.exponents[i] == 1 && odd_u_suffix[i + 1] % 2 == 1) sign = -sign;
    }
    out.exponents[i] = e;
  }
  return true;
}

}  // namespace

Element Element::zero(const Algebra& a) {
  Element e;
  e.algebra_ = a;
  return e;
}

Element Element::one(const Algebra& a) {
  Monomial unit;
  unit.exponents.assign(a.generators().size(), 0);
  return monomial(a, unit);
}

Element Element::generator(const Algebra& a, std::size_t i) {
  Monomial m;
  m.exponents.assign(a.generators().size(), 0);
  m.exponents[i] = 1;
  return monomial(a, m);
}

Element Element::monomial(const Algebra& a, const Monomial& m,
                          const Rational& coeff) {
  check_monomial(a, m);
  Element e;
  e.algebra_ = a;
  if (coeff != 0) e.terms_.emplace(m, coeff);
  return e;
}

void Element::insert_term(const Monomial& m, const Rational& c) {
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<unsigned> Element::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  unsigned d = monomial_degree(algebra_, terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (monomial_degree(algebra_, m) != d) return std::nullopt;
  return d;
}

namespace {

void require_same_algebra(const Element& a, const Element& b) {
  if (!(a.algebra() == b.algebra()))
    throw std::invalid_argument("elements belong to different algebras");
}

}  // namespace

Element Element::operator+(const Element& rhs) const {
  require_same_algebra(*this, rhs);
  Element out = *this;
  for (const auto& [m, c] : rhs.terms_) out.insert_term(m, c);
  return out;
}

Element Element::operator-(const Element& rhs) const {
  require_same_algebra(*this, rhs);
  Element out = *this;
  for (const auto& [m, c] : rhs.terms_) out.insert_term(m, -c);
  return out;
}

Element Element::operator-() const {
  Element out = zero(algebra_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Element Element::operator*(const Element& rhs) const {
  require_same_algebra(*this, rhs);
  Element out = zero(algebra_);
  const unsigned cap = algebra_.truncation();
  for (const auto& [mu, cu] : terms_)
    for (const auto& [mv, cv] : rhs.terms_) {
      Monomial prod;
      int sign;
      if (!monomial_product(algebra_, mu, mv, prod, sign)) continue;
      if (monomial_degree(algebra_, prod) > cap) continue;
      const Rational cprod = cu * cv;
      out.insert_term(prod, sign > 0 ? cprod : Rational(-cprod));
    }
  return out;
}

Element operator*(const Rational& c, const Element& e) {
  Element out = Element::zero(e.algebra());
  if (c == 0) return out;
  for (const auto& [m, coeff] : e.terms()) out.insert_term(m, c * coeff);
  return out;
}

namespace {

void enumerate_exponents(const Algebra& a, std::size_t i, unsigned remaining,
                         Monomial& scratch, std::vector<Monomial>& out) {
  const auto& gens = a.generators();
  if (i == gens.size()) {
    if (remaining == 0) out.push_back(scratch);
    return;
  }
  const unsigned deg = gens[i].degree;
  const unsigned cap = is_odd(gens[i]) ? 1u : remaining / deg;
  for (unsigned e = 0; e <= cap && e * deg <= remaining; ++e) {
    scratch.exponents[i] = e;
    enumerate_exponents(a, i + 1, remaining - e * deg, scratch, out);
  }
  scratch.exponents[i] = 0;
}

}  // namespace

std::vector<Monomial> basis_of_degree(const Algebra& a, unsigned d) {
  if (d > a.truncation())
    throw std::invalid_argument("basis degree above truncation");
  Monomial scratch;
  scratch.exponents.assign(a.generators().size(), 0);
  std::vector<Monomial> out;
  enumerate_exponents(a, 0, d, scratch, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> smash_basis(const Algebra& a, unsigned d) {
  if (a.factor_count() != 2)
    throw std::invalid_argument("smash basis requires a tensor square");
  std::vector<Monomial> out;
  for (const auto& m : basis_of_degree(a, d)) {
    unsigned deg_left = 0, deg_right = 0;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      const unsigned part = m.exponents[i] * a.generators()[i].degree;
      (a.factor_of(i) == 0 ? deg_left : deg_right) += part;
    }
    if (deg_left > 0 && deg_right > 0) out.push_back(m);
  }
  return out;
}

std::vector<Rational> coordinates(const Element& e,
                                  const std::vector<Monomial>& basis) {
  std::vector<Rational> coords(basis.size());
  for (const auto& [m, c] : e.terms()) {
    const auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || !(*it == m))
      throw std::invalid_argument("element has a term outside the basis");
    coords[it - basis.begin()] = c;
  }
  return coords;
}

Morphism::Morphism(Algebra source, Algebra target, std::vector<Element> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)) {
  const auto& gens = source_.generators();
  if (images_.size() != gens.size())
    throw std::invalid_argument("morphism needs one image per generator");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!(images_[i].algebra() == target_))
      throw std::invalid_argument("morphism image in the wrong algebra");
    const auto deg = images_[i].homogeneous_degree();
    if (!deg)
      throw std::invalid_argument("morphism image not homogeneous: " +
                                  gens[i].name);
    if (!images_[i].is_zero() && *deg != gens[i].degree)
      throw std::invalid_argument("morphism image has the wrong degree: " +
                                  gens[i].name);
  }
}

Morphism Morphism::identity(const Algebra& a) {
  std::vector<Element> images;
  for (std::size_t i = 0; i < a.generators().size(); ++i)
    images.push_back(Element::generator(a, i));
  return Morphism(a, a, std::move(images));
}

Element Morphism::apply_monomial(const Monomial& m) const {
  Element out = Element::one(target_);
  for (std::size_t i = 0; i < m.exponents.size(); ++i)
    for (unsigned e = 0; e < m.exponents[i]; ++e) out = out * images_[i];
  return out;
}

Element Morphism::apply(const Element& e) const {
  if (!(e.algebra() == source_))
    throw std::invalid_argument("morphism applied outside its source");
  Element out = Element::zero(target_);
  for (const auto& [m, c] : e.terms()) out = out + c * apply_monomial(m);
  return out;
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (!(f.target() == g.source()))
    throw std::invalid_argument("composition chain mismatch");
  std::vector<Element> images;
  for (const auto& im : f.images()) images.push_back(g.apply(im));
  return Morphism(f.source(), g.target(), std::move(images));
}

Morphism embedding(const Algebra& a, const Algebra& power, std::size_t t) {
  const std::size_t n = a.generators().size();
  if (power.generators().size() != n * power.factor_count() ||
      t >= power.factor_count())
    throw std::invalid_argument("embedding target is not a tensor power");
  std::vector<Element> images;
  for (std::size_t i = 0; i < n; ++i)
    images.push_back(Element::generator(power, t * n + i));
  return Morphism(a, power, std::move(images));
}

std::string format_element(const Element& e) {
  if (e.is_zero()) return "0";
  const auto& gens = e.algebra().generators();
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c) << "*";
    bool any = false;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (m.exponents[i] == 0) continue;
      if (any) os << ".";
      any = true;
      os << gens[i].name;
      if (m.exponents[i] > 1) os << "^" << m.exponents[i];
    }
    if (!any) os << "1";
  }
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::size_t generator_index(const Algebra& a, std::string_view name) {
  const auto& gens = a.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == name) return i;
  throw std::invalid_argument("unknown generator: " + std::string(name));
}

}  // namespace

Element parse_element(const Algebra& a, std::string_view text) {
  text = trim(text);
  if (text == "0") return Element::zero(a);
  Element out = Element::zero(a);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find('+', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view term = trim(text.substr(pos, next - pos));
    pos = next + 1;
    if (term.empty())
      throw std::invalid_argument("empty term in element literal");

    const std::size_t star = term.find('*');
    if (star == std::string_view::npos)
      throw std::invalid_argument("term missing '*': " + std::string(term));
    const Rational coeff = parse_rational(trim(term.substr(0, star)));
    std::string_view mono_text = trim(term.substr(star + 1));

    Monomial m;
    m.exponents.assign(a.generators().size(), 0);
    if (mono_text != "1") {
      std::size_t fpos = 0;
      while (fpos <= mono_text.size()) {
        std::size_t dot = mono_text.find('.', fpos);
        if (dot == std::string_view::npos) dot = mono_text.size();
        std::string_view factor = trim(mono_text.substr(fpos, dot - fpos));
        fpos = dot + 1;
        if (factor.empty())
          throw std::invalid_argument("empty factor in monomial");
        unsigned exp = 1;
        const std::size_t caret = factor.find('^');
        std::string_view name = factor;
        if (caret != std::string_view::npos) {
          name = trim(factor.substr(0, caret));
          const std::string exps{trim(factor.substr(caret + 1))};
          exp = static_cast<unsigned>(std::stoul(exps));
        }
        m.exponents[generator_index(a, name)] += exp;
        if (fpos > mono_text.size()) break;
      }
    }
    out = out + Element::monomial(a, m, coeff);
    if (pos > text.size()) break;
  }
  return out;
}

}  // namespace hmoduli
