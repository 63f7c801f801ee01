#ifndef HMODULI_ALGEBRA_HPP
#define HMODULI_ALGEBRA_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hmoduli/rational.hpp"

namespace hmoduli {

struct GeneratorSpec {
  std::string name;
  unsigned degree = 0;  // >= 1; parity decides exterior vs polynomial

  bool operator==(const GeneratorSpec&) const = default;
};

/// A free graded-commutative algebra over Q: exterior on odd-degree
/// generators, polynomial on even-degree ones, truncated above a fixed total
/// degree. Tensor squares and cubes are the same kind of algebra with the
/// generator list duplicated and factor tags recorded.
class Algebra {
 public:
  Algebra() = default;
  Algebra(std::vector<GeneratorSpec> generators, unsigned truncation_degree);

  const std::vector<GeneratorSpec>& generators() const;
  unsigned truncation() const;
  std::size_t factor_count() const;
  /// Which tensor factor generator i belongs to (0 for a plain algebra).
  std::size_t factor_of(std::size_t i) const;

  bool operator==(const Algebra& rhs) const;

 private:
  struct Data {
    std::vector<GeneratorSpec> generators;
    unsigned truncation = 0;
    std::vector<std::size_t> factor;
    std::size_t factor_count = 1;
  };
  explicit Algebra(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;

  friend Algebra tensor_power(const Algebra& a, std::size_t p);
};

/// p-fold tensor power; generators of factor t are renamed name@t+1 and keep
/// their degrees, truncation is inherited.
Algebra tensor_power(const Algebra& a, std::size_t p);
Algebra tensor_square(const Algebra& a);
Algebra tensor_cube(const Algebra& a);

/// Exponent vector aligned with the owning algebra's generator list.
struct Monomial {
  std::vector<unsigned> exponents;

  auto operator<=>(const Monomial&) const = default;
};

unsigned monomial_degree(const Algebra& a, const Monomial& m);

/// A finite Q-linear combination of monomials; zero coefficients are never
/// stored, so equality of elements is equality of the term maps.
class Element {
 public:
  Element() = default;

  static Element zero(const Algebra& a);
  static Element one(const Algebra& a);
  static Element generator(const Algebra& a, std::size_t i);
  static Element monomial(const Algebra& a, const Monomial& m,
                          const Rational& coeff = 1);

  const Algebra& algebra() const { return algebra_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Degree when homogeneous (0 for the zero element), nullopt otherwise.
  std::optional<unsigned> homogeneous_degree() const;

  Element operator+(const Element& rhs) const;
  Element operator-(const Element& rhs) const;
  Element operator-() const;
  Element operator*(const Element& rhs) const;  // Koszul signs, truncation
  friend Element operator*(const Rational& c, const Element& e);

  bool operator==(const Element&) const = default;

 private:
  Algebra algebra_;
  std::map<Monomial, Rational> terms_;

  void insert_term(const Monomial& m, const Rational& c);
};

/// All monomials of total degree exactly d, lexicographic in the exponent
/// vector; deterministic, so it doubles as a coordinate basis.
std::vector<Monomial> basis_of_degree(const Algebra& a, unsigned d);

/// For a tensor square: the monomials of degree d whose two factor parts
/// both have positive degree -- the coordinate basis of the smash part.
std::vector<Monomial> smash_basis(const Algebra& a, unsigned d);

/// Coordinates of e over basis_of_degree/smash_basis; throws if e has a term
/// outside the given basis.
std::vector<Rational> coordinates(const Element& e,
                                  const std::vector<Monomial>& basis);

/// Degree-preserving multiplicative map determined by generator images.
class Morphism {
 public:
  Morphism() = default;
  Morphism(Algebra source, Algebra target, std::vector<Element> images);

  static Morphism identity(const Algebra& a);

  const Algebra& source() const { return source_; }
  const Algebra& target() const { return target_; }
  const Element& image(std::size_t i) const { return images_[i]; }
  const std::vector<Element>& images() const { return images_; }

  Element apply(const Element& e) const;
  Element apply_monomial(const Monomial& m) const;

  bool operator==(const Morphism&) const = default;

 private:
  Algebra source_;
  Algebra target_;
  std::vector<Element> images_;
};

/// Diagrammatic composition: first f, then g; requires f.target == g.source.
Morphism compose(const Morphism& f, const Morphism& g);

/// Embeds a plain algebra into factor t (0-based) of its p-fold tensor power.
Morphism embedding(const Algebra& a, const Algebra& power, std::size_t t);

/// Textual element format: "c*g1^a.g2 + ..." with rationals as p/q,
/// bit-exact round-trip. Zero renders as "0".
std::string format_element(const Element& e);
Element parse_element(const Algebra& a, std::string_view text);

}  // namespace hmoduli

#endif
