#ifndef HMODULI_TESTS_SUPPORT_HPP
#define HMODULI_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "hmoduli/algebra.hpp"
#include "hmoduli/linalg.hpp"
#include "hmoduli/loop.hpp"

namespace hmoduli::testing {

inline Rational random_rational(std::mt19937& rng, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, 4);
  return Rational(num(rng), den(rng));
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t rows,
                            std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_rational(rng);
  return m;
}

/// Random invertible matrix: keep sampling until the rank is full.
inline Matrix random_invertible(std::mt19937& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n);
    if (rref(m).rank == n) return m;
  }
}

/// Random homogeneous element of the given degree (possibly zero).
inline Element random_homogeneous(std::mt19937& rng, const Algebra& a,
                                  unsigned degree) {
  Element out = Element::zero(a);
  for (const Monomial& m : basis_of_degree(a, degree))
    out = out + Element::monomial(a, m, random_rational(rng, -3, 3));
  return out;
}

inline Element random_element(std::mt19937& rng, const Algebra& a) {
  Element out = Element::zero(a);
  std::uniform_int_distribution<unsigned> deg(0, a.truncation());
  for (int i = 0; i < 3; ++i)
    out = out + random_homogeneous(rng, a, deg(rng));
  return out;
}

/// Random morphism determined by random homogeneous generator images.
inline Morphism random_morphism(std::mt19937& rng, const Algebra& source,
                                const Algebra& target) {
  std::vector<Element> images;
  for (const auto& g : source.generators())
    images.push_back(random_homogeneous(rng, target, g.degree));
  return Morphism(source, target, std::move(images));
}

/// Random counit-lawful diagonal: primitive part plus a random combination
/// of positive(x)positive monomials in each generator's degree.
inline Diagonal random_diagonal(std::mt19937& rng, const Algebra& m) {
  const Algebra square = tensor_square(m);
  const std::size_t n = m.generators().size();
  std::vector<Element> images;
  for (std::size_t i = 0; i < n; ++i) {
    Element nu = Element::generator(square, i) +
                 Element::generator(square, n + i);
    for (const Monomial& mono :
         smash_basis(square, m.generators()[i].degree))
      nu = nu + Element::monomial(square, mono, random_rational(rng, -2, 2));
    images.push_back(std::move(nu));
  }
  return Diagonal::from_morphism(Morphism(m, square, std::move(images)));
}

}  // namespace hmoduli::testing

#endif
