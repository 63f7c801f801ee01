#ifndef HMODULI_LOOP_HPP
#define HMODULI_LOOP_HPP

#include <vector>

#include "hmoduli/algebra.hpp"

namespace hmoduli {

/// A coproduct on a free graded-commutative algebra: a multiplicative map
/// M -> M (x) M whose composites with either augmentation recover the
/// identity. Construction validates the counit laws on every generator.
class Diagonal {
 public:
  /// nu(g) = g(x)1 + 1(x)g on every generator.
  static Diagonal primitive(const Algebra& m);

  /// Accepts any counit-lawful generator assignment; throws otherwise, naming
  /// the offending generator.
  static Diagonal from_morphism(const Morphism& nu);

  const Morphism& morphism() const { return underlying_; }
  const Algebra& source() const { return underlying_.source(); }
  const Algebra& square() const { return underlying_.target(); }

  /// Reduced part P(g) = nu(g) - g(x)1 - 1(x)g; zero iff g is primitive,
  /// always supported on positive(x)positive monomials.
  Element reduced(std::size_t generator) const;

 private:
  explicit Diagonal(Morphism underlying);
  Morphism underlying_;
};

/// Elements of Hom_Alg(M, A): just algebra morphisms, grouped under the
/// loop product below.
using LoopElement = Morphism;

/// The unit: every generator goes to 0 (augmentation followed by unit).
LoopElement loop_unit(const Algebra& m, const Algebra& a);

/// (alpha (x) beta) applied to an element of M (x) M, multiplied down in the
/// shared target of alpha and beta.
Element contract_pair(const Element& e2, const Morphism& alpha,
                      const Morphism& beta);

/// alpha . beta: on each generator, contract (alpha (x) beta) against nu(g)
/// and multiply down in A. For a primitive diagonal this is the
/// generator-wise sum.
LoopElement loop_product(const LoopElement& alpha, const LoopElement& beta,
                         const Diagonal& nu);

/// Solves gamma . alpha = beta by recursion over generators in weakly
/// increasing degree; the solution is re-multiplied as a certificate and a
/// mismatch throws.
LoopElement left_divide(const LoopElement& beta, const LoopElement& alpha,
                        const Diagonal& nu);

/// Solves alpha . gamma = beta; mirror of left_divide.
LoopElement right_divide(const LoopElement& beta, const LoopElement& alpha,
                         const Diagonal& nu);

/// lambda with lambda . id = e in the endomorphism loop of nu's source.
LoopElement left_inverse(const Diagonal& nu);
/// rho with id . rho = e.
LoopElement right_inverse(const Diagonal& nu);

/// P(g) of the diagonal, exposed as a free function for symmetry with the
/// rest of the operation set.
Element deviation_P(const Diagonal& nu, std::size_t generator);

/// A linear (not multiplicative) map out of the span of some generator
/// symbols: one homogeneous image per symbol.
struct GeneratorLinearMap {
  std::vector<Element> images;
};

/// The algebraic H-deviation: per symbol, apply the reduced diagonal of mu2
/// linearly to the image. Output lands in the positive(x)positive part of
/// the tensor square of mu2's source.
GeneratorLinearMap hd_bar(const GeneratorLinearMap& alpha,
                          const Diagonal& mu2);

/// Linear extension of the reduced diagonal: nu(e) - e(x)1 - 1(x)e, term by
/// term.
Element reduced_diagonal_of(const Diagonal& mu2, const Element& e);

}  // namespace hmoduli

#endif
