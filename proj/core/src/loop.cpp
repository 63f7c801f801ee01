#include "hmoduli/loop.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hmoduli {

namespace {

/// Splits a tensor-square monomial into its factor parts. Generator order in
/// a tensor power lists factor 1 first, so the slices are contiguous and no
/// Koszul sign arises.
void split_tensor_monomial(const Algebra& square, const Monomial& w,
                           Monomial& left, Monomial& right) {
  const std::size_t n = square.generators().size() / 2;
  left.exponents.assign(w.exponents.begin(), w.exponents.begin() + n);
  right.exponents.assign(w.exponents.begin() + n, w.exponents.end());
}

}  // namespace

Element contract_pair(const Element& e2, const Morphism& alpha,
                      const Morphism& beta) {
  Element out = Element::zero(alpha.target());
  for (const auto& [w, c] : e2.terms()) {
    Monomial u, v;
    split_tensor_monomial(e2.algebra(), w, u, v);
    out = out + c * (alpha.apply_monomial(u) * beta.apply_monomial(v));
  }
  return out;
}

namespace {

constexpr auto contract = contract_pair;

/// Collapses one tensor factor by augmentation, mapping the other back to M.
Element collapse(const Algebra& m, const Element& e2, std::size_t kept) {
  Element out = Element::zero(m);
  for (const auto& [w, c] : e2.terms()) {
    Monomial left, right;
    split_tensor_monomial(e2.algebra(), w, left, right);
    const Monomial& killed = (kept == 0) ? right : left;
    const Monomial& survivor = (kept == 0) ? left : right;
    if (std::any_of(killed.exponents.begin(), killed.exponents.end(),
                    [](unsigned e) { return e != 0; }))
      continue;
    out = out + Element::monomial(m, survivor, c);
  }
  return out;
}

std::vector<std::size_t> generators_by_degree(const Algebra& m) {
  std::vector<std::size_t> order(m.generators().size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.generators()[a].degree < m.generators()[b].degree;
  });
  return order;
}

void require_loop_shapes(const LoopElement& alpha, const LoopElement& beta,
                         const Diagonal& nu) {
  if (!(alpha.source() == nu.source()) || !(beta.source() == nu.source()))
    throw std::invalid_argument("loop elements must share the diagonal's source");
  if (!(alpha.target() == beta.target()))
    throw std::invalid_argument("loop elements must share a target");
}

}  // namespace

Diagonal::Diagonal(Morphism underlying) : underlying_(std::move(underlying)) {}

Diagonal Diagonal::primitive(const Algebra& m) {
  const Algebra sq = tensor_square(m);
  const std::size_t n = m.generators().size();
  std::vector<Element> images;
  for (std::size_t i = 0; i < n; ++i)
    images.push_back(Element::generator(sq, i) + Element::generator(sq, n + i));
  return Diagonal(Morphism(m, sq, std::move(images)));
}

Diagonal Diagonal::from_morphism(const Morphism& nu) {
  const Algebra& m = nu.source();
  if (!(nu.target() == tensor_square(m)))
    throw std::invalid_argument(
        "diagonal must map into the tensor square of its source");
  for (std::size_t i = 0; i < m.generators().size(); ++i) {
    const Element g = Element::generator(m, i);
    if (!(collapse(m, nu.image(i), 0) == g) ||
        !(collapse(m, nu.image(i), 1) == g))
      throw std::invalid_argument("counit law fails on generator " +
                                  m.generators()[i].name);
  }
  return Diagonal(nu);
}

Element Diagonal::reduced(std::size_t generator) const {
  const Algebra& m = source();
  const Algebra& sq = square();
  const std::size_t n = m.generators().size();
  return underlying_.image(generator) - Element::generator(sq, generator) -
         Element::generator(sq, n + generator);
}

LoopElement loop_unit(const Algebra& m, const Algebra& a) {
  std::vector<Element> images(m.generators().size(), Element::zero(a));
  return Morphism(m, a, std::move(images));
}

LoopElement loop_product(const LoopElement& alpha, const LoopElement& beta,
                         const Diagonal& nu) {
  require_loop_shapes(alpha, beta, nu);
  const Algebra& m = nu.source();
  std::vector<Element> images;
  for (std::size_t i = 0; i < m.generators().size(); ++i)
    images.push_back(contract(nu.morphism().image(i), alpha, beta));
  return Morphism(m, alpha.target(), std::move(images));
}

namespace {

enum class Side { Left, Right };

/// Shared division recursion. P(g) only involves strictly lower-degree
/// symbols in both tensor factors, so filling images in weakly increasing
/// generator degree is well founded.
LoopElement divide(const LoopElement& beta, const LoopElement& alpha,
                   const Diagonal& nu, Side side) {
  require_loop_shapes(alpha, beta, nu);
  const Algebra& m = nu.source();
  const Algebra& a = alpha.target();
  std::vector<Element> images(m.generators().size(), Element::zero(a));
  for (std::size_t i : generators_by_degree(m)) {
    const Morphism partial(m, a, images);
    const Element p = nu.reduced(i);
    const Element correction = (side == Side::Left)
                                   ? contract(p, partial, alpha)
                                   : contract(p, alpha, partial);
    images[i] = beta.image(i) - alpha.image(i) - correction;
  }
  Morphism gamma(m, a, std::move(images));
  const Morphism check = (side == Side::Left)
                             ? loop_product(gamma, alpha, nu)
                             : loop_product(alpha, gamma, nu);
  if (!(check == beta))
    throw std::logic_error(
        "division verification failed; the diagonal is not counit-lawful");
  return gamma;
}

}  // namespace

LoopElement left_divide(const LoopElement& beta, const LoopElement& alpha,
                        const Diagonal& nu) {
  return divide(beta, alpha, nu, Side::Left);
}

LoopElement right_divide(const LoopElement& beta, const LoopElement& alpha,
                         const Diagonal& nu) {
  return divide(beta, alpha, nu, Side::Right);
}

LoopElement left_inverse(const Diagonal& nu) {
  const Algebra& m = nu.source();
  return left_divide(loop_unit(m, m), Morphism::identity(m), nu);
}

LoopElement right_inverse(const Diagonal& nu) {
  const Algebra& m = nu.source();
  return right_divide(loop_unit(m, m), Morphism::identity(m), nu);
}

Element deviation_P(const Diagonal& nu, std::size_t generator) {
  return nu.reduced(generator);
}

Element reduced_diagonal_of(const Diagonal& mu2, const Element& e) {
  const Algebra& a = mu2.source();
  const Algebra& sq = mu2.square();
  const Morphism left = embedding(a, sq, 0);
  const Morphism right = embedding(a, sq, 1);
  return mu2.morphism().apply(e) - left.apply(e) - right.apply(e);
}

GeneratorLinearMap hd_bar(const GeneratorLinearMap& alpha,
                          const Diagonal& mu2) {
  GeneratorLinearMap out;
  for (const Element& image : alpha.images)
    out.images.push_back(reduced_diagonal_of(mu2, image));
  return out;
}

}  // namespace hmoduli
