#include "hmoduli/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace hmoduli {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_)
    throw std::invalid_argument("matrix data size does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return Matrix();
  const std::size_t cols = rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw std::invalid_argument("ragged row list");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

std::vector<Rational> Matrix::row(std::size_t i) const {
  return std::vector<Rational>(data_.begin() + i * cols_,
                               data_.begin() + (i + 1) * cols_);
}

RrefResult rref(const Matrix& m) {
  RrefResult result;
  Matrix a = m;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < a.rows() && a.at(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < a.cols(); ++j)
        std::swap(a.at(sel, j), a.at(pivot_row, j));
    const Rational inv = Rational(1) / a.at(pivot_row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a.at(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == pivot_row || a.at(i, col) == 0) continue;
      const Rational factor = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        a.at(i, j) -= factor * a.at(pivot_row, j);
    }
    result.pivots.push_back(col);
    ++pivot_row;
  }
  result.rank = pivot_row;
  result.reduced = std::move(a);
  return result;
}

Subspace Subspace::span_of(const Matrix& rows) {
  const RrefResult r = rref(rows);
  Subspace s;
  s.ambient_ = rows.cols();
  Matrix basis(r.rank, rows.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j)
      basis.at(i, j) = r.reduced.at(i, j);
  s.basis_ = std::move(basis);
  return s;
}

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(0, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identity(ambient);
  return s;
}

Subspace kernel(const Matrix& m) {
  const RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;

  // One basis vector per free column: free coordinate 1, pivot coordinates
  // read off the reduced matrix with opposite sign.
  std::vector<std::vector<Rational>> rows;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      v[r.pivots[i]] = -r.reduced.at(i, free);
    rows.push_back(std::move(v));
  }
  if (rows.empty()) return Subspace::zero(n);
  Matrix basis = Matrix::from_rows(rows);
  return Subspace::span_of(basis);
}

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace ambient dimension mismatch");
}

}  // namespace

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const std::size_t n = a.ambient_dim();
  const std::size_t p = a.dim();
  const std::size_t q = b.dim();
  if (p == 0 || q == 0) return Subspace::zero(n);

  // Solve A^T u = B^T v: kernel of the n x (p+q) block [A^T | -B^T], then
  // map the u part back through A^T.
  Matrix block(n, p + q);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < p; ++i) block.at(j, i) = a.basis().at(i, j);
    for (std::size_t i = 0; i < q; ++i)
      block.at(j, p + i) = -b.basis().at(i, j);
  }
  const Subspace ker = kernel(block);
  if (ker.dim() == 0) return Subspace::zero(n);
  Matrix vectors(ker.dim(), n);
  for (std::size_t r = 0; r < ker.dim(); ++r)
    for (std::size_t j = 0; j < n; ++j) {
      Rational x = 0;
      for (std::size_t i = 0; i < p; ++i)
        x += ker.basis().at(r, i) * a.basis().at(i, j);
      vectors.at(r, j) = x;
    }
  return Subspace::span_of(vectors);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  Matrix stacked(a.dim() + b.dim(), a.ambient_dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.ambient_dim(); ++j)
      stacked.at(i, j) = a.basis().at(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < a.ambient_dim(); ++j)
      stacked.at(a.dim() + i, j) = b.basis().at(i, j);
  return Subspace::span_of(stacked);
}

bool contains(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return sum(a, b) == a;
}

std::size_t quotient_dim(const Subspace& a, const Subspace& b) {
  if (!contains(a, b))
    throw std::invalid_argument(
        "quotient_dim: second subspace is not contained in the first");
  return a.dim() - b.dim();
}

}  // namespace hmoduli
