#ifndef HMODULI_LINALG_HPP
#define HMODULI_LINALG_HPP

#include <cstddef>
#include <vector>

#include "hmoduli/rational.hpp"

namespace hmoduli {

/// Dense matrix over Q, row-major. Ambient dimensions in this project stay
/// small (a few hundred at most), so no sparse machinery.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> data);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Matrix operator*(const Matrix& rhs) const;
  bool operator==(const Matrix& rhs) const = default;

  std::vector<Rational> row(std::size_t i) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination. The zero rows
/// are kept (reduced has the same shape as the input); rank counts the
/// nonzero ones.
RrefResult rref(const Matrix& m);

/// A subspace of Q^ambient stored as its unique RREF basis (rows = basis
/// vectors, zero rows dropped). Subspace equality is matrix equality.
class Subspace {
 public:
  Subspace() = default;

  /// Canonicalizes arbitrary spanning rows: RREF then drop zero rows.
  static Subspace span_of(const Matrix& rows);
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }

  bool operator==(const Subspace& rhs) const = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;  // RREF, no zero rows
};

/// Null space of m, as a subspace of Q^cols.
Subspace kernel(const Matrix& m);

/// Largest subspace contained in both; throws on ambient mismatch.
Subspace intersect(const Subspace& a, const Subspace& b);

/// Smallest subspace containing both; throws on ambient mismatch.
Subspace sum(const Subspace& a, const Subspace& b);

/// True iff b is contained in a (same ambient required).
bool contains(const Subspace& a, const Subspace& b);

/// dim a - dim b; throws unless contains(a, b).
std::size_t quotient_dim(const Subspace& a, const Subspace& b);

}  // namespace hmoduli

#endif
