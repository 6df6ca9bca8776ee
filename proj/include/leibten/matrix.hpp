#ifndef LEIBTEN_MATRIX_HPP
#define LEIBTEN_MATRIX_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "leibten/rational.hpp"

namespace leibten {

using Vector = std::vector<Rational>;
// Coordinates keyed by index; zero entries are never stored.
using SparseVector = std::map<std::size_t, Rational>;

Vector zero_vector(std::size_t n);
bool is_zero(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t n);
SparseVector to_sparse(const Vector& v);
void add_to(SparseVector& acc, std::size_t index, const Rational& value);
void axpy(Vector& y, const Rational& a, const Vector& x);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Rational>& entries() const { return data_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);
  void set_column(std::size_t c, const SparseVector& v);

  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;

  // Places `other` with its top-left corner at (r0, c0).
  void paste(const Matrix& other, std::size_t r0, std::size_t c0);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix rref;                           // reduced row echelon form
  std::vector<std::size_t> pivot_cols;   // one per nonzero row, increasing
};

// Fraction-free elimination on integer-scaled rows, then back-substitution.
// Pivot choice: first column with a nonzero entry at or below the current
// row, and within it the first such row.
RowEchelon reduced_echelon(const Matrix& m);

std::size_t rank(const Matrix& m);
std::vector<Vector> kernel_basis(const Matrix& m);

// dim ker(d_out) - rank(d_in); d_in maps into the domain of d_out.
std::size_t quotient_dim(const Matrix& d_out, const Matrix& d_in);

// Some x with a*x = b (free variables set to zero), or nullopt.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

// Two-sided inverse, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);
// Rank of the span of a list of vectors of common length n.
std::size_t span_rank(const std::vector<Vector>& vectors, std::size_t n);

// Canonical basis (rows of the reduced echelon form) of a span.
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t n);

// Reduces v against a reduced-echelon basis: zeroes the basis pivots.
Vector reduce_modulo(const Vector& v, const RowEchelon& basis);

}  // namespace leibten

#endif
