#include "leibten/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "leibten/error.hpp"

namespace leibten {

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Vector to_dense(const SparseVector& v, std::size_t n) {
  Vector out = zero_vector(n);
  for (const auto& [i, x] : v) out.at(i) = x;
  return out;
}

SparseVector to_sparse(const Vector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) out.emplace(i, v[i]);
  }
  return out;
}

void add_to(SparseVector& acc, std::size_t index, const Rational& value) {
  if (value == 0) return;
  auto [it, inserted] = acc.try_emplace(index, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) acc.erase(it);
  }
}

void axpy(Vector& y, const Rational& a, const Vector& x) {
  if (a == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (x[i] != 0) y[i] += a * x[i];
  }
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw Error(ErrorCode::DimensionMismatch, "matrix entry count does not match shape");
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

void Matrix::set_column(std::size_t c, const SparseVector& v) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = 0;
  for (const auto& [r, x] : v) {
    if (r >= rows_) throw Error(ErrorCode::DimensionMismatch, "sparse column out of range");
    (*this)(r, c) = x;
  }
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  Vector out = zero_vector(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = (*this)(r, c);
      if (a != 0) out[r] += a * v[c];
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

void Matrix::paste(const Matrix& other, std::size_t r0, std::size_t c0) {
  if (r0 + other.rows() > rows_ || c0 + other.cols() > cols_) {
    throw Error(ErrorCode::DimensionMismatch, "paste out of bounds");
  }
  for (std::size_t r = 0; r < other.rows(); ++r)
    for (std::size_t c = 0; c < other.cols(); ++c) (*this)(r0 + r, c0 + c) = other(r, c);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& y = b(k, j);
        if (y != 0) out(i, j) += x * y;
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "sum shape mismatch");
  std::vector<Rational> e(a.entries());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries()[i];
  return Matrix(a.rows(), a.cols(), std::move(e));
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "difference shape mismatch");
  std::vector<Rational> e(a.entries());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.entries()[i];
  return Matrix(a.rows(), a.cols(), std::move(e));
}

Matrix operator*(const Rational& s, const Matrix& a) {
  std::vector<Rational> e(a.entries());
  for (auto& x : e) x *= s;
  return Matrix(a.rows(), a.cols(), std::move(e));
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "hstack row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  m.paste(a, 0, 0);
  m.paste(b, 0, a.cols());
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "vstack column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  m.paste(a, 0, 0);
  m.paste(b, a.rows(), 0);
  return m;
}

RowEchelon reduced_echelon(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  // Integer rows spanning the same row space.
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      if (m(r, c) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (m(r, c) == 0) continue;
      a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
  }

  std::vector<std::size_t> pivots;
  Integer prev = 1;
  Integer rem;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) std::swap(a[p], a[r]);
    const Integer& piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer lead = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = piv * a[i][j] - lead * a[r][j];
        if (v != 0) {
          mpz_tdiv_qr(v.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
          if (rem != 0) throw std::logic_error("fraction-free elimination lost exactness");
        }
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }

  // Back-substitution over the rationals.
  const std::size_t rk = pivots.size();
  Matrix rref(rk, cols);
  for (std::size_t i = 0; i < rk; ++i) {
    const Integer& piv = a[i][pivots[i]];
    for (std::size_t j = 0; j < cols; ++j) {
      if (a[i][j] != 0) {
        Rational q(a[i][j], piv);
        q.canonicalize();
        rref(i, j) = q;
      }
    }
  }
  for (std::size_t i = rk; i-- > 0;) {
    const std::size_t pc = pivots[i];
    for (std::size_t k = 0; k < i; ++k) {
      const Rational f = rref(k, pc);
      if (f == 0) continue;
      for (std::size_t j = pc; j < cols; ++j) {
        if (rref(i, j) != 0) rref(k, j) -= f * rref(i, j);
      }
    }
  }
  return RowEchelon{std::move(rref), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return reduced_echelon(m).pivot_cols.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const RowEchelon e = reduced_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.rref(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t quotient_dim(const Matrix& d_out, const Matrix& d_in) {
  if (d_out.cols() != d_in.rows()) {
    throw Error(ErrorCode::ComplexNotComposable, "middle dimensions disagree");
  }
  if (!(d_out * d_in).is_zero()) {
    throw Error(ErrorCode::ComplexNotComposable, "d_out * d_in is not zero");
  }
  const std::size_t ker = d_out.cols() - rank(d_out);
  return ker - rank(d_in);
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  aug.paste(a, 0, 0);
  for (std::size_t r = 0; r < a.rows(); ++r) aug(r, a.cols()) = b[r];
  const RowEchelon e = reduced_echelon(aug);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == a.cols()) return std::nullopt;
  Vector x = zero_vector(a.cols());
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) x[e.pivot_cols[i]] = e.rref(i, a.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  const RowEchelon e = reduced_echelon(hstack(a, Matrix::identity(n)));
  if (e.pivot_cols.size() < n || (n > 0 && e.pivot_cols[n - 1] >= n)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.rref(r, n + c);
  return inv;
}

std::size_t span_rank(const std::vector<Vector>& vectors, std::size_t n) {
  if (vectors.empty()) return 0;
  return rank(Matrix::from_rows(vectors, n));
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t n) {
  if (vectors.empty()) return {};
  const RowEchelon e = reduced_echelon(Matrix::from_rows(vectors, n));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) out.push_back(e.rref.row(i));
  return out;
}

Vector reduce_modulo(const Vector& v, const RowEchelon& basis) {
  Vector out = v;
  for (std::size_t i = 0; i < basis.pivot_cols.size(); ++i) {
    const Rational f = out[basis.pivot_cols[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (basis.rref(i, j) != 0) out[j] -= f * basis.rref(i, j);
    }
  }
  return out;
}

}  // namespace leibten
