#include "tccss/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "tccss/errors.hpp"

namespace tccss {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw SizingError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                      std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                      std::to_string(b.cols()));
  }
}

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw SizingError("matrix dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw SizingError("matrix dimensions must be positive");
  if (data_.size() != rows * cols) {
    throw SizingError("entry count " + std::to_string(data_.size()) + " does not match " +
                      std::to_string(rows) + "x" + std::to_string(cols));
  }
  if (!all_finite()) throw NonFiniteError("matrix entries must be finite");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) throw SizingError("matrix dimensions must be positive");
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw SizingError("ragged initializer list");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  if (!all_finite()) throw NonFiniteError("matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m = *this;
  for (auto& z : m.data_) z = std::conj(z);
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

Complex ComplexMatrix::trace() const {
  if (!square()) throw SizingError("trace of non-square matrix");
  Complex s = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
  return s;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), finite);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "subtract");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw SizingError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                      " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(a, b) - matmul(b, a);
}

Vec7 apply(const ComplexMatrix& a, const Vec7& v) {
  if (a.rows() != kDim || a.cols() != kDim) throw SizingError("apply: expected 7x7 operand");
  Vec7 out{};
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) out[i] += a(i, j) * v[j];
  return out;
}

Vec7 apply_left(const Vec7& row, const ComplexMatrix& a) {
  if (a.rows() != kDim || a.cols() != kDim) throw SizingError("apply_left: expected 7x7 operand");
  Vec7 out{};
  for (std::size_t j = 0; j < kDim; ++j)
    for (std::size_t i = 0; i < kDim; ++i) out[j] += row[i] * a(i, j);
  return out;
}

LuFactors lu_factor(const ComplexMatrix& a) {
  if (!a.square()) throw SizingError("lu_factor: matrix must be square");
  const std::size_t n = a.rows();
  LuFactors f{a, std::vector<std::size_t>(n), 1, a.max_abs(), false, 0};
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
  ComplexMatrix& lu = f.lu;
  const double tiny = kSingularPivot * f.scale;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = std::abs(lu(i, k));
      if (m > best) {
        best = m;
        p = i;
      }
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
      std::swap(f.perm[k], f.perm[p]);
      f.sign = -f.sign;
    }
    if (best < tiny || best == 0.0) {
      if (!f.singular) {
        f.singular = true;
        f.singular_pivot = k;
      }
      continue;
    }
    const Complex pivot = lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex l = lu(i, k) / pivot;
      lu(i, k) = l;
      if (l == Complex{}) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= l * lu(k, j);
    }
  }
  return f;
}

std::vector<Complex> lu_solve(const LuFactors& f, std::span<const Complex> b) {
  const std::size_t n = f.lu.rows();
  if (b.size() != n) throw SizingError("lu_solve: right-hand side length mismatch");
  if (f.singular) {
    throw SingularMatrixError(f.singular_pivot, std::abs(f.lu(f.singular_pivot, f.singular_pivot)));
  }
  std::vector<Complex> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex s = b[f.perm[i]];
    for (std::size_t j = 0; j < i; ++j) s -= f.lu(i, j) * y[j];
    y[i] = s;
  }
  for (std::size_t ii = n; ii-- > 0;) {
    Complex s = y[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= f.lu(ii, j) * y[j];
    y[ii] = s / f.lu(ii, ii);
  }
  return y;
}

ComplexMatrix lu_solve(const LuFactors& f, const ComplexMatrix& b) {
  const std::size_t n = f.lu.rows();
  if (b.rows() != n) throw SizingError("lu_solve: B.rows must equal A.rows");
  ComplexMatrix x(n, b.cols());
  std::vector<Complex> col(n);
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t r = 0; r < n; ++r) col[r] = b(r, c);
    const auto sol = lu_solve(f, std::span<const Complex>(col));
    for (std::size_t r = 0; r < n; ++r) x(r, c) = sol[r];
  }
  return x;
}

ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.square()) throw SizingError("lu_solve: A must be square");
  if (b.rows() != a.rows()) throw SizingError("lu_solve: B.rows must equal A.rows");
  return lu_solve(lu_factor(a), b);
}

Complex det(const ComplexMatrix& a) {
  const LuFactors f = lu_factor(a);
  Complex d = static_cast<double>(f.sign);
  for (std::size_t i = 0; i < a.rows(); ++i) d *= f.lu(i, i);
  return d;
}

std::vector<double> complete_pivot_moduli(const ComplexMatrix& a) {
  if (!a.square()) throw SizingError("complete_pivot_moduli: matrix must be square");
  ComplexMatrix m = a;
  const std::size_t n = m.rows();
  std::vector<double> pivots;
  pivots.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k, pc = k;
    double best = -1.0;
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (std::abs(m(i, j)) > best) {
          best = std::abs(m(i, j));
          pr = i;
          pc = j;
        }
    for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pr, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(m(i, k), m(i, pc));
    pivots.push_back(best);
    if (best == 0.0) continue;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex l = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= l * m(k, j);
    }
  }
  return pivots;
}

}  // namespace tccss
