#include "opran/matrix.hpp"

#include <cmath>
#include <utility>

#include "opran/errors.hpp"

namespace opran {

ComplexMatrix ComplexMatrix::from_data(std::size_t rows, std::size_t cols,
                                       std::vector<Complex> data) {
  if (data.size() != rows * cols)
    throw ContractError("matrix data length does not match rows * cols");
  for (const Complex& z : data)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw ContractError("matrix entries must be finite");
  ComplexMatrix m(rows, cols);
  m.data_ = std::move(data);
  return m;
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw ContractError("matrix product dimension mismatch");
  ComplexMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Complex a = (*this)(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  ComplexMatrix out = *this;
  out += rhs;
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  ComplexMatrix out = *this;
  out -= rhs;
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw ContractError("matrix sum dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw ContractError("matrix difference dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix ComplexMatrix::operator*(Complex scalar) const {
  ComplexMatrix out = *this;
  for (Complex& z : out.data_) z *= scalar;
  return out;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0;
  for (const Complex& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

ComplexMatrix ComplexMatrix::columns(std::size_t c0, std::size_t ncols) const {
  if (c0 + ncols > cols_) throw ContractError("column block out of range");
  ComplexMatrix out(rows_, ncols);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < ncols; ++j) out(i, j) = (*this)(i, c0 + j);
  return out;
}

ComplexMatrix ComplexMatrix::rows_block(std::size_t r0, std::size_t nrows) const {
  if (r0 + nrows > rows_) throw ContractError("row block out of range");
  ComplexMatrix out(nrows, cols_);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(r0 + i, j);
  return out;
}

ComplexMatrix ComplexMatrix::hcat(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows()) throw ContractError("concatenation row mismatch");
  ComplexMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (rows_ != cols_) return false;
  double scale = std::max(1.0, frobenius_norm());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol * scale) return false;
  return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
  if (rows_ != cols_) return false;
  ComplexMatrix gram = adjoint() * (*this);
  gram -= identity(rows_);
  return gram.frobenius_norm() <= tol * std::max(1.0, static_cast<double>(rows_));
}

}  // namespace opran
