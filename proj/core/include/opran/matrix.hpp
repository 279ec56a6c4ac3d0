#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace opran {

using Complex = std::complex<double>;

// Dense row-major complex matrix sized for desk-scale verification work
// (dimensions up to a few hundred). Value semantics throughout.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  // Row-major entries; throws ContractError on size mismatch or non-finite
  // values, so external data is validated exactly once on entry.
  static ComplexMatrix from_data(std::size_t rows, std::size_t cols,
                                 std::vector<Complex> data);
  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  const std::vector<Complex>& data() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix operator*(Complex scalar) const;
  friend ComplexMatrix operator*(Complex scalar, const ComplexMatrix& m) {
    return m * scalar;
  }

  double frobenius_norm() const;
  double max_abs() const;

  // Columns [c0, c0+ncols) as a new matrix.
  ComplexMatrix columns(std::size_t c0, std::size_t ncols) const;
  // Rows [r0, r0+nrows) as a new matrix.
  ComplexMatrix rows_block(std::size_t r0, std::size_t nrows) const;
  // Horizontal concatenation.
  static ComplexMatrix hcat(const ComplexMatrix& a, const ComplexMatrix& b);

  bool is_hermitian(double tol) const;
  bool is_unitary(double tol) const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

}  // namespace opran
