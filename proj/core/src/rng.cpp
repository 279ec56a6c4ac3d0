#include "opran/rng.hpp"

#include <cmath>
#include <numbers>

#include "opran/errors.hpp"

namespace opran {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform_pos() { return 1.0 - uniform(); }

double Rng::normal() {
  double u1 = uniform_pos();
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_normal() {
  double u1 = uniform_pos();
  double u2 = uniform();
  double radius = std::sqrt(-2.0 * std::log(u1));
  return {radius * std::cos(2.0 * std::numbers::pi * u2),
          radius * std::sin(2.0 * std::numbers::pi * u2)};
}

std::uint64_t Rng::integer(std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw ContractError("empty integer range");
  std::uint64_t span = hi - lo + 1;  // span == 0 means the full 2^64 range
  if (span == 0) return engine_();
  // Rejection sampling keeps the distribution exact and deterministic.
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span + 1) % span;
  std::uint64_t draw = engine_();
  while (draw > limit) draw = engine_();
  return lo + draw % span;
}

ComplexMatrix Rng::gaussian_matrix(std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = complex_normal();
  return m;
}

ComplexMatrix Rng::random_unitary(std::size_t n) {
  ComplexMatrix q = gaussian_matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex dot = 0;
      for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, k)) * q(i, j);
      for (std::size_t i = 0; i < n; ++i) q(i, j) -= dot * q(i, k);
    }
    double norm = 0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(q(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
  }
  return q;
}

ComplexMatrix Rng::random_hermitian(std::size_t n) {
  ComplexMatrix g = gaussian_matrix(n, n);
  return (g + g.adjoint()) * Complex(0.5, 0.0);
}

ComplexMatrix Rng::random_unitary_near_identity(std::size_t n, double max_dev) {
  if (max_dev <= 0) throw ContractError("deviation bound must be positive");
  // ||I - W|| = max_j |1 - e^{i theta_j}| = 2 sin(max |theta| / 2).
  double cap = 2.0 * std::asin(std::min(max_dev, 2.0) / 2.0) * 0.999;
  ComplexMatrix q = random_unitary(n);
  ComplexMatrix w(n, n);
  std::vector<Complex> phase(n);
  for (std::size_t j = 0; j < n; ++j) {
    double theta = (2.0 * uniform() - 1.0) * cap;
    phase[j] = Complex(std::cos(theta), std::sin(theta));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex sum = 0;
      for (std::size_t k = 0; k < n; ++k) sum += q(i, k) * phase[k] * std::conj(q(j, k));
      w(i, j) = sum;
    }
  return w;
}

}  // namespace opran
