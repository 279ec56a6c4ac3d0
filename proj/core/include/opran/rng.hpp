#pragma once

#include <cstdint>
#include <random>

#include "opran/matrix.hpp"

namespace opran {

// Seeded generator for test and verification sampling. Doubles are derived
// from raw engine words, not std distributions, so identical seeds replay
// identical streams on any platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double uniform();
  // Uniform in (0, 1].
  double uniform_pos();
  // Standard normal (Box-Muller).
  double normal();
  Complex complex_normal();
  // Uniform integer in [lo, hi].
  std::uint64_t integer(std::uint64_t lo, std::uint64_t hi);

  ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols);

  // Haar-ish unitary: orthonormalized complex Gaussian with the phase of
  // each diagonal normalization kept positive (modified Gram-Schmidt).
  ComplexMatrix random_unitary(std::size_t n);

  ComplexMatrix random_hermitian(std::size_t n);

  // Unitary with ||I - W|| strictly below max_dev (operator norm), built as
  // Q diag(e^{i theta}) Q* with angles capped by max_dev.
  ComplexMatrix random_unitary_near_identity(std::size_t n, double max_dev);

private:
  std::mt19937_64 engine_;
};

}  // namespace opran
