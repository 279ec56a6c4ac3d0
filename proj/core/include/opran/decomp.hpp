#pragma once

#include <vector>

#include "opran/matrix.hpp"

namespace opran {

struct EigResult {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix eigenvectors;       // unitary, columns matched to eigenvalues
};

// Cyclic complex Jacobi eigendecomposition of a Hermitian matrix. Input must
// be Hermitian within 1e-10 (relative); convergence is off-diagonal
// Frobenius below 1e-13 * ||M||, capped at 100 sweeps (NumericError past
// the cap). Self-contained on purpose: at these sizes accuracy beats speed.
EigResult hermitian_eig(const ComplexMatrix& m);

// Same solver without accumulating eigenvectors; for bound checks in bulk.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

struct SvdResult {
  std::vector<double> singular_values;  // descending, length min(rows, cols)
  ComplexMatrix left;                   // rows x k
  ComplexMatrix right;                  // cols x k
};

// Singular value decomposition through the Jacobi solver on the Hermitian
// embedding [[0, A], [A*, 0]], whose positive spectrum is the singular
// values. Avoids forming A*A, so small singular values keep absolute
// accuracy near machine precision. Left/right columns are reliable only
// where the singular value is safely above the noise floor; rank cuts in
// callers stay well above it.
SvdResult svd(const ComplexMatrix& a);

std::vector<double> singular_values(const ComplexMatrix& a);

// Largest singular value.
double operator_norm(const ComplexMatrix& a);

// Count of singular values above max(rows, cols) * sigma_max * rel_tol.
std::size_t numeric_rank(const ComplexMatrix& a, double rel_tol);

// Orthonormal basis of the column space, cut at the numeric_rank threshold.
ComplexMatrix orthonormal_column_basis(const ComplexMatrix& a, double rel_tol);

// Orthonormal basis of the right nullspace (eigenvectors of A*A at the
// bottom of the spectrum), cut at the same threshold.
ComplexMatrix nullspace_basis(const ComplexMatrix& a, double rel_tol);

// Positive square root of a Hermitian positive semidefinite matrix.
// Eigenvalues may dip to -1e-9 * ||M|| from rounding and are clamped;
// below that the input is rejected as not PSD.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

struct PolarResult {
  ComplexMatrix isometry;  // partial isometry: range(P) -> range(A), kernel(P) -> 0
  ComplexMatrix positive;  // psd_sqrt(A* A)
};

// Polar factorization A = isometry * positive for square A.
PolarResult polar(const ComplexMatrix& a);

}  // namespace opran
