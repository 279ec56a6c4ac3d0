#include "opran/subspace.hpp"

#include <cmath>
#include <utility>

#include "opran/constants.hpp"
#include "opran/decomp.hpp"
#include "opran/errors.hpp"

namespace opran {

Subspace::Subspace(ComplexMatrix frame) : frame_(std::move(frame)) {
  if (frame_.cols() > frame_.rows())
    throw ContractError("frame has more columns than ambient dimensions");
  ComplexMatrix gram = frame_.adjoint() * frame_;
  gram -= ComplexMatrix::identity(frame_.cols());
  if (gram.frobenius_norm() > constants::kFrameTol * std::max<std::size_t>(1, frame_.cols()))
    throw ContractError("frame columns are not orthonormal");
}

Subspace Subspace::span_of(const ComplexMatrix& vectors) {
  return Subspace(orthonormal_column_basis(vectors, constants::kRankRelTol));
}

Subspace Subspace::zero(std::size_t ambient) { return Subspace(ComplexMatrix(ambient, 0)); }

ComplexMatrix Subspace::projector() const { return frame_ * frame_.adjoint(); }

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw ContractError("subspaces live in different ambient spaces");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient_dim());
  SvdResult angles = svd(a.frame().adjoint() * b.frame());
  std::size_t count = 0;
  while (count < angles.singular_values.size() &&
         angles.singular_values[count] >= 1.0 - constants::kIntersectionTol)
    ++count;
  if (count == 0) return Subspace::zero(a.ambient_dim());
  // Common directions expressed through a's frame.
  return Subspace::span_of(a.frame() * angles.left.columns(0, count));
}

Subspace orthogonal_complement(const Subspace& s) {
  std::size_t n = s.ambient_dim();
  if (s.dim() == 0) return Subspace(ComplexMatrix::identity(n));
  // Eigenvectors of the projector at eigenvalue 0; the split at 1/2 is safe
  // because projector spectra sit at {0, 1}.
  EigResult eig = hermitian_eig(s.projector());
  std::size_t rank = 0;
  while (rank < n && eig.eigenvalues[rank] > 0.5) ++rank;
  return Subspace(eig.eigenvectors.columns(rank, n - rank));
}

}  // namespace opran
