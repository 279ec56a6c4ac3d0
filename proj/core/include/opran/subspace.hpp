#pragma once

#include "opran/matrix.hpp"

namespace opran {

// Closed subspace of C^ambient carried as an orthonormal column frame.
// Zero-dimensional subspaces are frames with no columns.
class Subspace {
public:
  // Validates orthonormality of the columns within 1e-10.
  explicit Subspace(ComplexMatrix frame);

  // Orthonormalized span of arbitrary columns, rank-truncated.
  static Subspace span_of(const ComplexMatrix& vectors);
  static Subspace zero(std::size_t ambient);

  const ComplexMatrix& frame() const { return frame_; }
  std::size_t ambient_dim() const { return frame_.rows(); }
  std::size_t dim() const { return frame_.cols(); }

  // Orthogonal projection onto the subspace, as a matrix.
  ComplexMatrix projector() const;

private:
  ComplexMatrix frame_;
};

// Intersection via principal angles: directions whose cosine against both
// frames is 1 within 1e-8.
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

// Orthogonal complement within the ambient space.
Subspace orthogonal_complement(const Subspace& s);

}  // namespace opran
