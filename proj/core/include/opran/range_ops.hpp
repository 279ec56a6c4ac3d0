#pragma once

#include <cstddef>
#include <vector>

#include "opran/matrix.hpp"
#include "opran/range_rep.hpp"
#include "opran/subspace.hpp"

namespace opran {

// Finite-dimensional mirror of RangeRep: spectral subspaces of the positive
// factor of T, binned by dyadic size, plus the kernel of T* (the complement
// of the range) and the power of two used to normalize the top of the
// spectrum.
struct NumericRangeRep {
  std::vector<Subspace> shells;
  Subspace kernel;
  int scale_shift;

  std::vector<std::size_t> shell_dims() const;
  RangeRep to_symbolic() const;
};

// Spectral shell decomposition of the range of T. Singular values are
// rescaled by a power of two so the largest sits in (1/2, 1]; shell n
// collects the spectral directions with value in (2^-n, 2^-(n-1)]. Values
// within 1e-12 (relative) of a dyadic boundary are treated as exactly on it
// and take the bin closing at that boundary, which keeps binning
// deterministic across the T / T* routes. Values below tol * ||T|| form the
// kernel.
NumericRangeRep range_shells(const ComplexMatrix& t, double tol);

struct AdjointShellReport {
  std::vector<std::size_t> shells;
  std::vector<std::size_t> adjoint_shells;
  std::size_t kernel_dim;          // dim ker A* (complement of rg A)
  std::size_t adjoint_kernel_dim;  // dim ker A  (complement of rg A*)
};

// Shell structure of A next to that of A*. The shell lists agree (the
// singular values coincide); the kernel dimensions differ exactly by the
// row/column imbalance.
AdjointShellReport adjoint_range_shells(const ComplexMatrix& a, double tol);

// Range inclusion rg(A) within rg(B) by rank comparison of [B | A] against B.
bool douglas_inclusion(const ComplexMatrix& a, const ComplexMatrix& b);

// Positive operator whose range is rg(T) + rg(S): (T T* + S S*)^(1/2).
ComplexMatrix range_sum(const ComplexMatrix& t, const ComplexMatrix& s);

struct FailureRadiusResult {
  double epsilon;       // smallest singular value of the assembled map
  Subspace preimage;    // W: part of (ker T)-perp that T sends onto K
  Subspace complement;  // orthogonal complement of K

  // The assembled map for a candidate S: columns [S * W_frame | K_perp_frame].
  ComplexMatrix hat_matrix(const ComplexMatrix& s) const;
};

// Radius of operator-norm perturbations under which the oversized closed
// subspace K keeps witnessing the refutation: K must lie inside rg(T) and
// satisfy dim K > dim K_perp. The map (x, h) -> Tx + h on W x K_perp is a
// bijection; its smallest singular value bounds how far S may drift from T
// while S's version stays bijective (the assembled maps are 1-Lipschitz in
// the operator).
FailureRadiusResult failure_radius(const ComplexMatrix& t, const Subspace& k);

}  // namespace opran
