#pragma once

#include <cstddef>
#include <vector>

#include "opran/matrix.hpp"
#include "opran/subspace.hpp"

namespace opran {

// A list of rotation planes: pairs (p_j, q_j) of orthonormal directions with
// the p-frame orthogonal to the q-frame. Needs 2n ambient dimensions for n
// planes; everything outside the planes is left fixed.
class RotationFamilySpec {
public:
  RotationFamilySpec(Subspace p_frame, Subspace q_frame);

  const Subspace& p() const { return p_; }
  const Subspace& q() const { return q_; }
  std::size_t ambient_dim() const { return p_.ambient_dim(); }
  std::size_t pair_count() const { return p_.dim(); }

private:
  Subspace p_;
  Subspace q_;
};

// One-parameter family of self-adjoint unitaries: on each plane the
// reflection R(t) diag(1,-1) R(-t), i.e. [[cos 2t, sin 2t], [sin 2t,
// -cos 2t]] in the (p_j, q_j) basis; identity elsewhere. Every member
// squares to the identity; distinct parameters in [0, pi/2) move a line
// spanned by p off itself in genuinely different directions.
ComplexMatrix selfadjoint_unitary_family(const RotationFamilySpec& spec, double t);

// One-parameter rotation group: angle-t rotation in every plane. Satisfies
// U_{t+s} = U_t U_s exactly and ||U_t - U_s|| <= |t - s|.
ComplexMatrix rotation_group(const RotationFamilySpec& spec, double t);

struct PerturbationResult {
  ComplexMatrix w;
  double delta;                   // sin(eps) / (3k)
  double deviation_from_identity; // ||W - I||, equals 2 sin(eps/2)
  double min_pair_distance;       // min over pairs ||W V p_i - p_j||
  std::size_t cover_size;         // centers of the greedy delta-net
};

// Small rotation moving the V-image of a finite point cloud uniformly away
// from the cloud: cover V-images and originals by a delta-net, rotate the
// span of the centers by eps into fresh dimensions. Guarantees
// ||W - I|| <= eps and distance at least delta between rotated V-images and
// originals. Point norms must lie in [1/k, k]; eps in (0, 1]. Throws
// HeadroomError when the ambient space cannot hold a second copy of the
// center span.
PerturbationResult perturbation_rotation(const ComplexMatrix& points, const ComplexMatrix& v,
                                         double eps, std::size_t k);

struct StabilityBound {
  double delta;    // sqrt(lambda_min(T^2 + V T^2 V*))
  double epsilon;  // delta / (2 ||T V*||)
};

// Quantitative stability of "ranges sum to everything": when T^2 + V T^2 V*
// is bounded below, every unitary W within epsilon of the identity keeps
// lambda_min(T^2 + W V T^2 V* W*) >= delta^2 / 4. Throws PreconditionError
// when the lower bound degenerates (combined ranges not the whole space).
StabilityBound stability_epsilon(const ComplexMatrix& t, const ComplexMatrix& v);

struct InterleavedPair {
  ComplexMatrix t;                // diagonal positive, range graded dyadically
  ComplexMatrix v;                // coordinate swap, v * v = identity
  std::vector<Subspace> r_shells; // grading of rg T
  std::vector<Subspace> s_shells; // grading of the swapped copy
};

// Truncation of the interleaved two-copy construction: ambient dimension
// 2(m-1), each copy's first graded block is the other copy's coordinate
// block, V swaps the copies and carries the second grading onto the first.
// The ranges sum to everything with a lower bound that stabilizes as m
// grows. m >= 2.
InterleavedPair interleaved_counterexample(std::size_t m);

// Whether U moves the given subspace completely off itself: the
// intersection of U R with R is zero-dimensional. U must be unitary.
bool verify_disjoint(const ComplexMatrix& u, const Subspace& r);

}  // namespace opran
