#include "opran/unitary.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "opran/constants.hpp"
#include "opran/decomp.hpp"
#include "opran/errors.hpp"

namespace opran {

RotationFamilySpec::RotationFamilySpec(Subspace p_frame, Subspace q_frame)
    : p_(std::move(p_frame)), q_(std::move(q_frame)) {
  if (p_.ambient_dim() != q_.ambient_dim())
    throw ContractError("rotation frames live in different ambient spaces");
  if (p_.dim() != q_.dim()) throw ContractError("rotation frames pair up one to one");
  if (2 * p_.dim() > p_.ambient_dim())
    throw ContractError("rotation planes need twice their count in ambient dimensions");
  ComplexMatrix cross = p_.frame().adjoint() * q_.frame();
  if (cross.max_abs() > constants::kFrameTol)
    throw ContractError("rotation frames are not mutually orthogonal");
}

namespace {

// I + sum over planes of a 2x2 block expressed against (p_j, q_j):
// coefficients (pp, pq, qp, qq) on p_j p_j*, p_j q_j*, q_j p_j*, q_j q_j*.
ComplexMatrix assemble_planes(const RotationFamilySpec& spec, double pp, double pq, double qp,
                              double qq) {
  std::size_t n = spec.ambient_dim();
  ComplexMatrix u = ComplexMatrix::identity(n);
  const ComplexMatrix& p = spec.p().frame();
  const ComplexMatrix& q = spec.q().frame();
  for (std::size_t j = 0; j < spec.pair_count(); ++j)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        u(r, c) += pp * p(r, j) * std::conj(p(c, j)) + pq * p(r, j) * std::conj(q(c, j)) +
                   qp * q(r, j) * std::conj(p(c, j)) + qq * q(r, j) * std::conj(q(c, j));
  return u;
}

}  // namespace

ComplexMatrix selfadjoint_unitary_family(const RotationFamilySpec& spec, double t) {
  if (t < 0.0 || t >= std::numbers::pi / 2)
    throw ContractError("family parameter must lie in [0, pi/2)");
  double c2 = std::cos(2 * t), s2 = std::sin(2 * t);
  return assemble_planes(spec, c2 - 1.0, s2, s2, -c2 - 1.0);
}

ComplexMatrix rotation_group(const RotationFamilySpec& spec, double t) {
  double c = std::cos(t), s = std::sin(t);
  return assemble_planes(spec, c - 1.0, -s, s, c - 1.0);
}

PerturbationResult perturbation_rotation(const ComplexMatrix& points, const ComplexMatrix& v,
                                         double eps, std::size_t k) {
  std::size_t ambient = points.rows(), count = points.cols();
  if (count == 0) throw ContractError("empty point set");
  if (eps <= 0.0 || eps > 1.0) throw ContractError("rotation angle must lie in (0, 1]");
  if (k == 0) throw ContractError("norm bound k must be positive");
  if (v.rows() != ambient || v.cols() != ambient)
    throw ContractError("unitary does not match the point dimensions");
  if (!v.is_unitary(constants::kUnitaryTol)) throw ContractError("V is not unitary");
  for (std::size_t j = 0; j < count; ++j) {
    double norm = 0;
    for (std::size_t i = 0; i < ambient; ++i) norm += std::norm(points(i, j));
    norm = std::sqrt(norm);
    // representation slack: a vector normalized to the boundary may land a
    // few ulps outside it
    double lo = (1.0 - constants::kBoundSlack) / static_cast<double>(k);
    double hi = (1.0 + constants::kBoundSlack) * static_cast<double>(k);
    if (norm < lo || norm > hi)
      throw ContractError("point norms must lie in [1/k, k]");
  }

  double delta = std::sin(eps) / (3.0 * static_cast<double>(k));

  // Greedy delta-net over the V-images and the originals.
  ComplexMatrix cloud = ComplexMatrix::hcat(v * points, points);
  std::vector<std::size_t> centers;
  for (std::size_t j = 0; j < cloud.cols(); ++j) {
    bool covered = false;
    for (std::size_t c : centers) {
      double dist = 0;
      for (std::size_t i = 0; i < ambient; ++i) dist += std::norm(cloud(i, j) - cloud(i, c));
      if (std::sqrt(dist) <= delta) {
        covered = true;
        break;
      }
    }
    if (!covered) centers.push_back(j);
  }
  ComplexMatrix center_mat(ambient, centers.size());
  for (std::size_t j = 0; j < centers.size(); ++j)
    for (std::size_t i = 0; i < ambient; ++i) center_mat(i, j) = cloud(i, centers[j]);

  Subspace span = Subspace::span_of(center_mat);
  Subspace complement = orthogonal_complement(span);
  if (complement.dim() < span.dim())
    throw HeadroomError("ambient space cannot hold a rotated copy of the center span");
  RotationFamilySpec spec(span, Subspace(complement.frame().columns(0, span.dim())));
  ComplexMatrix w = rotation_group(spec, eps);

  PerturbationResult out{std::move(w), delta, 0.0, std::numeric_limits<double>::infinity(),
                         centers.size()};
  out.deviation_from_identity = operator_norm(out.w - ComplexMatrix::identity(ambient));
  ComplexMatrix moved = out.w * (v * points);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      double dist = 0;
      for (std::size_t i = 0; i < ambient; ++i) dist += std::norm(moved(i, a) - points(i, b));
      out.min_pair_distance = std::min(out.min_pair_distance, std::sqrt(dist));
    }
  return out;
}

StabilityBound stability_epsilon(const ComplexMatrix& t, const ComplexMatrix& v) {
  if (t.rows() != t.cols()) throw ContractError("operator must be square");
  if (!t.is_hermitian(constants::kHermitianTol))
    throw ContractError("operator must be Hermitian positive semidefinite");
  if (v.rows() != t.rows() || !v.is_unitary(constants::kUnitaryTol))
    throw ContractError("V must be a unitary of matching size");
  {
    std::vector<double> spectrum = hermitian_eigenvalues(t);
    if (!spectrum.empty() &&
        spectrum.back() < -constants::kBoundSlack * std::max(1.0, spectrum.front()))
      throw ContractError("operator must be Hermitian positive semidefinite");
  }

  ComplexMatrix t2 = t * t;
  ComplexMatrix combined = t2 + v * t2 * v.adjoint();
  std::vector<double> lambda = hermitian_eigenvalues(combined);
  double top = lambda.empty() ? 0.0 : lambda.front();
  double bottom = lambda.empty() ? 0.0 : lambda.back();
  if (bottom <= constants::kNotSurjectiveTol * std::max(top, 1.0))
    throw PreconditionError("ranges do not sum to the whole space");
  double delta = std::sqrt(bottom);
  return StabilityBound{delta, delta / (2.0 * operator_norm(t * v.adjoint()))};
}

InterleavedPair interleaved_counterexample(std::size_t m) {
  if (m < 2) throw ContractError("truncation index must be at least 2");
  std::size_t half = m - 1, dim = 2 * half;
  // Coordinates 0..half-1 carry the first copy's block (the second copy's
  // grading), coordinates half..dim-1 the reverse.
  ComplexMatrix t(dim, dim), v(dim, dim);
  for (std::size_t j = 0; j < half; ++j) {
    t(j, j) = 0.5;
    t(half + j, half + j) = std::exp2(-static_cast<double>(j + 2));
    v(j, half + j) = 1.0;
    v(half + j, j) = 1.0;
  }

  auto axis_block = [dim](std::size_t first, std::size_t n) {
    ComplexMatrix frame(dim, n);
    for (std::size_t j = 0; j < n; ++j) frame(first + j, j) = 1.0;
    return Subspace(std::move(frame));
  };
  InterleavedPair out{std::move(t), std::move(v), {}, {}};
  out.r_shells.push_back(axis_block(0, half));
  for (std::size_t j = 0; j < half; ++j) out.r_shells.push_back(axis_block(half + j, 1));
  out.s_shells.push_back(axis_block(half, half));
  for (std::size_t j = 0; j < half; ++j) out.s_shells.push_back(axis_block(j, 1));
  return out;
}

bool verify_disjoint(const ComplexMatrix& u, const Subspace& r) {
  if (u.rows() != u.cols() || u.rows() != r.ambient_dim())
    throw ContractError("unitary does not match the subspace ambient");
  if (!u.is_unitary(constants::kUnitaryTol)) throw ContractError("U is not unitary");
  Subspace moved = Subspace::span_of(u * r.frame());
  return subspace_intersection(moved, r).dim() == 0;
}

}  // namespace opran
