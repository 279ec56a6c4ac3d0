#include "opran/range_ops.hpp"

#include <cmath>
#include <utility>

#include "opran/constants.hpp"
#include "opran/decomp.hpp"
#include "opran/errors.hpp"

namespace opran {

std::vector<std::size_t> NumericRangeRep::shell_dims() const {
  std::vector<std::size_t> dims;
  dims.reserve(shells.size());
  for (const Subspace& s : shells) dims.push_back(s.dim());
  return dims;
}

RangeRep NumericRangeRep::to_symbolic() const {
  std::vector<Cardinal> prefix;
  prefix.reserve(shells.size());
  for (const Subspace& s : shells) prefix.push_back(Cardinal::finite(s.dim()));
  return RangeRep(Cardinal::finite(kernel.dim()),
                  DimSeq(std::move(prefix), Cardinal::finite(0)));
}

namespace {

// Bin index for a value rescaled into (0, 1]: shell n covers (2^-n, 2^-(n-1)].
// Values within the snap window of a dyadic boundary count as exactly on it.
std::size_t shell_index(double scaled) {
  double lg = -std::log2(scaled);
  double nearest = std::round(lg);
  if (std::abs(scaled * std::exp2(nearest) - 1.0) <= constants::kBinBoundarySnap)
    return static_cast<std::size_t>(nearest) + 1;
  return static_cast<std::size_t>(std::floor(lg)) + 1;
}

}  // namespace

NumericRangeRep range_shells(const ComplexMatrix& t, double tol) {
  std::size_t n = t.rows();
  // Spectral data of the positive factor (T T*)^(1/2): sizes from the
  // embedding (absolute accuracy even at the bottom), directions from the
  // Gram eigenvectors. Both lists are descending, so they pair up.
  EigResult eig = hermitian_eig(t * t.adjoint());
  std::vector<double> sigma = singular_values(t);
  sigma.resize(n, 0.0);

  double top = sigma.empty() ? 0.0 : sigma.front();
  NumericRangeRep rep{{}, Subspace::zero(n), 0};
  if (top <= 0.0) {
    rep.kernel = Subspace(eig.eigenvectors);
    return rep;
  }

  int exp2 = 0;
  double mantissa = std::frexp(top, &exp2);  // top = mantissa * 2^exp2
  rep.scale_shift = mantissa == 0.5 ? 1 - exp2 : -exp2;
  double scale = std::exp2(rep.scale_shift);

  std::vector<std::vector<std::size_t>> bins;  // shell index -> eigenvector columns
  std::vector<std::size_t> kernel_cols;
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma[i] < tol * top) {
      kernel_cols.push_back(i);
      continue;
    }
    std::size_t shell = shell_index(sigma[i] * scale);
    if (shell > bins.size()) bins.resize(shell);
    bins[shell - 1].push_back(i);
  }

  auto gather = [&](const std::vector<std::size_t>& cols) {
    ComplexMatrix frame(n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) frame(i, j) = eig.eigenvectors(i, cols[j]);
    return Subspace(std::move(frame));
  };
  for (const auto& bin : bins) rep.shells.push_back(gather(bin));
  rep.kernel = gather(kernel_cols);
  return rep;
}

AdjointShellReport adjoint_range_shells(const ComplexMatrix& a, double tol) {
  NumericRangeRep direct = range_shells(a, tol);
  NumericRangeRep adjoint = range_shells(a.adjoint(), tol);
  return AdjointShellReport{direct.shell_dims(), adjoint.shell_dims(), direct.kernel.dim(),
                            adjoint.kernel.dim()};
}

bool douglas_inclusion(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows()) throw ContractError("range comparison needs equal ambient rows");
  return numeric_rank(ComplexMatrix::hcat(b, a), constants::kRankRelTol) ==
         numeric_rank(b, constants::kRankRelTol);
}

ComplexMatrix range_sum(const ComplexMatrix& t, const ComplexMatrix& s) {
  if (t.rows() != s.rows()) throw ContractError("range sum needs equal ambient rows");
  return psd_sqrt(t * t.adjoint() + s * s.adjoint());
}

ComplexMatrix FailureRadiusResult::hat_matrix(const ComplexMatrix& s) const {
  return ComplexMatrix::hcat(s * preimage.frame(), complement.frame());
}

FailureRadiusResult failure_radius(const ComplexMatrix& t, const Subspace& k) {
  if (t.rows() != t.cols()) throw ContractError("failure radius needs a square operator");
  if (k.ambient_dim() != t.rows())
    throw ContractError("subspace ambient does not match the operator");
  if (!douglas_inclusion(k.frame(), t))
    throw PreconditionError("subspace does not lie inside the range");
  if (2 * k.dim() <= t.rows())
    throw PreconditionError("subspace is not wider than its complement");

  // W = preimage of K under T restricted to (ker T)-perp: solve for the
  // right-singular combinations that T keeps inside K.
  SvdResult dec = svd(t);
  double cut = static_cast<double>(t.rows()) * dec.singular_values.front() *
               constants::kRankRelTol;
  std::size_t rank = 0;
  while (rank < dec.singular_values.size() && dec.singular_values[rank] > cut) ++rank;
  ComplexMatrix vr = dec.right.columns(0, rank);
  ComplexMatrix image = t * vr;  // n x rank
  ComplexMatrix off_k = image - k.projector() * image;
  ComplexMatrix null = nullspace_basis(off_k, constants::kRankRelTol);
  Subspace w = Subspace::span_of(vr * null);
  if (w.dim() != k.dim())
    throw NumericError("preimage dimension drifted from the subspace dimension");

  FailureRadiusResult out{0.0, w, orthogonal_complement(k)};
  std::vector<double> sv = singular_values(out.hat_matrix(t));
  out.epsilon = sv.back();
  return out;
}

}  // namespace opran
