#include "opran/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "opran/constants.hpp"
#include "opran/errors.hpp"

namespace opran {

namespace {

double offdiag_frobenius(const ComplexMatrix& a) {
  double s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One two-sided rotation zeroing A(p,q). The unitary is diag-phase times a
// real Givens rotation; accumulated into V when eigenvectors are wanted.
void rotate(ComplexMatrix& a, ComplexMatrix* v, std::size_t p, std::size_t q) {
  Complex apq = a(p, q);
  double mag = std::abs(apq);
  if (mag == 0.0) return;
  Complex phase = apq / mag;  // e^{i phi}
  double app = a(p, p).real();
  double aqq = a(q, q).real();
  double tau = (aqq - app) / (2.0 * mag);
  double w = std::sqrt(1.0 + tau * tau);
  double t = tau >= 0.0 ? -1.0 / (tau + w) : 1.0 / (-tau + w);
  double c = 1.0 / std::sqrt(1.0 + t * t);
  double s = t * c;
  Complex sp = s * std::conj(phase);  // s e^{-i phi}

  std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {  // A <- A J
    Complex akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp + sp * akq;
    a(k, q) = -s * akp + c * std::conj(phase) * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {  // A <- J* A
    Complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk + s * phase * aqk;
    a(q, k) = -s * apk + c * phase * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
  if (v) {
    for (std::size_t k = 0; k < n; ++k) {
      Complex vkp = (*v)(k, p), vkq = (*v)(k, q);
      (*v)(k, p) = c * vkp + sp * vkq;
      (*v)(k, q) = -s * vkp + c * std::conj(phase) * vkq;
    }
  }
}

// Core cyclic sweep loop; v == nullptr skips eigenvector accumulation.
std::vector<double> jacobi(const ComplexMatrix& m, ComplexMatrix* v) {
  if (m.rows() != m.cols()) throw ContractError("eigendecomposition needs a square matrix");
  if (!m.is_hermitian(constants::kHermitianTol))
    throw ContractError("eigendecomposition needs a Hermitian matrix");

  std::size_t n = m.rows();
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  if (v) *v = ComplexMatrix::identity(n);

  double goal = constants::kJacobiOffdiagTol * m.frobenius_norm();
  bool converged = offdiag_frobenius(a) <= goal;
  for (std::size_t sweep = 0; !converged && sweep < constants::kJacobiMaxSweeps; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    converged = offdiag_frobenius(a) <= goal;
  }
  if (!converged) throw NumericError("Jacobi eigensolver did not converge within the sweep cap");

  std::vector<double> lambda(n);
  for (std::size_t i = 0; i < n; ++i) lambda[i] = a(i, i).real();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return lambda[i] > lambda[j]; });

  std::vector<double> sorted(n);
  for (std::size_t i = 0; i < n; ++i) sorted[i] = lambda[order[i]];
  if (v) {
    ComplexMatrix perm(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) perm(i, j) = (*v)(i, order[j]);
    *v = std::move(perm);
  }
  return sorted;
}

}  // namespace

EigResult hermitian_eig(const ComplexMatrix& m) {
  EigResult r;
  r.eigenvalues = jacobi(m, &r.eigenvectors);
  return r;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  return jacobi(m, nullptr);
}

SvdResult svd(const ComplexMatrix& a) {
  std::size_t r = a.rows(), c = a.cols();
  ComplexMatrix h(r + c, r + c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      h(i, r + j) = a(i, j);
      h(r + j, i) = std::conj(a(i, j));
    }
  EigResult eig = hermitian_eig(h);

  std::size_t k = std::min(r, c);
  SvdResult out;
  out.singular_values.resize(k);
  out.left = ComplexMatrix(r, k);
  out.right = ComplexMatrix(c, k);
  double root2 = std::sqrt(2.0);
  for (std::size_t i = 0; i < k; ++i) {
    out.singular_values[i] = std::max(eig.eigenvalues[i], 0.0);
    for (std::size_t j = 0; j < r; ++j) out.left(j, i) = root2 * eig.eigenvectors(j, i);
    for (std::size_t j = 0; j < c; ++j) out.right(j, i) = root2 * eig.eigenvectors(r + j, i);
  }
  return out;
}

std::vector<double> singular_values(const ComplexMatrix& a) {
  std::size_t r = a.rows(), c = a.cols();
  ComplexMatrix h(r + c, r + c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      h(i, r + j) = a(i, j);
      h(r + j, i) = std::conj(a(i, j));
    }
  std::vector<double> lambda = hermitian_eigenvalues(h);
  std::vector<double> sigma(std::min(r, c));
  for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = std::max(lambda[i], 0.0);
  return sigma;
}

double operator_norm(const ComplexMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  // Largest eigenvalue of the smaller Gram matrix; safe at the top of the
  // spectrum where squaring does not cost accuracy.
  ComplexMatrix gram =
      a.rows() <= a.cols() ? a * a.adjoint() : a.adjoint() * a;
  std::vector<double> lambda = hermitian_eigenvalues(gram);
  return std::sqrt(std::max(lambda.front(), 0.0));
}

namespace {

double rank_threshold(const std::vector<double>& sigma, std::size_t rows, std::size_t cols,
                      double rel_tol) {
  double top = sigma.empty() ? 0.0 : sigma.front();
  return static_cast<double>(std::max(rows, cols)) * top * rel_tol;
}

}  // namespace

std::size_t numeric_rank(const ComplexMatrix& a, double rel_tol) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  std::vector<double> sigma = singular_values(a);
  double cut = rank_threshold(sigma, a.rows(), a.cols(), rel_tol);
  std::size_t rank = 0;
  for (double s : sigma)
    if (s > cut) ++rank;
  return rank;
}

ComplexMatrix orthonormal_column_basis(const ComplexMatrix& a, double rel_tol) {
  if (a.rows() == 0 || a.cols() == 0) return ComplexMatrix(a.rows(), 0);
  SvdResult dec = svd(a);
  double cut = rank_threshold(dec.singular_values, a.rows(), a.cols(), rel_tol);
  std::size_t rank = 0;
  while (rank < dec.singular_values.size() && dec.singular_values[rank] > cut) ++rank;
  ComplexMatrix basis = dec.left.columns(0, rank);
  for (std::size_t j = 0; j < rank; ++j) {  // renormalize against embedding noise
    double norm = 0;
    for (std::size_t i = 0; i < basis.rows(); ++i) norm += std::norm(basis(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < basis.rows(); ++i) basis(i, j) /= norm;
  }
  return basis;
}

ComplexMatrix nullspace_basis(const ComplexMatrix& a, double rel_tol) {
  if (a.cols() == 0) return ComplexMatrix(0, 0);
  if (a.rows() == 0) return ComplexMatrix::identity(a.cols());
  // Nullity from the embedding (absolute accuracy), basis vectors from the
  // Gram matrix, whose bottom eigenvector cluster is orthonormal by
  // construction. Counting on Gram eigenvalues alone would drown exact
  // zeros in squaring noise.
  std::size_t nullity = a.cols() - numeric_rank(a, rel_tol);
  EigResult eig = hermitian_eig(a.adjoint() * a);
  return eig.eigenvectors.columns(a.cols() - nullity, nullity);
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  EigResult eig = hermitian_eig(m);
  double scale = m.frobenius_norm();
  for (double& lambda : eig.eigenvalues) {
    if (lambda < -constants::kBoundSlack * scale)
      throw ContractError("matrix is not positive semidefinite");
    // Eigenvalues below the solver's resolution are numerically zero; left
    // in, the square root would amplify them past rank thresholds (sqrt of
    // 1e-16 noise is 1e-8) and corrupt the range of the result.
    lambda = lambda <= constants::kJacobiOffdiagTol * scale ? 0.0 : lambda;
  }
  std::size_t n = m.rows();
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Complex sum = 0;
      for (std::size_t k = 0; k < n; ++k)
        sum += eig.eigenvectors(i, k) * std::sqrt(eig.eigenvalues[k]) *
               std::conj(eig.eigenvectors(j, k));
      out(i, j) = sum;
      out(j, i) = std::conj(sum);  // exactly Hermitian by construction
    }
  for (std::size_t i = 0; i < n; ++i) out(i, i) = out(i, i).real();
  return out;
}

PolarResult polar(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw ContractError("polar factorization needs a square matrix");
  SvdResult dec = svd(a);
  double cut = rank_threshold(dec.singular_values, a.rows(), a.cols(), constants::kRankRelTol);
  std::size_t n = a.rows();
  ComplexMatrix v(n, n);
  for (std::size_t k = 0; k < dec.singular_values.size() && dec.singular_values[k] > cut; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        v(i, j) += dec.left(i, k) * std::conj(dec.right(j, k));
  return PolarResult{std::move(v), psd_sqrt(a.adjoint() * a)};
}

}  // namespace opran
