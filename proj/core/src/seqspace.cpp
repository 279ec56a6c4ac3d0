#include "opran/seqspace.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "opran/errors.hpp"

namespace opran {

SeqVector::SeqVector(std::vector<RationalComplex> head, Rational amplitude, Rational ratio)
    : head_(std::move(head)) {
  if (amplitude < 0) throw ContractError("tail amplitude must be nonnegative");
  if (ratio < 0 || ratio >= 1) throw ContractError("tail ratio must lie in [0, 1)");
  tail_ = Tail{std::move(amplitude), std::move(ratio)};
}

std::optional<Rational> weighted_norm_sq(const SeqVector& x, const Rational& base) {
  if (base <= 1) throw ContractError("weight base must exceed 1");
  Rational total = 0;
  Rational power = 1;
  for (const RationalComplex& entry : x.head()) {
    power *= base;
    total += power * entry.abs_sq();
  }
  if (x.has_tail() && x.tail_amplitude() != 0) {
    // sum_{n>m} base^n a^2 r^(2n) with m the head length: geometric in
    // q = base * r^2 starting at q^(m+1).
    Rational q = base * x.tail_ratio() * x.tail_ratio();
    if (q >= 1) return std::nullopt;
    Rational first = q;
    for (std::size_t n = 0; n < x.head().size(); ++n) first *= q;
    total += x.tail_amplitude() * x.tail_amplitude() * first / (1 - q);
  }
  return total;
}

bool canonical_membership(const SeqVector& x) {
  if (!x.has_tail() || x.tail_amplitude() == 0) return true;
  return x.tail_ratio() < Rational(1, 2);
}

namespace {

double norm_sq(const CVec& v) {
  double s = 0;
  for (const auto& z : v) s += std::norm(z);
  return s;
}

}  // namespace

RedistributionResult redistribute(const std::vector<CVec>& blocks,
                                  const std::vector<std::vector<CVec>>& splits) {
  if (blocks.empty()) throw ContractError("need at least one block");
  if (splits.size() != blocks.size())
    throw ContractError("splits must cover exactly the given blocks");
  std::size_t dim = blocks.front().size();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].size() != dim) throw ContractError("block dimensions disagree");
    if (splits[i].size() != i + 1)
      throw ContractError("block n must split into exactly n components");
    for (const CVec& part : splits[i])
      if (part.size() != dim) throw ContractError("split component dimensions disagree");
  }

  std::size_t count = blocks.size();
  std::vector<CVec> y(count, CVec(dim));
  double lhs = 0, rhs = 0;
  for (std::size_t n = 0; n < count; ++n) {
    rhs += std::pow(4.0, static_cast<double>(n + 1)) * norm_sq(blocks[n]);
    for (std::size_t k = 0; k <= n; ++k) {
      lhs += std::pow(4.0, static_cast<double>(k + 1)) * norm_sq(splits[n][k]);
      for (std::size_t j = 0; j < dim; ++j) y[k][j] += splits[n][k][j];
    }
  }
  double tol = 1e-10 * std::max({lhs, rhs, 1.0});
  return RedistributionResult{std::move(y), lhs <= rhs + tol, lhs, rhs};
}

}  // namespace opran
