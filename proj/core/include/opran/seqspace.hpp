#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace opran {

using Rational = boost::multiprecision::cpp_rational;

struct RationalComplex {
  Rational re;
  Rational im;

  Rational abs_sq() const { return re * re + im * im; }
  friend bool operator==(const RationalComplex&, const RationalComplex&) = default;
};

// Square-summable sequence with exactly representable entries: a finite head
// of exact complex rationals, optionally followed by a modulus-geometric
// tail |x_n| = a * r^n (n past the head, r in [0,1) so the vector stays in
// the ambient space).
class SeqVector {
public:
  explicit SeqVector(std::vector<RationalComplex> head) : head_(std::move(head)) {}
  SeqVector(std::vector<RationalComplex> head, Rational amplitude, Rational ratio);

  const std::vector<RationalComplex>& head() const { return head_; }
  bool has_tail() const { return tail_.has_value(); }
  Rational tail_amplitude() const { return tail_ ? tail_->amplitude : Rational(0); }
  Rational tail_ratio() const { return tail_ ? tail_->ratio : Rational(0); }

private:
  struct Tail {
    Rational amplitude;
    Rational ratio;
  };
  std::vector<RationalComplex> head_;
  std::optional<Tail> tail_;
};

// Exact value of sum base^n |x_n|^2, or nothing when the series diverges.
// base > 1. The tail contributes a geometric series with quotient base*r^2;
// it converges exactly when that quotient is below one.
std::optional<Rational> weighted_norm_sq(const SeqVector& x, const Rational& base);

// Membership in the canonical graded range (weight 4): exact, no floating
// point. True iff the weight-4 norm above is finite, i.e. no tail, zero
// amplitude, or r < 1/2.
bool canonical_membership(const SeqVector& x);

using CVec = std::vector<std::complex<double>>;

struct RedistributionResult {
  std::vector<CVec> y_blocks;  // y_k = sum over blocks n >= k of component k
  bool bound_ok;               // weighted mass of the y's within the input mass
  double lhs;                  // sum_k 4^k sum_{n>=k} ||x_k^(n)||^2
  double rhs;                  // sum_n 4^n ||x_n||^2
};

// Regrouping step for merging two graded decompositions: block n comes split
// into components x_1^(n) + ... + x_n^(n), and component k of every block
// from k onward is collected into y_k. For orthogonal splits the weighted
// mass can only shrink (lhs <= rhs); both sides are reported and compared at
// 1e-10 relative tolerance. splits[i] must hold i+1 vectors, all of one
// common dimension, summing to blocks[i].
RedistributionResult redistribute(const std::vector<CVec>& blocks,
                                  const std::vector<std::vector<CVec>>& splits);

}  // namespace opran
