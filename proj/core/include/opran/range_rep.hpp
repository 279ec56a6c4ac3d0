#pragma once

#include <cstddef>
#include <optional>

#include "opran/cardinal.hpp"

namespace opran {

// Symbolic description of a dense-in-its-closure operator range: the
// dimension of the orthogonal complement of the closure, plus the dimension
// sequence of the graded components carrying geometrically decaying weight.
// The pair determines the range up to unitary equivalence of closures; the
// component split itself is not unique (see merge_adjacent).
class RangeRep {
public:
  RangeRep(Cardinal perp, DimSeq shells) : perp_(perp), shells_(std::move(shells)) {}

  Cardinal perp_dim() const { return perp_; }
  const DimSeq& shells() const { return shells_; }

  // Ambient space dimension: complement plus all components.
  Cardinal total_dim() const { return card_add(perp_, card_series_sum(shells_)); }

  bool is_closed() const { return shells_.tail().is_zero(); }
  bool is_dense() const { return perp_.is_zero(); }

  friend bool operator==(const RangeRep&, const RangeRep&) = default;

private:
  Cardinal perp_;
  DimSeq shells_;
};

// Dimension of the first n components together.
Cardinal prefix_dim(const RangeRep& rep, std::size_t n);

// Dimension of everything the first n components leave over: the complement
// of the closure plus components n+1 onward. Nonincreasing in n, constant
// once n passes the prefix.
Cardinal tail_dim(const RangeRep& rep, std::size_t n);

// Whether some unitary moves the range completely off itself (intersection
// {0}). Closed form: the total component dimension fits inside the
// stabilized tail_dim. Equivalent to prefix_dim(n) <= tail_dim(n) for all n,
// which the tests exercise by windowed brute force.
bool admits_disjoint_unitary(const RangeRep& rep);

// Empty when the rep is admitted; otherwise the least n whose leading block
// is too large (prefix_dim(n) > tail_dim(n)), which names a closed subspace
// of the range strictly wider than its own complement.
std::optional<std::size_t> vneu_witness(const RangeRep& rep);

// Fuse components n and n+1 into one (the pair becomes zero and the sum).
// Represents the same range; every decision op is invariant under it.
RangeRep merge_adjacent(const RangeRep& rep, std::size_t n);

// For an admitted rep with infinite ambient dimension, the dense extension
// whose components all have full ambient dimension. The extension contains
// the original range. Throws PreconditionError when the rep is refuted or
// the ambient dimension is finite.
RangeRep enlarge(const RangeRep& rep);

// Sufficient (deliberately one-sided) test for unitary equivalence:
// complements equal and components entrywise equal. A false answer decides
// nothing, since the component split is not unique.
bool unitarily_equiv_sufficient(const RangeRep& a, const RangeRep& b);

// Rep of the direct sum of kappa copies (kappa >= 1): complement and every
// component scale by kappa.
RangeRep direct_sum_copies(const RangeRep& rep, Cardinal kappa);

// Whether the range is small for the ambient dimension: every component
// strictly below ambient. This is the normal-form test for membership in
// the norm-closure of the below-ambient-rank ideal. pre: total_dim <= ambient.
bool is_small(const RangeRep& rep, Cardinal ambient);

// Sum-perturbation law: adding an operator whose range is small for an
// infinite ambient dimension never changes the verdict, so the decision for
// the perturbed sum is the decision for the unperturbed rep.
bool sum_pert_admits(const RangeRep& small_range, const RangeRep& rep, Cardinal ambient);

}  // namespace opran
