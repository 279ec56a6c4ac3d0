#include "opran/range_rep.hpp"

#include <utility>
#include <vector>

#include "opran/errors.hpp"

namespace opran {

Cardinal prefix_dim(const RangeRep& rep, std::size_t n) {
  Cardinal total = Cardinal::finite(0);
  for (std::size_t k = 1; k <= n; ++k) total = card_add(total, rep.shells().at(k));
  return total;
}

Cardinal tail_dim(const RangeRep& rep, std::size_t n) {
  return card_add(rep.perp_dim(), card_series_sum_from(rep.shells(), n + 1));
}

bool admits_disjoint_unitary(const RangeRep& rep) {
  std::size_t stable = rep.shells().prefix_length();
  return card_series_sum(rep.shells()) <= tail_dim(rep, stable);
}

std::optional<std::size_t> vneu_witness(const RangeRep& rep) {
  if (admits_disjoint_unitary(rep)) return std::nullopt;
  // A refuted rep always violates at some n <= prefix length + 1: past the
  // prefix both sides are constant except for one more tail term.
  for (std::size_t n = 1; n <= rep.shells().prefix_length() + 1; ++n)
    if (prefix_dim(rep, n) > tail_dim(rep, n)) return n;
  throw NumericError("refuted rep with no violating index; unreachable");
}

RangeRep merge_adjacent(const RangeRep& rep, std::size_t n) {
  if (n == 0) throw ContractError("merge index is 1-based");
  const DimSeq& s = rep.shells();
  std::size_t keep = std::max(n + 1, s.prefix_length());
  std::vector<Cardinal> entries;
  for (std::size_t k = 1; k <= keep; ++k) entries.push_back(s.at(k));
  Cardinal fused = card_add(entries[n - 1], entries[n]);
  entries[n - 1] = Cardinal::finite(0);
  entries[n] = fused;
  return RangeRep(rep.perp_dim(), DimSeq(std::move(entries), s.tail()));
}

RangeRep enlarge(const RangeRep& rep) {
  if (!admits_disjoint_unitary(rep))
    throw PreconditionError("enlargement inapplicable: rep is refuted");
  Cardinal total = rep.total_dim();
  if (total.is_finite())
    throw PreconditionError("enlargement inapplicable: ambient dimension is finite");
  return RangeRep(Cardinal::finite(0), DimSeq({}, total));
}

bool unitarily_equiv_sufficient(const RangeRep& a, const RangeRep& b) {
  return a.perp_dim() == b.perp_dim() && a.shells() == b.shells();
}

RangeRep direct_sum_copies(const RangeRep& rep, Cardinal kappa) {
  if (kappa < Cardinal::finite(1)) throw ContractError("need at least one copy");
  std::vector<Cardinal> prefix;
  prefix.reserve(rep.shells().prefix_length());
  for (Cardinal c : rep.shells().prefix()) prefix.push_back(card_mul(c, kappa));
  return RangeRep(card_mul(rep.perp_dim(), kappa),
                  DimSeq(std::move(prefix), card_mul(rep.shells().tail(), kappa)));
}

bool is_small(const RangeRep& rep, Cardinal ambient) {
  if (rep.total_dim() > ambient)
    throw PreconditionError("rep does not fit inside the ambient dimension");
  for (Cardinal c : rep.shells().prefix())
    if (!(c < ambient)) return false;
  return rep.shells().tail() < ambient;
}

bool sum_pert_admits(const RangeRep& small_range, const RangeRep& rep, Cardinal ambient) {
  if (!ambient.is_infinite())
    throw PreconditionError("sum perturbation law needs an infinite ambient dimension");
  if (!is_small(small_range, ambient))
    throw PreconditionError("perturbing range is not small for the ambient dimension");
  return admits_disjoint_unitary(rep);
}

}  // namespace opran
