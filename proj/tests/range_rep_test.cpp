#include <doctest.h>

#include <vector>

#include "opran/cardinal.hpp"
#include "opran/errors.hpp"
#include "opran/range_rep.hpp"
#include "opran/rng.hpp"
#include "test_support.hpp"

using opran::Cardinal;
using opran::DimSeq;
using opran::RangeRep;

namespace {

RangeRep separable_rep() {  // countably many one-dimensional shells, dense
  return RangeRep(Cardinal::finite(0), DimSeq({}, Cardinal::finite(1)));
}

RangeRep oversized_first_shell() {  // first shell too large for the rest
  return RangeRep(Cardinal::finite(0),
                  DimSeq({Cardinal::aleph(1)}, Cardinal::finite(1)));
}

RangeRep closed_rep() {
  return RangeRep(Cardinal::finite(3),
                  DimSeq({Cardinal::finite(2)}, Cardinal::finite(0)));
}

}  // namespace

TEST_CASE("prefix and tail dimensions") {
  CHECK(prefix_dim(separable_rep(), 4) == Cardinal::finite(4));
  CHECK(prefix_dim(oversized_first_shell(), 1) == Cardinal::aleph(1));
  CHECK(tail_dim(separable_rep(), 10) == Cardinal::aleph(0));
  CHECK(tail_dim(oversized_first_shell(), 1) == Cardinal::aleph(0));
  CHECK(tail_dim(closed_rep(), 1) == Cardinal::finite(3));

  RangeRep any(Cardinal::aleph(0), DimSeq({Cardinal::finite(4)}, Cardinal::finite(2)));
  CHECK(prefix_dim(any, 1) == any.shells().at(1));
}

TEST_CASE("total dimension and shape predicates") {
  CHECK(separable_rep().total_dim() == Cardinal::aleph(0));
  CHECK(oversized_first_shell().total_dim() == Cardinal::aleph(1));
  CHECK(separable_rep().is_dense());
  CHECK_FALSE(separable_rep().is_closed());
  CHECK(closed_rep().is_closed());
  CHECK_FALSE(closed_rep().is_dense());
}

TEST_CASE("disjoint-unitary decision") {
  CHECK(admits_disjoint_unitary(separable_rep()));
  CHECK_FALSE(admits_disjoint_unitary(oversized_first_shell()));
  CHECK(admits_disjoint_unitary(closed_rep()));
}

TEST_CASE("violation witness") {
  CHECK(vneu_witness(oversized_first_shell()) == 1);
  CHECK_FALSE(vneu_witness(separable_rep()).has_value());
  // Least violating cut: already at n=1 the head (dim 2) exceeds the rest
  // (dim 1), one step before the cut the brute force reports at n=2.
  RangeRep two_one(Cardinal::finite(0),
                   DimSeq({Cardinal::finite(2), Cardinal::finite(1)}, Cardinal::finite(0)));
  CHECK(vneu_witness(two_one) == 1);
}

TEST_CASE("merging adjacent shells") {
  RangeRep rep(Cardinal::finite(0),
               DimSeq({Cardinal::finite(1), Cardinal::finite(1)}, Cardinal::finite(1)));
  RangeRep merged = merge_adjacent(rep, 1);
  CHECK(merged.shells().at(1) == Cardinal::finite(0));
  CHECK(merged.shells().at(2) == Cardinal::finite(2));
  CHECK(merged.shells().tail() == Cardinal::finite(1));

  RangeRep with_zero(Cardinal::finite(0),
                     DimSeq({Cardinal::finite(3), Cardinal::finite(0)}, Cardinal::finite(0)));
  RangeRep swapped = merge_adjacent(with_zero, 1);
  CHECK(swapped.shells().at(1) == Cardinal::finite(0));
  CHECK(swapped.shells().at(2) == Cardinal::finite(3));

  RangeRep infinite(Cardinal::finite(0),
                    DimSeq({Cardinal::aleph(0), Cardinal::aleph(0)}, Cardinal::finite(0)));
  RangeRep absorbed = merge_adjacent(infinite, 1);
  CHECK(absorbed.shells().at(1) == Cardinal::finite(0));
  CHECK(absorbed.shells().at(2) == Cardinal::aleph(0));
}

TEST_CASE("dense enlargement") {
  RangeRep grown = enlarge(separable_rep());
  CHECK(grown.perp_dim() == Cardinal::finite(0));
  CHECK(grown.shells().prefix_length() == 0);
  CHECK(grown.shells().tail() == Cardinal::aleph(0));

  RangeRep big(Cardinal::aleph(1), DimSeq({}, Cardinal::finite(1)));
  RangeRep grown_big = enlarge(big);
  CHECK(grown_big.shells().tail() == Cardinal::aleph(1));
  CHECK(grown_big.perp_dim() == Cardinal::finite(0));

  CHECK_THROWS_AS((void)enlarge(oversized_first_shell()), opran::PreconditionError);
  CHECK_THROWS_AS((void)enlarge(closed_rep()), opran::PreconditionError);  // finite total

  CHECK(admits_disjoint_unitary(grown));
  CHECK(unitarily_equiv_sufficient(grown, enlarge(grown)));
}

TEST_CASE("sufficient unitary equivalence is one-sided") {
  CHECK(unitarily_equiv_sufficient(separable_rep(), separable_rep()));
  RangeRep rep(Cardinal::finite(0),
               DimSeq({Cardinal::finite(1), Cardinal::finite(1)}, Cardinal::finite(1)));
  CHECK_FALSE(unitarily_equiv_sufficient(rep, merge_adjacent(rep, 1)));
  RangeRep a(Cardinal::aleph(0), DimSeq({}, Cardinal::finite(1)));
  RangeRep b(Cardinal::finite(0), DimSeq({}, Cardinal::finite(1)));
  CHECK_FALSE(unitarily_equiv_sufficient(a, b));
}

TEST_CASE("direct sum of copies") {
  RangeRep scaled = direct_sum_copies(separable_rep(), Cardinal::aleph(1));
  CHECK(scaled.perp_dim() == Cardinal::finite(0));
  CHECK(scaled.shells().tail() == Cardinal::aleph(1));

  RangeRep rep(Cardinal::finite(1), DimSeq({Cardinal::finite(2)}, Cardinal::finite(0)));
  CHECK(direct_sum_copies(rep, Cardinal::finite(1)).shells().at(1) == Cardinal::finite(2));
  CHECK(direct_sum_copies(rep, Cardinal::finite(3)).shells().at(1) == Cardinal::finite(6));
  CHECK(direct_sum_copies(rep, Cardinal::finite(3)).perp_dim() == Cardinal::finite(3));
  CHECK_THROWS_AS((void)direct_sum_copies(rep, Cardinal::finite(0)), opran::ContractError);
}

TEST_CASE("smallness against an ambient dimension") {
  CHECK(is_small(separable_rep(), Cardinal::aleph(1)));
  CHECK_FALSE(is_small(oversized_first_shell(), Cardinal::aleph(1)));
  RangeRep bounded(Cardinal::finite(0), DimSeq({}, Cardinal::finite(5)));
  CHECK(is_small(bounded, Cardinal::aleph(0)));
  CHECK_THROWS_AS((void)is_small(oversized_first_shell(), Cardinal::aleph(0)),
                  opran::PreconditionError);  // total exceeds ambient
}

TEST_CASE("perturbation by a small range preserves the decision") {
  CHECK(sum_pert_admits(separable_rep(), separable_rep(), Cardinal::aleph(0)));
  RangeRep finite_shells(Cardinal::finite(0), DimSeq({}, Cardinal::finite(2)));
  CHECK_FALSE(sum_pert_admits(finite_shells, oversized_first_shell(), Cardinal::aleph(1)));
  CHECK(vneu_witness(oversized_first_shell()) == 1);  // the refuting cut carries over
  RangeRep zero(Cardinal::aleph(0), DimSeq({}, Cardinal::finite(0)));
  CHECK(sum_pert_admits(zero, separable_rep(), Cardinal::aleph(0)) ==
        admits_disjoint_unitary(separable_rep()));
  CHECK_THROWS_AS((void)sum_pert_admits(oversized_first_shell(), separable_rep(),
                                        Cardinal::aleph(1)),
                  opran::PreconditionError);
  CHECK_THROWS_AS((void)sum_pert_admits(finite_shells, separable_rep(), Cardinal::finite(9)),
                  opran::PreconditionError);  // finite ambient
}

TEST_CASE("decision equals windowed brute force on random reps") {
  opran::Rng rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    RangeRep rep = testsup::random_rep(rng);
    std::size_t window = rep.shells().prefix_length() + 3;
    bool expected = testsup::oracle_admits(testsup::to_oracle(rep), window);
    CAPTURE(trial);
    CHECK(admits_disjoint_unitary(rep) == expected);

    auto witness = vneu_witness(rep);
    CHECK(witness.has_value() == !expected);
    if (witness) {
      // least cut: violated there, satisfied strictly before
      CHECK_FALSE(prefix_dim(rep, *witness) <= tail_dim(rep, *witness));
      for (std::size_t n = 1; n < *witness; ++n)
        CHECK(prefix_dim(rep, n) <= tail_dim(rep, n));
    }
  }
}

TEST_CASE("decision is representation independent") {
  opran::Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    RangeRep rep = testsup::random_rep(rng);
    bool expected = admits_disjoint_unitary(rep);

    RangeRep merged = rep;
    for (int round = 0; round < 3; ++round)
      merged = merge_adjacent(merged, rng.integer(1, merged.shells().prefix_length() + 2));
    CHECK(admits_disjoint_unitary(merged) == expected);

    std::vector<Cardinal> shifted{Cardinal::finite(0)};
    for (std::size_t n = 1; n <= rep.shells().prefix_length(); ++n)
      shifted.push_back(rep.shells().at(n));
    RangeRep prepended(rep.perp_dim(), DimSeq(shifted, rep.shells().tail()));
    CHECK(admits_disjoint_unitary(prepended) == expected);
  }
}

TEST_CASE("monotone cuts and stabilization") {
  opran::Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    RangeRep rep = testsup::random_rep(rng);
    std::size_t window = rep.shells().prefix_length() + 3;
    for (std::size_t n = 1; n + 1 <= window; ++n) {
      CHECK(prefix_dim(rep, n) <= prefix_dim(rep, n + 1));
      CHECK(tail_dim(rep, n + 1) <= tail_dim(rep, n));
    }
    CHECK(tail_dim(rep, rep.shells().prefix_length() + 1) ==
          tail_dim(rep, rep.shells().prefix_length() + 5));
  }
}

TEST_CASE("closed ranges reduce to a perp comparison") {
  auto pool = std::vector<Cardinal>{Cardinal::finite(0), Cardinal::finite(1), Cardinal::finite(2),
                                    Cardinal::aleph(0)};
  for (const auto& a : pool)
    for (const auto& b : pool)
      for (const auto& perp : pool) {
        RangeRep rep(perp, DimSeq({a, b}, Cardinal::finite(0)));
        bool expected = card_series_sum(rep.shells()) <= perp;
        CHECK(admits_disjoint_unitary(rep) == expected);
      }
}

TEST_CASE("separable nonclosed ranges always admit") {
  opran::Rng rng(55);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Cardinal> prefix;
    std::size_t len = rng.integer(0, 5);
    for (std::size_t i = 0; i < len; ++i)
      prefix.push_back(Cardinal::finite(rng.integer(0, 5)));
    Cardinal tail = rng.integer(0, 1) ? Cardinal::finite(rng.integer(1, 4)) : Cardinal::aleph(0);
    Cardinal perp = rng.integer(0, 1) ? Cardinal::finite(rng.integer(0, 5)) : Cardinal::aleph(0);
    RangeRep rep(perp, DimSeq(prefix, tail));
    REQUIRE(rep.total_dim() == Cardinal::aleph(0));
    CHECK(admits_disjoint_unitary(rep));
  }
}
