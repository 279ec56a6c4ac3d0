#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "opran/cardinal.hpp"
#include "opran/errors.hpp"

using opran::Cardinal;
using opran::DimSeq;

namespace {

std::vector<Cardinal> test_pool() {
  return {Cardinal::finite(0),  Cardinal::finite(1), Cardinal::finite(2),
          Cardinal::finite(7),  Cardinal::finite(1000000), Cardinal::aleph(0),
          Cardinal::aleph(1),   Cardinal::aleph(2),  Cardinal::aleph(3)};
}

}  // namespace

TEST_CASE("cardinal ordering") {
  CHECK(Cardinal::finite(1000000) < Cardinal::aleph(0));
  CHECK(Cardinal::aleph(0) == Cardinal::aleph(0));
  CHECK(Cardinal::aleph(2) > Cardinal::aleph(1));
  CHECK(Cardinal::finite(3) < Cardinal::finite(4));

  auto pool = test_pool();
  for (const auto& a : pool)
    for (const auto& b : pool)
      for (const auto& c : pool) {
        // total order sanity: antisymmetry and transitivity
        if (a <= b && b <= a) CHECK(a == b);
        if (a <= b && b <= c) CHECK(a <= c);
      }
}

TEST_CASE("cardinal addition") {
  CHECK(card_add(Cardinal::finite(2), Cardinal::finite(3)) == Cardinal::finite(5));
  CHECK(card_add(Cardinal::aleph(0), Cardinal::finite(7)) == Cardinal::aleph(0));
  CHECK(card_add(Cardinal::aleph(1), Cardinal::aleph(0)) == Cardinal::aleph(1));

  auto pool = test_pool();
  for (const auto& a : pool)
    for (const auto& b : pool) {
      CHECK(card_add(a, b) == card_add(b, a));
      if (a.is_infinite() && b <= a) CHECK(card_add(a, b) == a);
      for (const auto& c : pool)
        CHECK(card_add(card_add(a, b), c) == card_add(a, card_add(b, c)));
    }
}

TEST_CASE("finite addition overflow is an error") {
  Cardinal huge = Cardinal::finite(std::numeric_limits<std::uint64_t>::max());
  CHECK_THROWS_AS((void)card_add(huge, Cardinal::finite(1)), opran::OverflowError);
  CHECK(card_add(huge, Cardinal::aleph(0)) == Cardinal::aleph(0));
}

TEST_CASE("cardinal multiplication") {
  CHECK(card_mul(Cardinal::finite(0), Cardinal::aleph(1)) == Cardinal::finite(0));
  CHECK(card_mul(Cardinal::aleph(1), Cardinal::finite(0)) == Cardinal::finite(0));
  CHECK(card_mul(Cardinal::finite(2), Cardinal::finite(3)) == Cardinal::finite(6));
  CHECK(card_mul(Cardinal::finite(2), Cardinal::aleph(0)) == Cardinal::aleph(0));
  CHECK(card_mul(Cardinal::aleph(1), Cardinal::aleph(0)) == Cardinal::aleph(1));
  Cardinal huge = Cardinal::finite(std::numeric_limits<std::uint64_t>::max());
  CHECK_THROWS_AS((void)card_mul(huge, Cardinal::finite(2)), opran::OverflowError);
}

TEST_CASE("dimension sequence canonical form") {
  DimSeq s({Cardinal::finite(1), Cardinal::finite(2), Cardinal::finite(2)}, Cardinal::finite(2));
  CHECK(s.prefix_length() == 1);
  CHECK(s.at(1) == Cardinal::finite(1));
  CHECK(s.at(2) == Cardinal::finite(2));
  CHECK(s.at(100) == Cardinal::finite(2));
  CHECK_THROWS_AS((void)s.at(0), opran::ContractError);

  DimSeq all_tail({Cardinal::aleph(0), Cardinal::aleph(0)}, Cardinal::aleph(0));
  CHECK(all_tail.prefix_length() == 0);
}

TEST_CASE("series sum rules") {
  CHECK(card_series_sum(DimSeq({Cardinal::finite(2), Cardinal::finite(5)}, Cardinal::finite(0))) ==
        Cardinal::finite(7));
  CHECK(card_series_sum(DimSeq({}, Cardinal::finite(1))) == Cardinal::aleph(0));
  CHECK(card_series_sum(DimSeq({Cardinal::aleph(1)}, Cardinal::finite(1))) == Cardinal::aleph(1));
  CHECK(card_series_sum(DimSeq({}, Cardinal::aleph(2))) == Cardinal::aleph(2));
  CHECK(card_series_sum(DimSeq({}, Cardinal::finite(0))) == Cardinal::finite(0));
}

TEST_CASE("series sum is invariant under permuting the prefix") {
  std::vector<Cardinal> prefix{Cardinal::finite(3), Cardinal::aleph(1), Cardinal::finite(0),
                               Cardinal::aleph(0)};
  std::sort(prefix.begin(), prefix.end());
  for (const auto& tail : test_pool()) {
    Cardinal reference = card_series_sum(DimSeq(prefix, tail));
    auto perm = prefix;
    do {
      CHECK(card_series_sum(DimSeq(perm, tail)) == reference);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("series sum is monotone in entrywise order") {
  auto pool = test_pool();
  for (const auto& a : pool)
    for (const auto& b : pool) {
      if (!(a <= b)) continue;
      for (const auto& ta : pool)
        for (const auto& tb : pool) {
          if (!(ta <= tb)) continue;
          Cardinal lo = card_series_sum(DimSeq({a, a}, ta));
          Cardinal hi = card_series_sum(DimSeq({b, b}, tb));
          CHECK(lo <= hi);
        }
    }
}
