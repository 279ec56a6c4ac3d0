#include "opran/cardinal.hpp"

#include <limits>
#include <utility>

#include "opran/errors.hpp"

namespace opran {

Cardinal card_add(Cardinal a, Cardinal b) {
  if (a.is_finite() && b.is_finite()) {
    std::uint64_t sum = a.value() + b.value();
    if (sum < a.value())
      throw OverflowError("cardinal addition overflows the native integer range");
    return Cardinal::finite(sum);
  }
  return card_max(a, b);
}

Cardinal card_mul(Cardinal a, Cardinal b) {
  if (a.is_zero() || b.is_zero()) return Cardinal::finite(0);
  if (a.is_finite() && b.is_finite()) {
    std::uint64_t prod;
    if (__builtin_mul_overflow(a.value(), b.value(), &prod))
      throw OverflowError("cardinal multiplication overflows the native integer range");
    return Cardinal::finite(prod);
  }
  return card_max(a, b);
}

DimSeq::DimSeq(std::vector<Cardinal> prefix, Cardinal tail)
    : prefix_(std::move(prefix)), tail_(tail) {
  while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

Cardinal DimSeq::at(std::size_t n) const {
  if (n == 0) throw ContractError("sequence entries are 1-based");
  return n <= prefix_.size() ? prefix_[n - 1] : tail_;
}

Cardinal card_series_sum(const DimSeq& seq) {
  if (seq.tail().is_zero()) {
    Cardinal total = Cardinal::finite(0);
    for (Cardinal c : seq.prefix()) total = card_add(total, c);
    return total;
  }
  Cardinal tail_part =
      seq.tail().is_finite() ? Cardinal::aleph(0) : card_max(seq.tail(), Cardinal::aleph(0));
  Cardinal sup = tail_part;
  for (Cardinal c : seq.prefix()) sup = card_max(sup, c);
  return sup;
}

Cardinal card_series_sum_from(const DimSeq& seq, std::size_t first) {
  if (first == 0) throw ContractError("sequence entries are 1-based");
  std::vector<Cardinal> rest;
  for (std::size_t n = first; n <= seq.prefix_length(); ++n) rest.push_back(seq.at(n));
  return card_series_sum(DimSeq(std::move(rest), seq.tail()));
}

}  // namespace opran
