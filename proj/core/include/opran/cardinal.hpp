#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace opran {

// Hilbert space dimension: a finite count or an aleph number. Only the
// alephs reachable by index are representable; that is all the decision
// procedure ever needs.
class Cardinal {
public:
  enum class Kind : std::uint8_t { Finite, Aleph };

  constexpr Cardinal() = default;
  static constexpr Cardinal finite(std::uint64_t n) { return Cardinal(Kind::Finite, n); }
  static constexpr Cardinal aleph(std::uint64_t k) { return Cardinal(Kind::Aleph, k); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_infinite() const { return kind_ == Kind::Aleph; }
  constexpr bool is_zero() const { return is_finite() && value_ == 0; }

  // Finite count, or aleph index, depending on kind.
  constexpr std::uint64_t value() const { return value_; }

  friend constexpr bool operator==(Cardinal, Cardinal) = default;

  // Total order: every finite below every aleph, values in order within a kind.
  friend constexpr std::strong_ordering operator<=>(Cardinal a, Cardinal b) {
    if (a.kind_ != b.kind_)
      return a.is_finite() ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.value_ <=> b.value_;
  }

private:
  constexpr Cardinal(Kind kind, std::uint64_t value) : kind_(kind), value_(value) {}

  Kind kind_ = Kind::Finite;
  std::uint64_t value_ = 0;
};

// Sum. Finite + finite adds (throws OverflowError past the native range,
// never promotes silently); anything involving an aleph is the max.
Cardinal card_add(Cardinal a, Cardinal b);

// Product, used when stacking copies of a representation. Zero absorbs
// regardless of the other factor; otherwise max when either is infinite.
Cardinal card_mul(Cardinal a, Cardinal b);

constexpr Cardinal card_max(Cardinal a, Cardinal b) { return b < a ? a : b; }

// Eventually constant sequence of cardinals: an explicit prefix followed by
// a tail value repeated forever. Canonical form never ends the prefix with
// an entry equal to the tail, so equality of parts is equality of sequences.
class DimSeq {
public:
  DimSeq() = default;
  DimSeq(std::vector<Cardinal> prefix, Cardinal tail);

  const std::vector<Cardinal>& prefix() const { return prefix_; }
  Cardinal tail() const { return tail_; }
  std::size_t prefix_length() const { return prefix_.size(); }

  // 1-based entry; n past the prefix yields the tail.
  Cardinal at(std::size_t n) const;

  friend bool operator==(const DimSeq&, const DimSeq&) = default;

private:
  std::vector<Cardinal> prefix_;
  Cardinal tail_ = Cardinal::finite(0);
};

// Sum of the whole series. A zero tail reduces to the finite fold of the
// prefix; a nonzero finite tail contributes aleph_0; an aleph tail
// contributes itself. Infinite results are the sup of the contributions.
Cardinal card_series_sum(const DimSeq& seq);

// Sum of entries from 1-based index `first` onward.
Cardinal card_series_sum_from(const DimSeq& seq, std::size_t first);

}  // namespace opran
