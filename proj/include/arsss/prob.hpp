#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "arsss/numeric.hpp"

namespace arsss {

/// Alphabet Q_{q,m}, or its restricted subset Q'_{q,m} when `restricted`.
struct AlphabetSpec {
  std::int64_t q = 0;
  int m = 2;
  bool restricted = false;

  /// Throws BadParams / NotDivisible.
  void validate() const;
};

/// One symbol: m non-negative integer probability values summing to the
/// resolution q. Immutable once built.
class ProbVector {
 public:
  ProbVector() = default;

  std::span<const std::int64_t> values() const noexcept { return values_; }
  std::int64_t operator[](std::size_t i) const { return values_[i]; }
  std::int64_t resolution() const noexcept { return q_; }
  int width() const noexcept { return static_cast<int>(values_.size()); }

  /// First value; the whole vector when m = 2.
  std::int64_t scalar() const { return values_.at(0); }

  /// m | q and every value lies in [0, 2q/m].
  bool is_restricted() const noexcept;

  bool operator==(const ProbVector&) const = default;

 private:
  friend ProbVector make_prob_vector(std::span<const std::int64_t>, int);
  std::vector<std::int64_t> values_;
  std::int64_t q_ = 0;
};

/// Throws NegativeValue, WidthMismatch (also for m < 2).
ProbVector make_prob_vector(std::span<const std::int64_t> values, int m);
inline ProbVector make_prob_vector(std::initializer_list<std::int64_t> values, int m) {
  return make_prob_vector(std::span<const std::int64_t>(values.begin(), values.size()), m);
}
/// m = 2 shorthand: (x, q - x).
ProbVector scalar_prob(std::int64_t x, std::int64_t q);

/// (q/m, ..., q/m). Throws NotDivisible.
ProbVector uniform_vector(std::int64_t q, int m);

/// 2u - x. Throws NotRestricted.
ProbVector negate(const ProbVector& x);

BigInt alphabet_size(std::int64_t q, int m);
/// |Q'_{q,m}| by inclusion-exclusion on the per-value cap 2q/m. Throws NotDivisible.
BigInt restricted_alphabet_size(std::int64_t q, int m);

/// Every member of the alphabet in lexicographic order of values.
std::vector<ProbVector> enumerate_alphabet(const AlphabetSpec& spec);

/// Ordered symbols sharing the same width; each symbol keeps its own resolution.
class ProbSequence {
 public:
  ProbSequence() = default;
  explicit ProbSequence(std::vector<ProbVector> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  int width() const noexcept { return symbols_.empty() ? 0 : symbols_.front().width(); }
  const ProbVector& operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const ProbVector> symbols() const noexcept { return symbols_; }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  std::vector<std::int64_t> resolutions() const;
  bool all_restricted() const noexcept;

  /// Throws WidthMismatch.
  void push_back(ProbVector v);

  ProbSequence slice(std::size_t begin, std::size_t end) const;

  bool operator==(const ProbSequence&) const = default;

 private:
  std::vector<ProbVector> symbols_;
};

ProbSequence negate(const ProbSequence& xs);

}  // namespace arsss
