#include "arsss/prob.hpp"

#include <numeric>
#include <string>

#include "arsss/error.hpp"

namespace arsss {

void AlphabetSpec::validate() const {
  if (q < 0 || m < 1) {
    throw Error(ErrorCode::BadParams, "alphabet needs q >= 0 and m >= 1");
  }
  if (restricted && q % m != 0) {
    throw Error(ErrorCode::NotDivisible,
                "restricted alphabet needs m | q (q=" + std::to_string(q) + ", m=" + std::to_string(m) + ")");
  }
}

bool ProbVector::is_restricted() const noexcept {
  const auto m = static_cast<std::int64_t>(values_.size());
  if (m == 0 || q_ % m != 0) return false;
  const std::int64_t cap = 2 * q_ / m;
  for (auto v : values_)
    if (v > cap) return false;
  return true;
}

ProbVector make_prob_vector(std::span<const std::int64_t> values, int m) {
  if (m < 2) {
    throw Error(ErrorCode::WidthMismatch, "probability vectors need m >= 2");
  }
  if (values.size() != static_cast<std::size_t>(m)) {
    throw Error(ErrorCode::WidthMismatch, "expected " + std::to_string(m) + " values, got " +
                                              std::to_string(values.size()));
  }
  for (auto v : values) {
    if (v < 0) throw Error(ErrorCode::NegativeValue, "negative probability value " + std::to_string(v));
  }
  ProbVector out;
  out.values_.assign(values.begin(), values.end());
  out.q_ = std::accumulate(values.begin(), values.end(), std::int64_t{0});
  return out;
}

ProbVector scalar_prob(std::int64_t x, std::int64_t q) {
  if (x < 0 || x > q) {
    throw Error(ErrorCode::NegativeValue, "scalar probability " + std::to_string(x) +
                                              " outside [0, " + std::to_string(q) + "]");
  }
  return make_prob_vector({x, q - x}, 2);
}

ProbVector uniform_vector(std::int64_t q, int m) {
  AlphabetSpec{q, m, true}.validate();
  std::vector<std::int64_t> values(static_cast<std::size_t>(m), q / m);
  return make_prob_vector(values, m);
}

ProbVector negate(const ProbVector& x) {
  if (!x.is_restricted()) {
    throw Error(ErrorCode::NotRestricted, "negation needs a restricted probability vector");
  }
  const std::int64_t cap = 2 * x.resolution() / x.width();
  std::vector<std::int64_t> values;
  values.reserve(x.values().size());
  for (auto v : x.values()) values.push_back(cap - v);
  return make_prob_vector(values, x.width());
}

BigInt alphabet_size(std::int64_t q, int m) {
  if (q < 0 || m < 1) throw Error(ErrorCode::BadParams, "alphabet needs q >= 0 and m >= 1");
  return binomial(q + m - 1, m - 1);
}

BigInt restricted_alphabet_size(std::int64_t q, int m) {
  AlphabetSpec{q, m, true}.validate();
  if (q == 0) return 1;
  const std::int64_t cap = 2 * q / m;
  // j = floor(qm / (2q + m)) = floor(q / (cap + 1)) bounds how many values can exceed cap.
  const std::int64_t j = q * m / (2 * q + m);
  BigInt total = 0;
  for (std::int64_t i = 0; i <= std::min<std::int64_t>(j, m); ++i) {
    BigInt term = binomial(m, i) * binomial(q - i * (cap + 1) + m - 1, m - 1);
    if (i % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

std::vector<ProbVector> enumerate_alphabet(const AlphabetSpec& spec) {
  spec.validate();
  if (spec.m < 2) throw Error(ErrorCode::WidthMismatch, "probability vectors need m >= 2");
  const std::int64_t cap = spec.restricted ? 2 * spec.q / spec.m : spec.q;
  std::vector<ProbVector> out;
  std::vector<std::int64_t> values(static_cast<std::size_t>(spec.m), 0);
  // Fill positions 0..m-2 freely, the last one takes the remainder.
  auto recurse = [&](auto&& self, std::size_t pos, std::int64_t remaining) -> void {
    if (pos + 1 == values.size()) {
      if (remaining <= cap) {
        values[pos] = remaining;
        out.push_back(make_prob_vector(values, spec.m));
      }
      return;
    }
    for (std::int64_t v = 0; v <= std::min(cap, remaining); ++v) {
      values[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  recurse(recurse, 0, spec.q);
  return out;
}

ProbSequence::ProbSequence(std::vector<ProbVector> symbols) {
  symbols_.reserve(symbols.size());
  for (auto& s : symbols) push_back(std::move(s));
}

void ProbSequence::push_back(ProbVector v) {
  if (!symbols_.empty() && v.width() != symbols_.front().width()) {
    throw Error(ErrorCode::WidthMismatch, "all symbols in a sequence must share m");
  }
  symbols_.push_back(std::move(v));
}

std::vector<std::int64_t> ProbSequence::resolutions() const {
  std::vector<std::int64_t> out;
  out.reserve(symbols_.size());
  for (const auto& s : symbols_) out.push_back(s.resolution());
  return out;
}

bool ProbSequence::all_restricted() const noexcept {
  for (const auto& s : symbols_)
    if (!s.is_restricted()) return false;
  return true;
}

ProbSequence ProbSequence::slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > symbols_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "sequence slice out of range");
  }
  return ProbSequence(std::vector<ProbVector>(symbols_.begin() + static_cast<std::ptrdiff_t>(begin),
                                              symbols_.begin() + static_cast<std::ptrdiff_t>(end)));
}

ProbSequence negate(const ProbSequence& xs) {
  std::vector<ProbVector> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(negate(x));
  return ProbSequence(std::move(out));
}

}  // namespace arsss
