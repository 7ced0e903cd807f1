#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "arsss/circle.hpp"
#include "arsss/generator.hpp"

namespace arsss {

struct SecretSpec {
  int L = 1;
  std::int64_t q = 0;
  int m = 2;

  /// Throws BadParams (L < 1, q < 1) or NotDivisible (m does not divide q).
  void validate() const;
};

/// Seedable source for auxiliary symbols. Without a seed it draws its state
/// from the OS entropy source.
class Rng {
 public:
  Rng();
  explicit Rng(std::uint64_t seed);

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Exactly uniform over Q'_{q,m}: uniform stars-and-bars draw from Q_{q,m},
/// rejected until every value is at most 2q/m.
ProbVector sample_restricted(std::int64_t q, int m, Rng& rng);

/// X = (S, x_{L+1}, ..., x_k) with fresh uniform restricted auxiliaries.
/// For array generators k counts scalar columns (k * l). Throws BadParams.
ProbSequence make_auxiliary(const ProbSequence& secret, std::size_t k, Rng& rng);

struct SharesBundle {
  ProbSequence shares;
  std::optional<ProbSequence> negatives;
  std::string generator_fingerprint;
  /// 1-based share numbers; an array share spans `block` consecutive symbols.
  std::vector<int> indices;
  int m = 2;
  std::int64_t q = 0;
  int L = 0;
  int k = 0;
  int block = 1;
  int synthesis_ops = 0;

  std::vector<std::int64_t> resolutions() const { return shares.resolutions(); }
  /// Symbols belonging to 1-based share `index`.
  ProbSequence share(int index) const;
};

/// Y = G (x) X, and Y- = G (x) X- when requested. Counts one synthesis per
/// auxiliary symbol, doubled when negatives are produced or G has negative
/// entries (those need x- vessels). Throws RankConditionViolated,
/// DimensionMismatch, NotRestricted.
SharesBundle encode(const GeneratorMatrix& g, const ProbSequence& x, bool with_negatives);

/// Symbols of the given 1-based shares, concatenated in the given order.
ProbSequence gather_shares(const SharesBundle& bundle, const std::vector<int>& indices);

/// Secret from the first k listed shares (1-based). `y_subset` holds their
/// symbols in order. Throws NotEnoughShares, NonIntegralSolution, DimensionMismatch.
ProbSequence recover(const GeneratorMatrix& g, const std::vector<int>& indices, const ProbSequence& y_subset,
                     std::int64_t q);
ProbSequence recover(const GeneratorMatrix& g, const std::vector<int>& indices, const ProbSequence& y_subset);
/// Same, drawing shares from a bundle; throws FingerprintMismatch first.
ProbSequence recover(const GeneratorMatrix& g, const SharesBundle& bundle, const std::vector<int>& indices);

/// Row `row` (0-based, scalar) of the exact inverse of the selected k shares.
std::vector<Rational> decode_row(const GeneratorMatrix& g, const std::vector<int>& indices, std::size_t row);

enum class MixMethod { single_mix, split_mix };  // methods (i) and (ii)

struct MixPortion {
  std::size_t share_symbol = 0;  // position within the selected share symbols
  bool from_negative = false;    // drawn from the Y- vessel
  Rational units;                // |a_i| * q_{y_i}
};

struct MixturePlan {
  MixMethod method = MixMethod::single_mix;
  /// Method (i): one mix. Method (ii): positive mix then negative mix.
  std::vector<MixPortion> positive;
  std::vector<MixPortion> negative;
  int mix_vessels = 1;
  int reads = 1;

  Rational total_units() const;
};

/// Plans A (x) Y for one decode row. Method (i) draws negative coefficients
/// from Y- and needs a single read; method (ii) mixes the positive and
/// negative parts separately from Y and needs two reads (one if either part
/// is empty). Throws NegativesUnavailable, DimensionMismatch.
MixturePlan plan_mixture(const std::vector<Rational>& a, const std::vector<std::int64_t>& resolutions,
                         MixMethod method, bool negatives_available);

/// Pools the planned portions: a portion of u units from a vessel holding y
/// at resolution q_y adds (u / q_y) * y. Returns the mixed A (x) Y; for method
/// (ii) the two samples are combined after reading.
RatProbVector simulate_mixture(const MixturePlan& plan, const ProbSequence& y,
                               const std::optional<ProbSequence>& y_negative);

/// Recovers the secret with one planned mixture per secret row, reading each
/// mixed vessel once (or twice for method (ii)). Reports the read total.
struct MixtureRecovery {
  ProbSequence secret;
  int reads = 0;
  int mix_vessels = 0;
};
MixtureRecovery recover_by_mixture(const GeneratorMatrix& g, const SharesBundle& bundle,
                                   const std::vector<int>& indices, MixMethod method);

struct CostReport {
  int naive_reads = 0;
  int naive_synthesis = 0;
  int single_mix_reads = 0;  // method (i)
  int split_mix_reads = 0;   // method (ii)
  int synthesis = 0;         // auxiliaries only
  int synthesis_with_negatives = 0;
};
CostReport cost_report(int n, int k, int L);

/// Finite-field ramp scheme over the smallest prime p >= max(|Q'_{q,m}|, n + 1):
/// f(x) = s_1 + ... + s_L x^{L-1} + r_1 x^L + ... + r_{k-L} x^{k-1}, share i = f(i).
/// Field elements are stored in probability vectors of the smallest
/// resolution whose alphabet holds p symbols; each recovery reads k shares.
struct NaiveBaseline {
  std::int64_t field = 0;
  std::int64_t share_resolution = 0;
  std::vector<std::int64_t> share_values;  // f(1..n)
  ProbSequence shares;
  CostReport cost;
};
constexpr std::int64_t kDefaultFieldCap = std::int64_t{1} << 31;
NaiveBaseline naive_baseline(const ProbSequence& secret, int n, int k, int L, std::int64_t q, Rng& rng,
                             std::int64_t field_cap = kDefaultFieldCap);
/// Inverts the baseline from any k 1-based share indices.
ProbSequence naive_recover(const NaiveBaseline& baseline, const std::vector<int>& indices, int k, int L,
                           std::int64_t q, int m);

}  // namespace arsss
