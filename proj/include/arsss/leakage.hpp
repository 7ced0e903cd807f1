#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "arsss/generator.hpp"
#include "arsss/prob.hpp"
#include "arsss/smith.hpp"

namespace arsss {

/// Lattice count of auxiliary sequences consistent with an observation.
struct SecretCount {
  BigInt total;  // N(y)
  /// Secret values (first secret_symbols symbols, flattened) -> number of X.
  std::map<std::vector<std::int64_t>, BigInt> per_secret;
};

/// Solves G_subset (x) X = y over restricted X in Q'_{q,m}^k. Unknowns are the
/// k*m coordinates boxed to [0, 2q/m], with one sum constraint per symbol.
/// Throws TooLarge, DimensionMismatch.
SecretCount count_secret_solutions(const IntMatrix& g_subset, const ProbSequence& y_observed, std::int64_t q,
                                   int m, std::size_t secret_symbols);

struct LeakageReport {
  std::vector<int> subset;  // 1-based shares
  std::int64_t q = 0;
  int m = 2;
  double h_s = 0;
  double h_s_given_y = 0;
  double ratio = 0;
  double lower_bound = 0;
  double upper_bound = 0;
  double gap = 0;
  BigInt states;        // |Q'|^k, the number of equiprobable X
  std::size_t observations = 0;  // distinct Y'' values
};

/// Exact H(S | Y'') for uniform X over Q'_{q,m}^k, grouping every X by the
/// observed shares. `subset` holds 1-based share numbers. Also reports the
/// lower bound H(X) - sum log2 |alphabet of y_i| - (free auxiliaries), the
/// upper bound min over k-share completions of sum log2 |Q_{g_i q, m}| over
/// the unseen shares, and the gap max_I sum_{i in I} log2 g_i.
/// Throws TooLarge when |Q'|^k exceeds enumeration_cap().
LeakageReport conditional_entropy(const GeneratorMatrix& g, const std::vector<int>& subset, std::int64_t q, int m);

/// (2 log2 f(q+1) - (q+1) log2(q+1)) / (q+1)^2 with f the hyperfactorial:
/// H(s | y1) of the (2,1,2) scheme with G = [[1,1],[1,-1]] and m = 2.
double closed_form_entropy_212(std::int64_t q);

struct AsymptoticSeries {
  std::vector<LeakageReport> reports;
  bool nondecreasing = true;
  bool within_bounds = true;
};
AsymptoticSeries asymptotic_check(const GeneratorMatrix& g, const std::vector<int>& subset,
                                  const std::vector<std::int64_t>& qs, int m);

/// Tolerance used when comparing entropies with their bounds.
inline constexpr double kEntropyTolerance = 1e-9;

}  // namespace arsss
