#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arsss/matrix.hpp"

namespace arsss {

enum class GeneratorKind { custom, random, vandermonde, cauchy, circulant, kronecker, evenodd, ring };

std::string kind_name(GeneratorKind kind);
/// Accepts the names produced by kind_name, plus "array-*" aliases. Throws BadParams.
GeneratorKind parse_kind(const std::string& name);

/// Integer generator with its scheme parameters. For array constructions
/// `block` is the array length l and the matrix is nl x kl; otherwise 1.
struct GeneratorMatrix {
  IntMatrix matrix;
  int n = 0;
  int k = 0;
  int L = 0;
  int block = 1;
  GeneratorKind kind = GeneratorKind::custom;
};
using BlockGeneratorMatrix = GeneratorMatrix;

struct RankCheck {
  bool ok = true;
  /// 1 or 2 when a condition fails.
  int failed_condition = 0;
  /// Offending (block) rows, 0-based.
  std::vector<std::size_t> witness;
};

/// Exhaustive check of both rank conditions over every (block) row subset.
/// Throws BadParams when the shape does not fit k, L and the block size.
RankCheck check_rank_conditions(const IntMatrix& g, int k, int L, int block = 1);
RankCheck check_rank_conditions(const GeneratorMatrix& g);

/// Wraps a matrix read from a file; verifies the rank conditions and throws
/// RankConditionViolated on failure.
GeneratorMatrix make_generator(IntMatrix matrix, int k, int L, int block = 1,
                               GeneratorKind kind = GeneratorKind::custom);

/// Rows (1, a, a^2, ...) with a = i, reduced modulo the smallest prime N > n.
GeneratorMatrix vandermonde_generator(int n, int k, int L = 1);
/// 1/(x_i - y_j) over the smallest prime N >= n + k, x_i = i-1, y_j = n+j-1.
GeneratorMatrix cauchy_generator(int n, int k, int L = 1);
/// Entries uniform in [0, C(n,k) + C(n,k-L)], resampled until both rank
/// conditions hold.
GeneratorMatrix random_generator(int n, int k, int L, std::uint64_t seed);
/// (k, 1, k) upper bidiagonal 0/1 matrix. Throws BadParams for k < 2.
GeneratorMatrix circulant_generator(int k);

struct GeneratorScore {
  BigInt oc;
  BigInt il;
};

/// OC = max row sum of |G|, IL = product of all row sums. Block generators
/// are scored per scalar row.
GeneratorScore score(const IntMatrix& g);
inline GeneratorScore score(const GeneratorMatrix& g) { return score(g.matrix); }

/// Inclusive upper bound for random entries.
std::int64_t random_entry_bound(int n, int k, int L);

}  // namespace arsss
