#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "arsss/matrix.hpp"

namespace arsss {

/// B = V2 G V1 with V1, V2 unimodular and B diagonal (pivots b_ii nonzero for
/// i < rank). The diagonal need not satisfy the divisibility chain.
struct SmithDecomposition {
  BigMatrix v2;
  BigMatrix b;
  BigMatrix v1;
  std::size_t rank = 0;
};

/// Row Hermite reduction followed by column clearing with smallest-pivot
/// selection. Works for any rank.
SmithDecomposition diagonalize(const IntMatrix& g);
/// Same, but requires full row rank. Throws NotFullRank.
SmithDecomposition smith_normal_form(const IntMatrix& g);

using BigVector = std::vector<BigInt>;

/// Integer solutions of G X = Y: X = particular + sum_j r_j free_basis[j].
struct DiophantineSolutionSet {
  BigVector particular;
  std::vector<BigVector> free_basis;
  bool divisibility_ok = false;
  /// Rows of V1^-1 that read the free parameters off a solution: r_j = <w_j, X>.
  std::vector<BigVector> free_readout;
};

DiophantineSolutionSet solve_diophantine(const IntMatrix& g, std::span<const std::int64_t> y);

/// Enumeration cap for lattice and state enumeration: 1e8 unless the
/// ARSSS_ENUM_CAP environment variable overrides it.
std::uint64_t enumeration_cap();

/// Visits every solution with lo <= X <= hi componentwise. Free parameters are
/// ranged by bounding r_j = <w_j, X> over the box. Throws TooLarge when the
/// parameter grid exceeds `cap`. Returns the number of solutions visited.
std::uint64_t enumerate_box_solutions(const DiophantineSolutionSet& sol, std::span<const std::int64_t> lo,
                                      std::span<const std::int64_t> hi,
                                      const std::function<void(std::span<const std::int64_t>)>& visit,
                                      std::uint64_t cap = enumeration_cap());
std::uint64_t count_box_solutions(const DiophantineSolutionSet& sol, std::span<const std::int64_t> lo,
                                  std::span<const std::int64_t> hi, std::uint64_t cap = enumeration_cap());

}  // namespace arsss
