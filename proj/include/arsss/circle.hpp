#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "arsss/matrix.hpp"
#include "arsss/prob.hpp"

namespace arsss {

/// Probability vector with exact rational values; what a rational
/// coefficient produces before recombination brings it back to integers.
struct RatProbVector {
  std::vector<Rational> values;
  Rational resolution;

  bool operator==(const RatProbVector&) const = default;
};
using RatProbSequence = std::vector<RatProbVector>;

RatProbVector to_rational(const ProbVector& x);

// Circle multiplication: g (x) x = g x - g u + |g| u, resolution |g| q.
// Negative coefficients need x restricted (NotRestricted otherwise); zero
// counts as positive and yields the empty q = 0 vector.
ProbVector scalar_circle_mul(std::int64_t g, const ProbVector& x);
RatProbVector scalar_circle_mul(const Rational& g, const ProbVector& x);

/// Y = G (x) X = G X - G U + |G| U. Row i is sum_j g_ij (x) x_j.
/// Throws DimensionMismatch, NotRestricted.
ProbSequence matrix_circle_mul(const IntMatrix& g, const ProbSequence& x);
RatProbSequence matrix_circle_mul(const RatMatrix& g, const ProbSequence& x);

/// Exact inverse; throws Singular.
RatMatrix matrix_inverse_exact(const IntMatrix& g);

/// Resolutions Q of X such that |G| Q equals the share resolutions. Tries the
/// common-resolution solution first, then solves |G| Q = Q_y exactly.
std::vector<std::int64_t> infer_input_resolutions(const IntMatrix& g,
                                                  std::span<const std::int64_t> share_resolutions);

/// X = G^-1 (x) Y + U - |G^-1| |G| U, where U is rebuilt from the share
/// resolutions. Throws Singular, NonIntegralSolution, NotRestricted.
ProbSequence circle_decode(const IntMatrix& g, const ProbSequence& y);
ProbSequence circle_decode(const IntMatrix& g, const ProbSequence& y,
                           std::span<const std::int64_t> input_resolutions);

}  // namespace arsss
