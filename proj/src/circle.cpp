#include "arsss/circle.hpp"

#include <limits>
#include <optional>
#include <string>

#include "arsss/kernels.hpp"

namespace arsss {

namespace {

constexpr std::int64_t kI32Max = std::numeric_limits<std::int32_t>::max();

void require_restricted(const ProbVector& x) {
  if (!x.is_restricted()) {
    throw Error(ErrorCode::NotRestricted,
                "negative coefficient applied to a vector that is not restricted (values must lie in [0, 2q/m])");
  }
}

Rational uniform_value(const ProbVector& x) { return Rational(x.resolution(), x.width()); }

}  // namespace

RatProbVector to_rational(const ProbVector& x) {
  RatProbVector out;
  out.values.assign(x.values().begin(), x.values().end());
  out.resolution = x.resolution();
  return out;
}

ProbVector scalar_circle_mul(std::int64_t g, const ProbVector& x) {
  if (g >= 0) {
    std::vector<std::int64_t> values;
    for (auto v : x.values()) values.push_back(g * v);
    return make_prob_vector(values, x.width());
  }
  const ProbVector neg = negate(x);
  std::vector<std::int64_t> values;
  for (auto v : neg.values()) values.push_back(-g * v);
  return make_prob_vector(values, x.width());
}

RatProbVector scalar_circle_mul(const Rational& g, const ProbVector& x) {
  RatProbVector out;
  const Rational abs_g = g < 0 ? Rational(-g) : g;
  out.resolution = abs_g * x.resolution();
  if (g >= 0) {
    for (auto v : x.values()) out.values.push_back(g * v);
    return out;
  }
  require_restricted(x);
  const Rational u = uniform_value(x);
  for (auto v : x.values()) out.values.push_back(g * v - g * u + abs_g * u);
  return out;
}

ProbSequence matrix_circle_mul(const IntMatrix& g, const ProbSequence& x) {
  if (g.cols() != x.size()) {
    throw Error(ErrorCode::DimensionMismatch, "generator has " + std::to_string(g.cols()) +
                                                  " columns but the sequence has " + std::to_string(x.size()) +
                                                  " symbols");
  }
  const std::size_t k = g.cols();
  const std::size_t rows = g.rows();
  const int m = x.width();
  if (k == 0) throw Error(ErrorCode::DimensionMismatch, "empty sequence");

  // bias_i = sum_j (|g_ij| - g_ij) u_j; only negative entries contribute.
  std::vector<BigInt> bias(rows, 0);
  bool fits = true;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::int64_t gij = g(i, j);
      if (gij < 0) {
        require_restricted(x[j]);
        bias[i] += BigInt(-2 * gij) * (x[j].resolution() / m);
      }
      if (gij > kI32Max || gij < -kI32Max) fits = false;
    }
  }
  for (std::size_t j = 0; j < k && fits; ++j)
    for (auto v : x[j].values())
      if (v > kI32Max) fits = false;

  std::vector<std::int64_t> out(rows * static_cast<std::size_t>(m));
  if (fits) {
    std::vector<std::int32_t> coeff(rows * k), in(k * static_cast<std::size_t>(m));
    std::vector<std::int64_t> bias64(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < k; ++j) coeff[i * k + j] = static_cast<std::int32_t>(g(i, j));
      bias64[i] = to_int64(bias[i]);
    }
    for (std::size_t j = 0; j < k; ++j)
      for (int c = 0; c < m; ++c) in[j * static_cast<std::size_t>(m) + static_cast<std::size_t>(c)] =
          static_cast<std::int32_t>(x[j][static_cast<std::size_t>(c)]);
    kernels::affine_rows({coeff, bias64, rows, k}, in, out, static_cast<std::size_t>(m));
  } else {
    for (std::size_t i = 0; i < rows; ++i)
      for (int c = 0; c < m; ++c) {
        BigInt acc = bias[i];
        for (std::size_t j = 0; j < k; ++j) acc += BigInt(g(i, j)) * x[j][static_cast<std::size_t>(c)];
        out[i * static_cast<std::size_t>(m) + static_cast<std::size_t>(c)] = to_int64(acc);
      }
  }

  std::vector<ProbVector> symbols;
  symbols.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    symbols.push_back(make_prob_vector(
        std::span<const std::int64_t>(out.data() + i * static_cast<std::size_t>(m), static_cast<std::size_t>(m)), m));
  }
  return ProbSequence(std::move(symbols));
}

RatProbSequence matrix_circle_mul(const RatMatrix& g, const ProbSequence& x) {
  if (g.cols() != x.size()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix columns do not match sequence length");
  }
  const auto m = static_cast<std::size_t>(x.width());
  RatProbSequence out(g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    out[i].values.assign(m, Rational(0));
    out[i].resolution = 0;
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (g(i, j) == 0) continue;
      const RatProbVector term = scalar_circle_mul(g(i, j), x[j]);
      for (std::size_t c = 0; c < m; ++c) out[i].values[c] += term.values[c];
      out[i].resolution += term.resolution;
    }
  }
  return out;
}

RatMatrix matrix_inverse_exact(const IntMatrix& g) { return inverse(g); }

std::vector<std::int64_t> infer_input_resolutions(const IntMatrix& g,
                                                  std::span<const std::int64_t> share_resolutions) {
  if (share_resolutions.size() != g.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "one resolution per share expected");
  }
  const IntMatrix abs_g = abs_entries(g);
  std::optional<Rational> common;
  bool consistent = true;
  for (std::size_t i = 0; i < g.rows() && consistent; ++i) {
    std::int64_t row_sum = 0;
    for (std::size_t j = 0; j < g.cols(); ++j) row_sum += abs_g(i, j);
    if (row_sum == 0) {
      consistent = share_resolutions[i] == 0;
      continue;
    }
    const Rational q(share_resolutions[i], row_sum);
    if (!common) common = q;
    else consistent = *common == q;
  }
  if (consistent && common && is_integer(*common) && *common > 0) {
    return std::vector<std::int64_t>(g.cols(), to_int64(boost::multiprecision::numerator(*common)));
  }
  if (g.rows() == g.cols() && is_nonsingular(abs_g)) {
    const RatMatrix inv = inverse(abs_g);
    std::vector<std::int64_t> q(g.cols());
    for (std::size_t j = 0; j < g.cols(); ++j) {
      Rational acc = 0;
      for (std::size_t i = 0; i < g.rows(); ++i) acc += inv(j, i) * share_resolutions[i];
      if (!is_integer(acc) || acc < 0) {
        throw Error(ErrorCode::NonIntegralSolution, "share resolutions are inconsistent with the generator");
      }
      q[j] = to_int64(boost::multiprecision::numerator(acc));
    }
    return q;
  }
  throw Error(ErrorCode::NonIntegralSolution,
              "cannot infer input resolutions from the share resolutions; supply them explicitly");
}

ProbSequence circle_decode(const IntMatrix& g, const ProbSequence& y) {
  const auto q = infer_input_resolutions(g, y.resolutions());
  return circle_decode(g, y, q);
}

ProbSequence circle_decode(const IntMatrix& g, const ProbSequence& y,
                           std::span<const std::int64_t> input_resolutions) {
  if (g.rows() != g.cols() || g.rows() != y.size() || input_resolutions.size() != g.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "decode needs a square generator matching the shares");
  }
  const std::size_t k = g.cols();
  const int m = y.width();
  const RatMatrix g_inv = inverse(g);
  const RatMatrix abs_inv = abs_entries(g_inv);
  const IntMatrix abs_g = abs_entries(g);

  for (std::int64_t q : input_resolutions) {
    if (q % m != 0) throw Error(ErrorCode::NotDivisible, "input resolution not divisible by m");
  }
  // G^-1 (x) Y uses the shares' own uniform vectors (their resolution / m).
  const RatProbSequence z = matrix_circle_mul(g_inv, y);

  std::vector<ProbVector> out;
  out.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    // (U - |G^-1||G| U)_j, a scalar offset shared by every coordinate.
    Rational offset = Rational(input_resolutions[j], m);
    for (std::size_t t = 0; t < k; ++t) {
      Rational coupling = 0;
      for (std::size_t s = 0; s < k; ++s) coupling += abs_inv(j, s) * abs_g(s, t);
      offset -= coupling * Rational(input_resolutions[t], m);
    }
    std::vector<std::int64_t> values;
    values.reserve(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) {
      const Rational v = z[j].values[static_cast<std::size_t>(c)] + offset;
      if (!is_integer(v)) {
        throw Error(ErrorCode::NonIntegralSolution,
                    "decoded value " + to_string(v) + " is not an integer; shares are inconsistent");
      }
      const std::int64_t iv = to_int64(boost::multiprecision::numerator(v));
      if (iv < 0) {
        throw Error(ErrorCode::NotRestricted, "decoded value is negative; shares are inconsistent");
      }
      values.push_back(iv);
    }
    ProbVector x = make_prob_vector(values, m);
    if (x.resolution() != input_resolutions[j] || !x.is_restricted()) {
      throw Error(ErrorCode::NotRestricted, "decoded symbol is not a restricted vector of the expected resolution");
    }
    out.push_back(std::move(x));
  }
  return ProbSequence(std::move(out));
}

}  // namespace arsss
