#include "arsss/scheme.hpp"

#include <algorithm>
#include <set>

#include "arsss/matrix_io.hpp"

namespace arsss {

void SecretSpec::validate() const {
  if (L < 1) throw Error(ErrorCode::BadParams, "secret needs at least one symbol");
  if (q < 1) throw Error(ErrorCode::BadParams, "secret resolution must be at least 1");
  if (m < 2) throw Error(ErrorCode::WidthMismatch, "probability vectors need m >= 2");
  if (q % m != 0) throw Error(ErrorCode::NotDivisible, "m must divide q");
}

Rng::Rng() {
  std::random_device rd;
  std::seed_seq seq{rd(), rd(), rd(), rd()};
  engine_.seed(seq);
}

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

ProbVector sample_restricted(std::int64_t q, int m, Rng& rng) {
  AlphabetSpec{q, m, true}.validate();
  const std::int64_t cap = 2 * q / m;
  const std::int64_t slots = q + m - 1;
  std::vector<std::int64_t> values(static_cast<std::size_t>(m));
  while (true) {
    // m-1 distinct bar positions among q+m-1 slots (Floyd's algorithm).
    std::set<std::int64_t> bars;
    for (std::int64_t j = slots - (m - 1); j < slots; ++j) {
      const std::int64_t t = rng.uniform(0, j);
      if (!bars.insert(t).second) bars.insert(j);
    }
    std::int64_t prev = -1;
    std::size_t c = 0;
    for (auto b : bars) {
      values[c++] = b - prev - 1;
      prev = b;
    }
    values[c] = slots - prev - 1;
    if (std::all_of(values.begin(), values.end(), [cap](std::int64_t v) { return v <= cap; })) {
      return make_prob_vector(values, m);
    }
  }
}

ProbSequence make_auxiliary(const ProbSequence& secret, std::size_t k, Rng& rng) {
  if (secret.empty()) throw Error(ErrorCode::BadParams, "empty secret");
  if (k < secret.size()) throw Error(ErrorCode::BadParams, "k is smaller than the secret length");
  const std::int64_t q = secret[0].resolution();
  for (const auto& s : secret) {
    if (s.resolution() != q) throw Error(ErrorCode::BadParams, "secret symbols must share one resolution");
    if (!s.is_restricted()) throw Error(ErrorCode::NotRestricted, "secret symbols must be restricted");
  }
  SecretSpec{static_cast<int>(secret.size()), q, secret.width()}.validate();
  ProbSequence x = secret;
  while (x.size() < k) x.push_back(sample_restricted(q, secret.width(), rng));
  return x;
}

namespace {

bool has_negative_entry(const IntMatrix& g) {
  return std::any_of(g.data().begin(), g.data().end(), [](std::int64_t v) { return v < 0; });
}

ProbSequence gather(const ProbSequence& seq, int block, const std::vector<int>& indices) {
  ProbSequence out;
  const auto b = static_cast<std::size_t>(block);
  for (int idx : indices) {
    const auto start = static_cast<std::size_t>(idx - 1) * b;
    if (idx < 1 || start + b > seq.size()) throw Error(ErrorCode::DimensionMismatch, "share index out of range");
    for (std::size_t t = 0; t < b; ++t) out.push_back(seq[start + t]);
  }
  return out;
}

/// Checks 1-based share indices and returns the scalar rows of the first k.
std::vector<std::size_t> selected_rows(const GeneratorMatrix& g, const std::vector<int>& indices) {
  std::set<int> seen;
  for (int idx : indices) {
    if (idx < 1 || idx > g.n) throw Error(ErrorCode::BadParams, "share index " + std::to_string(idx) + " out of range");
    if (!seen.insert(idx).second) throw Error(ErrorCode::BadParams, "duplicate share index " + std::to_string(idx));
  }
  if (indices.size() < static_cast<std::size_t>(g.k)) {
    throw Error(ErrorCode::NotEnoughShares, "need " + std::to_string(g.k) + " shares, got " +
                                                std::to_string(indices.size()));
  }
  std::vector<std::size_t> rows;
  const auto b = static_cast<std::size_t>(g.block);
  for (std::size_t i = 0; i < static_cast<std::size_t>(g.k); ++i)
    for (std::size_t t = 0; t < b; ++t) rows.push_back(static_cast<std::size_t>(indices[i] - 1) * b + t);
  return rows;
}

ProbSequence first_k(const GeneratorMatrix& g, const ProbSequence& y_subset, std::size_t listed) {
  const auto need = static_cast<std::size_t>(g.k * g.block);
  if (y_subset.size() != listed * static_cast<std::size_t>(g.block)) {
    throw Error(ErrorCode::DimensionMismatch, "share symbols do not match the listed indices");
  }
  return y_subset.slice(0, need);
}

}  // namespace

ProbSequence SharesBundle::share(int index) const { return gather(shares, block, {index}); }

SharesBundle encode(const GeneratorMatrix& g, const ProbSequence& x, bool with_negatives) {
  if (x.size() != g.matrix.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "auxiliary sequence length must equal the generator width");
  }
  const RankCheck check = check_rank_conditions(g);
  if (!check.ok) throw Error(ErrorCode::RankConditionViolated, "generator fails the rank conditions");
  if (!x.all_restricted()) throw Error(ErrorCode::NotRestricted, "auxiliary symbols must be restricted");

  SharesBundle bundle;
  bundle.shares = matrix_circle_mul(g.matrix, x);
  if (with_negatives) bundle.negatives = matrix_circle_mul(g.matrix, negate(x));
  bundle.generator_fingerprint = fingerprint(g.matrix);
  for (int i = 1; i <= g.n; ++i) bundle.indices.push_back(i);
  bundle.m = x.width();
  bundle.q = x[0].resolution();
  bundle.L = g.L;
  bundle.k = g.k;
  bundle.block = g.block;
  const int symbols = static_cast<int>(x.size());
  bundle.synthesis_ops = (with_negatives || has_negative_entry(g.matrix)) ? 2 * symbols : symbols;
  return bundle;
}

ProbSequence gather_shares(const SharesBundle& bundle, const std::vector<int>& indices) {
  return gather(bundle.shares, bundle.block, indices);
}

ProbSequence recover(const GeneratorMatrix& g, const std::vector<int>& indices, const ProbSequence& y_subset,
                     std::int64_t q) {
  const auto rows = selected_rows(g, indices);
  const ProbSequence y = first_k(g, y_subset, indices.size());
  const std::vector<std::int64_t> qs(g.matrix.cols(), q);
  const ProbSequence x = circle_decode(select_rows(g.matrix, rows), y, qs);
  return x.slice(0, static_cast<std::size_t>(g.L * g.block));
}

ProbSequence recover(const GeneratorMatrix& g, const std::vector<int>& indices, const ProbSequence& y_subset) {
  const auto rows = selected_rows(g, indices);
  const ProbSequence y = first_k(g, y_subset, indices.size());
  const ProbSequence x = circle_decode(select_rows(g.matrix, rows), y);
  return x.slice(0, static_cast<std::size_t>(g.L * g.block));
}

ProbSequence recover(const GeneratorMatrix& g, const SharesBundle& bundle, const std::vector<int>& indices) {
  if (bundle.generator_fingerprint != fingerprint(g.matrix)) {
    throw Error(ErrorCode::FingerprintMismatch, "shares were produced by a different generator");
  }
  selected_rows(g, indices);
  return recover(g, indices, gather_shares(bundle, indices), bundle.q);
}

std::vector<Rational> decode_row(const GeneratorMatrix& g, const std::vector<int>& indices, std::size_t row) {
  const RatMatrix inv = inverse(select_rows(g.matrix, selected_rows(g, indices)));
  if (row >= inv.rows()) throw Error(ErrorCode::BadParams, "decode row out of range");
  const auto r = inv.row(row);
  return {r.begin(), r.end()};
}

Rational MixturePlan::total_units() const {
  Rational total = 0;
  for (const auto& p : positive) total += p.units;
  for (const auto& p : negative) total += p.units;
  return total;
}

MixturePlan plan_mixture(const std::vector<Rational>& a, const std::vector<std::int64_t>& resolutions,
                         MixMethod method, bool negatives_available) {
  if (a.size() != resolutions.size()) {
    throw Error(ErrorCode::DimensionMismatch, "one resolution per decode coefficient expected");
  }
  MixturePlan plan;
  plan.method = method;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const bool neg = a[i] < 0;
    const Rational units = (neg ? Rational(-a[i]) : a[i]) * resolutions[i];
    if (method == MixMethod::single_mix) {
      if (neg && !negatives_available) {
        throw Error(ErrorCode::NegativesUnavailable, "method (i) needs negative shares for negative coefficients");
      }
      plan.positive.push_back({i, neg, units});
    } else if (neg) {
      plan.negative.push_back({i, false, units});
    } else {
      plan.positive.push_back({i, false, units});
    }
  }
  if (method == MixMethod::single_mix) {
    plan.mix_vessels = 1;
    plan.reads = 1;
  } else {
    plan.mix_vessels = static_cast<int>(!plan.positive.empty()) + static_cast<int>(!plan.negative.empty());
    plan.reads = std::max(plan.mix_vessels, 1);
  }
  return plan;
}

namespace {

void pour(RatProbVector& mix, const MixPortion& portion, const ProbVector& vessel) {
  if (portion.units == 0) return;
  const Rational scale = portion.units / vessel.resolution();
  for (std::size_t c = 0; c < mix.values.size(); ++c) mix.values[c] += scale * vessel[c];
  mix.resolution += portion.units;
}

}  // namespace

RatProbVector simulate_mixture(const MixturePlan& plan, const ProbSequence& y,
                               const std::optional<ProbSequence>& y_negative) {
  const auto m = static_cast<std::size_t>(y.width());
  auto vessel = [&](const MixPortion& p) -> const ProbVector& {
    if (p.share_symbol >= y.size()) throw Error(ErrorCode::DimensionMismatch, "portion refers to a missing share");
    if (!p.from_negative) return y[p.share_symbol];
    if (!y_negative) throw Error(ErrorCode::NegativesUnavailable, "plan draws from negative shares that are absent");
    return (*y_negative)[p.share_symbol];
  };
  RatProbVector pos{std::vector<Rational>(m, Rational(0)), 0};
  for (const auto& p : plan.positive) pour(pos, p, vessel(p));
  if (plan.negative.empty()) return pos;

  // Method (ii): |a| y- = 2|a|u - |a| y, so the negative sample is
  // subtracted from a uniform offset after reading.
  RatProbVector neg{std::vector<Rational>(m, Rational(0)), 0};
  for (const auto& p : plan.negative) pour(neg, p, vessel(p));
  for (std::size_t c = 0; c < m; ++c) pos.values[c] += Rational(2) * neg.resolution / m - neg.values[c];
  pos.resolution += neg.resolution;
  return pos;
}

MixtureRecovery recover_by_mixture(const GeneratorMatrix& g, const SharesBundle& bundle,
                                   const std::vector<int>& indices, MixMethod method) {
  if (bundle.generator_fingerprint != fingerprint(g.matrix)) {
    throw Error(ErrorCode::FingerprintMismatch, "shares were produced by a different generator");
  }
  const auto rows = selected_rows(g, indices);
  const std::vector<int> used(indices.begin(), indices.begin() + g.k);
  const ProbSequence y = gather(bundle.shares, bundle.block, used);
  std::optional<ProbSequence> y_neg;
  if (bundle.negatives) y_neg = gather(*bundle.negatives, bundle.block, used);

  const IntMatrix sub = select_rows(g.matrix, rows);
  const RatMatrix inv = inverse(sub);
  const RatMatrix abs_inv = abs_entries(inv);
  const IntMatrix abs_g = abs_entries(sub);
  const Rational u = Rational(bundle.q, bundle.m);
  const auto res = y.resolutions();

  MixtureRecovery out;
  const auto secret_rows = static_cast<std::size_t>(g.L * g.block);
  for (std::size_t r = 0; r < secret_rows; ++r) {
    const auto row = inv.row(r);
    const MixturePlan plan = plan_mixture({row.begin(), row.end()}, res, method, y_neg.has_value());
    const RatProbVector mixed = simulate_mixture(plan, y, y_neg);
    out.reads += plan.reads;
    out.mix_vessels += plan.mix_vessels;

    // x_r = (A (x) Y) + u - (|G^-1||G| 1)_r u
    Rational coupling = 0;
    for (std::size_t s = 0; s < sub.rows(); ++s)
      for (std::size_t t = 0; t < sub.cols(); ++t) coupling += abs_inv(r, s) * abs_g(s, t);
    const Rational offset = u - coupling * u;
    std::vector<std::int64_t> values;
    for (const auto& v : mixed.values) {
      const Rational x = v + offset;
      if (!is_integer(x) || x < 0) throw Error(ErrorCode::NonIntegralSolution, "mixture does not decode to a symbol");
      values.push_back(to_int64(boost::multiprecision::numerator(x)));
    }
    out.secret.push_back(make_prob_vector(values, bundle.m));
  }
  return out;
}

CostReport cost_report(int n, int k, int L) {
  return {k, n, L, 2 * L, k, 2 * k};
}

namespace {

/// Member `index` (0-based) of Q_{q,m} in the lexicographic order of enumerate_alphabet.
ProbVector unrank_alphabet(BigInt index, std::int64_t q, int m) {
  std::vector<std::int64_t> values(static_cast<std::size_t>(m), 0);
  std::int64_t remaining = q;
  for (int pos = 0; pos + 1 < m; ++pos) {
    const int rest = m - pos - 1;
    for (std::int64_t v = 0; v <= remaining; ++v) {
      const BigInt block = binomial(remaining - v + rest - 1, rest - 1);
      if (index < block) {
        values[static_cast<std::size_t>(pos)] = v;
        remaining -= v;
        break;
      }
      index -= block;
    }
  }
  values.back() = remaining;
  return make_prob_vector(values, m);
}

BigInt rank_alphabet(const ProbVector& x) {
  const int m = x.width();
  BigInt index = 0;
  std::int64_t remaining = x.resolution();
  for (int pos = 0; pos + 1 < m; ++pos) {
    const int rest = m - pos - 1;
    for (std::int64_t v = 0; v < x[static_cast<std::size_t>(pos)]; ++v) index += binomial(remaining - v + rest - 1, rest - 1);
    remaining -= x[static_cast<std::size_t>(pos)];
  }
  return index;
}

/// Solves the k x k Vandermonde system over F_p for the polynomial coefficients.
std::vector<std::int64_t> interpolate(const std::vector<std::int64_t>& xs, const std::vector<std::int64_t>& ys,
                                      std::int64_t p) {
  const std::size_t k = xs.size();
  std::vector<std::vector<std::int64_t>> a(k, std::vector<std::int64_t>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = mod_pow(xs[i], static_cast<std::int64_t>(j), p);
    a[i][k] = mod_floor(ys[i], p);
  }
  auto mulmod = [p](std::int64_t x, std::int64_t y) {
    return static_cast<std::int64_t>(static_cast<__int128>(x) * y % p);
  };
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && a[piv][c] == 0) ++piv;
    if (piv == k) throw Error(ErrorCode::Singular, "repeated evaluation points");
    std::swap(a[piv], a[c]);
    const std::int64_t inv = mod_inverse(a[c][c], p);
    for (auto& v : a[c]) v = mulmod(v, inv);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const std::int64_t f = a[r][c];
      for (std::size_t j = c; j <= k; ++j) a[r][j] = mod_floor(a[r][j] - mulmod(f, a[c][j]), p);
    }
  }
  std::vector<std::int64_t> coeffs(k);
  for (std::size_t i = 0; i < k; ++i) coeffs[i] = a[i][k];
  return coeffs;
}

}  // namespace

NaiveBaseline naive_baseline(const ProbSequence& secret, int n, int k, int L, std::int64_t q, Rng& rng,
                             std::int64_t field_cap) {
  if (!(n >= k && k >= L && L >= 1) || secret.size() != static_cast<std::size_t>(L)) {
    throw Error(ErrorCode::BadParams, "naive baseline needs n >= k >= L >= 1 and L secret symbols");
  }
  const int m = secret.width();
  SecretSpec{L, q, m}.validate();
  const BigInt alphabet = restricted_alphabet_size(q, m);
  const BigInt wanted = std::max<BigInt>(alphabet, BigInt(n + 1));
  if (wanted > field_cap) throw Error(ErrorCode::FieldTooLarge, "required field exceeds the configured cap");
  NaiveBaseline out;
  out.field = next_prime_at_least(to_int64(wanted));
  if (out.field > field_cap) throw Error(ErrorCode::FieldTooLarge, "required field exceeds the configured cap");

  // Secret symbols enter the field through their rank in the restricted
  // alphabet; rank within Q'_{q,m} is taken from the full enumeration.
  const auto members = enumerate_alphabet({q, m, true});
  std::vector<std::int64_t> coeffs;
  for (const auto& s : secret) {
    const auto it = std::find(members.begin(), members.end(), s);
    if (it == members.end()) throw Error(ErrorCode::NotRestricted, "secret symbol outside Q'_{q,m}");
    coeffs.push_back(static_cast<std::int64_t>(it - members.begin()));
  }
  for (int j = L; j < k; ++j) coeffs.push_back(rng.uniform(0, out.field - 1));

  out.share_resolution = 0;
  while (alphabet_size(out.share_resolution, m) < out.field) ++out.share_resolution;
  for (int i = 1; i <= n; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = coeffs.size(); j-- > 0;)
      acc = static_cast<std::int64_t>((static_cast<__int128>(acc) * i + coeffs[j]) % out.field);
    out.share_values.push_back(acc);
    out.shares.push_back(unrank_alphabet(acc, out.share_resolution, m));
  }
  out.cost = cost_report(n, k, L);
  return out;
}

ProbSequence naive_recover(const NaiveBaseline& baseline, const std::vector<int>& indices, int k, int L,
                           std::int64_t q, int m) {
  if (indices.size() < static_cast<std::size_t>(k)) throw Error(ErrorCode::NotEnoughShares, "need k shares");
  std::vector<std::int64_t> xs, ys;
  for (int i = 0; i < k; ++i) {
    const int idx = indices[static_cast<std::size_t>(i)];
    if (idx < 1 || static_cast<std::size_t>(idx) > baseline.shares.size()) {
      throw Error(ErrorCode::BadParams, "share index out of range");
    }
    xs.push_back(idx);
    ys.push_back(to_int64(rank_alphabet(baseline.shares[static_cast<std::size_t>(idx - 1)])));
  }
  const auto coeffs = interpolate(xs, ys, baseline.field);
  const auto members = enumerate_alphabet({q, m, true});
  ProbSequence secret;
  for (int j = 0; j < L; ++j) {
    const auto c = static_cast<std::size_t>(coeffs[static_cast<std::size_t>(j)]);
    if (c >= members.size()) throw Error(ErrorCode::NonIntegralSolution, "recovered value outside the alphabet");
    secret.push_back(members[c]);
  }
  return secret;
}

}  // namespace arsss
