#include "arsss/leakage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "arsss/combinatorics.hpp"
#include "arsss/kernels.hpp"

namespace arsss {

SecretCount count_secret_solutions(const IntMatrix& g_subset, const ProbSequence& y_observed, std::int64_t q,
                                   int m, std::size_t secret_symbols) {
  AlphabetSpec{q, m, true}.validate();
  const std::size_t s = g_subset.rows(), k = g_subset.cols();
  const auto mm = static_cast<std::size_t>(m);
  if (y_observed.size() != s || (s > 0 && y_observed.width() != m)) {
    throw Error(ErrorCode::DimensionMismatch, "observation does not match the selected rows");
  }
  if (secret_symbols > k) throw Error(ErrorCode::BadParams, "more secret symbols than unknowns");
  const std::int64_t u = q / m;

  IntMatrix a(s * mm + k, k * mm);
  std::vector<std::int64_t> rhs(a.rows());
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t c = 0; c < mm; ++c) {
      const std::size_t row = i * mm + c;
      std::int64_t shift = 0;
      for (std::size_t j = 0; j < k; ++j) {
        const std::int64_t gij = g_subset(i, j);
        a(row, j * mm + c) = gij;
        if (gij < 0) shift += -2 * gij * u;
      }
      rhs[row] = y_observed[i][c] - shift;
    }
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t c = 0; c < mm; ++c) a(s * mm + j, j * mm + c) = 1;
    rhs[s * mm + j] = q;
  }

  const DiophantineSolutionSet sol = solve_diophantine(a, rhs);
  const std::vector<std::int64_t> lo(k * mm, 0), hi(k * mm, 2 * u);
  SecretCount out;
  const std::size_t key_len = secret_symbols * mm;
  std::vector<std::int64_t> key(key_len);
  enumerate_box_solutions(sol, lo, hi, [&](std::span<const std::int64_t> x) {
    std::copy(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(key_len), key.begin());
    out.per_secret[key] += 1;
    out.total += 1;
  });
  return out;
}

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    return boost::hash_range(v.begin(), v.end());
  }
};

struct Tally {
  std::uint64_t total = 0;
  std::unordered_map<std::uint64_t, std::uint64_t> per_secret;
};

long double xlog2x(std::uint64_t n) {
  return n <= 1 ? 0.0L : static_cast<long double>(n) * std::log2(static_cast<long double>(n));
}

std::vector<std::size_t> rows_of(const GeneratorMatrix& g, const std::vector<int>& subset) {
  std::vector<std::size_t> rows;
  std::vector<int> seen;
  for (int idx : subset) {
    if (idx < 1 || idx > g.n) throw Error(ErrorCode::BadParams, "share index " + std::to_string(idx) + " out of range");
    if (std::find(seen.begin(), seen.end(), idx) != seen.end()) throw Error(ErrorCode::BadParams, "duplicate share index");
    seen.push_back(idx);
    for (int t = 0; t < g.block; ++t) rows.push_back(static_cast<std::size_t>((idx - 1) * g.block + t));
  }
  return rows;
}

std::int64_t row_sum(const IntMatrix& g, std::size_t r) {
  std::int64_t sum = 0;
  for (auto v : g.row(r)) sum += v < 0 ? -v : v;
  return sum;
}

/// log2 |Q_{g_r q, m}| summed over the scalar rows of one share.
double share_alphabet_bits(const GeneratorMatrix& g, int share, std::int64_t q, int m) {
  double bits = 0;
  for (int t = 0; t < g.block; ++t) {
    const std::int64_t gr = row_sum(g.matrix, static_cast<std::size_t>((share - 1) * g.block + t));
    bits += log2_big(alphabet_size(gr * q, m));
  }
  return bits;
}

}  // namespace

LeakageReport conditional_entropy(const GeneratorMatrix& g, const std::vector<int>& subset, std::int64_t q, int m) {
  AlphabetSpec{q, m, true}.validate();
  if (q < 1) throw Error(ErrorCode::BadParams, "resolution must be at least 1");
  const std::size_t kk = g.matrix.cols();
  const std::size_t ll = static_cast<std::size_t>(g.L * g.block);
  const auto mm = static_cast<std::size_t>(m);
  const auto rows = rows_of(g, subset);
  const std::size_t s = rows.size();

  const auto alphabet = enumerate_alphabet({q, m, true});
  const std::uint64_t a = alphabet.size();
  BigInt states = 1;
  for (std::size_t j = 0; j < kk; ++j) states *= a;
  if (states > enumeration_cap()) {
    throw Error(ErrorCode::TooLarge, "enumeration of " + states.str() + " states exceeds the cap");
  }
  BigInt secret_space = 1;
  for (std::size_t j = 0; j < ll; ++j) secret_space *= a;
  if (secret_space > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::TooLarge, "secret space too large to index");
  }

  const IntMatrix sub = select_rows(g.matrix, rows);
  std::vector<std::int32_t> coeff(s * kk);
  std::vector<std::int64_t> bias(s, 0);
  for (std::size_t r = 0; r < s; ++r)
    for (std::size_t j = 0; j < kk; ++j) {
      const std::int64_t v = sub(r, j);
      if (v > std::numeric_limits<std::int32_t>::max() || v < -std::numeric_limits<std::int32_t>::max()) {
        throw Error(ErrorCode::TooLarge, "generator entry too large for enumeration");
      }
      coeff[r * kk + j] = static_cast<std::int32_t>(v);
      if (v < 0) bias[r] += -2 * v * (q / m);
    }
  const kernels::AffineRows op{coeff, bias, s, kk};

  constexpr std::size_t kChunk = 512;
  const std::size_t batch = kChunk * mm;
  std::vector<std::int32_t> in(kk * batch);
  std::vector<std::int64_t> out(s * batch);
  std::vector<std::uint64_t> keys(kChunk);
  std::unordered_map<std::vector<std::int64_t>, Tally, VectorHash> tallies;

  const auto total = states.convert_to<std::uint64_t>();
  std::vector<std::size_t> digit(kk, 0);
  std::vector<std::int64_t> observed(s * mm);
  for (std::uint64_t done = 0; done < total;) {
    const std::size_t n_here = static_cast<std::size_t>(std::min<std::uint64_t>(kChunk, total - done));
    for (std::size_t st = 0; st < n_here; ++st) {
      std::uint64_t key = 0;
      for (std::size_t j = 0; j < kk; ++j) {
        const auto vals = alphabet[digit[j]].values();
        for (std::size_t c = 0; c < mm; ++c) in[j * batch + st * mm + c] = static_cast<std::int32_t>(vals[c]);
        if (j < ll) key = key * a + digit[j];
      }
      keys[st] = key;
      for (std::size_t j = kk; j-- > 0;) {
        if (++digit[j] < a) break;
        digit[j] = 0;
      }
    }
    if (s > 0) kernels::affine_rows(op, in, out, batch);
    for (std::size_t st = 0; st < n_here; ++st) {
      for (std::size_t r = 0; r < s; ++r)
        for (std::size_t c = 0; c < mm; ++c) observed[r * mm + c] = out[r * batch + st * mm + c];
      Tally& t = tallies[observed];
      ++t.total;
      ++t.per_secret[keys[st]];
    }
    done += n_here;
  }

  long double sum_big = 0, sum_small = 0;
  std::uint64_t check = 0;
  for (const auto& [y, t] : tallies) {
    check += t.total;
    sum_big += xlog2x(t.total);
    for (const auto& [secret, n] : t.per_secret) sum_small += xlog2x(n);
  }
  if (check != total) throw Error(ErrorCode::BadParams, "observation probabilities do not sum to one");

  LeakageReport rep;
  rep.subset = subset;
  rep.q = q;
  rep.m = m;
  rep.states = states;
  rep.observations = tallies.size();
  const double log_a = std::log2(static_cast<double>(a));
  rep.h_s = static_cast<double>(ll) * log_a;
  rep.h_s_given_y = static_cast<double>((sum_big - sum_small) / static_cast<long double>(total));
  rep.ratio = rep.h_s > 0 ? rep.h_s_given_y / rep.h_s : 0.0;

  // Lower bound: H(X) - H(Y'') - H(X | S, Y''), each term bounded by alphabet sizes.
  double share_bits = 0;
  for (auto r : rows) {
    const std::int64_t gr = row_sum(g.matrix, r);
    const BigInt size = m == 2 ? BigInt(std::max<std::int64_t>(gr, 1)) * (q + 1)
                               : (gr == 0 ? BigInt(1) : restricted_alphabet_size(gr * q, m));
    share_bits += log2_big(size);
  }
  const auto free_aux = static_cast<double>(kk > ll + s ? kk - ll - s : 0);
  rep.lower_bound = static_cast<double>(kk) * log_a - share_bits - free_aux * log_a;

  // Upper bound: cheapest completion of the observed shares to k shares.
  const std::size_t seen = subset.size();
  const auto k = static_cast<std::size_t>(g.k);
  if (seen >= k) {
    rep.upper_bound = 0;
  } else {
    std::vector<int> unseen;
    for (int i = 1; i <= g.n; ++i)
      if (std::find(subset.begin(), subset.end(), i) == subset.end()) unseen.push_back(i);
    std::vector<double> bits;
    for (int i : unseen) bits.push_back(share_alphabet_bits(g, i, q, m));
    std::sort(bits.begin(), bits.end());
    double best = 0;
    for (std::size_t i = 0; i < k - seen; ++i) best += bits[i];
    rep.upper_bound = best;
  }

  double gap = 0;
  for_each_combination(static_cast<std::size_t>(g.n), k, [&](const std::vector<std::size_t>& pick) {
    double bits = 0;
    for (auto i : pick)
      for (int t = 0; t < g.block; ++t)
        bits += std::log2(static_cast<double>(
            std::max<std::int64_t>(1, row_sum(g.matrix, i * static_cast<std::size_t>(g.block) + static_cast<std::size_t>(t)))));
    gap = std::max(gap, bits);
    return true;
  });
  rep.gap = gap;
  return rep;
}

double closed_form_entropy_212(std::int64_t q) {
  if (q < 1) throw Error(ErrorCode::BadParams, "q must be at least 1");
  BigInt hyper = 1;
  for (std::int64_t i = 2; i <= q + 1; ++i) hyper *= boost::multiprecision::pow(BigInt(i), static_cast<unsigned>(i));
  const double n = static_cast<double>(q + 1);
  return (2.0 * log2_big(hyper) - n * std::log2(n)) / (n * n);
}

AsymptoticSeries asymptotic_check(const GeneratorMatrix& g, const std::vector<int>& subset,
                                  const std::vector<std::int64_t>& qs, int m) {
  AsymptoticSeries series;
  for (auto q : qs) {
    LeakageReport rep = conditional_entropy(g, subset, q, m);
    if (!series.reports.empty() && rep.ratio + kEntropyTolerance < series.reports.back().ratio) {
      series.nondecreasing = false;
    }
    if (rep.h_s_given_y < rep.lower_bound - kEntropyTolerance || rep.h_s_given_y > rep.upper_bound + kEntropyTolerance) {
      series.within_bounds = false;
    }
    series.reports.push_back(std::move(rep));
  }
  return series;
}

}  // namespace arsss
