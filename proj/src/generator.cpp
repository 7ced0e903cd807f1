#include "arsss/generator.hpp"

#include <random>
#include <sstream>

#include "arsss/combinatorics.hpp"

namespace arsss {

std::string kind_name(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::custom: return "custom";
    case GeneratorKind::random: return "random";
    case GeneratorKind::vandermonde: return "vandermonde";
    case GeneratorKind::cauchy: return "cauchy";
    case GeneratorKind::circulant: return "circulant";
    case GeneratorKind::kronecker: return "array-kronecker";
    case GeneratorKind::evenodd: return "array-evenodd";
    case GeneratorKind::ring: return "array-ring";
  }
  return "custom";
}

GeneratorKind parse_kind(const std::string& name) {
  for (auto kind : {GeneratorKind::custom, GeneratorKind::random, GeneratorKind::vandermonde,
                    GeneratorKind::cauchy, GeneratorKind::circulant, GeneratorKind::kronecker,
                    GeneratorKind::evenodd, GeneratorKind::ring}) {
    const std::string canonical = kind_name(kind);
    if (name == canonical) return kind;
    if (canonical.starts_with("array-") && name == canonical.substr(6)) return kind;
  }
  throw Error(ErrorCode::BadParams, "unknown generator kind '" + name + "'");
}

namespace {

std::vector<std::size_t> expand_blocks(const std::vector<std::size_t>& blocks, int block) {
  std::vector<std::size_t> rows;
  rows.reserve(blocks.size() * static_cast<std::size_t>(block));
  for (auto b : blocks)
    for (int t = 0; t < block; ++t) rows.push_back(b * static_cast<std::size_t>(block) + static_cast<std::size_t>(t));
  return rows;
}

std::string describe(const std::vector<std::size_t>& rows) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? "," : "") << rows[i] + 1;
  out << '}';
  return out.str();
}

void require(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorCode::BadParams, what);
}

}  // namespace

RankCheck check_rank_conditions(const IntMatrix& g, int k, int L, int block) {
  require(block >= 1, "block size must be positive");
  require(k >= 1 && L >= 1 && L <= k, "need 1 <= L <= k");
  const auto b = static_cast<std::size_t>(block);
  require(g.cols() == static_cast<std::size_t>(k) * b, "generator must have k (block) columns");
  require(g.rows() % b == 0, "row count is not a multiple of the block size");
  const std::size_t n = g.rows() / b;
  require(n >= static_cast<std::size_t>(k), "generator needs at least k (block) rows");

  RankCheck result;
  for_each_combination(n, static_cast<std::size_t>(k), [&](const std::vector<std::size_t>& subset) {
    const auto rows = expand_blocks(subset, block);
    if (is_nonsingular(select_rows(g, rows))) return true;
    result = {false, 1, subset};
    return false;
  });
  if (!result.ok || L == k) return result;

  const std::size_t tail = static_cast<std::size_t>(k - L);
  for_each_combination(n, tail, [&](const std::vector<std::size_t>& subset) {
    const auto rows = expand_blocks(subset, block);
    if (is_nonsingular(select_block(g, rows, static_cast<std::size_t>(L) * b, g.cols()))) return true;
    result = {false, 2, subset};
    return false;
  });
  return result;
}

RankCheck check_rank_conditions(const GeneratorMatrix& g) {
  return check_rank_conditions(g.matrix, g.k, g.L, g.block);
}

GeneratorMatrix make_generator(IntMatrix matrix, int k, int L, int block, GeneratorKind kind) {
  const RankCheck check = check_rank_conditions(matrix, k, L, block);
  if (!check.ok) {
    throw Error(ErrorCode::RankConditionViolated,
                "rank condition (" + std::string(check.failed_condition == 1 ? "i" : "ii") +
                    ") fails for rows " + describe(check.witness));
  }
  GeneratorMatrix g;
  g.n = static_cast<int>(matrix.rows()) / block;
  g.k = k;
  g.L = L;
  g.block = block;
  g.kind = kind;
  g.matrix = std::move(matrix);
  return g;
}

GeneratorMatrix vandermonde_generator(int n, int k, int L) {
  require(n >= k && k >= 1, "vandermonde needs n >= k >= 1");
  const std::int64_t field = next_prime_at_least(n + 1);
  IntMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = mod_pow(i + 1, j, field);
  return make_generator(std::move(m), k, L, 1, GeneratorKind::vandermonde);
}

GeneratorMatrix cauchy_generator(int n, int k, int L) {
  require(n >= k && k >= 1, "cauchy needs n >= k >= 1");
  const std::int64_t field = next_prime_at_least(n + k);
  IntMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) {
      const std::int64_t x = i, y = n + j;
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = mod_inverse(mod_floor(x - y, field), field);
    }
  return make_generator(std::move(m), k, L, 1, GeneratorKind::cauchy);
}

std::int64_t random_entry_bound(int n, int k, int L) {
  return to_int64(binomial(n, k) + binomial(n, k - L));
}

GeneratorMatrix random_generator(int n, int k, int L, std::uint64_t seed) {
  require(n >= k && k >= L && L >= 1, "random generator needs n >= k >= L >= 1");
  const std::int64_t bound = random_entry_bound(n, k, L);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(0, bound);
  while (true) {
    IntMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = dist(rng);
    if (check_rank_conditions(m, k, L).ok) return make_generator(std::move(m), k, L, 1, GeneratorKind::random);
  }
}

GeneratorMatrix circulant_generator(int k) {
  require(k >= 2, "circulant generator needs k >= 2");
  const auto kk = static_cast<std::size_t>(k);
  IntMatrix m(kk, kk);
  for (std::size_t i = 0; i < kk; ++i) {
    m(i, i) = 1;
    if (i + 1 < kk) m(i, i + 1) = 1;
  }
  return make_generator(std::move(m), k, 1, 1, GeneratorKind::circulant);
}

GeneratorScore score(const IntMatrix& g) {
  GeneratorScore s{0, 1};
  for (std::size_t i = 0; i < g.rows(); ++i) {
    BigInt row_sum = 0;
    for (auto v : g.row(i)) row_sum += v < 0 ? -v : v;
    if (row_sum > s.oc) s.oc = row_sum;
    s.il *= row_sum;
  }
  return s;
}

}  // namespace arsss
