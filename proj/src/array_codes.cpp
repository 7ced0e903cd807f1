#include "arsss/array_codes.hpp"

namespace arsss {

namespace {

constexpr int kMaxRingPrime = 13;

void require_odd_prime(int p) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorCode::BadParams, "p must be an odd prime");
}

}  // namespace

RingElement ring_alpha_power(int t, int p) {
  require_odd_prime(p);
  RingElement e{p, std::vector<std::uint8_t>(static_cast<std::size_t>(p - 1), 0)};
  const int r = static_cast<int>(mod_floor(t, p));
  if (r == p - 1) {
    // a^(p-1) = 1 + a + ... + a^(p-2)
    for (auto& c : e.coeffs) c = 1;
  } else {
    e.coeffs[static_cast<std::size_t>(r)] = 1;
  }
  return e;
}

RingElement ring_multiply(const RingElement& a, const RingElement& b) {
  if (a.p != b.p) throw Error(ErrorCode::BadParams, "ring elements over different p");
  const int p = a.p;
  // Multiply modulo a^p - 1 first, then fold the a^(p-1) coefficient.
  std::vector<std::uint8_t> full(static_cast<std::size_t>(p), 0);
  for (int i = 0; i < p - 1; ++i)
    for (int j = 0; j < p - 1; ++j)
      full[static_cast<std::size_t>((i + j) % p)] ^= a.coeffs[static_cast<std::size_t>(i)] & b.coeffs[static_cast<std::size_t>(j)];
  RingElement out{p, std::vector<std::uint8_t>(full.begin(), full.end() - 1)};
  if (full.back())
    for (auto& c : out.coeffs) c ^= 1;
  return out;
}

BlockGeneratorMatrix kronecker_block_generator(const GeneratorMatrix& g, int l) {
  if (l < 1) throw Error(ErrorCode::BadParams, "array length must be positive");
  if (g.block != 1) throw Error(ErrorCode::BadParams, "kronecker lifting expects a scalar generator");
  IntMatrix lifted = kronecker(g.matrix, IntMatrix::identity(static_cast<std::size_t>(l)));
  return make_generator(std::move(lifted), g.k, g.L, l, GeneratorKind::kronecker);
}

IntMatrix evenodd_full_generator(int p, int n_prime) {
  require_odd_prime(p);
  const int k = n_prime - 2;
  if (k < 1 || n_prime > p + 2) throw Error(ErrorCode::BadParams, "EVENODD needs 3 <= n' <= p + 2");
  const int l = p - 1;
  const auto idx = [l](int row, int col) { return static_cast<std::size_t>(col * l + row); };
  IntMatrix g(static_cast<std::size_t>(n_prime * l), static_cast<std::size_t>(k * l));

  for (int j = 0; j < k; ++j)
    for (int r = 0; r < l; ++r) g(static_cast<std::size_t>(j * l + r), idx(r, j)) = 1;

  const int horizontal = k * l;
  for (int r = 0; r < l; ++r)
    for (int j = 0; j < k; ++j) g(static_cast<std::size_t>(horizontal + r), idx(r, j)) = 1;

  // Diagonal parity: diagonal i plus the shared diagonal p-1 (the adjuster S).
  // Row p-1 of the information array is the imaginary all-zero row.
  const int diagonal = (k + 1) * l;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < k; ++j) {
      const int on_diag = static_cast<int>(mod_floor(i - j, p));
      const int on_adjuster = static_cast<int>(mod_floor(p - 1 - j, p));
      if (on_diag < l) g(static_cast<std::size_t>(diagonal + i), idx(on_diag, j)) ^= 1;
      if (on_adjuster < l) g(static_cast<std::size_t>(diagonal + i), idx(on_adjuster, j)) ^= 1;
    }
  return g;
}

BlockGeneratorMatrix evenodd_generator(int p, int L, int n_prime) {
  if (L < 1 || L > 2) throw Error(ErrorCode::BadParams, "EVENODD schemes support L = 1 or 2");
  const IntMatrix full = evenodd_full_generator(p, n_prime);
  const int l = p - 1;
  const int k = n_prime - 2;
  if (L > k) throw Error(ErrorCode::BadParams, "L exceeds k = n' - 2");
  std::vector<std::size_t> keep;
  for (std::size_t r = static_cast<std::size_t>(L * l); r < full.rows(); ++r) keep.push_back(r);
  return make_generator(select_rows(full, keep), k, L, l, GeneratorKind::evenodd);
}

IntMatrix ring_block_matrix(int t, int p) {
  require_odd_prime(p);
  if (t < 0 || t >= p) throw Error(ErrorCode::BadParams, "need 0 <= t < p");
  const auto l = static_cast<std::size_t>(p - 1);
  IntMatrix m(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      const auto shifted = (j + static_cast<std::size_t>(t)) % static_cast<std::size_t>(p);
      if (shifted == i || shifted == l) m(i, j) = 1;
    }
  return m;
}

BlockGeneratorMatrix ring_generator(int n, int k, int p, int L) {
  require_odd_prime(p);
  if (p > kMaxRingPrime) throw Error(ErrorCode::BadParams, "p is capped at 13");
  if (k < 1 || n < k || n > p) throw Error(ErrorCode::BadParams, "ring generator needs 1 <= k <= n <= p");
  const auto l = static_cast<std::size_t>(p - 1);
  IntMatrix g(static_cast<std::size_t>(n) * l, static_cast<std::size_t>(k) * l);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) {
      const IntMatrix block = ring_block_matrix((i * j) % p, p);
      for (std::size_t r = 0; r < l; ++r)
        for (std::size_t c = 0; c < l; ++c) g(static_cast<std::size_t>(i) * l + r, static_cast<std::size_t>(j) * l + c) = block(r, c);
    }
  return make_generator(std::move(g), k, L, static_cast<int>(l), GeneratorKind::ring);
}

}  // namespace arsss
