#pragma once

#include <cstdint>
#include <vector>

#include "arsss/generator.hpp"

namespace arsss {

/// Element of R_p(2): binary polynomial of degree < p-1, reduced modulo
/// M_p(a) = 1 + a + ... + a^(p-1).
struct RingElement {
  int p = 3;
  std::vector<std::uint8_t> coeffs;  // length p-1

  bool operator==(const RingElement&) const = default;
};

/// a^t in R_p(2). Throws BadParams unless p is an odd prime.
RingElement ring_alpha_power(int t, int p);
RingElement ring_multiply(const RingElement& a, const RingElement& b);

/// Each entry g of G becomes g * I_l.
BlockGeneratorMatrix kronecker_block_generator(const GeneratorMatrix& g, int l);

/// Full EVENODD generator: n' block rows (n' - 2 systematic, horizontal
/// parity, diagonal parity), each block (p-1) x (p-1).
IntMatrix evenodd_full_generator(int p, int n_prime);
/// (k = n'-2, L, n = n'-L) scheme: the full EVENODD generator with its first L
/// systematic block rows removed. L must be 1 or 2, n' <= p + 2.
BlockGeneratorMatrix evenodd_generator(int p, int L, int n_prime);
inline BlockGeneratorMatrix evenodd_generator(int p, int L) { return evenodd_generator(p, L, p + 2); }

/// Binary matrix of multiplication by a^t in R_p(2).
IntMatrix ring_block_matrix(int t, int p);

/// Vandermonde over R_p(2): block (i, j) = P((i*j) mod p), 0-based; p <= 13.
BlockGeneratorMatrix ring_generator(int n, int k, int p, int L = 1);

inline RankCheck check_block_rank_conditions(const BlockGeneratorMatrix& g) { return check_rank_conditions(g); }

}  // namespace arsss
