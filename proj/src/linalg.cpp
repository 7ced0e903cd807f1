#include <algorithm>

#include "arsss/matrix.hpp"

namespace arsss {

namespace {

constexpr std::int64_t kCertPrime = (std::int64_t{1} << 61) - 1;

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

std::int64_t det_mod_prime(const IntMatrix& m, std::int64_t p) {
  const std::size_t n = m.rows();
  IntMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = mod_floor(m(r, c), p);
  std::int64_t det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      a.swap_rows(pivot, col);
      det = p - det;
    }
    det = mulmod(det, a(col, col), p);
    const std::int64_t inv = mod_inverse(a(col, col), p);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const std::int64_t f = mulmod(a(r, col), inv, p);
      for (std::size_t c = col; c < n; ++c) {
        a(r, c) = mod_floor(a(r, c) - mulmod(f, a(col, c), p), p);
      }
    }
  }
  return det % p;
}

}  // namespace

BigInt determinant(const BigMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  BigMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

BigInt determinant(const IntMatrix& m) { return determinant(matrix_cast<BigInt>(m)); }

bool is_nonsingular(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "nonsingularity of a non-square matrix");
  }
  if (det_mod_prime(m, kCertPrime) != 0) return true;
  return determinant(m) != 0;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a(pivot, c) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(pivot, r);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

std::size_t rank(const IntMatrix& m) { return rank(matrix_cast<Rational>(m)); }

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  }
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::Singular, "matrix is singular");
    a.swap_rows(pivot, c);
    inv.swap_rows(pivot, c);
    const Rational p = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= p;
      inv(c, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

RatMatrix inverse(const IntMatrix& m) { return inverse(matrix_cast<Rational>(m)); }

int gf2_determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  }
  const std::size_t n = m.rows();
  std::vector<std::vector<std::uint8_t>> a(n, std::vector<std::uint8_t>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = static_cast<std::uint8_t>(mod_floor(m(r, c), 2));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    std::swap(a[pivot], a[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      for (std::size_t j = c; j < n; ++j) a[r][j] ^= a[c][j];
    }
  }
  return 1;
}

IntMatrix gf2_multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out = multiply(a, b);
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) = mod_floor(out(r, c), 2);
  return out;
}

}  // namespace arsss
