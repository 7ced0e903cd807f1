#include "arsss/smith.hpp"

#include <cstdlib>
#include <string>

namespace arsss {

namespace {

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void add_row(BigMatrix& m, std::size_t dst, std::size_t src, const BigInt& f) {
  if (f == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += f * m(src, c);
}

void add_col(BigMatrix& m, std::size_t dst, std::size_t src, const BigInt& f) {
  if (f == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += f * m(r, src);
}

void negate_row(BigMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace

SmithDecomposition diagonalize(const IntMatrix& g) {
  const std::size_t rows = g.rows(), cols = g.cols();
  BigMatrix a = matrix_cast<BigInt>(g);
  BigMatrix v2 = BigMatrix::identity(rows);
  BigMatrix v1 = BigMatrix::identity(cols);

  // Phase 1: row Hermite form, tracked in V2.
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    bool pivot = false;
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (a(i, c) != 0 && (best == rows || abs_big(a(i, c)) < abs_big(a(best, c)))) best = i;
      if (best == rows) break;
      pivot = true;
      a.swap_rows(r, best);
      v2.swap_rows(r, best);
      bool cleared = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        const BigInt f = a(i, c) / a(r, c);
        add_row(a, i, r, -f);
        add_row(v2, i, r, -f);
        if (a(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!pivot) continue;
    if (a(r, c) < 0) {
      negate_row(a, r);
      negate_row(v2, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const BigInt f = floor_div(a(i, c), a(r, c));
      add_row(a, i, r, -f);
      add_row(v2, i, r, -f);
    }
    ++r;
  }
  const std::size_t rank = r;

  // Phase 2: diagonalise the leading rank rows with column operations (V1).
  for (std::size_t t = 0; t < rank; ++t) {
    while (true) {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rank; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (bi == rows || abs_big(a(i, j)) < abs_big(a(bi, bj)))) {
            bi = i;
            bj = j;
          }
      a.swap_rows(t, bi);
      v2.swap_rows(t, bi);
      a.swap_cols(t, bj);
      v1.swap_cols(t, bj);

      bool clean = true;
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const BigInt f = a(t, j) / a(t, t);
        add_col(a, j, t, -f);
        add_col(v1, j, t, -f);
        if (a(t, j) != 0) clean = false;
      }
      for (std::size_t i = t + 1; i < rank; ++i) {
        if (a(i, t) == 0) continue;
        const BigInt f = a(i, t) / a(t, t);
        add_row(a, i, t, -f);
        add_row(v2, i, t, -f);
        if (a(i, t) != 0) clean = false;
      }
      if (clean) break;
    }
  }
  return {std::move(v2), std::move(a), std::move(v1), rank};
}

SmithDecomposition smith_normal_form(const IntMatrix& g) {
  SmithDecomposition d = diagonalize(g);
  if (d.rank != g.rows()) {
    throw Error(ErrorCode::NotFullRank, "matrix has rank " + std::to_string(d.rank) + " but " +
                                            std::to_string(g.rows()) + " rows");
  }
  return d;
}

DiophantineSolutionSet solve_diophantine(const IntMatrix& g, std::span<const std::int64_t> y) {
  if (y.size() != g.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
  const SmithDecomposition d = diagonalize(g);
  const std::size_t cols = g.cols();
  DiophantineSolutionSet sol;

  BigVector dvec(g.rows(), 0);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.rows(); ++j) dvec[i] += d.v2(i, j) * y[j];

  BigVector m(cols, 0);
  sol.divisibility_ok = true;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (i < d.rank) {
      if (dvec[i] % d.b(i, i) != 0) sol.divisibility_ok = false;
      else m[i] = dvec[i] / d.b(i, i);
    } else if (dvec[i] != 0) {
      sol.divisibility_ok = false;
    }
  }
  sol.particular.assign(cols, 0);
  for (std::size_t r = 0; r < cols; ++r)
    for (std::size_t c = 0; c < cols; ++c) sol.particular[r] += d.v1(r, c) * m[c];
  if (!sol.divisibility_ok) sol.particular.assign(cols, 0);

  const RatMatrix v1_inv = inverse(matrix_cast<Rational>(d.v1));
  for (std::size_t j = d.rank; j < cols; ++j) {
    BigVector col(cols), readout(cols);
    for (std::size_t r = 0; r < cols; ++r) {
      col[r] = d.v1(r, j);
      readout[r] = boost::multiprecision::numerator(v1_inv(j, r));
    }
    sol.free_basis.push_back(std::move(col));
    sol.free_readout.push_back(std::move(readout));
  }
  return sol;
}

std::uint64_t enumeration_cap() {
  if (const char* env = std::getenv("ARSSS_ENUM_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadParams, "ARSSS_ENUM_CAP is not a number");
    }
  }
  return 100'000'000ULL;
}

std::uint64_t enumerate_box_solutions(const DiophantineSolutionSet& sol, std::span<const std::int64_t> lo,
                                      std::span<const std::int64_t> hi,
                                      const std::function<void(std::span<const std::int64_t>)>& visit,
                                      std::uint64_t cap) {
  const std::size_t n = sol.particular.size();
  if (lo.size() != n || hi.size() != n) throw Error(ErrorCode::DimensionMismatch, "box dimension mismatch");
  if (!sol.divisibility_ok) return 0;
  const std::size_t f = sol.free_basis.size();

  // r_j = <w_j, X> ranges over [min, max] of that form on the box.
  std::vector<std::int64_t> r_lo(f), r_hi(f);
  BigInt grid = 1;
  for (std::size_t j = 0; j < f; ++j) {
    BigInt mn = 0, mx = 0;
    for (std::size_t c = 0; c < n; ++c) {
      const BigInt a = sol.free_readout[j][c] * lo[c], b = sol.free_readout[j][c] * hi[c];
      mn += a < b ? a : b;
      mx += a < b ? b : a;
    }
    r_lo[j] = to_int64(mn);
    r_hi[j] = to_int64(mx);
    grid *= (mx - mn + 1);
    if (grid > cap) throw Error(ErrorCode::TooLarge, "free-parameter grid exceeds the enumeration cap");
  }

  std::vector<std::int64_t> base(n);
  for (std::size_t c = 0; c < n; ++c) base[c] = to_int64(sol.particular[c]);
  std::vector<std::vector<std::int64_t>> basis(f, std::vector<std::int64_t>(n));
  for (std::size_t j = 0; j < f; ++j)
    for (std::size_t c = 0; c < n; ++c) basis[j][c] = to_int64(sol.free_basis[j][c]);

  std::vector<std::int64_t> x(n);
  std::uint64_t found = 0;
  auto recurse = [&](auto&& self, std::size_t j, std::vector<std::int64_t>& cur) -> void {
    if (j == f) {
      for (std::size_t c = 0; c < n; ++c)
        if (cur[c] < lo[c] || cur[c] > hi[c]) return;
      ++found;
      if (visit) visit(cur);
      return;
    }
    std::vector<std::int64_t> next(n);
    for (std::int64_t r = r_lo[j]; r <= r_hi[j]; ++r) {
      for (std::size_t c = 0; c < n; ++c) next[c] = cur[c] + r * basis[j][c];
      self(self, j + 1, next);
    }
  };
  x = base;
  recurse(recurse, 0, x);
  return found;
}

std::uint64_t count_box_solutions(const DiophantineSolutionSet& sol, std::span<const std::int64_t> lo,
                                  std::span<const std::int64_t> hi, std::uint64_t cap) {
  return enumerate_box_solutions(sol, lo, hi, {}, cap);
}

}  // namespace arsss
