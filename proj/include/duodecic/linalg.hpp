#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace duodecic::linalg {

using RatVec = std::vector<Rat>;
using RatMatrix = std::vector<RatVec>;
using IntMatrix = std::vector<std::vector<Int>>;
using FpVec = std::vector<std::int64_t>;
using FpMatrix = std::vector<FpVec>;

inline RatMatrix identity(std::size_t n) {
  RatMatrix m(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), c = b.empty() ? 0 : b.front().size();
  RatMatrix r(n, RatVec(c));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < c; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

// row vector times matrix
inline RatVec apply(const RatVec& v, const RatMatrix& m) {
  RatVec r(m.empty() ? 0 : m.front().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < r.size(); ++j) r[j] += v[i] * m[i][j];
  }
  return r;
}

// Fraction-free elimination; the last pivot is the determinant.
inline Int det_bareiss(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Clears row denominators, then Bareiss.
inline Rat det(const RatMatrix& m) {
  IntMatrix a;
  Rat scale = 1;
  for (const auto& row : m) {
    Int d = 1;
    for (const auto& x : row) d = arith::lcm(d, x.get_den());
    std::vector<Int> r;
    for (const auto& x : row) r.push_back(x.get_num() * (d / x.get_den()));
    a.push_back(std::move(r));
    scale *= Rat(d);
  }
  Rat v(det_bareiss(std::move(a)));
  return v / scale;
}

// Gauss-Jordan over Q; throws on a singular matrix.
inline RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix a = m, inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw Error("inverse: singular matrix");
    std::swap(a[c], a[piv]);
    std::swap(inv[c], inv[piv]);
    Rat s = 1 / a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

// Characteristic polynomial det(xI - M) via reduction to Hessenberg form; coefficient i is x^i.
inline RatVec charpoly(RatMatrix h) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    Rat t = h[m][m - 1];
    for (std::size_t r = m + 1; r < n; ++r) {
      if (h[r][m - 1] == 0) continue;
      Rat u = h[r][m - 1] / t;
      for (std::size_t j = 0; j < n; ++j) h[r][j] -= u * h[m][j];
      for (std::size_t j = 0; j < n; ++j) h[j][m] += u * h[j][r];
    }
  }
  // p_k = char poly of the leading k x k block
  std::vector<RatVec> p(n + 1);
  p[0] = RatVec{Rat(1)};
  for (std::size_t m = 1; m <= n; ++m) {
    RatVec next(m + 1);
    // (x - h[m-1][m-1]) * p[m-1]
    for (std::size_t k = 0; k < m; ++k) {
      next[k + 1] += p[m - 1][k];
      next[k] -= h[m - 1][m - 1] * p[m - 1][k];
    }
    Rat t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t *= h[m - i][m - i - 1];
      Rat coef = t * h[m - i - 1][m - 1];
      if (coef == 0) continue;
      for (std::size_t k = 0; k < p[m - i - 1].size(); ++k) next[k] -= coef * p[m - i - 1][k];
    }
    p[m] = std::move(next);
  }
  return p[n];
}

// Left kernel over F_p: all x with x * A = 0, rows of A are images of basis vectors.
inline std::vector<FpVec> left_kernel_mod_p(const FpMatrix& a, std::int64_t p) {
  using arith::detail::invmod;
  using arith::detail::mulmod;
  const std::size_t r = a.size();
  const std::size_t c = r == 0 ? 0 : a.front().size();
  // augment [A | I] and row reduce on the A part
  FpMatrix m(r, FpVec(c + r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m[i][j] = ((a[i][j] % p) + p) % p;
    m[i][c + i] = 1;
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    std::size_t piv = row;
    while (piv < r && m[piv][col] == 0) ++piv;
    if (piv == r) continue;
    std::swap(m[row], m[piv]);
    std::int64_t s = invmod(m[row][col], p);
    for (auto& x : m[row]) x = mulmod(x, s, p);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || m[i][col] == 0) continue;
      std::int64_t f = m[i][col];
      for (std::size_t j = 0; j < c + r; ++j) m[i][j] = (m[i][j] - mulmod(f, m[row][j], p) + p) % p;
    }
    ++row;
  }
  std::vector<FpVec> ker;
  for (std::size_t i = row; i < r; ++i) ker.emplace_back(m[i].begin() + static_cast<long>(c), m[i].end());
  return ker;
}

// Reduced row echelon form over F_p; returns the nonzero rows and their pivot columns.
inline std::pair<std::vector<FpVec>, std::vector<std::size_t>> rref_mod_p(std::vector<FpVec> m, std::int64_t p) {
  using arith::detail::invmod;
  using arith::detail::mulmod;
  const std::size_t r = m.size();
  const std::size_t c = r == 0 ? 0 : m.front().size();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    std::size_t piv = row;
    while (piv < r && m[piv][col] % p == 0) ++piv;
    if (piv == r) continue;
    std::swap(m[row], m[piv]);
    std::int64_t s = invmod(m[row][col], p);
    for (auto& x : m[row]) x = mulmod(((x % p) + p) % p, s, p);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row) continue;
      std::int64_t f = ((m[i][col] % p) + p) % p;
      if (f == 0) continue;
      for (std::size_t j = 0; j < c; ++j) m[i][j] = ((m[i][j] - mulmod(f, m[row][j], p)) % p + p) % p;
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return {std::move(m), std::move(pivots)};
}

// Triangular basis of a full-rank Z_(p)-lattice in Q^n: row i = p^exponent[i] (x_i + sum_{j<i} c_j x_j)
// with each c_j reduced to its canonical class representative.
struct PLocalBasis {
  std::vector<int> exponents;
  RatMatrix rows;
};

namespace detail {

// Canonical representative of c modulo p^s Z_(p): N/p^a with 0 <= N < p^(s+a).
inline Rat reduce_plocal(const Rat& c, const Int& p, long s) {
  if (c == 0) return 0;
  long a = std::max(0, -arith::vp(c, p));
  long t = s + a;
  if (t <= 0) return 0;
  Rat scaled = c * Rat(arith::pow(p, static_cast<unsigned long>(a)));
  Int mod = arith::pow(p, static_cast<unsigned long>(t));
  auto inv = arith::inverse_mod(scaled.get_den(), mod);
  if (!inv) throw Error("reduce_plocal: denominator not a p-unit");
  Int n = arith::mod(Int(scaled.get_num() * *inv), mod);
  Rat r(n, arith::pow(p, static_cast<unsigned long>(a)));
  r.canonicalize();
  return r;
}

}  // namespace detail

inline PLocalBasis plocal_triangular(RatMatrix gens, const Int& p, std::size_t n) {
  PLocalBasis out;
  out.rows.assign(n, RatVec(n));
  out.exponents.assign(n, 0);
  for (auto& g : gens)
    if (g.size() != n) throw Error("plocal_triangular: generator has the wrong dimension");
  for (std::size_t col = n; col-- > 0;) {
    std::size_t best = gens.size();
    int best_v = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i][col] == 0) continue;
      int v = arith::vp(gens[i][col], p);
      if (best == gens.size() || v < best_v) {
        best = i;
        best_v = v;
      }
    }
    if (best == gens.size()) throw Error("plocal_triangular: generators have rank below the dimension");
    RatVec piv = std::move(gens[best]);
    gens.erase(gens.begin() + static_cast<long>(best));
    for (auto& g : gens) {
      if (g[col] == 0) continue;
      Rat f = g[col] / piv[col];
      for (std::size_t j = 0; j <= col; ++j) g[j] -= f * piv[j];
    }
    // normalise the pivot to an exact power of p
    Rat unit = piv[col] / (best_v >= 0 ? Rat(arith::pow(p, static_cast<unsigned long>(best_v)))
                                        : Rat(1) / Rat(arith::pow(p, static_cast<unsigned long>(-best_v))));
    for (auto& x : piv) x /= unit;
    out.rows[col] = std::move(piv);
    out.exponents[col] = best_v;
  }
  // canonical reduction of the off-diagonal part, highest column first
  for (std::size_t i = 0; i < n; ++i) {
    const Rat lead = out.rows[i][i];
    for (std::size_t j = i; j-- > 0;) {
      Rat c = out.rows[i][j] / lead;
      Rat target = detail::reduce_plocal(c, p, out.exponents[j] - out.exponents[i]);
      if (target == c) continue;
      Rat a = (c - target) * lead / out.rows[j][j];
      for (std::size_t k = 0; k <= j; ++k) out.rows[i][k] -= a * out.rows[j][k];
    }
  }
  return out;
}

}  // namespace duodecic::linalg
