#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace duodecic {

using Int = mpz_class;
using Rat = mpq_class;

namespace arith {

inline Int abs(const Int& n) { return n < 0 ? Int(-n) : n; }

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Least nonnegative residue.
inline Int mod(const Int& a, const Int& n) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline std::optional<Int> inverse_mod(const Int& a, const Int& n) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t()) == 0) return std::nullopt;
  return r;
}

inline bool is_probable_prime(const Int& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

inline int vp(const Int& n, const Int& p) {
  if (n == 0) throw Error("vp: valuation of zero is undefined");
  if (p < 2) throw Error("vp: modulus must be a prime");
  Int rest;
  return static_cast<int>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

// p-adic valuation of a nonzero rational.
inline int vp(const Rat& q, const Int& p) {
  return vp(q.get_num(), p) - vp(q.get_den(), p);
}

// n / p^vp(n), sign kept.
inline Int unit_part(const Int& n, const Int& p) {
  if (n == 0) throw Error("unit_part: zero has no unit part");
  Int rest;
  mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return rest;
}

// Exact k-th root if one exists (odd k allows negative n).
inline std::optional<Int> exact_root(const Int& n, unsigned long k) {
  if (k == 0) throw Error("exact_root: k must be positive");
  if (n < 0 && k % 2 == 0) return std::nullopt;
  Int r;
  Int a = abs(n);
  if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), k) == 0) return std::nullopt;
  if (n < 0) r = -r;
  return r;
}

inline bool is_perfect_power(const Int& n, unsigned long k) { return exact_root(n, k).has_value(); }

inline Int floor_root(const Int& n, unsigned long k) {
  Int r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

// Residue arithmetic for word-sized primes.
namespace detail {
inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}
inline std::int64_t powmod(std::int64_t a, std::uint64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}
inline std::int64_t invmod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw Error("invmod: element is not invertible");
  return t < 0 ? t + p : t;
}
inline std::int64_t reduce(const Int& a, std::int64_t p) {
  Int r = mod(a, Int(static_cast<long>(p)));
  return static_cast<std::int64_t>(r.get_si());
}
inline std::int64_t to_word_prime(const Int& p) {
  if (!p.fits_slong_p() || p < 2) throw Error("prime does not fit in a machine word");
  return p.get_si();
}
}  // namespace detail

class FactoredInt {
 public:
  FactoredInt() = default;
  FactoredInt(int sign, std::map<Int, int> factors) : sign_(sign), factors_(std::move(factors)) {
    if (sign_ != 1 && sign_ != -1) throw Error("FactoredInt: sign must be +1 or -1");
    for (auto it = factors_.begin(); it != factors_.end();) {
      if (it->second < 0) throw Error("FactoredInt: negative exponent");
      if (it->second == 0) it = factors_.erase(it);
      else ++it;
    }
  }

  int sign() const { return sign_; }
  const std::map<Int, int>& factors() const { return factors_; }

  int exponent(const Int& p) const {
    auto it = factors_.find(p);
    return it == factors_.end() ? 0 : it->second;
  }

  Int value() const {
    Int v = sign_;
    for (const auto& [p, e] : factors_) v *= arith::pow(p, static_cast<unsigned long>(e));
    return v;
  }

  FactoredInt& operator*=(const FactoredInt& o) {
    sign_ *= o.sign_;
    for (const auto& [p, e] : o.factors_) factors_[p] += e;
    return *this;
  }
  friend FactoredInt operator*(FactoredInt a, const FactoredInt& b) { return a *= b; }

  // Exact division; throws when b does not divide.
  friend FactoredInt operator/(const FactoredInt& a, const FactoredInt& b) {
    std::map<Int, int> f = a.factors_;
    for (const auto& [p, e] : b.factors_) {
      int& slot = f[p];
      slot -= e;
      if (slot < 0) throw Error("FactoredInt: inexact division");
    }
    return FactoredInt(a.sign_ * b.sign_, std::move(f));
  }

  FactoredInt pow(int k) const {
    std::map<Int, int> f;
    for (const auto& [p, e] : factors_) f[p] = e * k;
    return FactoredInt(k % 2 == 0 ? 1 : sign_, std::move(f));
  }

  bool operator==(const FactoredInt&) const = default;

  // "-2^16*3^23*5^11"; "1" and "-1" for units.
  std::string to_string() const {
    std::ostringstream os;
    if (sign_ < 0) os << '-';
    if (factors_.empty()) {
      os << '1';
      return os.str();
    }
    bool first = true;
    for (const auto& [p, e] : factors_) {
      if (!first) os << '*';
      first = false;
      os << p.get_str();
      if (e != 1) os << '^' << e;
    }
    return os.str();
  }

 private:
  int sign_ = 1;
  std::map<Int, int> factors_;
};

namespace detail {

inline Int pollard_brent(const Int& n, unsigned long c0) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  Int y = 2, c = c0, m = 128, g = 1, r = 1, q = 1, x, ys;
  auto step = [&](const Int& v) { return mod(v * v + c, n); };
  while (g == 1) {
    x = y;
    for (Int i = 0; i < r; ++i) y = step(y);
    Int k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (Int i = 0; i < m && i < r - k; ++i) {
        y = step(y);
        q = mod(q * abs(Int(x - y)), n);
      }
      g = gcd(q, n);
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = step(ys);
      g = gcd(abs(Int(x - ys)), n);
    } while (g == 1);
  }
  return g;
}

inline void split(const Int& n, std::map<Int, int>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  if (auto r = exact_root(n, 2)) {
    std::map<Int, int> sub;
    split(*r, sub);
    for (const auto& [p, e] : sub) out[p] += 2 * e;
    return;
  }
  for (unsigned long c = 1;; ++c) {
    Int d = pollard_brent(n, c);
    if (d != n && d != 1) {
      split(d, out);
      split(Int(n / d), out);
      return;
    }
  }
}

}  // namespace detail

inline FactoredInt factor(const Int& n) {
  if (n == 0) throw Error("factor: zero has no factorization");
  std::map<Int, int> f;
  Int rest = abs(n);
  for (unsigned long d = 2; d < 10000; d += (d == 2 ? 1 : 2)) {
    if (Int(d) * d > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      int e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
        ++e;
      }
      f[Int(d)] = e;
    }
  }
  detail::split(rest, f);
  return FactoredInt(n < 0 ? -1 : 1, std::move(f));
}

inline bool is_12th_power_free(const Int& m) {
  if (abs(m) <= 1) throw InvalidInput("|m| must be at least 2");
  Int bound = floor_root(abs(m), 12);
  for (Int d = 2; d <= bound; ++d)
    if (mpz_divisible_p(m.get_mpz_t(), pow(d, 12).get_mpz_t())) return false;
  return true;
}

// x^12 - m is irreducible iff m is not a square, not a cube, and not -4 k^4.
inline bool is_irreducible_x12_minus_m(const Int& m) {
  if (abs(m) <= 1) throw InvalidInput("|m| must be at least 2");
  if (is_perfect_power(m, 2) || is_perfect_power(m, 3)) return false;
  if (m < 0 && mpz_divisible_ui_p(m.get_mpz_t(), 4) && is_perfect_power(Int(-m / 4), 4)) return false;
  return true;
}

inline bool is_squarefree(const Int& n) {
  const auto f = factor(n);
  for (const auto& [p, e] : f.factors())
    if (e > 1) return false;
  return true;
}

inline Int parse_int(const std::string& text) {
  Int v;
  std::string t = text;
  if (!t.empty() && t.front() == '+') t.erase(0, 1);
  if (t.empty() || v.set_str(t, 10) != 0) throw InvalidInput("not an integer: '" + text + "'");
  return v;
}

}  // namespace arith
}  // namespace duodecic
