#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "int_poly.hpp"

namespace duodecic {

// Dense polynomial over F_p with residues in [0, p).
class FpPoly {
 public:
  FpPoly() = default;
  explicit FpPoly(std::int64_t p) : p_(p) { check_modulus(); }
  FpPoly(std::int64_t p, std::vector<std::int64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    check_modulus();
    for (auto& a : c_) a = ((a % p_) + p_) % p_;
    trim();
  }
  FpPoly(std::int64_t p, const IntPoly& g) : p_(p) {
    check_modulus();
    for (const auto& a : g.coeffs()) c_.push_back(arith::detail::reduce(a, p_));
    trim();
  }

  static FpPoly monomial(std::int64_t p, std::int64_t c, int k) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(k) + 1, 0);
    v.back() = c;
    return FpPoly(p, std::move(v));
  }
  static FpPoly constant(std::int64_t p, std::int64_t c) { return FpPoly(p, std::vector<std::int64_t>{c}); }

  std::int64_t p() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::int64_t coeff(int i) const { return i >= 0 && i <= degree() ? c_[static_cast<std::size_t>(i)] : 0; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  std::int64_t leading() const {
    if (c_.empty()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  FpPoly monic() const {
    if (is_zero()) return *this;
    return scaled(arith::detail::invmod(leading(), p_));
  }

  FpPoly scaled(std::int64_t s) const {
    FpPoly r = *this;
    s = ((s % p_) + p_) % p_;
    for (auto& a : r.c_) a = arith::detail::mulmod(a, s, p_);
    r.trim();
    return r;
  }

  FpPoly derivative() const {
    std::vector<std::int64_t> d;
    for (int i = 1; i <= degree(); ++i) d.push_back(arith::detail::mulmod(c_[static_cast<std::size_t>(i)], i % p_, p_));
    return FpPoly(p_, std::move(d));
  }

  std::int64_t eval(std::int64_t x) const {
    std::int64_t r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = (arith::detail::mulmod(r, x, p_) + *it) % p_;
    return r;
  }

  FpPoly& operator+=(const FpPoly& o) {
    same_field(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + o.c_[i]) % p_;
    trim();
    return *this;
  }
  FpPoly& operator-=(const FpPoly& o) {
    same_field(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] - o.c_[i] + p_) % p_;
    trim();
    return *this;
  }
  friend FpPoly operator+(FpPoly a, const FpPoly& b) { return a += b; }
  friend FpPoly operator-(FpPoly a, const FpPoly& b) { return a -= b; }
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    a.same_field(b);
    if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
    std::vector<std::int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] = (r[i + j] + arith::detail::mulmod(a.c_[i], b.c_[j], a.p_)) % a.p_;
    return FpPoly(a.p_, std::move(r));
  }

  std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const {
    same_field(d);
    if (d.is_zero()) throw Error("FpPoly: division by zero polynomial");
    if (degree() < d.degree()) return {FpPoly(p_), *this};
    std::int64_t inv = arith::detail::invmod(d.leading(), p_);
    std::vector<std::int64_t> r = c_;
    std::vector<std::int64_t> q(static_cast<std::size_t>(degree() - d.degree()) + 1, 0);
    for (int i = degree(); i >= d.degree(); --i) {
      std::int64_t t = arith::detail::mulmod(r[static_cast<std::size_t>(i)], inv, p_);
      if (t == 0) continue;
      q[static_cast<std::size_t>(i - d.degree())] = t;
      for (int j = 0; j <= d.degree(); ++j) {
        auto& slot = r[static_cast<std::size_t>(i - d.degree() + j)];
        slot = (slot - arith::detail::mulmod(t, d.c_[static_cast<std::size_t>(j)], p_) + p_) % p_;
      }
    }
    r.resize(static_cast<std::size_t>(d.degree()));
    return {FpPoly(p_, std::move(q)), FpPoly(p_, std::move(r))};
  }
  friend FpPoly operator%(const FpPoly& a, const FpPoly& b) { return a.divmod(b).second; }
  friend FpPoly operator/(const FpPoly& a, const FpPoly& b) { return a.divmod(b).first; }

  bool operator==(const FpPoly&) const = default;
  // Degree first, then coefficients from the top; gives the factor ordering.
  bool operator<(const FpPoly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (int i = degree(); i >= 0; --i)
      if (c_[static_cast<std::size_t>(i)] != o.c_[static_cast<std::size_t>(i)])
        return c_[static_cast<std::size_t>(i)] < o.c_[static_cast<std::size_t>(i)];
    return false;
  }

  // Coefficients printed in the symmetric range, so Y - 1 rather than Y + 2 over F_3.
  std::string to_string(const std::string& var = "Y") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      std::int64_t a = c_[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      if (p_ > 2 && a > p_ / 2) a -= p_;
      std::int64_t mag = a < 0 ? -a : a;
      if (a < 0) os << (first ? "-" : " - ");
      else if (!first) os << " + ";
      if (mag != 1 || i == 0) os << mag;
      if (i > 0) os << var;
      if (i > 1) os << '^' << i;
      first = false;
    }
    return os.str();
  }

 private:
  void check_modulus() const {
    if (p_ < 2) throw Error("FpPoly: modulus must be a prime");
  }
  void same_field(const FpPoly& o) const {
    if (p_ != o.p_) throw Error("FpPoly: mismatched moduli");
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::int64_t p_ = 2;
  std::vector<std::int64_t> c_;
};

inline FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline bool is_squarefree(const FpPoly& q) {
  if (q.degree() < 1) return true;
  return gcd(q, q.derivative()).degree() == 0;
}

using FpFactorization = std::vector<std::pair<FpPoly, int>>;

// Exhaustive trial division by monic candidates in increasing order.
inline FpFactorization fp_factor(const FpPoly& q) {
  if (!q.is_monic()) throw Error("fp_factor: input must be monic");
  if (q.degree() < 1) throw Error("fp_factor: input must have positive degree");
  const std::int64_t p = q.p();
  double space = 1;
  for (int i = 0; i < q.degree() / 2; ++i) space *= static_cast<double>(p);
  if (space > 5e6) throw Error("fp_factor: search space too large for exhaustive factoring");

  FpFactorization out;
  FpPoly rest = q;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    std::vector<std::int64_t> digits(static_cast<std::size_t>(d), 0);
    while (true) {
      std::vector<std::int64_t> c = digits;
      c.push_back(1);
      FpPoly cand(p, std::move(c));
      int mult = 0;
      while (true) {
        auto [quo, rem] = rest.divmod(cand);
        if (!rem.is_zero()) break;
        rest = std::move(quo);
        ++mult;
      }
      if (mult > 0) out.emplace_back(cand, mult);
      if (2 * d > rest.degree()) break;
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
      if (k == digits.size()) break;
    }
  }
  if (rest.degree() >= 1) out.emplace_back(rest, 1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// F_q = F_p[z]/(psi) with psi monic irreducible; elements are FpPoly of degree < deg psi.
class ResidueField {
 public:
  explicit ResidueField(FpPoly psi) : psi_(std::move(psi)) {
    if (!psi_.is_monic() || psi_.degree() < 1) throw Error("ResidueField: modulus must be monic of positive degree");
  }
  const FpPoly& modulus() const { return psi_; }
  std::int64_t p() const { return psi_.p(); }
  int degree() const { return psi_.degree(); }

  FpPoly zero() const { return FpPoly(p()); }
  FpPoly one() const { return FpPoly::constant(p(), 1); }
  FpPoly generator() const { return FpPoly::monomial(p(), 1, 1) % psi_; }
  FpPoly reduce(const FpPoly& a) const { return a % psi_; }
  FpPoly add(const FpPoly& a, const FpPoly& b) const { return a + b; }
  FpPoly sub(const FpPoly& a, const FpPoly& b) const { return a - b; }
  FpPoly mul(const FpPoly& a, const FpPoly& b) const { return (a * b) % psi_; }

  FpPoly inv(const FpPoly& a) const {
    if (a.is_zero()) throw Error("ResidueField: inverse of zero");
    // extended Euclid: s*a + t*psi = g
    FpPoly r0 = psi_, r1 = a, s0 = zero(), s1 = one();
    while (!r1.is_zero()) {
      auto [q, r] = r0.divmod(r1);
      FpPoly s = s0 - q * s1;
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    if (r0.degree() != 0) throw Error("ResidueField: modulus is not irreducible");
    return reduce(s0.scaled(arith::detail::invmod(r0.leading(), p())));
  }

  FpPoly pow(const FpPoly& a, long e) const {
    FpPoly base = e < 0 ? inv(a) : reduce(a);
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    FpPoly r = one();
    while (k) {
      if (k & 1) r = mul(r, base);
      base = mul(base, base);
      k >>= 1;
    }
    return r;
  }

  bool operator==(const ResidueField&) const = default;

 private:
  FpPoly psi_;
};

// Polynomial in Y over a ResidueField; coefficient i belongs to Y^i.
class FqPoly {
 public:
  FqPoly(ResidueField field, std::vector<FpPoly> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (auto& a : c_) a = field_.reduce(a);
    trim();
  }

  const ResidueField& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<FpPoly>& coeffs() const { return c_; }
  FpPoly coeff(int i) const { return i >= 0 && i <= degree() ? c_[static_cast<std::size_t>(i)] : field_.zero(); }

  FqPoly monic() const {
    if (is_zero()) return *this;
    FpPoly s = field_.inv(c_.back());
    std::vector<FpPoly> v;
    for (const auto& a : c_) v.push_back(field_.mul(a, s));
    return FqPoly(field_, std::move(v));
  }

  FqPoly derivative() const {
    std::vector<FpPoly> d;
    for (int i = 1; i <= degree(); ++i) d.push_back(c_[static_cast<std::size_t>(i)].scaled(i % field_.p()));
    return FqPoly(field_, std::move(d));
  }

  FqPoly mod(const FqPoly& d) const {
    if (d.is_zero()) throw Error("FqPoly: division by zero polynomial");
    std::vector<FpPoly> r = c_;
    FpPoly inv = field_.inv(d.c_.back());
    for (int i = degree(); i >= d.degree(); --i) {
      FpPoly t = field_.mul(r[static_cast<std::size_t>(i)], inv);
      if (t.is_zero()) continue;
      for (int j = 0; j <= d.degree(); ++j) {
        auto& slot = r[static_cast<std::size_t>(i - d.degree() + j)];
        slot = field_.sub(slot, field_.mul(t, d.c_[static_cast<std::size_t>(j)]));
      }
    }
    if (static_cast<int>(r.size()) > d.degree()) r.resize(static_cast<std::size_t>(std::max(d.degree(), 0)));
    return FqPoly(field_, std::move(r));
  }

  friend FqPoly gcd(FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
      FqPoly r = a.mod(b);
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  bool is_separable() const {
    if (degree() < 1) return true;
    return gcd(*this, derivative()).degree() == 0;
  }

  // Over the prime field (deg psi = 1) the coefficients are plain residues.
  FpPoly to_prime_field() const {
    if (field_.degree() != 1) throw Error("FqPoly: residue field is not the prime field");
    std::vector<std::int64_t> v;
    for (const auto& a : c_) v.push_back(a.coeff(0));
    return FpPoly(field_.p(), std::move(v));
  }

  bool operator==(const FqPoly&) const = default;

  // Coefficients in the generator z of F_q, e.g. "Y^2 + (z + 1)Y + 1".
  std::string to_string() const {
    if (field_.degree() == 1) return to_prime_field().to_string();
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const FpPoly& a = c_[static_cast<std::size_t>(i)];
      if (a.is_zero()) continue;
      if (!first) os << " + ";
      bool unit = a.degree() == 0 && a.coeff(0) == 1;
      if (!unit || i == 0) os << (a.degree() > 0 ? "(" + a.to_string("z") + ")" : a.to_string("z"));
      if (i > 0) os << 'Y';
      if (i > 1) os << '^' << i;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  ResidueField field_;
  std::vector<FpPoly> c_;
};

}  // namespace duodecic
