#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace duodecic {

// Dense polynomial over Z, coefficient i belongs to x^i.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPoly constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }
  static IntPoly monomial(const Int& c, int k) {
    std::vector<Int> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return IntPoly(std::move(v));
  }
  static IntPoly x() { return monomial(1, 1); }
  // x^n - m
  static IntPoly binomial(int n, const Int& m) {
    IntPoly f = monomial(1, n);
    f.c_[0] = -m;
    f.trim();
    return f;
  }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Int coeff(int i) const { return i >= 0 && i <= degree() ? c_[static_cast<std::size_t>(i)] : Int(0); }
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& leading() const {
    if (c_.empty()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  void set_coeff(int i, const Int& v) {
    if (i > degree()) c_.resize(static_cast<std::size_t>(i) + 1);
    c_[static_cast<std::size_t>(i)] = v;
    trim();
  }

  Int content() const {
    Int g = 0;
    for (const auto& a : c_) g = arith::gcd(g, a);
    return g;
  }

  Int eval(const Int& x) const {
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  IntPoly derivative() const {
    std::vector<Int> d;
    for (int i = 1; i <= degree(); ++i) d.push_back(c_[static_cast<std::size_t>(i)] * i);
    return IntPoly(std::move(d));
  }

  IntPoly shifted(int k) const {
    if (is_zero()) return {};
    std::vector<Int> v(static_cast<std::size_t>(k), Int(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return IntPoly(std::move(v));
  }

  IntPoly& operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  IntPoly& operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  IntPoly& operator*=(const Int& s) {
    for (auto& a : c_) a *= s;
    trim();
    return *this;
  }
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const Int& s) { return a *= s; }
  friend IntPoly operator*(const Int& s, IntPoly a) { return a *= s; }
  IntPoly operator-() const { return *this * Int(-1); }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(r));
  }

  // *this = q*d + r with deg r < deg d; d must be monic.
  std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& d) const {
    if (!d.is_monic()) throw Error("divmod_monic: divisor must be monic");
    int dd = d.degree();
    if (degree() < dd) return {IntPoly(), *this};
    std::vector<Int> r = c_;
    std::vector<Int> q(static_cast<std::size_t>(degree() - dd) + 1);
    for (int i = degree(); i >= dd; --i) {
      Int t = r[static_cast<std::size_t>(i)];
      if (t == 0) continue;
      q[static_cast<std::size_t>(i - dd)] = t;
      for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(i - dd + j)] -= t * d.c_[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(dd));
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
  }

  IntPoly mod_monic(const IntPoly& d) const { return divmod_monic(d).second; }

  bool operator==(const IntPoly&) const = default;

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const Int& a = c_[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      Int mag = arith::abs(a);
      if (a < 0) os << (first ? "-" : " - ");
      else if (!first) os << " + ";
      if (mag != 1 || i == 0) os << mag.get_str();
      if (i > 0) os << var;
      if (i > 1) os << '^' << i;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

}  // namespace duodecic
