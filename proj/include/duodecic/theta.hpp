#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "int_poly.hpp"

namespace duodecic {

// g(θ)/d with gcd(content g, d) = 1 and d > 0.
class ThetaElement {
 public:
  ThetaElement() : numer_(IntPoly::constant(1)), denom_(1) {}
  ThetaElement(IntPoly numer, Int denom = 1) : numer_(std::move(numer)), denom_(std::move(denom)) { normalize(); }

  static ThetaElement power(int k) { return ThetaElement(IntPoly::monomial(1, k)); }

  // Common-denominator form of a coordinate vector on the power basis.
  static ThetaElement from_coords(const std::vector<Rat>& v) {
    Int d = 1;
    for (const auto& c : v) d = arith::lcm(d, c.get_den());
    std::vector<Int> num;
    for (const auto& c : v) num.push_back(c.get_num() * (d / c.get_den()));
    return ThetaElement(IntPoly(std::move(num)), d);
  }

  const IntPoly& numer() const { return numer_; }
  const Int& denom() const { return denom_; }
  int degree() const { return numer_.degree(); }

  std::vector<Rat> coords(int n) const {
    std::vector<Rat> v(static_cast<std::size_t>(n));
    for (int i = 0; i <= numer_.degree(); ++i) {
      if (i >= n) throw Error("ThetaElement: numerator degree exceeds field degree");
      v[static_cast<std::size_t>(i)] = Rat(numer_.coeff(i), denom_);
      v[static_cast<std::size_t>(i)].canonicalize();
    }
    return v;
  }

  bool operator==(const ThetaElement&) const = default;

  std::string to_string() const {
    std::string num = numer_.to_string("t");
    if (denom_ == 1) return num;
    bool bare = numer_.degree() <= 0 || std::count_if(numer_.coeffs().begin(), numer_.coeffs().end(),
                                                      [](const Int& a) { return a != 0; }) == 1;
    return (bare ? num : "(" + num + ")") + "/" + denom_.get_str();
  }

  std::string to_latex() const {
    std::string num;
    bool first = true;
    for (int i = numer_.degree(); i >= 0; --i) {
      const Int& a = numer_.coeffs()[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      Int mag = arith::abs(a);
      num += a < 0 ? "-" : (first ? "" : "+");
      if (mag != 1 || i == 0) num += mag.get_str();
      if (i == 1) num += "\\theta";
      if (i > 1) num += "\\theta^{" + std::to_string(i) + "}";
      first = false;
    }
    if (num.empty()) num = "0";
    if (denom_ == 1) return num;
    return "\\frac{" + num + "}{" + latex_denominator() + "}";
  }

 private:
  void normalize() {
    if (denom_ == 0) throw Error("ThetaElement: zero denominator");
    if (denom_ < 0) {
      denom_ = -denom_;
      numer_ *= Int(-1);
    }
    Int g = arith::gcd(numer_.content(), denom_);
    if (numer_.is_zero()) g = denom_;
    if (g > 1) {
      std::vector<Int> c = numer_.coeffs();
      for (auto& a : c) a /= g;
      numer_ = IntPoly(std::move(c));
      denom_ /= g;
    }
  }

  // Prime powers as p^{k}, anything else in decimal.
  std::string latex_denominator() const {
    auto f = arith::factor(denom_);
    if (f.factors().size() == 1 && f.factors().begin()->second > 1)
      return f.factors().begin()->first.get_str() + "^{" + std::to_string(f.factors().begin()->second) + "}";
    return denom_.get_str();
  }

  IntPoly numer_;
  Int denom_;
};

// Q[x]/(f) for a monic irreducible f.
class NumberField {
 public:
  explicit NumberField(IntPoly f) : f_(std::move(f)) {
    if (!f_.is_monic() || f_.degree() < 1) throw Error("NumberField: defining polynomial must be monic");
  }
  static NumberField pure(int n, const Int& m) { return NumberField(IntPoly::binomial(n, m)); }

  const IntPoly& poly() const { return f_; }
  int degree() const { return f_.degree(); }

  ThetaElement mul(const ThetaElement& a, const ThetaElement& b) const {
    return ThetaElement((a.numer() * b.numer()).mod_monic(f_), a.denom() * b.denom());
  }
  ThetaElement add(const ThetaElement& a, const ThetaElement& b) const {
    Int d = arith::lcm(a.denom(), b.denom());
    return ThetaElement(a.numer() * Int(d / a.denom()) + b.numer() * Int(d / b.denom()), d);
  }
  ThetaElement reduce(const ThetaElement& a) const { return ThetaElement(a.numer().mod_monic(f_), a.denom()); }

 private:
  IntPoly f_;
};

}  // namespace duodecic
