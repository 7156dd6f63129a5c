#pragma once

#include <map>
#include <string>
#include <vector>

#include "arith.hpp"
#include "linalg.hpp"
#include "theta.hpp"

namespace duodecic {

// Triangular p-integral basis: element i = (theta^i + lower terms)/p^k_i.
struct PIntegralBasis {
  Int p;
  std::vector<ThetaElement> elements;

  int k(std::size_t i) const { return arith::vp(elements.at(i).denom(), p); }
  int exponent_sum() const {
    int s = 0;
    for (std::size_t i = 0; i < elements.size(); ++i) s += k(i);
    return s;
  }
  bool operator==(const PIntegralBasis&) const = default;
};

struct IntegralBasis {
  std::vector<ThetaElement> elements;

  std::vector<Int> denominators() const {
    std::vector<Int> d;
    for (const auto& e : elements) d.push_back(e.denom());
    return d;
  }
  bool operator==(const IntegralBasis&) const = default;
};

namespace combine {

// Throws unless element i is (theta^i + lower terms)/p^k at p (or divisor-chain shape when p == 0).
inline void check_triangular(const std::vector<ThetaElement>& elems, const Int& p) {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const auto& e = elems[i];
    if (e.degree() != static_cast<int>(i) || e.numer().leading() != 1)
      throw Error("basis element " + std::to_string(i) + " is not monic of degree " + std::to_string(i));
    if (p != 0 && arith::unit_part(e.denom(), p) != 1)
      throw Error("basis element " + std::to_string(i) + " has a denominator that is not a power of " + p.get_str());
    if (i > 0 && e.denom() % elems[i - 1].denom() != 0)
      throw Error("basis denominators do not form a divisor chain at element " + std::to_string(i));
    for (int j = 0; j < e.degree(); ++j) {
      const Int c = e.numer().coeff(j);
      if (c < 0 || c >= e.denom())
        throw Error("basis element " + std::to_string(i) + " has an unreduced coefficient");
    }
  }
}

inline PIntegralBasis triangularize(const std::vector<ThetaElement>& elems, const Int& p, int n = 12) {
  if (static_cast<int>(elems.size()) < n) throw Error("triangularize: fewer generators than the degree");
  linalg::RatMatrix gens;
  for (const auto& e : elems) gens.push_back(e.coords(n));
  auto tri = linalg::plocal_triangular(std::move(gens), p, static_cast<std::size_t>(n));
  PIntegralBasis out{p, {}};
  for (int i = 0; i < n; ++i) {
    if (tri.exponents[static_cast<std::size_t>(i)] > 0)
      throw Error("triangularize: module does not contain the power basis");
    auto el = ThetaElement::from_coords(tri.rows[static_cast<std::size_t>(i)]);
    if (arith::unit_part(el.denom(), p) != 1)
      throw Error("triangularize: denominators are not powers of " + p.get_str() + " after reduction");
    out.elements.push_back(std::move(el));
  }
  check_triangular(out.elements, p);
  return out;
}

// Coordinates of x in a triangular basis (back substitution from the top degree).
inline linalg::RatVec coordinates(const std::vector<ThetaElement>& basis, const ThetaElement& x) {
  const int n = static_cast<int>(basis.size());
  linalg::RatVec v = x.coords(n);
  linalg::RatVec out(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    auto row = basis[static_cast<std::size_t>(i)].coords(n);
    if (row[static_cast<std::size_t>(i)] == 0) throw Error("coordinates: basis is not triangular");
    Rat c = v[static_cast<std::size_t>(i)] / row[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] = c;
    if (c != 0)
      for (int j = 0; j <= i; ++j) v[static_cast<std::size_t>(j)] -= c * row[static_cast<std::size_t>(j)];
  }
  return out;
}

// x in the Z_(p)-span (p != 0) or the Z-span (p == 0) of a triangular basis.
inline bool in_span(const std::vector<ThetaElement>& basis, const ThetaElement& x, const Int& p) {
  for (const auto& c : coordinates(basis, x)) {
    if (p == 0 && c.get_den() != 1) return false;
    if (p != 0 && c.get_den() % p == 0) return false;
  }
  return true;
}

inline bool same_span(const std::vector<ThetaElement>& a, const std::vector<ThetaElement>& b, const Int& p) {
  for (const auto& x : a)
    if (!in_span(b, x, p)) return false;
  for (const auto& x : b)
    if (!in_span(a, x, p)) return false;
  return true;
}

inline IntegralBasis global_basis([[maybe_unused]] const Int& m, const std::map<Int, PIntegralBasis>& per_prime, int n = 12) {
  for (const auto& [p, b] : per_prime) {
    if (b.p != p) throw Error("global_basis: map key differs from the basis prime");
    if (static_cast<int>(b.elements.size()) != n) throw Error("global_basis: basis at " + p.get_str() + " has the wrong size");
    check_triangular(b.elements, p);
  }
  IntegralBasis out;
  for (int i = 0; i < n; ++i) {
    Int t = 1;
    std::vector<Int> c(static_cast<std::size_t>(i) + 1, Int(0));
    c[static_cast<std::size_t>(i)] = 1;
    for (const auto& [p, b] : per_prime) {
      const auto& el = b.elements[static_cast<std::size_t>(i)];
      const Int& q = el.denom();
      if (q == 1) continue;
      // CRT: combine c (mod t) with the numerator (mod q)
      Int t_inv = *arith::inverse_mod(t, q);
      for (int j = 0; j < i; ++j) {
        Int cur = c[static_cast<std::size_t>(j)];
        Int want = el.numer().coeff(j);
        Int k = arith::mod(Int((want - cur) * t_inv), q);
        c[static_cast<std::size_t>(j)] = cur + t * k;
      }
      t *= q;
    }
    for (int j = 0; j < i; ++j) c[static_cast<std::size_t>(j)] = arith::mod(c[static_cast<std::size_t>(j)], t);
    out.elements.emplace_back(IntPoly(std::move(c)), t);
  }
  check_triangular(out.elements, 0);
  return out;
}

inline arith::FactoredInt index_from_basis(const IntegralBasis& b) {
  arith::FactoredInt out;
  for (const auto& e : b.elements) out *= arith::factor(e.denom());
  return out;
}

}  // namespace combine
}  // namespace duodecic
