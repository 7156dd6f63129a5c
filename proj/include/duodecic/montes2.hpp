#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arith.hpp"
#include "fp_poly.hpp"
#include "int_poly.hpp"
#include "newton.hpp"
#include "theta.hpp"

namespace duodecic::montes2 {

// Type (x; -h/e, psi) of order two together with its key polynomial phi.
struct Type2Data {
  Int p;
  long h = 1;
  long e = 1;
  FpPoly psi;
  IntPoly phi;

  int mu() const { return psi.degree(); }
  bool operator==(const Type2Data&) const = default;
};

struct PhiExpansion {
  std::vector<IntPoly> coefficients;  // a_0 .. a_u
  std::vector<IntPoly> quotients;     // q_0 = g, q_1 .. q_u

  const IntPoly& quotient(int i) const { return quotients.at(static_cast<std::size_t>(i)); }
};

struct SecondOrderPolygon {
  newton::NewtonPolygon polygon;
  Rat last_vertex_ordinate;
  long last_vertex_abscissa = 0;
  PhiExpansion expansion;
};

namespace detail {

inline bool congruent_to_monomial(const IntPoly& g, const Int& p) {
  for (int i = 0; i < g.degree(); ++i)
    if (g.coeff(i) % p != 0) return false;
  return g.is_monic();
}

inline long inverse_mod_small(long a, long n) {
  if (n == 1) return 0;
  return static_cast<long>(arith::detail::invmod(a % n, n));
}

}  // namespace detail

// V(q) = min over i of e*v_p(b_i) + i*h.
inline long second_order_valuation(const Type2Data& t, const IntPoly& q) {
  if (q.is_zero()) throw Error("second_order_valuation: zero polynomial");
  std::optional<long> best;
  for (int i = 0; i <= q.degree(); ++i) {
    if (q.coeff(i) == 0) continue;
    long v = t.e * arith::vp(q.coeff(i), t.p) + i * t.h;
    if (!best || v < *best) best = v;
  }
  return *best;
}

inline bool validate_key_polynomial(const Type2Data& t) {
  if (t.h < 1 || t.e < 1 || std::gcd(t.h, t.e) != 1) return false;
  if (t.psi.degree() < 1 || !t.psi.is_monic()) return false;
  if (t.psi.degree() == 1 && t.psi.coeff(0) == 0) return false;
  if (Int(static_cast<long>(t.psi.p())) != t.p) return false;
  auto fac = fp_factor(t.psi);
  if (fac.size() != 1 || fac.front().second != 1) return false;
  if (t.phi.degree() != t.e * t.mu()) return false;
  if (!detail::congruent_to_monomial(t.phi, t.p) || t.phi.coeff(0) == 0) return false;
  auto poly = newton::newton_polygon(t.phi, t.p);
  auto pr = poly.principal();
  if (pr.size() != 1 || pr.front().start.abscissa != 0 || pr.front().end.abscissa != t.phi.degree()) return false;
  if (pr.front().slope != Rat(-t.h, t.e)) return false;
  return newton::residual_polynomial(t.phi, t.p, pr.front()) == t.psi;
}

inline PhiExpansion phi_expansion(const IntPoly& g, const IntPoly& phi) {
  if (phi.degree() < 1) throw Error("phi_expansion: key polynomial must have positive degree");
  PhiExpansion ex;
  IntPoly q = g;
  ex.quotients.push_back(q);
  while (!q.is_zero()) {
    auto [next, rem] = q.divmod_monic(phi);
    ex.coefficients.push_back(std::move(rem));
    q = std::move(next);
    if (!q.is_zero()) ex.quotients.push_back(q);
  }
  return ex;
}

inline SecondOrderPolygon v_newton_polygon(const IntPoly& g, const Type2Data& t) {
  if (!detail::congruent_to_monomial(g, t.p)) throw Error("v_newton_polygon: g must be monic and x^n mod p");
  SecondOrderPolygon out;
  out.expansion = phi_expansion(g, t.phi);
  const long v_phi = second_order_valuation(t, t.phi);
  std::vector<newton::PolygonPoint> pts;
  for (std::size_t i = 0; i < out.expansion.coefficients.size(); ++i) {
    const auto& a = out.expansion.coefficients[i];
    if (a.is_zero()) continue;
    long ord = second_order_valuation(t, a) + static_cast<long>(i) * v_phi;
    pts.push_back({static_cast<long>(i), Rat(ord)});
  }
  out.polygon = newton::lower_hull(std::move(pts));
  auto pr = out.polygon.principal();
  if (pr.empty()) {
    out.last_vertex_abscissa = out.polygon.vertices.front().abscissa;
    out.last_vertex_ordinate = out.polygon.vertices.front().ordinate;
  } else {
    out.last_vertex_abscissa = pr.back().end.abscissa;
    out.last_vertex_ordinate = pr.back().end.ordinate;
  }
  return out;
}

// First-order residual of a (deg a < deg phi) at slope -h/e, evaluated at z = Y mod psi and
// normalised by z^t with t = (i0 - l*V(a))/e, l = h^{-1} mod e.
inline FpPoly residual_coefficient(const Type2Data& t, const ResidueField& fq, const IntPoly& a) {
  const long va = second_order_valuation(t, a);
  std::optional<long> i0;
  FpPoly acc = fq.zero();
  FpPoly z = fq.generator();
  for (int j = 0; j <= a.degree(); ++j) {
    if (a.coeff(j) == 0) continue;
    long w = arith::vp(a.coeff(j), t.p);
    if (t.e * w + j * t.h != va) continue;
    if (!i0) i0 = j;
    long k = (j - *i0) / t.e;
    Int unit = a.coeff(j) / arith::pow(t.p, static_cast<unsigned long>(w));
    FpPoly term = FpPoly::constant(fq.p(), arith::detail::reduce(unit, fq.p()));
    acc = fq.add(acc, fq.mul(term, fq.pow(z, k)));
  }
  long ell = detail::inverse_mod_small(((t.h % t.e) + t.e) % t.e, t.e);
  long num = *i0 - ell * va;
  if (num % t.e != 0) throw Error("residual_coefficient: inconsistent valuation data");
  return fq.mul(acc, fq.pow(z, num / t.e));
}

inline FqPoly second_order_residual(const IntPoly& g, const Type2Data& t, const newton::Edge& edge) {
  if (edge.slope >= 0) throw Error("second_order_residual: edge slope must be negative");
  auto sp = v_newton_polygon(g, t);
  bool found = false;
  for (const auto& e : sp.polygon.principal()) found = found || (e.start == edge.start && e.end == edge.end);
  if (!found) throw Error("second_order_residual: edge is not from this polygon");

  ResidueField fq(t.psi);
  const long v_phi = second_order_valuation(t, t.phi);
  std::vector<FpPoly> coeffs;
  for (long k = 0; k <= edge.degree(); ++k) {
    long i = edge.start.abscissa + k * edge.e();
    const auto& a = sp.expansion.coefficients.at(static_cast<std::size_t>(i));
    if (a.is_zero() || Rat(second_order_valuation(t, a) + i * v_phi) != edge.ordinate_at(i)) {
      coeffs.push_back(fq.zero());
      continue;
    }
    coeffs.push_back(residual_coefficient(t, fq, a));
  }
  FqPoly r(fq, std::move(coeffs));
  if (r.degree() != edge.degree() || r.coeff(0).is_zero()) throw Error("second_order_residual: degenerate edge");
  return r.monic();
}

inline bool is_V_regular(const IntPoly& g, std::span<const Type2Data> types) {
  for (const auto& t : types) {
    auto sp = v_newton_polygon(g, t);
    for (const auto& e : sp.polygon.principal())
      if (!second_order_residual(g, t, e).is_separable()) return false;
  }
  return true;
}

namespace detail {

struct FirstOrder {
  newton::NewtonPolygon polygon;
  newton::Edge edge;
  FpFactorization residual;
};

// Checks the hypotheses shared by the index and basis engines.
inline FirstOrder check_types(const IntPoly& g, const Int& p, std::span<const Type2Data> types, bool allow_simple) {
  if (!congruent_to_monomial(g, p)) throw Error("montes2: g must be monic and x^n mod p");
  FirstOrder fo;
  fo.polygon = newton::newton_polygon(g, p);
  auto pr = fo.polygon.principal();
  if (pr.size() != 1) throw Error("montes2: first-order polygon must have a single negative edge");
  fo.edge = pr.front();
  fo.residual = fp_factor(newton::residual_polynomial(g, p, fo.edge));

  std::map<std::vector<std::int64_t>, int> repeated;
  for (const auto& [f, r] : fo.residual) {
    if (r >= 2) repeated[f.coeffs()] = r;
    else if (!allow_simple) throw Error("montes2: first-order residual has a simple factor; basis engine needs types for all factors");
  }
  if (repeated.size() != types.size()) throw Error("montes2: types do not match the repeated residual factors");
  for (const auto& t : types) {
    if (t.p != p) throw Error("montes2: type prime mismatch");
    if (!repeated.count(t.psi.coeffs())) throw Error("montes2: type factor " + t.psi.to_string() + " is not a repeated residual factor");
    if (Rat(-t.h, t.e) != fo.edge.slope) throw Error("montes2: type slope differs from the first-order slope");
    if (!validate_key_polynomial(t)) throw Error("montes2: invalid key polynomial " + t.phi.to_string());
  }
  return fo;
}

inline SecondOrderPolygon regular_polygon(const IntPoly& g, const Type2Data& t, const FirstOrder& fo) {
  auto sp = v_newton_polygon(g, t);
  int r = 0;
  for (const auto& [f, mult] : fo.residual)
    if (f == t.psi) r = mult;
  if (sp.last_vertex_abscissa != r) throw Error("montes2: principal V-polygon length differs from the residual multiplicity");
  for (const auto& e : sp.polygon.principal())
    if (!second_order_residual(g, t, e).is_separable())
      throw NotVRegular("g is not V-regular for the type with psi = " + t.psi.to_string() + ", phi = " + t.phi.to_string());
  return sp;
}

}  // namespace detail

inline Int montes_index(const IntPoly& g, const Int& p, std::span<const Type2Data> types) {
  auto fo = detail::check_types(g, p, types, true);
  Int total = newton::polygon_lattice_count(fo.polygon);
  for (const auto& t : types) {
    auto sp = detail::regular_polygon(g, t, fo);
    total += newton::lattice_count_above_last_vertex(sp.polygon) * t.mu();
  }
  return total;
}

// Raw set theta^(n-u) q_j(theta) / p^floor(y_u + (Y_j - j V(phi))/e), n elements.
inline std::vector<ThetaElement> montes_p_basis(const IntPoly& g, const Int& p, std::span<const Type2Data> types) {
  auto fo = detail::check_types(g, p, types, false);
  const long n = g.degree();
  std::vector<ThetaElement> out;
  for (const auto& t : types) {
    auto sp = detail::regular_polygon(g, t, fo);
    const long v_phi = second_order_valuation(t, t.phi);
    for (long j = 1; j <= sp.last_vertex_abscissa; ++j) {
      Rat shift = (sp.polygon.ordinate_at(j) - Rat(j * v_phi)) / Rat(t.e);
      const IntPoly& q = sp.expansion.quotient(static_cast<int>(j));
      for (long u = n - t.e * t.mu() + 1; u <= n; ++u) {
        Rat ex = fo.polygon.ordinate_at(u) + shift;
        Int k;
        mpz_fdiv_q(k.get_mpz_t(), ex.get_num_mpz_t(), ex.get_den_mpz_t());
        if (k < 0) throw Error("montes_p_basis: negative denominator exponent");
        out.emplace_back(q.shifted(static_cast<int>(n - u)), arith::pow(p, k.get_ui()));
      }
    }
  }
  if (static_cast<long>(out.size()) != n) throw Error("montes_p_basis: element count differs from the degree");
  return out;
}

}  // namespace duodecic::montes2
