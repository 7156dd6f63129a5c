#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "arith.hpp"
#include "fp_poly.hpp"
#include "int_poly.hpp"

namespace duodecic::newton {

struct PolygonPoint {
  long abscissa = 0;
  Rat ordinate;
  bool operator==(const PolygonPoint&) const = default;
};

struct Edge {
  PolygonPoint start, end;
  Rat slope;
  std::vector<long> lattice_abscissas;

  long length() const { return end.abscissa - start.abscissa; }
  // slope = -h/e in lowest terms (h may be <= 0 for the non-principal edges)
  Int h() const { return -slope.get_num(); }
  long e() const { return slope.get_den().get_si(); }
  long degree() const { return length() / e(); }
  Rat ordinate_at(long x) const { return start.ordinate + slope * (x - start.abscissa); }
};

struct NewtonPolygon {
  std::vector<PolygonPoint> points;
  std::vector<PolygonPoint> vertices;
  std::vector<Edge> edges;

  std::vector<Edge> principal() const {
    std::vector<Edge> out;
    for (const auto& e : edges)
      if (e.slope < 0) out.push_back(e);
    return out;
  }

  Rat ordinate_at(long x) const {
    for (const auto& e : edges)
      if (x >= e.start.abscissa && x <= e.end.abscissa) return e.ordinate_at(x);
    if (vertices.size() == 1 && x == vertices.front().abscissa) return vertices.front().ordinate;
    throw Error("NewtonPolygon: abscissa outside the polygon");
  }
};

namespace detail {
// (b - a) x (c - a) in the plane; > 0 means c is left of a->b.
inline Rat cross(const PolygonPoint& a, const PolygonPoint& b, const PolygonPoint& c) {
  return Rat(b.abscissa - a.abscissa) * (c.ordinate - a.ordinate) -
         (b.ordinate - a.ordinate) * Rat(c.abscissa - a.abscissa);
}

inline Rat floor(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rat(f);
}
}  // namespace detail

// Monotone chain lower hull; collinear points are not vertices.
inline NewtonPolygon lower_hull(std::vector<PolygonPoint> pts) {
  if (pts.empty()) throw Error("lower_hull: no points");
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.abscissa < b.abscissa; });
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i].abscissa == pts[i - 1].abscissa) throw Error("lower_hull: repeated abscissa");

  NewtonPolygon poly;
  poly.points = pts;
  std::vector<PolygonPoint>& hull = poly.vertices;
  for (const auto& pt : pts) {
    while (hull.size() >= 2 && detail::cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }
  for (std::size_t i = 1; i < hull.size(); ++i) {
    Edge e;
    e.start = hull[i - 1];
    e.end = hull[i];
    e.slope = (e.end.ordinate - e.start.ordinate) / Rat(e.length());
    for (long x = e.start.abscissa; x <= e.end.abscissa; ++x) {
      Rat y = e.ordinate_at(x);
      if (y.get_den() == 1) e.lattice_abscissas.push_back(x);
    }
    poly.edges.push_back(std::move(e));
  }
  return poly;
}

inline int gauss_valuation(const IntPoly& g, const Int& p) {
  if (g.is_zero()) throw Error("gauss_valuation: zero polynomial");
  int v = -1;
  for (const auto& a : g.coeffs())
    if (a != 0) {
      int w = arith::vp(a, p);
      if (v < 0 || w < v) v = w;
    }
  return v;
}

inline NewtonPolygon newton_polygon(const IntPoly& g, const Int& p) {
  if (!g.is_monic()) throw Error("newton_polygon: polynomial must be monic");
  if (g.coeff(0) == 0) throw Error("newton_polygon: constant term must be nonzero");
  std::vector<PolygonPoint> pts;
  for (int i = 0; i <= g.degree(); ++i)
    if (g.coeff(i) != 0) pts.push_back({i, Rat(arith::vp(g.coeff(i), p))});
  return lower_hull(std::move(pts));
}

// Residues of the on-edge coefficients, made monic.
inline FpPoly residual_polynomial(const IntPoly& g, const Int& p, const Edge& edge) {
  if (edge.slope >= 0) throw Error("residual_polynomial: edge slope must be negative");
  const std::int64_t pw = arith::detail::to_word_prime(p);
  const long e = edge.e();
  std::vector<std::int64_t> c;
  for (long j = 0; j <= edge.degree(); ++j) {
    long x = edge.start.abscissa + e * j;
    Rat y = edge.ordinate_at(x);
    if (y.get_den() != 1) throw Error("residual_polynomial: abscissa mismatch");
    const Int a = g.coeff(static_cast<int>(x));
    if (a == 0 || arith::vp(a, p) != y) {
      if (a != 0 && arith::vp(a, p) < y) throw Error("residual_polynomial: edge is not from this polygon");
      c.push_back(0);
      continue;
    }
    Int unit = a / arith::pow(p, y.get_num().get_ui());
    c.push_back(arith::detail::reduce(unit, pw));
  }
  FpPoly r(pw, std::move(c));
  if (r.coeff(0) == 0 || r.degree() != edge.degree()) throw Error("residual_polynomial: edge endpoints are not source points");
  return r.monic();
}

inline bool is_p_regular(const IntPoly& g, const Int& p) {
  auto poly = newton_polygon(g, p);
  for (const auto& e : poly.principal())
    if (!is_squarefree(residual_polynomial(g, p, e))) return false;
  return true;
}

namespace detail {
// Lattice points (x, y) with x >= 1 and baseline < y <= polygon(x) over the principal part.
inline Int count_under(const std::vector<Edge>& principal, const Rat& baseline) {
  Int total = 0;
  for (std::size_t k = 0; k < principal.size(); ++k) {
    const Edge& e = principal[k];
    long from = std::max<long>(1, e.start.abscissa + (k == 0 ? 0 : 1));
    for (long x = from; x <= e.end.abscissa; ++x) {
      Rat top = floor(e.ordinate_at(x));
      Rat base = floor(baseline);
      if (top > base) total += Rat(top - base).get_num();
    }
  }
  return total;
}
}  // namespace detail

inline Int polygon_lattice_count(const NewtonPolygon& poly) { return detail::count_under(poly.principal(), Rat(0)); }

// Points strictly above the horizontal line through the last principal vertex.
inline Int lattice_count_above_last_vertex(const NewtonPolygon& poly) {
  auto pr = poly.principal();
  if (pr.empty()) return 0;
  return detail::count_under(pr, pr.back().end.ordinate);
}

inline Int triangle_lattice_count(const Int& t, const Int& b) {
  if (t < 1 || b < 1) throw Error("triangle_lattice_count: t and b must be positive");
  return ((t - 1) * (b - 1) + arith::gcd(t, b) - 1) / 2;
}

// nullopt when g is not p-regular.
inline std::optional<Int> ore_index(const IntPoly& g, const Int& p) {
  if (!g.is_monic()) throw Error("ore_index: polynomial must be monic");
  for (int i = 0; i < g.degree(); ++i)
    if (g.coeff(i) % p != 0) throw Error("ore_index: polynomial is not x^n mod p");
  auto poly = newton_polygon(g, p);
  if (poly.principal().size() != 1) throw Error("ore_index: polygon must have a single negative edge");
  if (!is_p_regular(g, p)) return std::nullopt;
  return polygon_lattice_count(poly);
}

}  // namespace duodecic::newton
