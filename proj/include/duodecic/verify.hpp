#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arith.hpp"
#include "combine.hpp"
#include "int_poly.hpp"
#include "linalg.hpp"
#include "theta.hpp"

namespace duodecic::verify {

using linalg::RatMatrix;
using linalg::RatVec;

// Column j holds the power-basis coordinates of a * theta^j.
inline RatMatrix mult_matrix(const ThetaElement& a, const NumberField& k) {
  const int n = k.degree();
  RatMatrix m(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n)));
  IntPoly cur = a.numer().mod_monic(k.poly());
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      Rat c(cur.coeff(i), a.denom());
      c.canonicalize();
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
    }
    cur = cur.shifted(1).mod_monic(k.poly());
  }
  return m;
}

inline RatMatrix mult_matrix(const ThetaElement& a, const Int& m) { return mult_matrix(a, NumberField::pure(12, m)); }

inline Rat trace(const ThetaElement& a, const NumberField& k) {
  auto m = mult_matrix(a, k);
  Rat t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

inline bool is_algebraic_integer(const ThetaElement& a, const NumberField& k) {
  if (a.denom() == 1) return true;
  for (const auto& c : linalg::charpoly(mult_matrix(a, k)))
    if (c.get_den() != 1) return false;
  return true;
}

inline bool is_algebraic_integer(const ThetaElement& a, const Int& m) {
  return is_algebraic_integer(a, NumberField::pure(12, m));
}

// det [Tr(b_i b_j)]
inline Rat trace_form_disc(const std::vector<ThetaElement>& basis, const NumberField& k) {
  const int n = k.degree();
  if (static_cast<int>(basis.size()) != n) throw Error("trace_form_disc: basis size differs from the degree");
  // Tr(theta^s) for s < 2n - 1
  std::vector<Rat> power_trace;
  IntPoly cur = IntPoly::constant(1);
  for (int s = 0; s < 2 * n - 1; ++s) {
    Rat t = 0;
    IntPoly w = cur;
    for (int i = 0; i < n; ++i) {
      t += Rat(w.coeff(i));
      w = w.shifted(1).mod_monic(k.poly());
    }
    power_trace.push_back(t);
    cur = cur.shifted(1).mod_monic(k.poly());
  }
  std::vector<RatVec> coords;
  for (const auto& b : basis) coords.push_back(b.coords(n));
  RatMatrix gram(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rat t = 0;
      for (int a = 0; a < n; ++a) {
        const Rat& x = coords[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)];
        if (x == 0) continue;
        for (int b = 0; b < n; ++b) {
          const Rat& y = coords[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)];
          if (y != 0) t += x * y * power_trace[static_cast<std::size_t>(a + b)];
        }
      }
      gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = t;
      gram[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = t;
    }
  Rat d = linalg::det(gram);
  if (d == 0) throw Error("trace_form_disc: basis is linearly dependent");
  return d;
}

inline Rat trace_form_disc(const std::vector<ThetaElement>& basis, const Int& m) {
  return trace_form_disc(basis, NumberField::pure(12, m));
}

// (-1)^(n(n-1)/2) Res(f, f') for monic f, via the Sylvester determinant.
inline Int poly_discriminant_resultant(const IntPoly& f) {
  if (!f.is_monic() || f.degree() < 1) throw Error("poly_discriminant_resultant: f must be monic");
  IntPoly g = f.derivative();
  const int n = f.degree(), d = g.degree();
  if (d < 0) return 0;
  const int size = n + d;
  linalg::IntMatrix s(static_cast<std::size_t>(size), std::vector<Int>(static_cast<std::size_t>(size)));
  for (int r = 0; r < d; ++r)
    for (int i = 0; i <= n; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = f.coeff(n - i);
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= d; ++i) s[static_cast<std::size_t>(d + r)][static_cast<std::size_t>(r + i)] = g.coeff(d - i);
  Int res = linalg::det_bareiss(std::move(s));
  return (n * (n - 1) / 2) % 2 == 0 ? res : Int(-res);
}

// A Q-basis of K with its coordinate change and structure constants.
struct OrderBasis {
  std::vector<ThetaElement> elements;
  RatMatrix matrix;   // row i = power-basis coordinates of element i
  RatMatrix inverse;
  std::vector<std::vector<RatVec>> mult_table;  // [i][j] = coordinates of e_i e_j

  std::size_t size() const { return elements.size(); }

  RatVec coordinates(const ThetaElement& x) const { return linalg::apply(x.coords(static_cast<int>(size())), inverse); }

  bool is_closed() const {
    for (const auto& row : mult_table)
      for (const auto& v : row)
        for (const auto& c : v)
          if (c.get_den() != 1) return false;
    return true;
  }
};

inline OrderBasis make_order(std::vector<ThetaElement> elements, const NumberField& k) {
  const int n = k.degree();
  if (static_cast<int>(elements.size()) != n) throw Error("make_order: basis size differs from the degree");
  OrderBasis o;
  o.elements = std::move(elements);
  for (const auto& e : o.elements) o.matrix.push_back(e.coords(n));
  o.inverse = linalg::inverse(o.matrix);
  o.mult_table.assign(static_cast<std::size_t>(n), std::vector<RatVec>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      auto v = o.coordinates(k.mul(o.elements[static_cast<std::size_t>(i)], o.elements[static_cast<std::size_t>(j)]));
      o.mult_table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      o.mult_table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = std::move(v);
    }
  return o;
}

namespace detail {

using Word = std::int64_t;
using linalg::FpVec;

// Structure constants reduced mod p; requires a closed order.
inline std::vector<std::vector<FpVec>> constants_mod_p(const OrderBasis& o, Word p) {
  const std::size_t n = o.size();
  std::vector<std::vector<FpVec>> c(n, std::vector<FpVec>(n, FpVec(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        const Rat& x = o.mult_table[i][j][l];
        if (x.get_den() != 1) throw Error("round-2: order is not closed under multiplication");
        c[i][j][l] = arith::detail::reduce(x.get_num(), p);
      }
  return c;
}

inline FpVec algebra_mul(const FpVec& x, const FpVec& y, const std::vector<std::vector<FpVec>>& c, Word p) {
  const std::size_t n = x.size();
  FpVec z(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      Word s = arith::detail::mulmod(x[i], y[j], p);
      const FpVec& row = c[i][j];
      for (std::size_t l = 0; l < n; ++l)
        if (row[l]) z[l] = (z[l] + arith::detail::mulmod(s, row[l], p)) % p;
    }
  }
  return z;
}

inline FpVec algebra_pow(FpVec x, Int e, const std::vector<std::vector<FpVec>>& c, Word p, const FpVec& one) {
  FpVec r = one;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = algebra_mul(r, x, c, p);
    e >>= 1;
    if (e > 0) x = algebra_mul(x, x, c, p);
  }
  return r;
}

inline FpVec unit_vector(const OrderBasis& o, Word p) {
  auto v = o.coordinates(ThetaElement());
  FpVec one;
  for (const auto& c : v) {
    if (c.get_den() != 1) throw Error("round-2: 1 is not in the order");
    one.push_back(arith::detail::reduce(c.get_num(), p));
  }
  return one;
}

}  // namespace detail

// F_p-basis of the nilradical of O/pO: kernel of x -> x^(p^j), p^j >= n.
inline std::vector<linalg::FpVec> p_radical(const OrderBasis& o, const Int& p, const NumberField& k) {
  const auto pw = arith::detail::to_word_prime(p);
  const std::size_t n = o.size();
  if (static_cast<int>(n) != k.degree()) throw Error("p_radical: order does not match the field");
  auto c = detail::constants_mod_p(o, pw);
  Int q = p;
  while (q < static_cast<long>(n)) q *= p;
  linalg::FpVec one = detail::unit_vector(o, pw);
  linalg::FpMatrix frob;
  for (std::size_t i = 0; i < n; ++i) {
    linalg::FpVec e(n, 0);
    e[i] = 1;
    frob.push_back(detail::algebra_pow(e, q, c, pw, one));
  }
  return linalg::left_kernel_mod_p(frob, pw);
}

namespace detail {

inline OrderBasis triangular_order(const std::vector<RatVec>& gens, const Int& p, const NumberField& k) {
  std::vector<ThetaElement> elems;
  for (const auto& g : gens) elems.push_back(ThetaElement::from_coords(g));
  auto tri = combine::triangularize(elems, p, k.degree());
  return make_order(tri.elements, k);
}

}  // namespace detail

// O' = {x : x R subset R}, re-triangularised at p.
inline OrderBasis multiplier_ring(const OrderBasis& o, const std::vector<linalg::FpVec>& radical, const Int& p,
                                  const NumberField& k) {
  const auto pw = arith::detail::to_word_prime(p);
  const std::size_t n = o.size();
  auto [rows, pivots] = linalg::rref_mod_p(radical, pw);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;

  // U = lifts of the radical rows plus p e_j for the non-pivot j
  std::vector<std::vector<Int>> ubasis;
  for (const auto& r : rows) ubasis.emplace_back(r.begin(), r.end());
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) {
      std::vector<Int> v(n, Int(0));
      v[j] = p;
      ubasis.push_back(std::move(v));
    }

  std::vector<std::vector<std::vector<Int>>> c(n, std::vector<std::vector<Int>>(n, std::vector<Int>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        const Rat& x = o.mult_table[i][j][l];
        if (x.get_den() != 1) throw Error("multiplier_ring: order is not closed under multiplication");
        c[i][j][l] = x.get_num();
      }

  linalg::FpMatrix phi;
  for (std::size_t i = 0; i < n; ++i) {
    linalg::FpVec img;
    for (const auto& beta : ubasis) {
      std::vector<Int> x(n, Int(0));
      for (std::size_t j = 0; j < n; ++j) {
        if (beta[j] == 0) continue;
        for (std::size_t l = 0; l < n; ++l) x[l] += beta[j] * c[i][j][l];
      }
      // U-coordinates of x, reduced mod p
      for (std::size_t kk = 0; kk < rows.size(); ++kk) img.push_back(arith::detail::reduce(x[pivots[kk]], pw));
      for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        Int y = x[j];
        for (std::size_t kk = 0; kk < rows.size(); ++kk) y -= x[pivots[kk]] * rows[kk][j];
        if (y % p != 0) throw Error("multiplier_ring: radical is not an ideal");
        y /= p;
        img.push_back(arith::detail::reduce(y, pw));
      }
    }
    phi.push_back(std::move(img));
  }
  auto ker = linalg::left_kernel_mod_p(phi, pw);
  if (ker.empty()) return o;

  std::vector<RatVec> gens = o.matrix;
  for (const auto& w : ker) {
    RatVec v(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i] == 0) continue;
      for (std::size_t l = 0; l < n; ++l) v[l] += Rat(w[i]) * o.matrix[i][l];
    }
    for (auto& x : v) x /= Rat(p);
    gens.push_back(std::move(v));
  }
  return detail::triangular_order(gens, p, k);
}

inline OrderBasis equation_order(const NumberField& k) {
  std::vector<ThetaElement> e;
  for (int i = 0; i < k.degree(); ++i) e.push_back(ThetaElement::power(i));
  return make_order(std::move(e), k);
}

// Round-2 iteration from Z[theta]; no table or Newton-polygon input.
inline OrderBasis round2_maximal_order(const NumberField& k, const Int& p) {
  OrderBasis o = equation_order(k);
  Int disc = poly_discriminant_resultant(k.poly());
  if (disc == 0) throw Error("round-2: defining polynomial is not separable");
  if (disc % (p * p) != 0) return o;
  for (int guard = 0;; ++guard) {
    if (guard > 10000) throw Error("round-2: no fixed point reached");
    auto rad = p_radical(o, p, k);
    OrderBasis next = multiplier_ring(o, rad, p, k);
    if (next.matrix == o.matrix) return o;
    o = std::move(next);
  }
}

inline int order_index_exponent(const OrderBasis& o, const Int& p) {
  // |det matrix|^{-1} = index over Z[theta]
  Rat d = linalg::det(o.matrix);
  return -arith::vp(d, p);
}

inline int round2_vp_index(const Int& m, const Int& p) {
  return order_index_exponent(round2_maximal_order(NumberField::pure(12, m), p), p);
}

// Triangular p-integral basis read off the round-2 fixed point.
inline PIntegralBasis round2_p_integral_basis(const Int& m, const Int& p) {
  auto o = round2_maximal_order(NumberField::pure(12, m), p);
  return combine::triangularize(o.elements, p, 12);
}

struct VerifyReport {
  Int p;
  std::vector<std::size_t> non_integral;  // (a)
  int exponent_sum = 0;                   // (b)
  int oracle_index = 0;
  bool closed = false;                    // (c)
  bool p_maximal = false;                 // (d)
  std::vector<std::string> failures;

  bool all_pass() const { return failures.empty(); }
};

inline VerifyReport verify_p_basis(const Int& m, const Int& p, const PIntegralBasis& basis) {
  NumberField k = NumberField::pure(12, m);
  VerifyReport r;
  r.p = p;
  for (std::size_t i = 0; i < basis.elements.size(); ++i)
    if (!is_algebraic_integer(basis.elements[i], k)) {
      r.non_integral.push_back(i);
      r.failures.push_back("(a) element " + std::to_string(i) + " = " + basis.elements[i].to_string() +
                           " is not an algebraic integer");
    }
  r.exponent_sum = 0;
  for (const auto& e : basis.elements) r.exponent_sum += arith::vp(e.denom(), p);
  r.oracle_index = round2_vp_index(m, p);
  if (r.exponent_sum != r.oracle_index)
    r.failures.push_back("(b) exponent sum " + std::to_string(r.exponent_sum) + " differs from the round-2 index " +
                         std::to_string(r.oracle_index));
  try {
    OrderBasis o = make_order(basis.elements, k);
    r.closed = o.is_closed();
    if (!r.closed) {
      r.failures.push_back("(c) the spanned module is not closed under multiplication");
    } else {
      auto rad = p_radical(o, p, k);
      r.p_maximal = multiplier_ring(o, rad, p, k).matrix == o.matrix;
      if (!r.p_maximal) r.failures.push_back("(d) the spanned order is not " + p.get_str() + "-maximal");
    }
  } catch (const Error& ex) {
    r.failures.push_back(std::string("(c) ") + ex.what());
  }
  return r;
}

}  // namespace duodecic::verify
