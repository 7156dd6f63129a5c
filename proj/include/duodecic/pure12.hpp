#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "arith.hpp"
#include "case_table.hpp"
#include "case_table_data.hpp"
#include "combine.hpp"
#include "montes2.hpp"
#include "theta.hpp"

namespace duodecic::pure12 {

inline constexpr int degree = 12;

// The embedded table, or the file named by DUODECIC_CASE_TABLE when set (for trying edited tables).
inline const table::CaseTable& case_table() {
  static const table::CaseTable t = [] {
    const char* path = std::getenv("DUODECIC_CASE_TABLE");
    if (path == nullptr || *path == '\0') return table::parse_case_table(table::embedded_case_table);
    std::ifstream in(path);
    if (!in) throw Error(std::string("cannot read case table ") + path);
    std::stringstream text;
    text << in.rdbuf();
    return table::parse_case_table(text.str());
  }();
  return t;
}

struct CaseLabel {
  Int p;
  std::string tag;  // A1..A15, B1..B8, T1, T2-3a, T2-3b, T3-2a, T3-2b, T3-2c, T4
  int delta = 0;    // +-1 for B cases and p = 3 unramified, 0 otherwise

  bool operator==(const CaseLabel&) const = default;
  bool tabulated() const { return tag[0] == 'A' || tag[0] == 'B'; }
};

// Throws InvalidInput unless x^12 - m defines a field of degree 12 and m is 12th-power-free.
inline void check_m(const Int& m) {
  if (arith::abs(m) < 2) throw InvalidInput("m must satisfy |m| >= 2, got " + m.get_str());
  if (!arith::is_12th_power_free(m)) throw InvalidInput("m = " + m.get_str() + " is not 12th-power-free");
  if (!arith::is_irreducible_x12_minus_m(m)) throw InvalidInput("x^12 - " + m.get_str() + " is reducible over Q");
}

inline int delta_of(const Int& unit) { return arith::mod(unit, Int(3)) == 1 ? 1 : -1; }

inline CaseLabel classify(const Int& m, const Int& p) {
  check_m(m);
  if (p < 2 || !arith::is_probable_prime(p)) throw InvalidInput(p.get_str() + " is not a prime");
  const int v = m % p == 0 ? arith::vp(m, p) : 0;
  const Int mp = arith::unit_part(m, p);
  CaseLabel out{p, "", 0};
  if (p == 3) out.delta = delta_of(mp);
  if (p == 2 || p == 3) {
    if (v == 0 || v % p.get_si() == 0) {
      const auto* c = case_table().find(p.get_si(), v, mp);
      if (!c) throw Error("classify: no case matches m = " + m.get_str() + " at p = " + p.get_str());
      out.tag = c->tag;
      return out;
    }
  }
  if (v == 0) {
    out.tag = "T4";
    return out;
  }
  if (v % p == 0)
    throw NotCovered("p = " + p.get_str() + " divides v_p(m) = " + std::to_string(v) +
                     "; no closed form covers this prime (the round-2 oracle still applies)");
  out.tag = "T1";
  return out;
}

inline table::Context context_for(const Int& m, const CaseLabel& label) {
  return table::Context{m, arith::unit_part(m, label.p), label.delta};
}

inline int tame_index(int v) { return (11 * (v - 1) + (std::gcd(v, degree) - 1)) / 2; }

inline int vp_index(const Int& m, const Int& p) {
  auto label = classify(m, p);
  if (label.tag == "T4") return 0;
  if (label.tag == "T1") return tame_index(arith::vp(m, p));
  return case_table().at(label.tag).index;
}

// Template rows with symbols substituted, in table order (not necessarily triangular).
inline std::vector<ThetaElement> template_elements(const Int& m, const CaseLabel& label) {
  const auto& c = case_table().at(label.tag);
  auto ctx = context_for(m, label);
  Int p = label.p;
  std::vector<ThetaElement> out;
  for (const auto& r : c.rows) out.emplace_back(c.row_numerator(r, ctx), arith::pow(p, static_cast<unsigned long>(r.k)));
  return out;
}

inline PIntegralBasis p_integral_basis(const Int& m, const Int& p) {
  auto label = classify(m, p);
  if (label.tag == "T4") {
    PIntegralBasis b{p, {}};
    for (int i = 0; i < degree; ++i) b.elements.push_back(ThetaElement::power(i));
    return b;
  }
  if (label.tag == "T1") {
    const int v = arith::vp(m, p);
    PIntegralBasis b{p, {}};
    for (int i = 0; i < degree; ++i)
      b.elements.emplace_back(IntPoly::monomial(1, i), arith::pow(p, static_cast<unsigned long>(i * v / degree)));
    return b;
  }
  return combine::triangularize(template_elements(m, label), p, degree);
}

inline std::vector<montes2::Type2Data> key_data_for_case(const CaseLabel& label) {
  if (!label.tabulated()) throw Error("key_data_for_case: " + label.tag + " has no second-order types");
  const auto& c = case_table().at(label.tag);
  table::Context ctx{0, 0, label.delta};
  std::vector<montes2::Type2Data> out;
  for (const auto& k : c.keys)
    out.push_back(montes2::Type2Data{label.p, k.h, k.e, FpPoly(label.p.get_si(), k.psi.eval(ctx)), k.phi.eval(ctx)});
  return out;
}

inline arith::FactoredInt disc_f(const Int& m) {
  check_m(m);
  auto d = arith::factor(m).pow(11);
  d *= arith::FactoredInt(-1, {{Int(2), 24}, {Int(3), 12}});
  return d;
}

// Primes that can divide the index: those dividing 6m.
inline std::vector<Int> index_primes(const Int& m) {
  std::vector<Int> out{Int(2), Int(3)};
  const auto f = arith::factor(m);
  for (const auto& [q, e] : f.factors())
    if (q > 3) out.push_back(q);
  return out;
}

inline arith::FactoredInt index(const Int& m) {
  arith::FactoredInt out;
  for (const auto& p : index_primes(m)) {
    int v = vp_index(m, p);
    if (v > 0) out *= arith::FactoredInt(1, {{p, v}});
  }
  return out;
}

inline arith::FactoredInt field_discriminant(const Int& m) { return disc_f(m) / index(m).pow(2); }

inline bool is_power_basis_monogenic(const Int& m) {
  check_m(m);
  if (!arith::is_squarefree(m)) throw InvalidInput("monogenity criterion needs squarefree m, got " + m.get_str());
  const bool two = m % 2 == 0, three = m % 3 == 0;
  const bool m3mod4 = arith::mod(m, Int(4)) == 3;
  const bool sq1mod9 = arith::mod(Int(m * m), Int(9)) == 1;
  if (!two && !three) return m3mod4 && !sq1mod9;
  if (!two && three) return m3mod4;
  if (two && !three) return !sq1mod9;
  return true;
}

}  // namespace duodecic::pure12
