#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "combine.hpp"
#include "errors.hpp"
#include "pure12.hpp"
#include "verify.hpp"

namespace duodecic {

struct PrimeReport {
  Int p;
  std::string tag;                 // case label, or "oracle" when no closed form applies
  int vp_index = 0;
  PIntegralBasis basis;
  bool verified = false;
  std::optional<int> montes_index;  // only for tabulated cases
  int oracle_index = 0;

  bool operator==(const PrimeReport&) const = default;
};

struct FieldReport {
  Int m;
  bool irreducible = true;
  arith::FactoredInt Df;
  std::map<Int, PrimeReport> per_prime;
  arith::FactoredInt dK;
  IntegralBasis global_basis;
  std::optional<bool> monogenic;
  // Tr-form disc of the global basis times index^2 equals D_f, and D_f matches the resultant route.
  bool disc_identity = false;
  std::vector<std::string> warnings;

  bool operator==(const FieldReport&) const = default;

  bool all_verified() const {
    if (!disc_identity) return false;
    for (const auto& [p, r] : per_prime)
      if (!r.verified) return false;
    return true;
  }

  arith::FactoredInt index() const {
    arith::FactoredInt out;
    for (const auto& [p, r] : per_prime)
      if (r.vp_index > 0) out *= arith::FactoredInt(1, {{p, r.vp_index}});
    return out;
  }
};

inline PrimeReport analyze_prime(const Int& m, const Int& p, std::vector<std::string>& warnings) {
  PrimeReport r;
  r.p = p;
  try {
    auto label = pure12::classify(m, p);
    r.tag = label.tag;
    r.vp_index = pure12::vp_index(m, p);
    r.basis = pure12::p_integral_basis(m, p);
    if (label.tabulated()) {
      auto types = pure12::key_data_for_case(label);
      r.montes_index = static_cast<int>(montes2::montes_index(IntPoly::binomial(pure12::degree, m), p, types).get_si());
      if (!pure12::case_table().at(label.tag).notes.empty())
        warnings.push_back("case " + label.tag + " at p = " + p.get_str() + " uses oracle-corrected table entries");
    }
  } catch (const NotCovered&) {
    r.tag = "oracle";
    r.basis = verify::round2_p_integral_basis(m, p);
    r.vp_index = r.basis.exponent_sum();
    warnings.push_back("p = " + p.get_str() + " is not covered by a closed form; oracle-only value");
  }
  auto rep = verify::verify_p_basis(m, p, r.basis);
  r.oracle_index = rep.oracle_index;
  r.verified = rep.all_pass() && r.vp_index == rep.oracle_index && (!r.montes_index || *r.montes_index == r.vp_index);
  for (const auto& f : rep.failures) warnings.push_back("p = " + p.get_str() + ": " + f);
  return r;
}

inline FieldReport analyze(const Int& m) {
  pure12::check_m(m);
  FieldReport out;
  out.m = m;
  out.irreducible = true;
  out.Df = pure12::disc_f(m);
  std::map<Int, PIntegralBasis> nontrivial;
  for (const auto& p : pure12::index_primes(m)) {
    auto r = analyze_prime(m, p, out.warnings);
    if (r.vp_index > 0) nontrivial.emplace(p, r.basis);
    out.per_prime.emplace(p, std::move(r));
  }
  out.global_basis = combine::global_basis(m, nontrivial, pure12::degree);
  auto idx = out.index();
  out.dK = out.Df / idx.pow(2);
  if (arith::is_squarefree(m)) out.monogenic = pure12::is_power_basis_monogenic(m);
  Rat tr = verify::trace_form_disc(out.global_basis.elements, m);
  const Int df = out.Df.value();
  out.disc_identity = tr * Rat(idx.pow(2).value()) == Rat(df) && Rat(out.dK.value()) == tr &&
                      verify::poly_discriminant_resultant(IntPoly::binomial(pure12::degree, m)) == df;
  if (!out.disc_identity) out.warnings.push_back("trace-form discriminant does not match D_f / index^2");
  return out;
}

// JSON: big integers as decimal strings, factored integers as {"sign", "factors"}.
namespace json_io {

using nlohmann::json;

inline json to_json(const arith::FactoredInt& f) {
  json fac = json::object();
  for (const auto& [p, e] : f.factors()) fac[p.get_str()] = e;
  return json{{"sign", f.sign()}, {"factors", fac}};
}

inline arith::FactoredInt factored_from_json(const json& j) {
  std::map<Int, int> f;
  for (const auto& [k, v] : j.at("factors").items()) f[Int(k)] = v.get<int>();
  return arith::FactoredInt(j.at("sign").get<int>(), std::move(f));
}

inline json to_json(const ThetaElement& e) {
  json num = json::array();
  for (int i = 0; i < pure12::degree; ++i) num.push_back(e.numer().coeff(i).get_str());
  return json{{"num", num}, {"den", e.denom().get_str()}};
}

inline ThetaElement theta_from_json(const json& j) {
  std::vector<Int> c;
  for (const auto& s : j.at("num")) c.emplace_back(s.get<std::string>());
  return ThetaElement(IntPoly(std::move(c)), Int(j.at("den").get<std::string>()));
}

inline json to_json(const std::vector<ThetaElement>& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(to_json(e));
  return a;
}

inline std::vector<ThetaElement> elements_from_json(const json& j) {
  std::vector<ThetaElement> out;
  for (const auto& e : j) out.push_back(theta_from_json(e));
  return out;
}

inline json to_json(const PrimeReport& r) {
  return json{{"case", r.tag},
              {"vp_index", r.vp_index},
              {"basis", to_json(r.basis.elements)},
              {"verified", r.verified},
              {"montes_index", r.montes_index ? json(*r.montes_index) : json(nullptr)},
              {"oracle_index", r.oracle_index}};
}

inline PrimeReport prime_from_json(const Int& p, const json& j) {
  PrimeReport r;
  r.p = p;
  r.tag = j.at("case").get<std::string>();
  r.vp_index = j.at("vp_index").get<int>();
  r.basis = PIntegralBasis{p, elements_from_json(j.at("basis"))};
  r.verified = j.at("verified").get<bool>();
  if (!j.at("montes_index").is_null()) r.montes_index = j.at("montes_index").get<int>();
  r.oracle_index = j.at("oracle_index").get<int>();
  return r;
}

inline json to_json(const FieldReport& r) {
  json per = json::object();
  for (const auto& [p, pr] : r.per_prime) per[p.get_str()] = to_json(pr);
  json out{{"m", r.m.get_str()},
           {"irreducible", r.irreducible},
           {"Df", to_json(r.Df)},
           {"per_prime", per},
           {"dK", to_json(r.dK)},
           {"index", to_json(r.index())},
           {"global_basis", to_json(r.global_basis.elements)},
           {"disc_identity", r.disc_identity},
           {"warnings", r.warnings}};
  if (r.monogenic) out["monogenic"] = *r.monogenic;
  return out;
}

inline FieldReport report_from_json(const json& j) {
  FieldReport r;
  r.m = Int(j.at("m").get<std::string>());
  r.irreducible = j.at("irreducible").get<bool>();
  r.Df = factored_from_json(j.at("Df"));
  for (const auto& [k, v] : j.at("per_prime").items()) r.per_prime.emplace(Int(k), prime_from_json(Int(k), v));
  r.dK = factored_from_json(j.at("dK"));
  r.global_basis = IntegralBasis{elements_from_json(j.at("global_basis"))};
  r.disc_identity = j.at("disc_identity").get<bool>();
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  if (j.contains("monogenic")) r.monogenic = j.at("monogenic").get<bool>();
  return r;
}

}  // namespace json_io
}  // namespace duodecic
