#pragma once

#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "case_table.hpp"
#include "combine.hpp"
#include "pure12.hpp"

// Text, Markdown and LaTeX renderings of bases and of the shipped case tables.
namespace duodecic::render {

inline std::string basis_text(const std::vector<ThetaElement>& elems) {
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) out += std::to_string(i) + ": " + elems[i].to_string() + "\n";
  return out;
}

inline std::string basis_latex(const std::vector<ThetaElement>& elems) {
  std::string out = "\\{";
  for (std::size_t i = 0; i < elems.size(); ++i) out += (i ? ", " : "") + elems[i].to_latex();
  return out + "\\}\n";
}

namespace detail {

inline std::string power_denominator(long p, int k, bool latex) {
  if (k == 0) return "";
  std::string ps = std::to_string(p);
  if (k == 1) return ps;
  return latex ? ps + "^{" + std::to_string(k) + "}" : ps + "^" + std::to_string(k);
}

// q1p -> q_{1}', s -> s
inline std::string def_name(const std::string& name, bool latex) {
  static const std::regex re("([a-z])([0-9]*)(p?)");
  std::smatch mt;
  if (!std::regex_match(name, mt, re)) return name;
  std::string out = mt[1];
  if (mt[2].length()) out += latex ? "_{" + mt[2].str() + "}" : mt[2].str();
  if (mt[3].length()) out += "'";
  return out;
}

inline std::string sym_latex(const table::SymPoly& poly, long p) {
  std::string s;
  const auto& terms = poly.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    Int mag = arith::abs(t.coeff);
    if (i == 0) s += t.coeff < 0 ? "-" : "";
    else s += t.coeff < 0 ? "-" : "+";
    if (mag != 1 || (t.symbol == table::Symbol::none && t.power == 0)) s += mag.get_str();
    switch (t.symbol) {
      case table::Symbol::m: s += "m"; break;
      case table::Symbol::mp: s += "m_{" + std::to_string(p) + "}"; break;
      case table::Symbol::delta: s += "\\delta "; break;
      case table::Symbol::none: break;
    }
    if (t.power == 1) s += "\\theta";
    if (t.power > 1) s += "\\theta^{" + std::to_string(t.power) + "}";
  }
  return s.empty() ? "0" : s;
}

inline std::string sym_plain(const table::SymPoly& poly, long p) {
  std::string raw = poly.to_string('t'), out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw.compare(i, 2, "mp") == 0) {
      out += "m_" + std::to_string(p);
      ++i;
    } else if (raw[i] == 'd') {
      out += "δ";
    } else if (raw[i] == 't') {
      out += "θ";
    } else if (raw[i] != '*') {
      out += raw[i];
    }
  }
  return out;
}

inline bool single_term(const table::SymPoly& poly) { return poly.terms().size() == 1; }

inline std::string row_plain(const table::CaseEntry& c, const table::Row& r) {
  std::string num;
  if (r.ref.empty()) {
    num = sym_plain(r.poly, c.p);
    if (r.k > 0 && !single_term(r.poly)) num = "(" + num + ")";
  } else {
    if (r.shift == 1) num = "θ";
    if (r.shift > 1) num = "θ^" + std::to_string(r.shift);
    num += def_name(r.ref, false) + "(θ)";
  }
  return r.k ? num + "/" + power_denominator(c.p, r.k, false) : num;
}

inline std::string row_latex(const table::CaseEntry& c, const table::Row& r) {
  std::string num;
  if (r.ref.empty()) {
    num = sym_latex(r.poly, c.p);
  } else {
    if (r.shift == 1) num = "\\theta ";
    if (r.shift > 1) num = "\\theta^{" + std::to_string(r.shift) + "}";
    num += def_name(r.ref, true) + "(\\theta)";
  }
  return r.k ? "\\frac{" + num + "}{" + power_denominator(c.p, r.k, true) + "}" : num;
}

inline std::string residues(const table::CaseEntry& c) {
  std::string s;
  for (std::size_t i = 0; i < c.residues.size(); ++i) s += (i ? ", " : "") + std::to_string(c.residues[i]);
  return s;
}

inline std::vector<const table::CaseEntry*> cases_for(int which) {
  if (which != 1 && which != 2) throw InvalidInput("table: --which must be 1 or 2");
  const char letter = which == 1 ? 'A' : 'B';
  std::vector<const table::CaseEntry*> out;
  for (const auto& c : pure12::case_table().cases())
    if (c.tag[0] == letter) out.push_back(&c);
  return out;
}

}  // namespace detail

// Rows come straight from the shipped case data; corrected entries are marked and their notes listed below.
inline std::string table_markdown(int which) {
  const auto cases = detail::cases_for(which);
  const std::string p = which == 1 ? "2" : "3";
  std::ostringstream os;
  os << "| Case | v_" << p << "(m) | m_" << p << " | v_" << p << "(ind θ) | " << p << "-integral basis |\n";
  os << "|---|---|---|---|---|\n";
  for (const auto* c : cases) {
    std::string basis;
    for (std::size_t i = 0; i < c->rows.size(); ++i) basis += (i ? ", " : "") + detail::row_plain(*c, c->rows[i]);
    for (const auto& [name, poly] : c->defs)
      basis += "; " + detail::def_name(name, false) + "(θ) = " + detail::sym_plain(poly, c->p);
    os << "| " << c->tag << (c->notes.empty() ? "" : " †") << " | " << c->vp << " | ≡ " << detail::residues(*c)
       << " (mod " << c->cond_mod << ") | " << c->index << " | " << basis << " |\n";
  }
  bool any = false;
  for (const auto* c : cases)
    for (const auto& n : c->notes) {
      if (!any) os << "\n† Entries checked against the round-2 oracle and annotated:\n\n";
      any = true;
      os << "- " << c->tag << ": " << n << "\n";
    }
  return os.str();
}

inline std::string table_latex(int which) {
  const auto cases = detail::cases_for(which);
  const std::string p = which == 1 ? "2" : "3";
  std::ostringstream os;
  os << "\\begin{tabular}{lllll}\n\\hline\n";
  os << "Case & $v_{" << p << "}(m)$ & $m_{" << p << "}$ & $v_{" << p << "}(\\mathop{\\mathrm{ind}}\\theta)$ & $" << p
     << "$-integral basis \\\\\n\\hline\n";
  for (const auto* c : cases) {
    std::string basis;
    for (std::size_t i = 0; i < c->rows.size(); ++i) basis += (i ? ", " : "") + detail::row_latex(*c, c->rows[i]);
    for (const auto& [name, poly] : c->defs)
      basis += ";\\ " + detail::def_name(name, true) + "(\\theta)=" + detail::sym_latex(poly, c->p);
    os << c->tag << (c->notes.empty() ? "" : "$^\\dagger$") << " & $" << c->vp << "$ & $\\equiv "
       << detail::residues(*c) << " \\pmod{" << c->cond_mod << "}$ & $" << c->index << "$ & $" << basis << "$ \\\\\n";
  }
  os << "\\hline\n\\end{tabular}\n";
  for (const auto* c : cases)
    for (const auto& n : c->notes) os << "\\par\\noindent$^\\dagger$" << c->tag << ": \\verb!" << n << "!\n";
  return os.str();
}

}  // namespace duodecic::render
