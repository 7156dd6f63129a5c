#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "arith.hpp"
#include "fp_poly.hpp"
#include "int_poly.hpp"

namespace duodecic::table {

enum class Symbol { none, m, mp, delta };

// Values substituted for the symbols of a template.
struct Context {
  Int m = 0;
  Int mp = 0;
  int delta = 0;

  Int value(Symbol s) const {
    switch (s) {
      case Symbol::m: return m;
      case Symbol::mp: return mp;
      case Symbol::delta: return delta;
      case Symbol::none: break;
    }
    return 1;
  }
};

struct SymTerm {
  Int coeff;  // signed
  Symbol symbol = Symbol::none;
  int power = 0;
  bool operator==(const SymTerm&) const = default;
};

// Integer polynomial whose coefficients may carry one symbol each; terms kept in written order.
class SymPoly {
 public:
  SymPoly() = default;
  explicit SymPoly(std::vector<SymTerm> terms) : terms_(std::move(terms)) {}

  const std::vector<SymTerm>& terms() const { return terms_; }
  bool operator==(const SymPoly&) const = default;

  bool uses(Symbol s) const {
    for (const auto& t : terms_)
      if (t.symbol == s) return true;
    return false;
  }

  IntPoly eval(const Context& c) const {
    int deg = 0;
    for (const auto& t : terms_) deg = std::max(deg, t.power);
    std::vector<Int> v(static_cast<std::size_t>(deg) + 1, Int(0));
    for (const auto& t : terms_) v[static_cast<std::size_t>(t.power)] += t.coeff * c.value(t.symbol);
    return IntPoly(std::move(v));
  }

  std::string to_string(char var) const {
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const auto& t = terms_[i];
      Int mag = arith::abs(t.coeff);
      if (i == 0) s += t.coeff < 0 ? "-" : "";
      else s += t.coeff < 0 ? " - " : " + ";
      std::string body;
      if (mag != 1 || (t.symbol == Symbol::none && t.power == 0)) body += mag.get_str();
      switch (t.symbol) {
        case Symbol::m: body += "m"; break;
        case Symbol::mp: body += "mp"; break;
        case Symbol::delta: body += "d"; break;
        case Symbol::none: break;
      }
      if (t.power > 0) {
        if (t.symbol != Symbol::none) body += "*";
        body += var;
        if (t.power > 1) body += "^" + std::to_string(t.power);
      }
      s += body;
    }
    return s.empty() ? "0" : s;
  }

  static SymPoly parse(std::string_view text, char var) {
    std::vector<SymTerm> terms;
    std::size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && text[i] == ' ') ++i;
    };
    auto fail = [&](const std::string& why) -> SymPoly {
      throw Error("case table: cannot parse polynomial '" + std::string(text) + "': " + why);
    };
    skip();
    if (i == text.size()) return fail("empty");
    bool first = true;
    while (i < text.size()) {
      int sign = 1;
      if (text[i] == '+' || text[i] == '-') {
        sign = text[i] == '-' ? -1 : 1;
        ++i;
        skip();
      } else if (!first) {
        return fail("expected + or -");
      }
      first = false;
      SymTerm t;
      std::string digits;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
      t.coeff = digits.empty() ? Int(1) : Int(digits);
      if (text.substr(i, 2) == "mp") {
        t.symbol = Symbol::mp;
        i += 2;
      } else if (i < text.size() && text[i] == 'm') {
        t.symbol = Symbol::m;
        ++i;
      } else if (i < text.size() && text[i] == 'd') {
        t.symbol = Symbol::delta;
        ++i;
      }
      if (t.symbol != Symbol::none && i < text.size() && text[i] == '*') ++i;
      if (i < text.size() && text[i] == var) {
        ++i;
        t.power = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          std::string e;
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) e += text[i++];
          if (e.empty()) return fail("missing exponent");
          t.power = std::stoi(e);
        }
      } else if (digits.empty() && t.symbol == Symbol::none) {
        return fail("empty term");
      }
      t.coeff *= sign;
      terms.push_back(std::move(t));
      skip();
    }
    return SymPoly(std::move(terms));
  }

 private:
  std::vector<SymTerm> terms_;
};

struct KeySpec {
  long h = 1;
  long e = 1;
  SymPoly psi;  // in Y
  SymPoly phi;  // in x
  bool operator==(const KeySpec&) const = default;
};

// Basis row: (t^shift * def or poly) / p^k.
struct Row {
  int k = 0;
  int shift = 0;
  std::string ref;  // empty: use poly
  SymPoly poly;
  bool operator==(const Row&) const = default;
};

struct CaseEntry {
  std::string tag;
  long p = 0;
  int vp = 0;
  long cond_mod = 1;
  std::vector<long> residues;
  int index = 0;
  std::vector<KeySpec> keys;
  std::vector<std::pair<std::string, SymPoly>> defs;
  std::vector<Row> rows;
  std::vector<std::string> notes;

  bool operator==(const CaseEntry&) const = default;

  bool matches(long prime, int v, const Int& mp) const {
    if (prime != p || v != vp) return false;
    long r = arith::mod(mp, Int(cond_mod)).get_si();
    for (long x : residues)
      if (x == r) return true;
    return false;
  }

  const SymPoly& def(const std::string& name) const {
    for (const auto& [n, poly] : defs)
      if (n == name) return poly;
    throw Error("case table: " + tag + " has no definition named " + name);
  }

  IntPoly row_numerator(const Row& r, const Context& c) const {
    IntPoly base = r.ref.empty() ? r.poly.eval(c) : def(r.ref).eval(c);
    return base.shifted(r.shift);
  }
};

class CaseTable {
 public:
  CaseTable() = default;
  CaseTable(std::string header, std::vector<CaseEntry> cases) : header_(std::move(header)), cases_(std::move(cases)) {}

  const std::string& header() const { return header_; }
  const std::vector<CaseEntry>& cases() const { return cases_; }

  const CaseEntry& at(std::string_view tag) const {
    for (const auto& c : cases_)
      if (c.tag == tag) return c;
    throw Error("case table: unknown case " + std::string(tag));
  }

  const CaseEntry* find(long p, int vp, const Int& mp) const {
    for (const auto& c : cases_)
      if (c.matches(p, vp, mp)) return &c;
    return nullptr;
  }

  bool operator==(const CaseTable&) const = default;

 private:
  std::string header_;
  std::vector<CaseEntry> cases_;
};

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && s[a] == ' ') ++a;
  while (b > a && s[b - 1] == ' ') --b;
  return std::string(s.substr(a, b - a));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

inline long to_long(const std::string& s, int line) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error("case table line " + std::to_string(line) + ": expected an integer, got '" + s + "'");
  }
}

inline Row parse_row(const std::string& rest, int line) {
  auto sp = rest.find(' ');
  if (sp == std::string::npos) throw Error("case table line " + std::to_string(line) + ": row needs an exponent and an expression");
  Row r;
  r.k = static_cast<int>(to_long(rest.substr(0, sp), line));
  std::string expr = trim(rest.substr(sp + 1));
  // [t^a*]name
  std::string tail = expr;
  int shift = 0;
  if (auto star = expr.find('*'); star != std::string::npos && expr[0] == 't') {
    std::string head = expr.substr(0, star);
    bool digits = head.size() > 2 && head.rfind("t^", 0) == 0;
    for (std::size_t j = 2; digits && j < head.size(); ++j) digits = std::isdigit(static_cast<unsigned char>(head[j]));
    shift = head == "t" ? 1 : (digits ? static_cast<int>(to_long(head.substr(2), line)) : -1);
    tail = expr.substr(star + 1);
  }
  bool ident = !tail.empty() && std::isalpha(static_cast<unsigned char>(tail[0])) && tail != "t";
  for (char c : tail) ident = ident && std::isalnum(static_cast<unsigned char>(c));
  if (ident && shift >= 0) {
    r.shift = shift;
    r.ref = tail;
  } else {
    r.poly = SymPoly::parse(expr, 't');
  }
  return r;
}

inline std::string row_expr(const Row& r) {
  if (r.ref.empty()) return r.poly.to_string('t');
  if (r.shift == 0) return r.ref;
  return (r.shift == 1 ? std::string("t") : "t^" + std::to_string(r.shift)) + "*" + r.ref;
}

}  // namespace detail

inline CaseTable parse_case_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line, header;
  std::vector<CaseEntry> cases;
  std::optional<CaseEntry> cur;
  int n = 0;
  bool in_header = true;
  while (std::getline(in, line)) {
    ++n;
    if (in_header && line.rfind('#', 0) == 0) {
      header += line + "\n";
      continue;
    }
    in_header = false;
    if (line.empty()) {
      if (cur) throw Error("case table line " + std::to_string(n) + ": blank line inside case " + cur->tag);
      continue;
    }
    auto sp = line.find(' ');
    std::string word = line.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : line.substr(sp + 1);
    if (word == "case") {
      if (cur) throw Error("case table line " + std::to_string(n) + ": missing end before case " + rest);
      cur = CaseEntry{};
      cur->tag = rest;
      continue;
    }
    if (!cur) throw Error("case table line " + std::to_string(n) + ": field outside a case block");
    if (word == "end") {
      if (cur->rows.size() != 12) throw Error("case table: case " + cur->tag + " has " + std::to_string(cur->rows.size()) + " rows");
      cases.push_back(std::move(*cur));
      cur.reset();
    } else if (word == "prime") {
      cur->p = detail::to_long(rest, n);
    } else if (word == "vp") {
      cur->vp = static_cast<int>(detail::to_long(rest, n));
    } else if (word == "index") {
      cur->index = static_cast<int>(detail::to_long(rest, n));
    } else if (word == "cond") {
      auto brace = rest.find('{');
      if (brace == std::string::npos || rest.back() != '}') throw Error("case table line " + std::to_string(n) + ": bad cond");
      cur->cond_mod = detail::to_long(detail::trim(rest.substr(0, brace)), n);
      for (const auto& r : detail::split(rest.substr(brace + 1, rest.size() - brace - 2), ','))
        cur->residues.push_back(detail::to_long(r, n));
    } else if (word == "key") {
      auto parts = detail::split(rest, '|');
      if (parts.size() != 3) throw Error("case table line " + std::to_string(n) + ": key needs H/E | PSI | PHI");
      auto slash = parts[0].find('/');
      if (slash == std::string::npos) throw Error("case table line " + std::to_string(n) + ": bad slope");
      KeySpec k;
      k.h = detail::to_long(parts[0].substr(0, slash), n);
      k.e = detail::to_long(parts[0].substr(slash + 1), n);
      k.psi = SymPoly::parse(parts[1], 'Y');
      k.phi = SymPoly::parse(parts[2], 'x');
      cur->keys.push_back(std::move(k));
    } else if (word == "def") {
      auto s2 = rest.find(' ');
      if (s2 == std::string::npos) throw Error("case table line " + std::to_string(n) + ": def needs a name and a polynomial");
      cur->defs.emplace_back(rest.substr(0, s2), SymPoly::parse(rest.substr(s2 + 1), 't'));
    } else if (word == "row") {
      cur->rows.push_back(detail::parse_row(rest, n));
    } else if (word == "note") {
      cur->notes.push_back(rest);
    } else {
      throw Error("case table line " + std::to_string(n) + ": unknown field '" + word + "'");
    }
  }
  if (cur) throw Error("case table: unterminated case " + cur->tag);
  return CaseTable(std::move(header), std::move(cases));
}

inline std::string serialize_case_table(const CaseTable& t) {
  std::string out = t.header();
  for (const auto& c : t.cases()) {
    out += "\ncase " + c.tag + "\n";
    out += "prime " + std::to_string(c.p) + "\n";
    out += "vp " + std::to_string(c.vp) + "\n";
    out += "cond " + std::to_string(c.cond_mod) + " {";
    for (std::size_t i = 0; i < c.residues.size(); ++i) out += (i ? "," : "") + std::to_string(c.residues[i]);
    out += "}\n";
    out += "index " + std::to_string(c.index) + "\n";
    for (const auto& k : c.keys)
      out += "key " + std::to_string(k.h) + "/" + std::to_string(k.e) + " | " + k.psi.to_string('Y') + " | " +
             k.phi.to_string('x') + "\n";
    for (const auto& [name, poly] : c.defs) out += "def " + name + " " + poly.to_string('t') + "\n";
    for (const auto& r : c.rows) out += "row " + std::to_string(r.k) + " " + detail::row_expr(r) + "\n";
    for (const auto& note : c.notes) out += "note " + note + "\n";
    out += "end\n";
  }
  return out;
}

}  // namespace duodecic::table
