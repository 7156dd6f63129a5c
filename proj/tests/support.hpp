#pragma once

// Shared by the unit tests and the acceptance binary.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <duodecic/duodecic.hpp>

namespace duodecic::testing {

inline bool valid_m(const Int& m) {
  try {
    pure12::check_m(m);
    return true;
  } catch (const InvalidInput&) {
    return false;
  }
}

// Small m = p^v * u with u meeting the case congruence, |m| <= limit, in the order u = 1, -1, 2, -2, ...
inline std::vector<Int> case_representatives(const table::CaseEntry& c, std::size_t count, const Int& limit = 1000000) {
  std::vector<Int> out;
  const Int pv = arith::pow(Int(c.p), static_cast<unsigned long>(c.vp));
  for (long k = 1; out.size() < count; ++k) {
    if (pv * k > limit) break;
    for (long u : {k, -k}) {
      if (u % c.p == 0) continue;
      Int m = pv * u;
      if (c.matches(c.p, c.vp, Int(u)) && valid_m(m)) out.push_back(m);
      if (out.size() == count) break;
    }
  }
  return out;
}

struct CorpusMember {
  Int m;
  std::string origin;
};

// Every case label, tame and unramified primes, the uncovered p | v_p(m) gap, and seeded random m.
inline std::vector<CorpusMember> corpus() {
  std::vector<CorpusMember> out;
  std::set<Int> seen;
  auto add = [&](const Int& m, const std::string& why) {
    if (valid_m(m) && seen.insert(m).second) out.push_back({m, why});
  };
  for (const auto& c : pure12::case_table().cases())
    for (const auto& m : case_representatives(c, 6)) add(m, c.tag);

  for (long q : {5L, 7L, 11L, 13L})
    for (int v = 1; v <= 11; ++v) {
      if (v % q == 0) continue;
      Int qv = arith::pow(Int(q), static_cast<unsigned long>(v));
      if (qv * 2 > 1000000) break;
      for (long u : {2L, -3L, 6L}) add(qv * u, "tame");
    }
  for (long m : {3125L, 6250L, -3125L, 9375L, -6250L, 21875L, 34375L, 40625L, 823543L, -823543L})
    add(Int(m), "uncovered");

  std::mt19937_64 rng(20241016);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  for (int added = 0; added < 40;) {
    Int m(dist(rng));
    if (valid_m(m) && !seen.count(m)) {
      add(m, "random");
      ++added;
    }
  }
  return out;
}

// (x, y) with 1 <= x <= t, 1 <= y, and y <= b(1 - x/t): on or below the segment (0,b)-(t,0).
inline Int brute_triangle(long t, long b) {
  Int n = 0;
  for (long x = 1; x <= t; ++x)
    for (long y = 1; y <= b; ++y)
      if (y * t <= b * (t - x)) ++n;
  return n;
}

// Lattice points strictly above y = base and on or below the principal part, abscissa >= 1.
// The hull is convex, so it is the max of its edge lines; no use of ordinate_at.
inline Int brute_under_polygon(const newton::NewtonPolygon& poly, const Rat& base) {
  auto pr = poly.principal();
  if (pr.empty()) return 0;
  const long x0 = std::max<long>(1, pr.front().start.abscissa), x1 = pr.back().end.abscissa;
  Rat top = pr.front().start.ordinate;
  Int n = 0;
  for (long x = x0; x <= x1; ++x)
    for (Int y = base.get_num() / base.get_den() - 1; Rat(y) <= top; ++y) {
      if (Rat(y) <= base) continue;
      bool under = false;
      for (const auto& e : pr) {
        Rat line = e.start.ordinate + e.slope * Rat(x - e.start.abscissa);
        under = under || Rat(y) <= line;
      }
      if (under) ++n;
    }
  return n;
}

inline std::vector<ThetaElement> power_basis() {
  std::vector<ThetaElement> v;
  for (int i = 0; i < 12; ++i) v.push_back(ThetaElement::power(i));
  return v;
}

// "θ^i + ... / d" helper: coefficients low to high.
inline ThetaElement el(std::vector<long> c, long d = 1) {
  std::vector<Int> v(c.begin(), c.end());
  return ThetaElement(IntPoly(std::move(v)), Int(d));
}

}  // namespace duodecic::testing
