#include <random>

#include <gtest/gtest.h>

#include "support.hpp"

namespace duodecic {
namespace {

using newton::NewtonPolygon;

IntPoly f12(long m) { return IntPoly::binomial(12, Int(m)); }

void expect_single_edge(const NewtonPolygon& poly, long y0, long x1, Rat slope) {
  auto pr = poly.principal();
  ASSERT_EQ(pr.size(), 1u);
  EXPECT_EQ(pr[0].start.abscissa, 0);
  EXPECT_EQ(pr[0].start.ordinate, y0);
  EXPECT_EQ(pr[0].end.abscissa, x1);
  EXPECT_EQ(pr[0].end.ordinate, 0);
  EXPECT_EQ(pr[0].slope, slope);
}

TEST(Newton, GaussValuation) {
  EXPECT_EQ(newton::gauss_valuation(f12(60), Int(2)), 0);
  EXPECT_EQ(newton::gauss_valuation(IntPoly{12, 8, 4}, Int(2)), 2);
  EXPECT_EQ(newton::gauss_valuation(IntPoly{9, 27}, Int(3)), 2);
}

TEST(Newton, PolygonExamples) {
  expect_single_edge(newton::newton_polygon(f12(20), Int(2)), 2, 12, Rat(-1, 6));
  expect_single_edge(newton::newton_polygon(f12(27 * 2), Int(3)), 3, 12, Rat(-1, 4));
  auto sq = newton::newton_polygon(IntPoly{-4, 0, 1}, Int(2));
  expect_single_edge(sq, 2, 2, Rat(-1));
  EXPECT_EQ(sq.principal()[0].lattice_abscissas, (std::vector<long>{0, 1, 2}));
  EXPECT_THROW(newton::newton_polygon(IntPoly{1, 2}, Int(2)) , Error);  // 2x + 1 is not monic
}

TEST(Newton, ResidualExamples) {
  auto res = [](long m, long p) {
    auto g = f12(m);
    auto poly = newton::newton_polygon(g, Int(p));
    return newton::residual_polynomial(g, Int(p), poly.principal().at(0));
  };
  EXPECT_EQ(res(20, 2), FpPoly(2, std::vector<std::int64_t>{1, 0, 1}));
  EXPECT_EQ(res(64 * 5, 2), FpPoly(2, std::vector<std::int64_t>{1, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(res(729 * 2, 3), FpPoly(3, std::vector<std::int64_t>{1, 0, 0, 0, 0, 0, 1}));
}

TEST(Newton, RegularityExamples) {
  EXPECT_FALSE(newton::is_p_regular(f12(20), Int(2)));
  EXPECT_TRUE(newton::is_p_regular(f12(5 * 7), Int(5)));
  EXPECT_FALSE(newton::is_p_regular(f12(729 * 10), Int(3)));
}

TEST(Newton, PolygonLatticeCounts) {
  EXPECT_EQ(newton::polygon_lattice_count(newton::newton_polygon(f12(20), Int(2))), 6);
  EXPECT_EQ(newton::polygon_lattice_count(newton::newton_polygon(f12(19683 * 2), Int(3))), 45);
  EXPECT_EQ(newton::polygon_lattice_count(newton::newton_polygon(f12(6), Int(2))), 0);
}

TEST(Newton, TriangleCountExamplesAndBruteForce) {
  EXPECT_EQ(newton::triangle_lattice_count(12, 2), 6);
  EXPECT_EQ(newton::triangle_lattice_count(12, 8), 40);
  EXPECT_EQ(newton::triangle_lattice_count(7, 7), 21);
  for (long t = 1; t <= 50; ++t)
    for (long b = 1; b <= 50; ++b) ASSERT_EQ(newton::triangle_lattice_count(t, b), testing::brute_triangle(t, b)) << t << "," << b;
  EXPECT_THROW(newton::triangle_lattice_count(0, 3), Error);
}

TEST(Newton, SingleEdgePolygonCountEqualsTriangleCount) {
  for (long t = 1; t <= 20; ++t)
    for (long b = 1; b <= 20; ++b) {
      auto poly = newton::lower_hull({{0, Rat(b)}, {t, Rat(0)}});
      ASSERT_EQ(newton::polygon_lattice_count(poly), newton::triangle_lattice_count(t, b));
    }
}

TEST(Newton, OreIndex) {
  EXPECT_EQ(newton::ore_index(f12(5 * 7), Int(5)), Int(0));
  EXPECT_EQ(newton::ore_index(f12(25 * 2), Int(5)), Int(6));
  EXPECT_EQ(newton::ore_index(f12(20), Int(2)), std::nullopt);
}

TEST(Newton, RandomHullsLieBelowEverySourcePoint) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coef(-1000000, 1000000);
  std::uniform_int_distribution<int> deg(1, 12);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = deg(rng);
    std::vector<Int> c(static_cast<std::size_t>(n) + 1);
    for (auto& a : c) a = coef(rng);
    if (c[0] == 0) c[0] = 1;
    c.back() = 1;
    for (long p : {2L, 3L}) {
      auto poly = newton::newton_polygon(IntPoly(c), Int(p));
      for (std::size_t i = 1; i < poly.edges.size(); ++i) ASSERT_LT(poly.edges[i - 1].slope, poly.edges[i].slope);
      for (const auto& pt : poly.points)
        for (const auto& e : poly.edges) {
          Rat line = e.start.ordinate + e.slope * Rat(pt.abscissa - e.start.abscissa);
          ASSERT_GE(pt.ordinate, line);
        }
    }
  }
}

TEST(Newton, CorpusResidualsHaveEdgeDegree) {
  for (const auto& member : testing::corpus()) {
    auto g = IntPoly::binomial(12, member.m);
    const auto fac = arith::factor(member.m);
    for (const auto& [q, e] : fac.factors()) {
      (void)e;
      auto poly = newton::newton_polygon(g, q);
      for (std::size_t i = 1; i < poly.edges.size(); ++i) ASSERT_LT(poly.edges[i - 1].slope, poly.edges[i].slope);
      for (const auto& edge : poly.principal()) {
        auto r = newton::residual_polynomial(g, q, edge);
        ASSERT_EQ(r.degree(), edge.degree());
        ASSERT_NE(r.coeff(0), 0);
      }
    }
  }
}

}  // namespace
}  // namespace duodecic
