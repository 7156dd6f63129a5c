#include <random>

#include <gtest/gtest.h>

#include "support.hpp"

namespace duodecic {
namespace {

using montes2::Type2Data;

IntPoly f12(const Int& m) { return IntPoly::binomial(12, m); }

Type2Data type(long p, long h, long e, std::vector<std::int64_t> psi, IntPoly phi) {
  return Type2Data{Int(p), h, e, FpPoly(p, std::move(psi)), std::move(phi)};
}

const Type2Data kA1 = type(2, 1, 6, {1, 1}, {2, 0, 0, 0, 0, 0, 1});

std::vector<Type2Data> types_for(const Int& m, long p) {
  return pure12::key_data_for_case(pure12::classify(m, Int(p)));
}

using Vertex = std::pair<long, long>;

std::vector<Vertex> principal_vertices(const montes2::SecondOrderPolygon& sp) {
  std::vector<Vertex> out;
  for (const auto& e : sp.polygon.principal()) {
    if (out.empty()) out.emplace_back(e.start.abscissa, e.start.ordinate.get_num().get_si());
    out.emplace_back(e.end.abscissa, e.end.ordinate.get_num().get_si());
  }
  return out;
}

TEST(Montes2, KeyPolynomialValidation) {
  EXPECT_TRUE(montes2::validate_key_polynomial(kA1));
  EXPECT_TRUE(montes2::validate_key_polynomial(type(3, 1, 4, {-1, 1}, {-3, 0, 0, 0, 1})));
  EXPECT_TRUE(montes2::validate_key_polynomial(type(3, 1, 4, {1, 1}, {3, 0, 0, 0, 1})));
  EXPECT_FALSE(montes2::validate_key_polynomial(type(2, 1, 6, {1, 1}, {4, 0, 0, 0, 0, 0, 1})));
}

TEST(Montes2, SecondOrderValuation) {
  EXPECT_EQ(montes2::second_order_valuation(kA1, IntPoly::x()), 1);
  EXPECT_EQ(montes2::second_order_valuation(kA1, kA1.phi), 6);
  EXPECT_EQ(montes2::second_order_valuation(kA1, IntPoly::constant(4 - 28)), 18);
}

TEST(Montes2, PhiExpansion) {
  const Int m = 20;
  auto a = montes2::phi_expansion(f12(m), kA1.phi).coefficients;
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a[2], IntPoly::constant(1));
  EXPECT_EQ(a[1], IntPoly::constant(-4));
  EXPECT_EQ(a[0], IntPoly::constant(4 - m));

  auto b = montes2::phi_expansion(f12(m), IntPoly{-2, 0, 0, 1}).coefficients;
  std::vector<IntPoly> want{IntPoly::constant(16 - m), IntPoly::constant(32), IntPoly::constant(24), IntPoly::constant(8),
                            IntPoly::constant(1)};
  EXPECT_EQ(b, want);

  IntPoly g{5, -3, 0, 7, 1};
  auto c = montes2::phi_expansion(g, IntPoly::x()).coefficients;
  ASSERT_EQ(c.size(), 5u);
  for (int i = 0; i <= 4; ++i) EXPECT_EQ(c[static_cast<std::size_t>(i)], IntPoly::constant(g.coeff(i)));
}

// The three drawn V-polygons.
TEST(Montes2, FigureConfigurations) {
  {  // m_2 = 1 mod 8: (0, 6 v_2(4 - m)), (1, 18), (2, 12)
    const Int m = 4 * 17;
    auto sp = montes2::v_newton_polygon(f12(m), kA1);
    const long y0 = 6 * arith::vp(Int(4 - m), Int(2));
    EXPECT_EQ(principal_vertices(sp), (std::vector<Vertex>{{0, y0}, {1, 18}, {2, 12}}));
    EXPECT_EQ(sp.polygon.principal().size(), 2u);
  }
  {  // m_2 = 5 mod 8: one edge (0, 24)-(2, 12) through (1, 18)
    auto sp = montes2::v_newton_polygon(f12(20), kA1);
    EXPECT_EQ(principal_vertices(sp), (std::vector<Vertex>{{0, 24}, {2, 12}}));
    EXPECT_EQ(sp.polygon.principal()[0].lattice_abscissas, (std::vector<long>{0, 1, 2}));
    EXPECT_EQ(sp.polygon.ordinate_at(1), 18);
  }
  {  // B1: (0, 4 v_3(27 delta - m)) - (1, 16) - (3, 12)
    const Int m = 27 * 10;
    auto t = types_for(m, 3);
    ASSERT_EQ(t.size(), 1u);
    auto sp = montes2::v_newton_polygon(f12(m), t[0]);
    const long y0 = 4 * arith::vp(Int(27 - m), Int(3));
    EXPECT_EQ(principal_vertices(sp), (std::vector<Vertex>{{0, y0}, {1, 16}, {3, 12}}));
  }
}

TEST(Montes2, SecondOrderResiduals) {
  auto only_edge = [](const Int& m, const Type2Data& t) {
    auto sp = montes2::v_newton_polygon(f12(m), t);
    EXPECT_EQ(sp.polygon.principal().size(), 1u);
    return montes2::second_order_residual(f12(m), t, sp.polygon.principal().at(0));
  };
  EXPECT_EQ(only_edge(20, kA1).to_prime_field(), FpPoly(2, std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(only_edge(12, types_for(12, 2).at(0)).degree(), 1);
  EXPECT_EQ(only_edge(28, types_for(28, 2).at(0)).to_prime_field(), FpPoly(2, std::vector<std::int64_t>{1, 1, 1}));
}

TEST(Montes2, VRegularity) {
  std::vector<Type2Data> a1{kA1};
  EXPECT_TRUE(montes2::is_V_regular(f12(20), a1));
  EXPECT_FALSE(montes2::is_V_regular(f12(12), a1));  // m_2 = 3 mod 8 with the x^6 + 2 key
  const Int b7 = 19683 * 10;
  EXPECT_TRUE(montes2::is_V_regular(f12(b7), types_for(b7, 3)));
  EXPECT_THROW(montes2::montes_index(f12(12), Int(2), a1), NotVRegular);
}

TEST(Montes2, IndexExamples) {
  EXPECT_EQ(montes2::montes_index(f12(20), Int(2), std::vector<Type2Data>{kA1}), 12);
  EXPECT_EQ(montes2::montes_index(f12(448), Int(2), types_for(448, 2)), 39);
  EXPECT_EQ(montes2::montes_index(f12(7290), Int(3), types_for(7290, 3)), 36);
}

bool contains(const std::vector<ThetaElement>& v, const ThetaElement& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

TEST(Montes2, BasisExamples) {
  using testing::el;
  auto a1 = montes2::montes_p_basis(f12(20), Int(2), std::vector<Type2Data>{kA1});
  EXPECT_TRUE(contains(a1, el({-2, 0, 0, 0, 0, 0, 1}, 4)));

  const Int b1 = 27 * 10;  // delta = 1
  auto b = montes2::montes_p_basis(f12(b1), Int(3), types_for(b1, 3));
  EXPECT_TRUE(contains(b, el({9, 0, 0, 0, 3, 0, 0, 0, 1}, 27)));

  const Int a15 = 1024 * 7;
  auto c = montes2::montes_p_basis(f12(a15), Int(2), types_for(a15, 2));
  EXPECT_TRUE(contains(c, el({32, 0, 0, -8, 0, 0, 1}, 64)));
}

TEST(Montes2, ValuationIsMultiplicative) {
  std::vector<Type2Data> all;
  for (const auto& c : pure12::case_table().cases())
    if (c.tag[0] == 'A' || c.tag[0] == 'B')
      for (int delta : {1, -1}) {
        auto more = pure12::key_data_for_case(pure12::CaseLabel{Int(c.p), c.tag, c.p == 3 ? delta : 0});
        all.insert(all.end(), more.begin(), more.end());
      }
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coef(-200, 200);
  std::uniform_int_distribution<int> deg(0, 8);
  auto random_poly = [&] {
    std::vector<Int> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& a : c) a = coef(rng);
    if (c.back() == 0) c.back() = 1;
    return IntPoly(std::move(c));
  };
  for (const auto& t : all)
    for (int i = 0; i < 500; ++i) {
      IntPoly a = random_poly(), b = random_poly();
      ASSERT_EQ(montes2::second_order_valuation(t, a * b),
                montes2::second_order_valuation(t, a) + montes2::second_order_valuation(t, b));
    }
}

class TabulatedCorpus : public ::testing::Test {
 protected:
  static std::vector<std::pair<Int, Int>> members() {
    std::vector<std::pair<Int, Int>> out;
    for (const auto& c : testing::corpus())
      for (long p : {2L, 3L}) {
        try {
          if (pure12::classify(c.m, Int(p)).tabulated()) out.emplace_back(c.m, Int(p));
        } catch (const NotCovered&) {
        }
      }
    return out;
  }
};

TEST_F(TabulatedCorpus, ValuationOfGIsMinimumOverExpansion) {
  for (const auto& [m, p] : members()) {
    for (const auto& t : types_for(m, p.get_si())) {
      auto ex = montes2::phi_expansion(f12(m), t.phi);
      const long vphi = montes2::second_order_valuation(t, t.phi);
      long best = -1;
      for (std::size_t i = 0; i < ex.coefficients.size(); ++i) {
        if (ex.coefficients[i].is_zero()) continue;
        long v = montes2::second_order_valuation(t, ex.coefficients[i]) + static_cast<long>(i) * vphi;
        if (best < 0 || v < best) best = v;
      }
      ASSERT_EQ(montes2::second_order_valuation(t, f12(m)), best) << m << " at " << p;
    }
  }
}

TEST_F(TabulatedCorpus, BasisIsIntegralAndCountsTheIndex) {
  for (const auto& [m, p] : members()) {
    auto types = types_for(m, p.get_si());
    const Int index = montes2::montes_index(f12(m), p, types);
    auto raw = montes2::montes_p_basis(f12(m), p, types);
    for (const auto& e : raw) ASSERT_TRUE(verify::is_algebraic_integer(e, m)) << e.to_string() << " for m = " << m;
    EXPECT_EQ(combine::triangularize(raw, p).exponent_sum(), index) << m;
    EXPECT_EQ(index, pure12::vp_index(m, p)) << m;
  }
}

}  // namespace
}  // namespace duodecic
