#include <gtest/gtest.h>

#include "csfkit/errors.hpp"
#include "csfkit/series.hpp"
#include "printers.hpp"

using namespace csfkit;

namespace {

SymF e(std::initializer_list<int> parts, Rational c = 1) { return SymF::monomial(SymBasis::e, IntPartition(parts), c); }

}  // namespace

TEST(Series, ElementaryAndF) {
  const SymSeries E = E_series(4);
  EXPECT_EQ(E[0], SymF::one(SymBasis::e));
  EXPECT_EQ(E[3], e({3}));
  const SymSeries F = F_series(4);
  EXPECT_EQ(F[0], SymF::one(SymBasis::e));
  EXPECT_TRUE(F[1].is_zero());
  EXPECT_EQ(F[2], -e({2}));
  EXPECT_EQ(F[3], e({3}, -2));
}

TEST(Series, Derivative) {
  const SymSeries d = derivative(E_series(4));
  EXPECT_EQ(d.order(), 3);
  EXPECT_EQ(d[0], e({1}));
  EXPECT_EQ(d[1], e({2}, 2));
  EXPECT_EQ(d[2], e({3}, 3));
}

TEST(Series, RingLaws) {
  const SymSeries E = E_series(5), F = F_series(5);
  EXPECT_EQ(mul(E, F), mul(F, E));
  EXPECT_EQ(subtract(add(E, F), F), E);
  EXPECT_EQ(mul(div(F, E), E), F);
  SymSeries one(5);
  one[0] = SymF::one(SymBasis::e);
  EXPECT_EQ(div(E, E), one);
  EXPECT_EQ(shift(E, 2)[2], SymF::one(SymBasis::e));
  EXPECT_EQ(truncate(E, 2).order(), 2);
  EXPECT_THROW(div(E, derivative(E_series(6))), DomainError);
}

TEST(Series, BivariateProducts) {
  const SymSeries2 s = outer(E_series(3), E_series(2));
  EXPECT_EQ(s.at(2, 1), e({2, 1}));
  const SymSeries2 t = mul(s, {{1, 0, 1}, {0, 1, -1}});  // (x - y) s
  EXPECT_EQ(t.at(1, 0), SymF::one(SymBasis::e));
  EXPECT_EQ(t.at(0, 1), -SymF::one(SymBasis::e));
  EXPECT_EQ(t.at(1, 1), e({1}) - e({1}));
  EXPECT_EQ(scale(s, 2).at(1, 1), e({1, 1}, 2));
}

TEST(GeneratingFunctions, AllIdentitiesHold) {
  EXPECT_TRUE(verify_power_sum_gf(8).match());
  const GfReport paths = verify_path_cycle_gf(8);
  EXPECT_TRUE(paths.match());
  EXPECT_GT(paths.compared, 0);
  const GfReport tadpole = verify_tadpole_gf(5, 5);
  EXPECT_TRUE(tadpole.match());
  EXPECT_EQ(tadpole.clearing_power, 2);
  EXPECT_TRUE(verify_ltadpole_gf(5, 5).match());
  const GfReport cc = verify_cc_gf(4, 4);
  EXPECT_TRUE(cc.match());
  EXPECT_EQ(cc.clearing_power, 3);
}

TEST(GeneratingFunctions, Caps) {
  EXPECT_THROW(verify_power_sum_gf(11), CapacityError);
  EXPECT_THROW(verify_cc_gf(6, 5), CapacityError);
}
