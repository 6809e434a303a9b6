#include <gtest/gtest.h>

#include <random>

#include "csfkit/errors.hpp"
#include "csfkit/symfunc.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using namespace csfkit;

namespace {

SymF e(std::initializer_list<int> parts, Rational c = 1) { return SymF::monomial(SymBasis::e, IntPartition(parts), c); }
SymF p(std::initializer_list<int> parts, Rational c = 1) { return SymF::monomial(SymBasis::p, IntPartition(parts), c); }

Rational evaluate(const SymF& f, const std::vector<Rational>& x) {
  Rational total = 0;
  for (const auto& [lambda, c] : f.terms()) {
    Rational term = c;
    for (int part : lambda.parts()) term *= f.basis() == SymBasis::e ? oracle::e_at(part, x) : oracle::p_at(part, x);
    total += term;
  }
  return total;
}

SymF random_sym(std::mt19937& rng, SymBasis basis, int max_degree) {
  SymF f(basis);
  const int terms = 1 + static_cast<int>(rng() % 5);
  for (int t = 0; t < terms; ++t) {
    const int degree = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_degree));
    const auto parts = oracle::integer_partitions(degree);
    const auto& chosen = parts[rng() % parts.size()];
    f.add_term(IntPartition(chosen), make_rational(static_cast<int>(rng() % 11) - 5, 1 + static_cast<int>(rng() % 4)));
  }
  return f;
}

// Coefficient of x^lambda in X_G, from the library's e-expansion.
Rational monomial_coefficient(const MonomialVector& v, const std::vector<int>& lambda, int variables) {
  std::vector<int> exps(lambda);
  exps.resize(static_cast<std::size_t>(variables), 0);
  auto it = v.find(exps);
  return it == v.end() ? Rational(0) : it->second;
}

}  // namespace

TEST(SymF, Arithmetic) {
  EXPECT_EQ(e({2}) * e({2, 1}), e({2, 2, 1}));
  EXPECT_TRUE((e({3}) + e({3}) * Rational(-1)).is_zero());
  EXPECT_EQ(p({1}) * p({1}), p({1, 1}));
  EXPECT_THROW(e({1}) + p({1}), DomainError);
  EXPECT_EQ((e({2}) + e({1})).homogeneous_degree(), std::nullopt);
  EXPECT_EQ(e({2, 1}).homogeneous_degree(), 3);
}

TEST(SymF, SubsetExpansion) {
  EXPECT_EQ(csf_via_subsets(path(3)), p({1, 1, 1}) - p({2, 1}, 2) + p({3}));
  EXPECT_EQ(csf_via_subsets(complete(1)), p({1}));
  EXPECT_EQ(csf_via_subsets(cycle(3)), p({1, 1, 1}) - p({2, 1}, 3) + p({3}, 2));
}

TEST(SymF, NewtonConversions) {
  EXPECT_EQ(p_to_e(p({1})), e({1}));
  EXPECT_EQ(p_to_e(p({2})), e({1, 1}) - e({2}, 2));
  EXPECT_EQ(p_to_e(csf_via_subsets(path(3))), e({2, 1}) + e({3}, 3));
  EXPECT_THROW(p_to_e(e({1})), DomainError);
}

TEST(SymF, RoundTripsOnRandomInputs) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const SymF f = random_sym(rng, SymBasis::e, 8);
    EXPECT_EQ(p_to_e(e_to_p(f)), f);
    const SymF g = random_sym(rng, SymBasis::p, 8);
    EXPECT_EQ(e_to_p(p_to_e(g)), g);
  }
}

TEST(SymF, ConversionsAgreeUnderEvaluation) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const SymF f = random_sym(rng, SymBasis::p, 6);
    std::vector<Rational> x;
    for (int k = 0; k < 6; ++k) x.push_back(make_rational(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 3)));
    EXPECT_EQ(evaluate(p_to_e(f), x), evaluate(f, x));
  }
}

TEST(SymF, EPositivity) {
  EXPECT_TRUE(is_e_positive(csf_via_subsets(path(3))).positive);
  const EPositivity claw_verdict = is_e_positive(csf_via_subsets(claw()));
  ASSERT_FALSE(claw_verdict.positive);
  EXPECT_EQ(claw_verdict.witness->first, (IntPartition{2, 2}));
  EXPECT_EQ(claw_verdict.witness->second, -2);
  EXPECT_TRUE(is_e_positive(SymF(SymBasis::e)).positive);
}

TEST(SymF, SpecializeOnes) {
  EXPECT_EQ(specialize_ones(e({2, 1}), 2), 2);
  EXPECT_EQ(specialize_ones(csf_via_subsets(path(3)), 2), 2);
  EXPECT_EQ(specialize_ones(e({2}) + e({}, 3), 0), 3);
  for (const auto& g : {cycle(5), claw(), tadpole(3, 2), cc_m3_labeled(3)})
    for (int k = 0; k <= g.order() + 1; ++k) EXPECT_EQ(specialize_ones(csf_via_subsets(g), k), oracle::chromatic_value(g, k));
}

TEST(SymF, MonomialVectors) {
  EXPECT_EQ(to_monomial_vector(e({2}), 2), (MonomialVector{{{1, 1}, 1}}));
  EXPECT_EQ(to_monomial_vector(p({2}), 2), (MonomialVector{{{2, 0}, 1}, {{0, 2}, 1}}));
  EXPECT_EQ(to_monomial_vector(e({1, 1}), 2), (MonomialVector{{{2, 0}, 1}, {{0, 2}, 1}, {{1, 1}, 2}}));
  EXPECT_THROW(to_monomial_vector(e({3}), 2), DomainError);
}

TEST(SymF, ChromaticFunctionMatchesColoringCounts) {
  for (const auto& g : {path(4), cycle(5), claw(), diamond(), tadpole(3, 2), cycle_chord(2, 3)}) {
    const int d = g.order();
    const MonomialVector v = to_monomial_vector(p_to_e(csf_via_subsets(g)), d);
    for (const auto& lambda : oracle::integer_partitions(d)) {
      EXPECT_EQ(monomial_coefficient(v, lambda, d), Rational(oracle::colorings_with_counts(g, lambda)));
    }
  }
}

TEST(SymF, TripleDeletion) {
  const auto both = [](TripleDeletionVerdict v) { return v.first && v.second; };
  EXPECT_TRUE(both(verify_triple_deletion(empty_graph(3), 1, 2, 3)));
  EXPECT_TRUE(both(verify_triple_deletion(path(5), 1, 3, 5)));
  const LabeledGraph g(5, {{1, 2}, {2, 3}, {4, 5}});
  EXPECT_TRUE(both(verify_triple_deletion(g, 1, 3, 5)));
  EXPECT_THROW(verify_triple_deletion(path(3), 1, 2, 3), DomainError);
}

TEST(Evaluators, Tadpoles) {
  EXPECT_EQ(p_to_e(tadpole_via_recurrence(3, 1)), p_to_e(csf_via_subsets(tadpole(3, 1))));
  for (int m = 3; m <= 5; ++m) EXPECT_EQ(p_to_e(tadpole_via_recurrence(m, 0)), p_to_e(csf_via_subsets(cycle(m))));
  for (int l = 0; l <= 4; ++l) EXPECT_EQ(p_to_e(tadpole_via_recurrence(2, l)), p_to_e(csf_via_subsets(path(l + 2))));
}

TEST(Evaluators, LineTadpoles) {
  const SymF diamond_x = e({3, 1}, 2) + e({4}, 16);
  EXPECT_EQ(p_to_e(line_tadpole_via_formula(3, 1)), diamond_x);
  EXPECT_EQ(p_to_e(line_tadpole_via_tadpole(3, 1)), diamond_x);
  EXPECT_EQ(specialize_ones(diamond_x, 4), 48);
  EXPECT_EQ(specialize_ones(diamond_x, 3), 6);
  EXPECT_EQ(p_to_e(line_tadpole_via_formula(3, 0)), p_to_e(csf_via_subsets(cycle(3))));
  EXPECT_EQ(p_to_e(line_tadpole_via_formula(4, 2)), p_to_e(line_tadpole_via_tadpole(4, 2)));
  EXPECT_EQ(p_to_e(line_tadpole_via_formula(4, 2)), p_to_e(csf_via_subsets(line_tadpole(4, 2))));
}

TEST(Evaluators, CycleChords) {
  EXPECT_EQ(p_to_e(cc_via_formula(2, 2)), p_to_e(csf_via_subsets(cycle_chord(2, 2))));
  for (int a = 2; a <= 4; ++a) EXPECT_EQ(p_to_e(cc_via_formula(a, 1)), p_to_e(csf_via_subsets(cycle(a + 1))));
  EXPECT_EQ(p_to_e(cc_via_formula(3, 2)), p_to_e(csf_via_subsets(line_tadpole(4, 1))));
  EXPECT_EQ(p_to_e(cc_via_formula(2, 2)), p_to_e(csf_via_subsets(line_tadpole(3, 1))));
}

TEST(Evaluators, SmallCycleConvention) {
  EXPECT_EQ(p_to_e(cycle_csf(2)), e({2}, 2));
  EXPECT_EQ(path_csf(0), SymF::one(SymBasis::p));
  EXPECT_TRUE(path_csf(-1).is_zero());
}
