#include <gtest/gtest.h>

#include <random>
#include <set>

#include "csfkit/errors.hpp"
#include "csfkit/partitions.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using namespace csfkit;

namespace {

SetPartition P(const char* text) { return SetPartition::parse(text); }

SetPartition random_partition(std::mt19937& rng, int d) {
  std::vector<int> labels(static_cast<std::size_t>(d));
  for (auto& l : labels) l = static_cast<int>(rng() % static_cast<unsigned>(d));
  return SetPartition::from_labels(labels);
}

}  // namespace

TEST(IntPartition, SortsAndReports) {
  const IntPartition lambda{1, 3, 2};
  EXPECT_EQ(lambda.parts(), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(lambda.weight(), 6);
  EXPECT_EQ(lambda.length(), 3);
  EXPECT_EQ(lambda.to_string(), "(3,2,1)");
  EXPECT_EQ(lambda.with_part_grown(2), (IntPartition{3, 3, 1}));
  EXPECT_EQ(lambda.with_part_added(1), (IntPartition{3, 2, 1, 1}));
  EXPECT_THROW(lambda.with_part_grown(5), DomainError);
}

TEST(SetPartition, ParseAndPrint) {
  EXPECT_EQ(P("13|2").to_string(), "13|2");
  EXPECT_EQ(P("2|31").to_string(), "13|2");
  EXPECT_EQ(P("1,3|2").to_string(), "13|2");
  const SetPartition big = P("1,10|2,3,4,5,6,7,8,9");
  EXPECT_EQ(big.ground_size(), 10);
  EXPECT_EQ(SetPartition::parse(big.to_string()), big);
  EXPECT_THROW(P("12|2"), DomainError);
  EXPECT_THROW(P("13"), DomainError);
}

TEST(SetPartition, CanonicalFormIgnoresBlockOrder) {
  const auto a = SetPartition::from_blocks(4, {{3, 4}, {2, 1}});
  const auto b = SetPartition::from_blocks(4, {{1, 2}, {4, 3}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(SetPartitionHash{}(a), SetPartitionHash{}(b));
  EXPECT_EQ(a.blocks(), (std::vector<std::vector<int>>{{1, 2}, {3, 4}}));
}

TEST(Enumeration, CountsAreBellNumbers) {
  const auto bell = oracle::bell_numbers(9);
  for (int d = 1; d <= 9; ++d) {
    EXPECT_EQ(static_cast<long>(enumerate_partitions(d).size()), bell[static_cast<std::size_t>(d)]) << d;
  }
}

TEST(Enumeration, GrowthStringOrderAndAgreementWithOracle) {
  for (int d = 1; d <= 6; ++d) {
    const auto all = enumerate_partitions(d);
    for (std::size_t k = 1; k < all.size(); ++k) EXPECT_LT(all[k - 1].labels(), all[k].labels());
    std::set<SetPartition> from_oracle;
    for (const auto& blocks : oracle::set_partitions(d)) from_oracle.insert(SetPartition::from_blocks(d, blocks));
    EXPECT_EQ(from_oracle, std::set<SetPartition>(all.begin(), all.end()));
  }
}

TEST(Enumeration, CapIsEnforced) { EXPECT_THROW(enumerate_partitions(11), CapacityError); }

TEST(Lattice, RefinementAndMeetMatchOracle) {
  const int d = 5;
  const auto blocks = oracle::set_partitions(d);
  for (const auto& a : blocks)
    for (const auto& b : blocks) {
      const auto pa = SetPartition::from_blocks(d, a), pb = SetPartition::from_blocks(d, b);
      ASSERT_EQ(is_refinement(pa, pb), oracle::refines(a, b, d));
      ASSERT_EQ(meet(pa, pb) == SetPartition::finest(d), oracle::meet_is_finest(a, b, d));
    }
}

TEST(Lattice, MeetLaws) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 7);
    const auto a = random_partition(rng, d), b = random_partition(rng, d), c = random_partition(rng, d);
    EXPECT_EQ(meet(a, b), meet(b, a));
    EXPECT_EQ(meet(meet(a, b), c), meet(a, meet(b, c)));
    EXPECT_EQ(meet(a, a), a);
    EXPECT_EQ(is_refinement(a, b), meet(a, b) == a);
  }
}

TEST(Lattice, MobiusMatchesRecursiveOracle) {
  const int d = 4;
  const auto blocks = oracle::set_partitions(d);
  for (const auto& a : blocks)
    for (const auto& b : blocks) {
      if (!oracle::refines(a, b, d)) continue;
      const Rational mu = mobius(SetPartition::from_blocks(d, a), SetPartition::from_blocks(d, b));
      ASSERT_EQ(mu, Rational(oracle::mobius(a, b, d)));
    }
}

TEST(Lattice, MobiusSumsVanish) {
  for (int d = 1; d <= 6; ++d) {
    const auto all = enumerate_partitions(d);
    for (std::size_t i = 0; i < all.size(); i += 7) {
      for (const auto& sigma : all) {
        if (!is_refinement(all[i], sigma)) continue;
        Rational sum = 0;
        for (const auto& tau : all)
          if (is_refinement(all[i], tau) && is_refinement(tau, sigma)) sum += mobius(all[i], tau);
        ASSERT_EQ(sum, all[i] == sigma ? 1 : 0);
      }
    }
  }
}

TEST(Lattice, MobiusToTopIsSignedFactorial) {
  EXPECT_EQ(mobius(SetPartition::finest(4), SetPartition::coarsest(4)), -6);
  EXPECT_EQ(mobius(P("12|34"), SetPartition::coarsest(4)), -1);
  EXPECT_THROW(mobius(P("13|2"), P("12|3")), DomainError);
}

TEST(Operations, AddBlock) {
  EXPECT_EQ(add_block(P("12"), {3}), P("12|3"));
  EXPECT_EQ(add_block(P("12"), {3, 4}), P("12|34"));
  EXPECT_EQ(add_block(P("1|2"), {3}), P("1|2|3"));
  EXPECT_THROW(add_block(P("12"), {4}), DomainError);
}

TEST(Operations, InsertIntoBlock) {
  EXPECT_EQ(insert_into_block_of(P("12"), 2), P("123"));
  EXPECT_EQ(insert_into_block_of(P("1|2"), 1), P("13|2"));
  EXPECT_EQ(insert_into_block_of(P("13|2"), 2), P("13|24"));
  for (const auto& pi : enumerate_partitions(5))
    for (int i = 1; i <= 5; ++i) EXPECT_EQ(remove_last_element(insert_into_block_of(pi, i)), pi);
}

TEST(Operations, Transpositions) {
  EXPECT_EQ(apply_transposition(P("13|2"), 3, 2), P("12|3"));
  EXPECT_EQ(apply_transposition(P("13|2"), 2, 2), P("13|2"));
  EXPECT_EQ(apply_transposition(P("123"), 3, 1), P("123"));
  for (const auto& pi : enumerate_partitions(5))
    for (int a = 1; a <= 5; ++a)
      for (int b = 1; b <= 5; ++b) EXPECT_EQ(apply_transposition(apply_transposition(pi, a, b), a, b), pi);
}

TEST(Operations, CongruenceKeys) {
  EXPECT_EQ(congruence_key(P("13|2"), 3), (CongruenceKey{IntPartition{2, 1}, 2}));
  EXPECT_EQ(congruence_key(P("1|23"), 3), (CongruenceKey{IntPartition{2, 1}, 2}));
  EXPECT_EQ(congruence_key(P("12|3"), 3), (CongruenceKey{IntPartition{2, 1}, 1}));
  // Invariant under transpositions not touching the anchor.
  for (const auto& pi : enumerate_partitions(5))
    for (int a = 1; a < 5; ++a)
      for (int b = 1; b < 5; ++b) EXPECT_EQ(congruence_key(apply_transposition(pi, a, b), 5), congruence_key(pi, 5));
}

TEST(Operations, Permute) {
  EXPECT_EQ(permute(P("12|3"), {3, 2, 1}), P("1|23"));
  EXPECT_THROW(permute(P("12|3"), {1, 1, 2}), DomainError);
}
