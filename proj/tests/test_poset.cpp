#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "walls/poset.hpp"

using namespace walls;
using walls::testing::permutation_count;
using walls::testing::random_forest;
using walls::testing::random_poset;

TEST(PosetTest, Validation) {
  EXPECT_NO_THROW(Poset(3, {{0, 1}, {1, 2}}));
  EXPECT_THROW(Poset(3, {{0, 1}, {1, 2}, {0, 2}}), DomainError);
  EXPECT_THROW(Poset(2, {{0, 1}, {1, 0}}), DomainError);
  EXPECT_THROW(Poset(2, {{0, 1}, {0, 1}}), DomainError);
  EXPECT_THROW(Poset(2, {{0, 2}}), DomainError);
  EXPECT_THROW(Poset(2, {{1, 1}}), DomainError);
}

TEST(PosetTest, LineFormatRoundTrip) {
  const Poset p(4, {{0, 1}, {0, 2}, {2, 3}});
  EXPECT_EQ(p.to_line(), "4; 1>0; 2>0; 3>2");
  EXPECT_EQ(Poset::from_line(p.to_line()), p);
  EXPECT_EQ(Poset::from_line("3"), antichain(3));
  EXPECT_THROW(Poset::from_line("3; 1-0"), DomainError);
  EXPECT_THROW(Poset::from_line("x"), DomainError);
}

TEST(PosetTest, ChainsAndAntichains) {
  EXPECT_EQ(count_linear_extensions(chain(5)), 1);
  EXPECT_EQ(count_linear_extensions(antichain(3)), 6);
  EXPECT_EQ(count_linear_extensions(antichain(4)), 24);
  EXPECT_EQ(chain(0).size(), 0);
  EXPECT_EQ(count_linear_extensions(chain(0)), 1);
}

TEST(PosetTest, Sums) {
  EXPECT_EQ(count_linear_extensions(direct_sum(chain(2), chain(2))), 6);
  const Poset p = Poset(3, {{0, 2}});
  EXPECT_EQ(direct_sum(p, chain(0)), p);
  EXPECT_EQ(ordinal_sum(antichain(2), antichain(2)).covers().size(), 4u);
}

TEST(PosetTest, GridIsCatalan) {
  // 2x2 grid: 0<1, 0<2, 1<3, 2<3.
  EXPECT_EQ(count_linear_extensions(Poset(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})), 2);
}

TEST(PosetTest, CapacityLimit) {
  EXPECT_THROW(count_linear_extensions(antichain(25)), CapacityError);
  EXPECT_EQ(count_linear_extensions(chain(30), 30), 1);
  EXPECT_THROW(count_linear_extensions(chain(5), 4), CapacityError);
}

TEST(PosetTest, WideCountsBeyond64Bits) {
  // 22! does not fit in 64 bits.
  EXPECT_EQ(count_linear_extensions(antichain(22)), factorial(22));
}

TEST(PosetProperty, DpMatchesPermutationOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int size = 1 + static_cast<int>(rng() % 8);
    const double density = 0.1 + 0.1 * static_cast<double>(rng() % 6);
    const Poset p = random_poset(rng, size, density);
    EXPECT_EQ(count_linear_extensions(p), permutation_count(p)) << p.to_line();
  }
}

TEST(PosetProperty, OrdinalSumMultiplies) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Poset p = random_poset(rng, 1 + static_cast<int>(rng() % 5), 0.3);
    const Poset q = random_poset(rng, 1 + static_cast<int>(rng() % 5), 0.3);
    EXPECT_EQ(count_linear_extensions(ordinal_sum(p, q)), count_linear_extensions(p) * count_linear_extensions(q));
  }
}

TEST(PosetProperty, DirectSumShuffles) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Poset p = random_poset(rng, 1 + static_cast<int>(rng() % 5), 0.4);
    const Poset q = random_poset(rng, 1 + static_cast<int>(rng() % 5), 0.4);
    EXPECT_EQ(count_linear_extensions(direct_sum(p, q)),
              binomial(p.size() + q.size(), p.size()) * count_linear_extensions(p) * count_linear_extensions(q));
  }
}

TEST(PosetProperty, LineFormatRoundTripsRandomPosets) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Poset p = random_poset(rng, static_cast<int>(rng() % 10), 0.3);
    EXPECT_EQ(Poset::from_line(p.to_line()), p);
  }
}

TEST(HookTest, ChainDenominators) {
  const auto w = hook_denominators(chain(4));
  EXPECT_EQ(w, (std::vector<long>{1, 2, 3, 4}));
  EXPECT_EQ(forest_hook_count(chain(6)), 1);
  EXPECT_THROW(forest_hook_count(Poset(3, {{0, 1}, {0, 2}})), DomainError);
}

TEST(HookProperty, ProductFormulaOnRandomForests) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const Poset p = random_forest(rng, 1 + static_cast<int>(rng() % 12));
    ASSERT_TRUE(is_outdegree_forest(p));
    EXPECT_EQ(forest_hook_count(p), count_linear_extensions(p)) << p.to_line();
  }
}
