#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "walls/families.hpp"
#include "walls/wall_tables.hpp"

using namespace walls;
using walls::testing::kATable;
using walls::testing::kBTable;
using walls::testing::permutation_count;

TEST(TableauTest, PlainShapes) {
  WallShape square;
  square.rows = {2, 2, 0};
  EXPECT_EQ(count_linear_extensions(tableau_poset(square)), 2);
  WallShape staircase;
  staircase.rows = {3, 2, 1};
  EXPECT_EQ(count_linear_extensions(tableau_poset(staircase)), 16);
  WallShape box;
  box.rows = {3, 3, 3};
  EXPECT_EQ(count_linear_extensions(tableau_poset(box)), 42);
}

TEST(TableauTest, WallsCutRowCovers) {
  WallShape s;
  s.rows = {2, 0, 0};
  EXPECT_EQ(count_linear_extensions(tableau_poset(s)), 1);
  s.walls = {{0, 0}};
  EXPECT_EQ(count_linear_extensions(tableau_poset(s)), 2);
  EXPECT_EQ(tableau_poset(s).covers().size(), 0u);
}

TEST(TableauTest, Validation) {
  WallShape s;
  s.rows = {2, 3, 0};
  EXPECT_THROW(s.validate(), DomainError);
  s.rows = {3, 3, 3};
  s.walls = {{0, 2}};
  EXPECT_THROW(s.validate(), DomainError);
  s.walls.clear();
  s.removed = {{0, 0}, {2, 1}};
  EXPECT_THROW(s.validate(), DomainError);
  s.removed = {{2, 1}, {2, 1}};
  EXPECT_THROW(s.validate(), DomainError);
}

TEST(TableauTest, OraclesAgreeWithDp) {
  // Small tableau posets checked against the permutation oracle as well.
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= n; ++k) {
      WallShape s;
      s.rows = {n, n, k};
      for (int c = 0; c + 1 < n; ++c) s.walls.emplace_back(0, c);
      const Poset p = tableau_poset(s);
      EXPECT_EQ(count_linear_extensions(p), permutation_count(p));
    }
  }
}

TEST(BruteForceTest, MatchesReferenceTables) {
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(a_brute(n, k), kATable[n][k]) << n << "," << k;
      EXPECT_EQ(b_brute(n, k), kBTable[n][k]) << n << "," << k;
    }
  }
}

TEST(BruteForceTest, ThreeIndexMatchesRecurrence) {
  for (int n = 0; n <= 6; ++n) {
    for (int m = 0; m <= n; ++m) {
      for (int k = 0; k <= m; ++k) EXPECT_EQ(b3_brute(n, m, k), b3(n, m, k)) << n << "," << m << "," << k;
    }
  }
}

TEST(BruteForceTest, CapacityIsEnforced) {
  EXPECT_THROW(a_brute(9, 9), CapacityError);
  EXPECT_EQ(a_brute(9, 9, 27), a_rec(9, 9));
}

TEST(FamilyTest, IndexSubsets) {
  const auto subsets = index_subsets(1, 4, 2);
  ASSERT_EQ(subsets.size(), 6u);
  EXPECT_EQ(subsets.front(), (IndexSet{1, 2}));
  EXPECT_EQ(subsets.back(), (IndexSet{3, 4}));
  EXPECT_EQ(index_subsets(1, 3, 0).size(), 1u);
  EXPECT_TRUE(index_subsets(1, 2, 3).empty());
}

TEST(FamilyTest, PendantChainExamples) {
  EXPECT_EQ(count_linear_extensions(build_F(2, {1})), 1);
  EXPECT_EQ(count_linear_extensions(build_F(2, {2})), 2);
  EXPECT_EQ(count_linear_extensions(build_F(3, {2, 3})), 2 * 4);
  EXPECT_THROW(build_F(2, {2, 1}), DomainError);
  EXPECT_THROW(build_F(2, {3}), DomainError);
}

TEST(FamilyTest, PendantChainProductRule) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (const auto& I : index_subsets(1, n, k)) {
        Nat expect = 1;
        for (int t = 0; t < k; ++t) expect *= I[t] + t;
        EXPECT_EQ(count_linear_extensions(build_F(n, I)), expect);
      }
    }
  }
}

TEST(FamilyTest, FClosedSumAndRecurrence) {
  EXPECT_EQ(f_closed(2, 1), 3);
  EXPECT_EQ(f_closed(3, 2), 15);
  EXPECT_EQ(f_closed(2, 3), 0);
  for (long n = 0; n <= 20; ++n) {
    EXPECT_EQ(f_closed(n, 0), 1);
    for (long k = 0; k <= n; ++k) EXPECT_EQ(f_sum(n, k), f_closed(n, k)) << n << "," << k;
    if (n == 0) continue;
    for (long k = 1; k <= n; ++k) {
      EXPECT_EQ(f_closed(n, k), f_closed(n - 1, k) + (n + k - 1) * f_closed(n - 1, k - 1)) << n << "," << k;
    }
  }
}

TEST(FamilyTest, FClosedEqualsBruteSum) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      Nat total = 0;
      for (const auto& I : index_subsets(1, n, k)) total += count_linear_extensions(build_F(n, I));
      EXPECT_EQ(total, f_closed(n, k)) << n << "," << k;
    }
  }
}

TEST(FamilyTest, TwinChainSum) {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      Nat total = 0;
      for (const auto& I : index_subsets(1, n, k)) total += count_linear_extensions(build_Ftilde(n, I));
      EXPECT_EQ(total, ftilde(n, k)) << n << "," << k;
    }
  }
  EXPECT_THROW(build_Ftilde(0, {}), DomainError);
}

TEST(FamilyTest, LadderSumIsB) {
  for (int n = 0; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      Nat total = 0;
      for (const auto& I : index_subsets(1, n, k)) total += count_linear_extensions(build_D(n, I));
      EXPECT_EQ(total, b(n, k)) << n << "," << k;
    }
  }
}

TEST(FamilyTest, ReversedLadderSumIsU) {
  EXPECT_EQ(u_from_b(2, 1), 13);
  EXPECT_EQ(u_from_b(3, 2), 338);
  for (int n = 0; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      Nat total = 0;
      for (const auto& I : index_subsets(1, n, k)) total += count_linear_extensions(build_U(n, I));
      EXPECT_EQ(total, u_from_b(n, k)) << n << "," << k;
    }
  }
}

TEST(FamilyTest, TransformIsAnInvolution) {
  for (long n = 0; n <= 12; ++n) {
    for (long k = 0; k <= n; ++k) {
      EXPECT_EQ(b_from_u(n, k), b(n, k)) << n << "," << k;
      const auto ones = [](long) { return Integer(1); };
      const auto back = [&](long i) { return bu_transform(n, i, ones); };
      EXPECT_EQ(bu_transform(n, k, back), 1) << n << "," << k;
    }
  }
}

TEST(FamilyTest, RemainderSumMatchesBruteForce) {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_EQ(r_brute(n, k), r_sum(n, k)) << n << "," << k;
  }
  EXPECT_THROW(build_R(3, {}, 0, {}), DomainError);
}

TEST(FamilyTest, DecompositionRecoversB) {
  for (long n = 1; n <= 10; ++n) {
    for (long k = 0; k <= n; ++k) EXPECT_EQ(b_decomposition(n, k), b(n, k)) << n << "," << k;
  }
}

TEST(FamilyTest, CollapsedSumRecoversB) {
  for (long n = 0; n <= 12; ++n) {
    for (long k = 0; k <= n; ++k) EXPECT_EQ(b_monster(n, k), b(n, k)) << n << "," << k;
  }
}
