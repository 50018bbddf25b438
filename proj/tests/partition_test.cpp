#include <gtest/gtest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "kschur/partition.hpp"
#include "oracles.hpp"

using namespace kschur;

TEST(Partition, Basics) {
  const Partition p{4, 2, 1};
  EXPECT_EQ(p.size(), 7);
  EXPECT_EQ(p.length(), 3u);
  EXPECT_EQ(p.row(1), 4);
  EXPECT_EQ(p.row(4), 0);
  EXPECT_EQ(p.conjugate(), (Partition{3, 2, 1, 1}));
  EXPECT_EQ(p.hook(1, 1), 6);
  EXPECT_EQ(p.to_string(), "(4,2,1)");
  EXPECT_EQ(Partition{}.to_string(), "()");
  EXPECT_EQ(Partition(std::vector<int>{3, 1, 0, 0}), (Partition{3, 1}));
  EXPECT_EQ((Partition{3, 1}).union_with(Partition{2, 2}), (Partition{3, 2, 2, 1}));
  EXPECT_THROW(Partition(std::vector<int>{1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition(std::vector<int>{2, -1}), std::invalid_argument);
}

TEST(Partition, Content) {
  EXPECT_EQ(content(1, 1, 4), 0);
  EXPECT_EQ(content(2, 1, 4), 4);
  EXPECT_EQ(content(1, 3, 4), 2);
  EXPECT_EQ(content(3, 1, 2), 1);
}

TEST(Partition, Cores) {
  EXPECT_TRUE(is_core(Partition{}, 4));
  EXPECT_TRUE(is_core((Partition{6, 4, 3, 1}), 4));
  EXPECT_TRUE(is_core((Partition{4, 2, 2, 1, 1}), 2));
  EXPECT_FALSE(is_core((Partition{5}), 4));
  EXPECT_FALSE(is_core((Partition{3}), 2));
  EXPECT_TRUE(is_core((Partition{4}), 4));
}

TEST(Partition, CoreActions) {
  const Partition kappa{6, 4, 3, 1};
  EXPECT_EQ(u_action(kappa, 1, 4), (Partition{7, 4, 4, 1, 1}));
  EXPECT_EQ(u_action(kappa, 3, 4), (Partition{6, 5, 3, 2}));
  for (Residue i : {0, 2, 4}) EXPECT_FALSE(u_action(kappa, i, 4).has_value()) << i;
  EXPECT_EQ(s_action(kappa, 0, 4), (Partition{5, 4, 2, 1}));
  EXPECT_EQ(s_action(Partition{}, 0, 3), (Partition{1}));
  EXPECT_EQ(s_action(Partition{}, 1, 3), Partition{});
}

TEST(Partition, ActionsPreserveCoresAndAreInvolutions) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 5);
    const Word word = oracle::random_word(rng, k, 15);
    const Partition core = s_word_action(word, Partition{}, k);
    ASSERT_TRUE(is_core(core, k)) << core.to_string();
    for (Residue i = 0; i <= k; ++i) {
      const Partition moved = s_action(core, i, k);
      EXPECT_TRUE(is_core(moved, k));
      EXPECT_EQ(s_action(moved, i, k), core);
    }
  }
}

TEST(Partition, ReadingWordsOfStackedShapes) {
  const Partition R{2, 2, 2};
  EXPECT_EQ(reading_word(R, 4), (Word{4, 3, 0, 4, 1, 0}));
  EXPECT_EQ(skew_reading_word(SkewShape(Partition{2, 2, 2, 2, 2, 2}, R), 4), (Word{1, 0, 2, 1, 3, 2}));
  EXPECT_EQ(skew_reading_word(SkewShape(Partition{2, 2, 2, 2, 2, 1}, Partition{2, 2, 1}), 4), (Word{0, 2, 1, 3, 2, 4}));
  EXPECT_EQ(skew_reading_word(SkewShape(Partition{2, 2, 2, 1}, Partition{1}), 4), (Word{2, 4, 3, 0, 4, 1}));
  EXPECT_THROW(SkewShape(Partition{1}, Partition{2}), std::invalid_argument);
}

TEST(Partition, CoreOfBoundedPartition) {
  EXPECT_EQ(bounded_to_core((Partition{2, 1, 1, 1, 1}), 2), (Partition{4, 2, 2, 1, 1}));
  EXPECT_EQ(bounded_to_core(Partition{}, 3), Partition{});
  EXPECT_EQ(bounded_to_core((Partition{2, 2, 2}), 4), (Partition{2, 2, 2}));
  EXPECT_THROW(bounded_to_core((Partition{3}), 2), std::invalid_argument);
}

TEST(Partition, GrassmannianElementMatchesCoreDistance) {
  const Partition lambda{2, 1, 1, 1, 1};
  const auto w = w_of_partition(lambda, 2);
  EXPECT_EQ(w.length(), 6);
  EXPECT_EQ(oracle::bfs_core_distance(Partition{4, 2, 2, 1, 1}, 2, 8), 6);
  EXPECT_TRUE(is_affine_grassmannian(w));
  EXPECT_EQ(element_core(w), (Partition{4, 2, 2, 1, 1}));
}

TEST(Partition, CoreBijectionAgainstRowSliding) {
  int checked = 0;
  for (int k = 1; k <= 4; ++k)
    for (int n = 0; n <= 8; ++n)
      for (const auto& lambda : partitions_of(n, k)) {
        const Partition core = bounded_to_core(lambda, k);
        EXPECT_EQ(core, oracle::core_by_sliding(lambda, k)) << lambda.to_string() << " k=" << k;
        EXPECT_TRUE(is_core(core, k));
        EXPECT_EQ(core_to_bounded(core, k), lambda);
        const auto w = w_of_partition(lambda, k);
        EXPECT_EQ(w.length(), lambda.size());
        EXPECT_EQ(oracle::bfs_core_distance(core, k, lambda.size()), lambda.size());
        ++checked;
      }
  EXPECT_EQ(checked, 9 + 25 + 41 + 53);  // k-bounded partitions of size <= 8, k = 1..4
}

TEST(Partition, CoreToBoundedRejectsNonCores) {
  EXPECT_THROW(core_to_bounded((Partition{5}), 4), std::invalid_argument);
}

TEST(Partition, Enumeration) {
  EXPECT_EQ(partitions_of(4, 4).size(), 5u);
  EXPECT_EQ(partitions_of(4, 2).size(), 3u);
  EXPECT_EQ(partitions_of(0, 3).size(), 1u);
  const auto box = partitions_in_box(3, 2);
  EXPECT_EQ(box.size(), 10u);
  EXPECT_EQ(std::set<Partition>(box.begin(), box.end()).size(), 10u);
  for (const auto& p : box) EXPECT_TRUE(p.length() <= 3 && p.largest() <= 2);
  EXPECT_EQ(partitions_in_box(2, 2), (std::vector<Partition>{Partition{}, Partition{1}, Partition{2},
                                                             Partition{1, 1}, Partition{2, 1}, Partition{2, 2}}));
}
