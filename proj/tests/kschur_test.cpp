#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "kschur/kschur.hpp"
#include "kschur/verify.hpp"

using namespace kschur;

namespace {

// Jacobi-Trudi determinant det(h_{lambda_i - i + j}), expanded over permutations
// with commuting h's. Valid as a k-Schur expansion when lambda_1 + l(lambda) - 1 <= k.
HExpansion jacobi_trudi(const Partition& lambda) {
  const int len = static_cast<int>(lambda.length());
  std::vector<int> sigma(static_cast<std::size_t>(len));
  std::iota(sigma.begin(), sigma.end(), 0);
  HExpansion out;
  do {
    int inversions = 0;
    for (int a = 0; a < len; ++a)
      for (int b = a + 1; b < len; ++b)
        if (sigma[static_cast<std::size_t>(a)] > sigma[static_cast<std::size_t>(b)]) ++inversions;
    std::vector<int> parts;
    bool vanishes = false;
    for (int i = 0; i < len; ++i) {
      const int index = lambda.row(static_cast<std::size_t>(i) + 1) - i + sigma[static_cast<std::size_t>(i)];
      if (index < 0) vanishes = true;
      if (index > 0) parts.push_back(index);
    }
    if (vanishes) continue;
    std::sort(parts.rbegin(), parts.rend());
    auto& slot = out[Partition(parts)];
    slot += inversions % 2 ? -1 : 1;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

TEST(KSchur, RectangleExampleAtRankFour) {
  const auto s = kschur::kschur(Partition{2, 2, 2}, 4);
  AlgebraElement expected(4);
  for (const Word& w : std::vector<Word>{{4, 3, 0, 4, 1, 0}, {2, 4, 3, 0, 4, 1}, {3, 2, 4, 3, 0, 4},
                                         {1, 2, 4, 3, 0, 1}, {1, 3, 2, 4, 3, 0}, {0, 1, 2, 4, 0, 1},
                                         {2, 1, 3, 2, 4, 3}, {0, 1, 3, 2, 4, 0}, {0, 2, 1, 3, 2, 4},
                                         {1, 0, 2, 1, 3, 2}})
    expected += AlgebraElement::of_word(4, w);
  ASSERT_EQ(expected.size(), 10u);
  EXPECT_EQ(s, expected);
}

TEST(KSchur, HExpansionExample) {
  const HExpansion expected{{Partition{2, 2, 2}, 1}, {Partition{3, 2, 1}, -2}, {Partition{3, 3}, 1},
                            {Partition{4, 1, 1}, 1}, {Partition{4, 2}, -1}};
  EXPECT_EQ(kschur_h_expansion(Partition{2, 2, 2}, 4), expected);
  EXPECT_EQ(jacobi_trudi(Partition{2, 2, 2}), expected);
}

TEST(KSchur, SmallHookShapesFollowJacobiTrudi) {
  int checked = 0;
  for (int k = 1; k <= 5; ++k) {
    KSchurTable table(k);
    for (int n = 0; n <= k + 2; ++n)
      for (const auto& lambda : partitions_of(n, k)) {
        if (lambda.largest() + static_cast<int>(lambda.length()) - 1 > k) continue;
        EXPECT_EQ(table.h_expansion(lambda), jacobi_trudi(lambda)) << lambda.to_string() << " k=" << k;
        ++checked;
      }
  }
  EXPECT_GT(checked, 30);
}

TEST(KSchur, SingleRowIsH) {
  for (int k = 1; k <= 5; ++k)
    for (int i = 1; i <= k; ++i) EXPECT_EQ(kschur::kschur(Partition{i}, k), h(i, k));
  EXPECT_EQ(kschur::kschur(Partition{}, 3), AlgebraElement::unit(3));
}

TEST(KSchur, ExpansionsReassembleAndAreGraded) {
  for (int k = 1; k <= 4; ++k) {
    KSchurTable table(k);
    for (int n = 0; n <= 6; ++n)
      for (const auto& lambda : partitions_of(n, k)) {
        const auto s = table.kschur(lambda);
        EXPECT_EQ(expand_h(table.h_expansion(lambda), k), s) << lambda.to_string();
        EXPECT_TRUE(is_homogeneous(s, n));
        EXPECT_TRUE(is_positive(s)) << lambda.to_string() << " k=" << k;
      }
  }
}

TEST(KSchur, ActionOnEmptyCoreGivesTheCore) {
  for (int k = 1; k <= 4; ++k) {
    KSchurTable table(k);
    for (int n = 0; n <= 6; ++n)
      for (const auto& lambda : partitions_of(n, k)) {
        const CoreSum expected{{bounded_to_core(lambda, k), 1}};
        EXPECT_EQ(act_on_core(table.kschur(lambda), Partition{}), expected) << lambda.to_string();
      }
  }
}

TEST(KSchur, RejectsUnboundedPartitions) {
  EXPECT_THROW(kschur::kschur(Partition{3}, 2), std::invalid_argument);
}

TEST(KSchur, PieriRule) {
  for (int k = 1; k <= 3; ++k) {
    KSchurTable table(k);
    const Report report = verify_pieri(table, 5);
    EXPECT_GT(report.checks.size(), 5u);
    for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  }
}

TEST(KSchur, PieriTargetsAtRankFour) {
  // Multiplying by a maximal rectangle only appends its rows.
  EXPECT_EQ(pieri_targets(Partition{2, 2, 2}, 1, 4), (std::vector<Partition>{Partition{2, 2, 2, 1}}));
  auto targets = pieri_targets(Partition{1}, 1, 4);
  std::sort(targets.begin(), targets.end());
  EXPECT_EQ(targets, (std::vector<Partition>{Partition{1, 1}, Partition{2}}));
}

TEST(KSchur, ProductsExpandThroughLRCoefficients) {
  for (int k = 1; k <= 3; ++k) {
    KSchurTable table(k);
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; a + b <= 6 && b <= 3; ++b)
        for (const auto& lambda : partitions_of(a, k))
          for (const auto& mu : partitions_of(b, k)) {
            const auto product = table.kschur(lambda) * table.kschur(mu);
            AlgebraElement assembled(k);
            for (const auto& nu : partitions_of(a + b, k)) {
              const Integer c = lr_coefficient(table, lambda, mu, nu);
              EXPECT_GE(c, 0);
              if (c != 0) assembled += table.kschur(nu) * c;
            }
            EXPECT_EQ(assembled, product) << lambda.to_string() << " * " << mu.to_string() << " k=" << k;
          }
  }
}

TEST(KSchur, LRCoefficientEdgeCases) {
  const Partition lambda{2, 1};
  EXPECT_EQ(lr_coefficient(lambda, Partition{}, lambda, 3), 1);
  EXPECT_EQ(lr_coefficient(lambda, Partition{1}, Partition{2}, 3), 0);
  const Partition R{2, 2, 2};
  for (const auto& mu : std::vector<Partition>{Partition{}, Partition{1}, Partition{3, 1}, Partition{4, 2, 1}})
    EXPECT_EQ(lr_coefficient(R, mu, mu.union_with(R), 4), 1) << mu.to_string();
}

TEST(KSchur, ConcurrentLookupsAgree) {
  const int k = 3;
  std::vector<Partition> targets = partitions_of(6, k);
  for (const auto& p : partitions_of(5, k)) targets.push_back(p);
  KSchurTable shared(k);
  std::vector<std::thread> workers;
  std::vector<std::vector<AlgebraElement>> results(4);
  for (std::size_t t = 0; t < results.size(); ++t)
    workers.emplace_back([&, t] {
      for (std::size_t i = 0; i < targets.size(); ++i) {
        const auto& lambda = targets[(i + t * 3) % targets.size()];
        results[t].push_back(shared.kschur(lambda));
      }
    });
  for (auto& w : workers) w.join();
  KSchurTable serial(k);
  for (std::size_t t = 0; t < results.size(); ++t)
    for (std::size_t i = 0; i < targets.size(); ++i)
      EXPECT_EQ(results[t][i], serial.kschur(targets[(i + t * 3) % targets.size()]));
}

TEST(KSchur, SeededEntriesAreServed) {
  KSchurTable table(2);
  const auto e = AlgebraElement::of_word(2, Word{1, 0});
  table.insert(Partition{1, 1}, e);
  EXPECT_EQ(table.kschur(Partition{1, 1}), e);
  EXPECT_EQ(table.cached(), 1u);
}
