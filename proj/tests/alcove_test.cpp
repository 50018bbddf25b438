#include <gtest/gtest.h>

#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "kschur/alcove.hpp"
#include "kschur/rectangle.hpp"
#include "oracles.hpp"

using namespace kschur;

namespace {

RationalPoint fractions(std::initializer_list<int> numerators, int denominator) {
  std::vector<Rational> c;
  for (int x : numerators) c.emplace_back(x, denominator);
  return RationalPoint(std::move(c));
}

RationalPoint random_point(std::mt19937_64& rng, int k) {
  std::vector<Rational> c;
  for (int i = 0; i <= k; ++i) c.emplace_back(static_cast<int>(rng() % 41) - 20, 7);
  return RationalPoint(std::move(c));
}

WeightVector random_weight(std::mt19937_64& rng, int k) {
  std::vector<std::int64_t> c;
  for (int i = 0; i <= k; ++i) c.push_back(static_cast<int>(rng() % 5) - 2);
  return RationalPoint::from_integers(c);
}

}  // namespace

TEST(Alcove, BasicActions) {
  const auto p = RationalPoint::from_integers({5, 3, 1});
  EXPECT_EQ(diamond(1, p), RationalPoint::from_integers({3, 5, 1}));
  const auto q = diamond(0, p);
  EXPECT_EQ(q[0], 2);
  EXPECT_EQ(q[2], 4);
  const auto r = star(0, p);
  EXPECT_EQ(r[0], 1);
  EXPECT_EQ(r[2], 5);
  EXPECT_THROW(diamond(3, p), std::out_of_range);
  EXPECT_EQ(RationalPoint::from_integers({1, 1, 1}), RationalPoint(2));
  EXPECT_FALSE(RationalPoint::from_integers({1, 0, 0}) == RationalPoint(2));
}

TEST(Alcove, FundamentalCentroid) {
  EXPECT_EQ(fundamental_centroid(4), fractions({4, 3, 2, 1, 0}, 5));
  EXPECT_EQ(fundamental_centroid(2), fractions({2, 1, 0}, 3));
  EXPECT_EQ(centroid(AffinePermutation(4)), fundamental_centroid(4));
  EXPECT_EQ(point_to_word(fundamental_centroid(5)), AffinePermutation(5));
}

TEST(Alcove, WorkedCentroidChain) {
  // (s_3 s_4 s_2 s_3 s_1 s_2) <> G_empty, one letter at a time from the right.
  RationalPoint p = fundamental_centroid(4);
  const Word word{3, 4, 2, 3, 1, 2};
  const std::vector<RationalPoint> expected{
      fractions({4, 2, 3, 1, 0}, 5), fractions({2, 4, 3, 1, 0}, 5), fractions({2, 4, 1, 3, 0}, 5),
      fractions({2, 1, 4, 3, 0}, 5), fractions({2, 1, 4, 0, 3}, 5), fractions({2, 1, 0, 4, 3}, 5)};
  for (std::size_t step = 0; step < word.size(); ++step) {
    p = diamond(word[word.size() - 1 - step], p);
    EXPECT_EQ(p, expected[step]) << "step " << step;
  }
  EXPECT_EQ(p, fundamental_centroid(4) + RationalPoint::from_integers({0, 0, 0, 1, 1}));
}

TEST(Alcove, PseudoTranslationsRankTwo) {
  EXPECT_EQ(pseudo_translation(RationalPoint::from_integers({1, 0, 0})), word_to_window(2, {2, 0}));
  EXPECT_EQ(pseudo_translation(RationalPoint::from_integers({0, 1, 0})), word_to_window(2, {0, 1}));
  EXPECT_EQ(pseudo_translation(RationalPoint::from_integers({0, 0, 1})), word_to_window(2, {1, 2}));
}

TEST(Alcove, PseudoTranslationsRankFour) {
  const std::map<std::vector<std::int64_t>, Word> table{
      {{0, 0, 0, 1, 1}, {2, 1, 3, 2, 4, 3}}, {{1, 1, 0, 0, 0}, {4, 3, 0, 4, 1, 0}},
      {{1, 0, 1, 0, 0}, {0, 1, 3, 2, 4, 0}}, {{0, 1, 1, 0, 0}, {0, 1, 2, 4, 0, 1}},
      {{1, 0, 0, 1, 0}, {1, 3, 2, 4, 3, 0}}, {{0, 1, 0, 1, 0}, {1, 2, 4, 3, 0, 1}},
      {{0, 0, 1, 1, 0}, {1, 0, 2, 1, 3, 2}}, {{1, 0, 0, 0, 1}, {3, 2, 4, 3, 0, 4}},
      {{0, 1, 0, 0, 1}, {2, 4, 3, 0, 4, 1}}, {{0, 0, 1, 0, 1}, {0, 2, 1, 3, 2, 4}}};
  for (const auto& [gamma, word] : table) {
    const auto z = pseudo_translation(RationalPoint::from_integers(gamma));
    EXPECT_EQ(z, word_to_window(4, word)) << word_to_string(word);
    EXPECT_EQ(z.length(), 6);
  }
}

TEST(Alcove, PointToWordRejectsWalls) {
  EXPECT_THROW(point_to_word(RationalPoint::from_integers({1, 1, 0})), PointOnWall);
  EXPECT_THROW(point_to_word(RationalPoint::from_integers({1, 0, 0})), PointOnWall);
  EXPECT_THROW(pseudo_translation(fractions({1, 0, 0}, 2)), std::invalid_argument);
}

TEST(Alcove, PointToWordFindsTheAlcove) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 5);
    const auto w = oracle::random_element(rng, k, 14);
    EXPECT_EQ(point_to_word(centroid(w)), w) << w.to_string();
  }
}

TEST(Alcove, DiamondOfSumSplits) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 5);
    const auto w = oracle::random_element(rng, k, 10);
    const auto a = random_point(rng, k);
    const auto b = random_point(rng, k);
    EXPECT_EQ(diamond(w, a + b), diamond(w, a) + star(w, b));
  }
}

TEST(Alcove, TranslationsShiftEveryPoint) {
  std::mt19937_64 rng(17);
  int tested = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 4);
    auto alpha = random_weight(rng, k);
    Rational sum = 0;
    for (const auto& c : alpha.coords()) sum += c;
    alpha[0] -= sum;
    ASSERT_TRUE(is_root_lattice(alpha));
    const auto t = translation(alpha);
    for (int j = 0; j < 5; ++j) {
      const auto v = random_point(rng, k);
      EXPECT_EQ(diamond(t, v), v - alpha);
    }
    ++tested;
  }
  EXPECT_EQ(tested, 200);
  EXPECT_THROW(translation(RationalPoint::from_integers({1, 0, 0})), std::invalid_argument);
}

TEST(Alcove, OnlyDominantGammaIsTheFundamentalWeight) {
  for (int k = 1; k <= 7; ++k)
    for (const auto& R : maximal_rectangles(k)) {
      int dominant = 0;
      for (const auto& gamma : gamma_set(R))
        if (is_dominant(gamma)) {
          ++dominant;
          EXPECT_EQ(gamma, fundamental_weight(R.c, k));
        }
      EXPECT_EQ(dominant, 1);
    }
}

TEST(Alcove, WindowFromCentroidOfHat) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 5);
    const auto w = oracle::random_element(rng, k, 12);
    const auto bracket = window_bracket(reversed(centroid(hat_automorphism(w))) * Rational(k + 1));
    EXPECT_EQ(AffinePermutation(k, bracket), w) << w.to_string();
  }
}

TEST(Alcove, PseudoTranslationMovesAlcoves) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 4);
    const auto gamma = random_weight(rng, k);
    const auto z = pseudo_translation(gamma);
    EXPECT_EQ(centroid(z), fundamental_centroid(k) + gamma);
    const auto w = oracle::random_element(rng, k, 10);
    EXPECT_EQ(centroid(z * w), centroid(w) + star(w.inverse(), gamma));
  }
}

TEST(Alcove, Labels) {
  EXPECT_EQ(label(RationalPoint::from_integers({1, 1, 0, 0, 0})), 2);
  EXPECT_EQ(label(RationalPoint::from_integers({-1, 0, 0})), 2);
  EXPECT_EQ(label(fundamental_weight(3, 4)), 3);
  EXPECT_THROW(label(fractions({1, 0}, 2)), std::invalid_argument);
}
