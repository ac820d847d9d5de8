#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "symbranch/path.hpp"

using namespace symbranch;
using testing_helpers::as_ints;

TEST(Restriction, LetterWeights) {
  const int n = 3;
  EXPECT_EQ(restrict_weight(full_letter_weight(Letter(1), n)), (WeightVector{1, 0, 0}));
  EXPECT_EQ(restrict_weight(full_letter_weight(Letter::barred(1), n)), (WeightVector{-1, 0, 0}));
  for (int i = 1; i <= n; ++i) {
    WeightVector v = full_letter_weight(Letter(i), n);
    v[2 * n - i] += 1;
    EXPECT_EQ(restrict_weight(v), (WeightVector(n, 0)));
  }
  EXPECT_THROW(restrict_weight({1, 0, 0}), InvalidArgument);
}

TEST(Restriction, Cancellation) {
  EXPECT_TRUE(has_cancellation(make_tableau({{1, 2, 3}, {-3}})));
  EXPECT_FALSE(has_cancellation(make_tableau({{1, 2, -3}, {3}})));
  EXPECT_TRUE(has_cancellation(make_tableau({{1, 1, 2}, {2, 3}})));
  EXPECT_TRUE(has_cancellation(Word{}));
}

TEST(Restriction, Dominance) {
  EXPECT_TRUE(is_dominant_word(column_word(make_tableau({{1, 1}, {2}})), 2));
  EXPECT_TRUE(is_dominant_word(column_word(make_tableau({{1, 1}, {-1}})), 2));
  EXPECT_FALSE(is_dominant_word(make_word({2}), 2));
  EXPECT_FALSE(is_dominant_word(make_word({1, -1, -1}), 2));
  EXPECT_TRUE(projection_dominance(path_of(column_word(make_tableau({{1, 1}, {2}})), 2), 2));
  EXPECT_FALSE(projection_dominance(path_of(make_word({2}), 2), 2));
}

TEST(Restriction, PathPrefixes) {
  const PrefixPath p = path_of(make_word({3, 2, 1, -3}), 3);
  ASSERT_EQ(p.prefix.size(), 4u);
  EXPECT_EQ(p.prefix[0], (WeightVector{0, 0, 1}));
  EXPECT_EQ(p.endpoint(), (WeightVector{1, 1, 0}));
  EXPECT_EQ(p.full_prefix.back(), (WeightVector{1, 1, 1, 1, 0, 0}));
  EXPECT_EQ(path_of({}, 2).endpoint(), (WeightVector{}));
}

// The projection test and the restricted-prefix test must agree on every
// word, dominant or not.
TEST(Restriction, ProjectionAgreesWithRestriction) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : partitions_up_to(4, 2 * n))
      for (const auto& t : enumerate_ssyt(p, Alphabet::barred(n))) {
        const Word w = column_word(t);
        EXPECT_EQ(projection_dominance(path_of(w, n), n), is_dominant_word(w, n)) << word_to_string(w);
      }
}

TEST(Domres, WorkedExample) {
  const auto got = enumerate_domres(Partition({4, 3, 2, 1}), 3, Partition({3, 2, 1}));
  std::set<std::vector<std::vector<int>>> want, have;
  for (const auto& w : fixtures::worked()) want.insert(w.tableau);
  for (const auto& t : got) have.insert(as_ints(t));
  EXPECT_EQ(got.size(), 3u);
  EXPECT_EQ(have, want);
}

TEST(Domres, SmallExample) {
  const auto by = domres_by_endpoint(Partition({2, 1}), 2);
  ASSERT_EQ(by.size(), 2u);
  ASSERT_EQ(by.at(Partition({2, 1})).size(), 1u);
  ASSERT_EQ(by.at(Partition({1})).size(), 1u);
  EXPECT_EQ(as_ints(by.at(Partition({2, 1}))[0]), (std::vector<std::vector<int>>{{1, 1}, {2}}));
  EXPECT_EQ(as_ints(by.at(Partition({1}))[0]), (std::vector<std::vector<int>>{{1, 1}, {-1}}));
}

TEST(Domres, Empty) {
  const auto got = enumerate_domres(Partition(), 1);
  ASSERT_EQ(got.size(), 1u);
  EXPECT_TRUE(got[0].empty());
  EXPECT_THROW(enumerate_domres(Partition({1, 1, 1, 1}), 2), ShapeOutOfType);
}

TEST(Domres, MatchesOracle) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : partitions_up_to(n == 3 ? 6 : 7, 2 * n - 1)) {
      const auto want = oracle::domres(p.parts(), n);
      const auto got = domres_by_endpoint(p, n);
      ASSERT_EQ(got.size(), want.size()) << p.to_string() << " n=" << n;
      for (const auto& [mu, list] : got) {
        ASSERT_TRUE(want.count(mu.parts())) << mu.to_string();
        std::set<std::vector<std::vector<int>>> a, b(want.at(mu.parts()).begin(), want.at(mu.parts()).end());
        for (const auto& t : list) a.insert(as_ints(t));
        EXPECT_EQ(a, b) << p.to_string() << " μ=" << mu.to_string();
      }
    }
}

TEST(Domres, TriangularSupportOfDomres) {
  EXPECT_TRUE(has_triangular_support(make_tableau({{1, 1, 1, 1}, {2, 2, 2}, {3, -1}, {-2}})));
  EXPECT_FALSE(has_triangular_support(make_tableau({{1, 2}})));
  EXPECT_FALSE(has_triangular_support(make_tableau({{1}, {-2}})));
}
