#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "symbranch/path.hpp"
#include "symbranch/tableau.hpp"

using namespace symbranch;

using testing_helpers::as_ints;

TEST(Partition, DropsTrailingZerosAndValidates) {
  EXPECT_EQ(Partition({3, 1, 0, 0}).parts(), (std::vector<int>{3, 1}));
  EXPECT_THROW(Partition({1, 2}), InvalidArgument);
  EXPECT_THROW(Partition({2, -1}), InvalidArgument);
  EXPECT_EQ(Partition({4, 3, 1}).size(), 8);
  EXPECT_EQ(Partition({4, 3, 1}).conjugate(), Partition({3, 2, 2, 1}));
}

TEST(Partition, WeightConversions) {
  EXPECT_EQ(weight_to_partition(FundWeightCoeffs({1, 1, 1, 1})), Partition({4, 3, 2, 1}));
  EXPECT_EQ(weight_to_partition(FundWeightCoeffs({0, 0, 0})), Partition());
  EXPECT_EQ(weight_to_partition(FundWeightCoeffs({1, 1})), Partition({2, 1}));
  EXPECT_EQ(partition_to_weight(Partition({4, 3, 2, 1}), 5).coeffs, (std::vector<int>{1, 1, 1, 1, 0}));
  EXPECT_EQ(partition_to_weight(Partition({5}), 3).coeffs, (std::vector<int>{5, 0, 0}));
  EXPECT_EQ(partition_to_weight(Partition({2, 2}), 3).coeffs, (std::vector<int>{0, 2, 0}));
  EXPECT_THROW(partition_to_weight(Partition({1, 1, 1}), 2), ShapeOutOfType);
  EXPECT_THROW(FundWeightCoeffs({1, -1}), InvalidArgument);
}

TEST(Partition, WeightRoundTrip) {
  for (const auto& p : partitions_up_to(9, 5)) EXPECT_EQ(weight_to_partition(partition_to_weight(p, 5)), p);
}

TEST(Partition, Stability) {
  EXPECT_TRUE(is_stable(Partition({2, 1}), 2));
  EXPECT_FALSE(is_stable(Partition({4, 3, 2, 1}), 3));
  EXPECT_TRUE(is_stable(Partition(), 1));
  EXPECT_EQ(stable_part(Partition({4, 3, 2, 1}), 3), Partition({4, 3, 2}));
  EXPECT_EQ(stable_part(Partition({3, 1}), 3), Partition({3, 1}));
  EXPECT_EQ(stable_part(Partition({2, 2, 2}), 1), Partition({2}));
}

TEST(Partition, Parse) {
  EXPECT_EQ(parse_partition("4,3,2,1"), Partition({4, 3, 2, 1}));
  EXPECT_EQ(parse_partition(""), Partition());
  EXPECT_EQ(parse_partition(" 2, 1 "), Partition({2, 1}));
  EXPECT_THROW(parse_partition("2,,1"), InvalidArgument);
  EXPECT_THROW(parse_partition("2,x"), InvalidArgument);
  EXPECT_THROW(parse_partition("1,2"), InvalidArgument);
}

TEST(Partition, EnumerationCounts) {
  // p(8) = 22, and 10 of those have at most 3 parts.
  EXPECT_EQ(partitions_of(8).size(), 22u);
  EXPECT_EQ(partitions_of(8, 3).size(), 10u);
  EXPECT_EQ(partitions_up_to(3, 2).size(), 6u);
}

TEST(Letter, BarredOrder) {
  const auto letters = Alphabet::barred(3).letters();
  ASSERT_EQ(letters.size(), 6u);
  EXPECT_TRUE(std::is_sorted(letters.begin(), letters.end()));
  EXPECT_LT(Letter(3), Letter::barred(3));
  EXPECT_LT(Letter::barred(3), Letter::barred(2));
  EXPECT_LT(Letter::barred(2), Letter::barred(1));
  for (int x = 1; x <= 6; ++x) EXPECT_EQ(Letter::from_unbarred(x, 3).to_unbarred(3), x);
  EXPECT_EQ(Letter::barred(1).to_unbarred(3), 6);
}

TEST(Tableau, RejectsNonPartitionRows) {
  EXPECT_THROW(make_tableau({{1}, {2, 2}}), InvalidArgument);
  EXPECT_THROW(make_tableau({{0}}), InvalidArgument);
  EXPECT_TRUE(is_semistandard(make_tableau({{1, 1}, {2}})));
  EXPECT_FALSE(is_semistandard(make_tableau({{1, 1}, {1}})));
  EXPECT_FALSE(is_semistandard(make_tableau({{2, 1}})));
}

TEST(Tableau, Readings) {
  EXPECT_EQ(as_ints(column_word(make_tableau({{1, 2, 3}, {-3}}))), (std::vector<int>{3, 2, 1, -3}));
  const Tableau t = make_tableau({{1, 2, 3}, {-3, -2}});
  EXPECT_EQ(as_ints(row_word(t)), (std::vector<int>{3, 2, 1, -2, -3}));
  EXPECT_EQ(as_ints(column_word(t)), (std::vector<int>{3, 2, -2, 1, -3}));
  EXPECT_EQ(as_ints(column_word(make_tableau({{5}}))), (std::vector<int>{5}));
  const Tableau one_row = make_tableau({{1, 1, 2, -1}});
  EXPECT_EQ(row_word(one_row), column_word(one_row));
  EXPECT_EQ(as_ints(column_word(make_tableau({{1, 1, 1, 1}, {2, 2, -1}, {3, 3}, {-3}}))),
            (std::vector<int>{1, 1, -1, 1, 2, 3, 1, 2, 3, -3}));
}

TEST(Tableau, SkewReadings) {
  const SkewTableau l(Partition({3, 2, 1}), Partition({1, 1}), {{Letter(1), Letter(1)}, {Letter(2)}, {Letter(2)}});
  EXPECT_EQ(as_ints(column_word(l)), (std::vector<int>{1, 1, 2, 2}));
  EXPECT_EQ(as_ints(row_word(l)), (std::vector<int>{1, 1, 2, 2}));
  EXPECT_THROW(SkewTableau(Partition({2}), Partition({1, 1}), {}), InvalidArgument);
  EXPECT_THROW(SkewTableau(Partition({2}), Partition({1}), {{Letter(1), Letter(1)}}), InvalidArgument);
}

TEST(Tableau, WordWeight) {
  EXPECT_EQ(word_weight(make_word({3, 2, 1, -3}), 3), (WeightVector{1, 1, 0}));
  EXPECT_EQ(word_weight({}, 2), (WeightVector{0, 0}));
  EXPECT_EQ(word_weight(column_word(make_tableau({{1, 1}, {-1}})), 2), (WeightVector{1, 0}));
}

TEST(Tableau, EnumerationCounts) {
  EXPECT_EQ(enumerate_ssyt(Partition({2, 1}), Alphabet::unbarred(3)).size(), 8u);
  EXPECT_EQ(enumerate_ssyt(Partition({1}), Alphabet::unbarred(7)).size(), 7u);
  EXPECT_EQ(enumerate_ssyt(Partition({2, 1}), Alphabet::barred(2)).size(), 20u);
  EXPECT_EQ(enumerate_ssyt(Partition(), Alphabet::barred(2)).size(), 1u);
  EXPECT_TRUE(enumerate_ssyt(Partition({1, 1, 1}), Alphabet::unbarred(2)).empty());
}

TEST(Tableau, EnumerationMatchesOracle) {
  for (int m = 1; m <= 4; ++m)
    for (const auto& p : partitions_up_to(6, m)) {
      const auto got = enumerate_ssyt(p, Alphabet::unbarred(m));
      std::vector<int> letters;
      for (int i = 1; i <= m; ++i) letters.push_back(i);
      const auto want = oracle::ssyt(p.parts(), letters);
      ASSERT_EQ(got.size(), want.size()) << p.to_string() << " m=" << m;
      EXPECT_EQ(static_cast<long long>(got.size()), oracle::dim_gl(p.parts(), m));
      for (std::size_t k = 0; k < got.size(); ++k) {
        EXPECT_TRUE(is_semistandard(got[k]));
        EXPECT_EQ(as_ints(got[k]), want[k]);
      }
    }
}

TEST(Tableau, BarredEnumerationMatchesOracle) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : partitions_up_to(5, 2 * n)) {
      const auto got = enumerate_ssyt(p, Alphabet::barred(n));
      const auto want = oracle::ssyt(p.parts(), oracle::barred_letters(n));
      ASSERT_EQ(got.size(), want.size()) << p.to_string() << " n=" << n;
      for (std::size_t k = 0; k < got.size(); ++k) EXPECT_EQ(as_ints(got[k]), want[k]);
    }
}

TEST(Tableau, RandomColumnWordsMatchOracle) {
  std::mt19937 rng(7);
  const auto all = enumerate_ssyt(Partition({4, 3, 1}), Alphabet::barred(3));
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const Tableau& t = all[pick(rng)];
    EXPECT_EQ(as_ints(column_word(t)), oracle::column_word(as_ints(t)));
  }
}
