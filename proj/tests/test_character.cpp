#include <gtest/gtest.h>

#include "oracles.hpp"
#include "symbranch/branching.hpp"
#include "symbranch/character.hpp"

using namespace symbranch;

namespace {

std::map<std::vector<int>, long long> terms_of(const LaurentPolynomial& p) { return {p.terms().begin(), p.terms().end()}; }

}  // namespace

TEST(Laurent, Arithmetic) {
  LaurentPolynomial a;
  a.add({1, 0}, 2);
  a.add({0, 1}, 1);
  a.add({1, 0}, -2);
  EXPECT_EQ(a.terms().size(), 1u);
  EXPECT_EQ(a.coefficient({0, 1}), 1);
  EXPECT_EQ(a.coefficient({1, 0}), 0);
  LaurentPolynomial b;
  b.add({1, -1}, 3);
  const auto c = a * b;
  EXPECT_EQ(c.coefficient({1, 0}), 3);
  EXPECT_EQ(c.mass(), 3);
  a.add_scaled(b, -1);
  EXPECT_FALSE(a.is_nonnegative());
}

TEST(Schur, Examples) {
  const auto s1 = schur_character(Partition({1}), 3);
  EXPECT_EQ(s1.terms().size(), 3u);
  for (const auto& e : {std::vector<int>{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) EXPECT_EQ(s1.coefficient(e), 1);
  EXPECT_EQ(schur_character(Partition({2, 1}), 3).mass(), 8);
  EXPECT_EQ(schur_character(Partition({2, 1}), 3).coefficient({1, 1, 1}), 2);
  EXPECT_EQ(schur_character(Partition({2, 1}), 4).mass(), 20);
  EXPECT_EQ(weyl_dimension_sl(Partition({2, 1}), 4), 20);
  EXPECT_EQ(weyl_dimension_sl(Partition({1, 1, 1}), 2), 0);
}

TEST(Schur, BialternantIdentity) {
  for (int m = 1; m <= 4; ++m)
    for (const auto& p : partitions_up_to(6, m)) EXPECT_TRUE(satisfies_bialternant_identity(p, m)) << p.to_string();
  EXPECT_THROW(satisfies_bialternant_identity(Partition({1, 1, 1}), 2), ShapeOutOfType);
}

TEST(Schur, DimensionsMatchHookContent) {
  for (int m = 1; m <= 6; ++m)
    for (const auto& p : partitions_up_to(7, m)) {
      EXPECT_EQ(weyl_dimension_sl(p, m), oracle::dim_gl(p.parts(), m));
      if (m <= 4 && p.size() <= 5) {
        EXPECT_EQ(schur_character(p, m).mass(), oracle::dim_gl(p.parts(), m));
      }
    }
}

TEST(Restricted, Examples) {
  const auto r1 = restricted_character(Partition({1}), 1);
  EXPECT_EQ(terms_of(r1), (std::map<std::vector<int>, long long>{{{-1}, 1}, {{1}, 1}}));
  const auto r21 = restricted_character(Partition({2, 1}), 2);
  EXPECT_EQ(r21.mass(), 20);
  for (const auto& [e, c] : r21.terms()) EXPECT_EQ(r21.coefficient({-e[0], -e[1]}), c);
  // |λ| odd forces an odd coordinate sum, so x^{(1,1)} cannot occur.
  EXPECT_EQ(r21.coefficient({1, 1}), 0);
  const auto brute = oracle::restricted_contents({2, 1}, 2);
  EXPECT_EQ(brute.count({1, 1}), 0u);
}

TEST(Restricted, MatchesOracle) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : partitions_up_to(5, 2 * n)) EXPECT_EQ(terms_of(restricted_character(p, n)), oracle::restricted_contents(p.parts(), n));
}

TEST(Symplectic, Examples) {
  EXPECT_EQ(sp_weight_multiplicities(Partition({1}), 2).mass(), 4);
  EXPECT_EQ(sp_weight_multiplicities(Partition({2, 1}), 2).mass(), 16);
  EXPECT_EQ(terms_of(sp_weight_multiplicities(Partition(), 2)), (std::map<std::vector<int>, long long>{{{0, 0}, 1}}));
  EXPECT_EQ(weyl_dimension_sp(Partition({1}), 2), 4);
  EXPECT_EQ(weyl_dimension_sp(Partition({2, 1}), 2), 16);
  EXPECT_THROW(weyl_dimension_sp(Partition({1, 1, 1}), 2), ShapeOutOfType);
  EXPECT_THROW(sp_weight_multiplicities(Partition({1, 1, 1}), 2), ShapeOutOfType);
}

TEST(Symplectic, MultiplicitiesMatchSymplecticTableaux) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& mu : partitions_up_to(n == 3 ? 5 : 7, n)) {
      const auto got = sp_weight_multiplicities(mu, n);
      EXPECT_EQ(terms_of(got), oracle::sp_character(mu.parts(), n)) << mu.to_string() << " n=" << n;
      EXPECT_EQ(weyl_dimension_sp(mu, n), oracle::dim_sp(mu.parts(), n));
      EXPECT_EQ(got.mass(), weyl_dimension_sp(mu, n));
    }
}

TEST(Branching, Examples) {
  for (Method m : {Method::paths, Method::sundaram, Method::character}) {
    const auto t = branch(Partition({2, 1}), 2, m);
    EXPECT_EQ(t.method, m);
    EXPECT_EQ(t.multiplicities, (std::map<Partition, long long>{{Partition({1}), 1}, {Partition({2, 1}), 1}}));
    EXPECT_EQ(t.dimension(2), 20);
    EXPECT_EQ(branch(Partition({1}), 1, m).multiplicities, (std::map<Partition, long long>{{Partition({1}), 1}}));
  }
  EXPECT_EQ(branch_by_character(Partition({4, 3, 2, 1}), 3).at(Partition({3, 2, 1})), 3);
  EXPECT_EQ(branch_by_paths(Partition({4, 3, 2, 1}), 3).at(Partition({3, 2, 1})), 3);
  EXPECT_EQ(to_string(Method::sundaram), "sundaram");
}

TEST(Branching, ThreeMethodsAgree) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : partitions_up_to(n == 3 ? 6 : 7, 2 * n - 1)) {
      const auto a = branch_by_paths(p, n), b = branch_by_sundaram(p, n), c = branch_by_character(p, n);
      EXPECT_TRUE(a.same_multiplicities(b)) << p.to_string();
      EXPECT_TRUE(a.same_multiplicities(c)) << p.to_string();
      EXPECT_EQ(a.dimension(n), oracle::dim_gl(p.parts(), 2 * n)) << p.to_string();
    }
}
