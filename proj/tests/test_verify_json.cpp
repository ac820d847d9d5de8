#include <gtest/gtest.h>

#include <atomic>

#include "fixtures.hpp"
#include "symbranch/json_io.hpp"
#include "symbranch/verify.hpp"

using namespace symbranch;

TEST(Json, Tableaux) {
  const Tableau t = make_tableau(fixtures::worked()[1].tableau);
  const json j = to_json(t);
  EXPECT_EQ(j.dump(), R"({"rows":[[1,1,1,1],[2,2,-1],[3,3],[-3]]})");
  EXPECT_EQ(tableau_from_json(j), t);
  const StandardTableau q(fixtures::kFinalQ);
  EXPECT_EQ(standard_tableau_from_json(to_json(q)), q);
  const SkewTableau l = phi(t, 3);
  EXPECT_EQ(skew_tableau_from_json(to_json(l)), l);
  const SpecialTwoLineArray a({3, 10}, {1, 6});
  EXPECT_EQ(to_json(a).dump(), R"({"bottom":[1,6],"top":[3,10]})");
  EXPECT_EQ(array_from_json(to_json(a)), a);
  EXPECT_EQ(partition_from_json(to_json(Partition({3, 2}))), Partition({3, 2}));
}

TEST(Json, Bundle) {
  const Tableau t = make_tableau(fixtures::worked()[0].tableau);
  const json j = to_json(q_symbols(t, 3), phi(t, 3));
  EXPECT_EQ(j.at("even"), json::parse("[[1,3],[6,10]]"));
  EXPECT_EQ(j.at("final_q"), json::parse("[[1,2,4,7],[3,5,8],[6,9],[10]]"));
  EXPECT_EQ(j.at("array").at("top"), json::parse("[6,10]"));
}

TEST(Json, HRepresentationRoundTrip) {
  const auto h = domres_h_rep(Partition({2, 1}), Partition({1}), 2);
  const auto back = h_rep_from_json(to_json(h));
  ASSERT_EQ(back.ineqs.size(), h.ineqs.size());
  EXPECT_EQ(back.variable_names, h.variable_names);
  EXPECT_EQ(lattice_points(back), lattice_points(h));
  const auto bare = h_rep_from_json(json::parse(R"({"ineqs":[{"coeffs":[1],"rel":">=","rhs":0},{"coeffs":[1],"rel":"<=","rhs":2}]})"));
  EXPECT_EQ(lattice_points(bare).size(), 3u);
  EXPECT_THROW(relation_from_string("<"), InvalidArgument);
}

TEST(Json, BranchingTable) {
  const json j = to_json(branch_by_paths(Partition({2, 1}), 2));
  EXPECT_EQ(j.dump(), R"({"method":"paths","table":[{"mu":[1],"multiplicity":1},{"mu":[2,1],"multiplicity":1}]})");
}

TEST(Verify, ParallelForRunsEverythingAndRethrows) {
  std::atomic<int> sum{0};
  parallel_for(100, 4, [&](std::size_t k) { sum += static_cast<int>(k); });
  EXPECT_EQ(sum.load(), 4950);
  EXPECT_THROW(parallel_for(10, 3, [](std::size_t k) {
                 if (k == 5) throw InvalidArgument("boom");
               }),
               InvalidArgument);
}

TEST(Verify, SweepItems) {
  SweepConfig c;
  c.max_lambda_size = 2;
  // Each n contributes ∅, (1), (2), (1,1).
  EXPECT_EQ(sweep_items(c).size(), 8u);
  c.n_values = {0};
  EXPECT_THROW(sweep_items(c), InvalidArgument);
}

TEST(Verify, SmallSweepPasses) {
  SweepConfig c;
  c.max_lambda_size = 4;
  c.jobs = 2;
  for (const auto& r : run_sweep(c)) {
    EXPECT_TRUE(r.passed()) << r.name;
    EXPECT_GT(r.cases, 0) << r.name;
    const json j = to_json(r);
    EXPECT_EQ(j.at("passed"), r.passed());
    EXPECT_FALSE(j.contains("seconds"));
  }
}

TEST(Verify, InjectedFaultIsCaught) {
  SweepConfig c;
  c.max_lambda_size = 2;
  c.inject_fault = true;
  EXPECT_FALSE(check_triple_agreement(c).passed());
}

TEST(Verify, Certificate) {
  const auto cert = bijection_certificate(Partition({4, 3, 2, 1}), Partition({3, 2, 1}), 3);
  EXPECT_TRUE(cert.ok());
  EXPECT_EQ(cert.domres_count, 3u);
  EXPECT_EQ(cert.lrs_count, 3u);
  EXPECT_TRUE(to_json(cert).at("ok").get<bool>());
}
