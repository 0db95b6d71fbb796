#include <cstdlib>

#include <gtest/gtest.h>

#include "fpm/oracle.hpp"
#include "support.hpp"

namespace fpm {
namespace {

using testing::load;

TEST(Oracle, CountsMatchings) {
  EXPECT_EQ(enumerate_matchings(load("inst1.txt")).size(), 5u);
  EXPECT_EQ(enumerate_matchings(load("inst2.txt")).size(), 34u);
  const Instance single = parse_instance("agents: a\njobs: b\na > b\nb > a\n");
  EXPECT_EQ(enumerate_matchings(single).size(), 2u);
  const Instance isolated_job = parse_instance("agents: a\njobs: b c\na > b\nb > a\n");
  EXPECT_EQ(enumerate_matchings(isolated_job).size(), 2u);
}

TEST(Oracle, MatchingsAreDistinctAndValid) {
  const Instance inst = load("inst3.txt");
  const auto all = enumerate_matchings(inst);
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_NO_THROW(all[i].validate(inst));
    for (std::size_t j = i + 1; j < all.size(); ++j) ASSERT_FALSE(all[i] == all[j]);
  }
}

TEST(Oracle, FourVertexGroundTruth) {
  const OracleReport r = ground_truth(load("inst1.txt"));
  EXPECT_EQ(r.num_fully_popular, 2);
  EXPECT_EQ(r.max_fully_popular_size, 2);
  EXPECT_EQ(r.max_popular_size, 2);
  EXPECT_TRUE(r.loop_rule_holds);
}

TEST(Oracle, SerialAndParallelKernelsAgree) {
  for (const char* file : {"inst1.txt", "inst2.txt", "inst3.txt"}) {
    const Instance inst = load(file);
    const RankTable table = make_rank_table(inst, enumerate_matchings(inst));
    EXPECT_EQ(election_flags_serial(table), election_flags_parallel(table)) << file;
  }
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Instance inst = testing::small_random(seed, 5);
    const RankTable table = make_rank_table(inst, enumerate_matchings(inst));
    ASSERT_EQ(election_flags_serial(table), election_flags_parallel(table)) << "seed " << seed;
  }
}

TEST(Oracle, KernelMatchesDirectElections) {
  const Instance inst = load("inst3.txt");
  const auto all = enumerate_matchings(inst);
  const ElectionFlags flags = election_flags_serial(make_rank_table(inst, all));
  for (std::size_t i = 0; i < all.size(); i += 7) {
    bool popular = true, a_popular = true;
    for (const Matching& n : all) {
      const Election e = run_election(inst, all[i], n);
      if (e.phi_nm > e.phi_mn) popular = false;
      if (e.phi_a_nm > e.phi_a_mn) a_popular = false;
    }
    EXPECT_EQ(flags.popular[i] != 0, popular) << i;
    EXPECT_EQ(flags.a_popular[i] != 0, a_popular) << i;
  }
}

TEST(Oracle, CapIsEnforced) {
  const Instance big = generate_instance({9, 9, 0.5, 3});
  EXPECT_THROW(enumerate_matchings(big, 16), OracleCapExceeded);
  EXPECT_THROW(witness_search(generate_instance({7, 7, 0.5, 3}), Matching(14)), OracleCapExceeded);
}

TEST(Oracle, AllWitnessesAreValidAndOrdered) {
  const Instance inst = load("inst1.txt");
  const Matching mmax = testing::load_matching(inst, "inst1_mmax.txt");
  const auto ws = all_witnesses(inst, mmax);
  ASSERT_FALSE(ws.empty());
  for (std::size_t i = 0; i < ws.size(); ++i) {
    EXPECT_TRUE(check_witness(inst, mmax, ws[i]));
    if (i > 0) EXPECT_LT(ws[i - 1].alpha, ws[i].alpha);
  }
  EXPECT_EQ(*witness_search(inst, mmax), ws.front());
}

}  // namespace
}  // namespace fpm
