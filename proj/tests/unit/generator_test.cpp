#include <gtest/gtest.h>

#include "fpm/crosscheck.hpp"
#include "fpm/generator.hpp"
#include "fpm/instance_io.hpp"

namespace fpm {
namespace {

TEST(Generator, CompleteAtFullDensity) {
  const Instance inst = generate_instance({3, 3, 1.0, 7});
  EXPECT_EQ(inst.num_edges(), 9);
  EXPECT_EQ(inst.name(0), "a0");
  EXPECT_EQ(inst.name(3), "b0");
}

TEST(Generator, DeterministicAndRoundTrips) {
  const GeneratorParams p{4, 4, 0.5, 1};
  const std::string first = serialize_instance(generate_instance(p));
  EXPECT_EQ(first, serialize_instance(generate_instance(p)));
  const Instance parsed = parse_instance(first);
  EXPECT_EQ(serialize_instance(parsed), first);
  EXPECT_NE(first, serialize_instance(generate_instance({4, 4, 0.5, 2})));
}

TEST(Generator, EveryAgentHasANeighbor) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Instance inst = generate_instance({5, 3, 0.1, seed});
    for (VertexId a = 0; a < inst.num_agents(); ++a) ASSERT_GT(inst.degree(a), 0);
  }
}

TEST(Generator, RejectsBadParameters) {
  EXPECT_THROW(generate_instance({0, 3, 0.5, 1}), std::invalid_argument);
  EXPECT_THROW(generate_instance({3, 0, 0.5, 1}), std::invalid_argument);
  EXPECT_THROW(generate_instance({3, 3, 0.0, 1}), std::invalid_argument);
  EXPECT_THROW(generate_instance({3, 3, 1.5, 1}), std::invalid_argument);
  EXPECT_THROW(generate_instance({3, 3, 1e-12, 1, 5}), std::invalid_argument);
}

TEST(Generator, ConstantDegreeFamily) {
  for (int edges : {10000, 20000}) {
    const Instance inst = generate_instance(constant_degree_params(edges, 8, 1));
    EXPECT_NEAR(inst.num_edges(), edges, edges * 0.05);
    EXPECT_NEAR(static_cast<double>(inst.num_edges()) / inst.num_agents(), 8.0, 0.5);
  }
}

TEST(Generator, SweepParamsStayInRange) {
  for (int i = 0; i < 300; ++i) {
    const GeneratorParams p = sweep_params(3, i);
    EXPECT_GE(p.agents, 1);
    EXPECT_LE(p.agents, 4);
    EXPECT_GE(p.jobs, 1);
    EXPECT_LE(p.jobs, 4);
    EXPECT_TRUE(p.density == 0.3 || p.density == 0.6 || p.density == 1.0);
  }
}

}  // namespace
}  // namespace fpm
