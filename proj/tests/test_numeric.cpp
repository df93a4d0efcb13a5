#include <gtest/gtest.h>

#include <random>

#include "expsr/errors.hpp"
#include "expsr/numeric.hpp"
#include "expsr/verify.hpp"

using namespace expsr;

namespace {

WeightedDag graph(std::size_t dim, std::size_t nodes, std::vector<Edge> edges) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nodes; ++i) names.push_back("v" + std::to_string(i));
  return WeightedDag(dim, names, 0, nodes - 1, std::move(edges));
}

}  // namespace

TEST(NumericWeight, AddAndMultiply) {
  EXPECT_TRUE(approx_equal(NumericWeight{0.3, {0.3}} + NumericWeight{0.7, {1.4}}, NumericWeight{1.0, {1.7}}));
  EXPECT_TRUE(approx_equal(NumericWeight{0.5, {0.5}} * NumericWeight{0.4, {1.2}}, NumericWeight{0.2, {0.8}}));
  NumericWeight a{0.25, {1.0, -2.0}};
  EXPECT_TRUE(approx_equal(a + NumericWeight::zero(2), a));
  EXPECT_TRUE(approx_equal(a * NumericWeight::one(2), a));
  EXPECT_THROW(a + NumericWeight::zero(1), DimensionMismatch);
}

TEST(NumericWeight, Lift) {
  EXPECT_TRUE(approx_equal(lift_edge(0.3, {1.0}), NumericWeight{0.3, {0.3}}));
  EXPECT_TRUE(approx_equal(lift_edge(0.0, {5.0, 1.0}), NumericWeight::zero(2)));
  EXPECT_TRUE(approx_equal(lift_edge(1.0, {0.0, 0.0}), NumericWeight::one(2)));
  EXPECT_THROW(lift_edge(-1.0, {}), std::invalid_argument);
}

TEST(NumericProperty, SemiringLawsOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 500; ++k) {
    const std::size_t d = rng() % 4;
    auto a = random_weight(rng, d), b = random_weight(rng, d), c = random_weight(rng, d);
    EXPECT_TRUE(approx_equal((a + b) + c, a + (b + c)));
    EXPECT_TRUE(approx_equal(a * b, b * a));
    EXPECT_TRUE(approx_equal((a * b) * c, a * (b * c)));
    EXPECT_TRUE(approx_equal(a * (b + c), a * b + a * c));
    EXPECT_TRUE(approx_equal(a * NumericWeight::zero(d), NumericWeight::zero(d)));
  }
}

TEST(NumericProperty, PathProductFormula) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.5);
  for (int k = 0; k < 200; ++k) {
    const std::size_t len = 1 + rng() % 6, d = rng() % 3;
    NumericWeight prod = NumericWeight::one(d);
    double p = 1.0;
    std::vector<double> sum(d, 0.0);
    for (std::size_t i = 0; i < len; ++i) {
      double pi = u(rng);
      std::vector<double> v(d);
      for (auto& x : v) x = u(rng) - 0.75;
      prod = prod * lift_edge(pi, v);
      p *= pi;
      for (std::size_t j = 0; j < d; ++j) sum[j] += v[j];
    }
    for (auto& x : sum) x *= p;
    EXPECT_TRUE(approx_equal(prod, NumericWeight{p, sum}));
  }
}

TEST(ForwardTotal, FixedGraphs) {
  EXPECT_TRUE(approx_equal(forward_total(parallel_edges_graph()), NumericWeight{1.0, {1.7}}));
  EXPECT_TRUE(approx_equal(forward_total(chain_graph()), NumericWeight{0.2, {0.8}}));
  // Diamond: Z = (0.25 + 0.75)(0.6 + 0.4) and r summed over the four paths.
  auto g = diamond_graph();
  auto t = forward_total(g);
  EXPECT_TRUE(approx_equal(t, brute_force_total(g)));
  EXPECT_NEAR(t.p, 1.0, 1e-12);
}

TEST(ForwardTotal, ZeroDimensionIsPlainPathSum) {
  auto g = graph(0, 3, {{0, 1, 0.5, {}}, {1, 2, 0.5, {}}, {0, 2, 0.2, {}}});
  EXPECT_NEAR(forward_total(g).p, 0.45, 1e-12);
}

TEST(Expectation, Examples) {
  auto e = expectation(parallel_edges_graph());
  ASSERT_EQ(e.size(), 1u);
  EXPECT_NEAR(e[0], 1.7, 1e-12);
  auto single = graph(1, 3, {{0, 1, 0.01, {1.5}}, {1, 2, 0.3, {2.5}}});
  EXPECT_NEAR(expectation(single)[0], 4.0, 1e-12);
  auto dead = graph(1, 2, {{0, 1, 0.0, {1.0}}});
  EXPECT_THROW(expectation(dead), ZeroMass);
}

TEST(ExpectationProperty, ScalingInvariantWhenPathsHaveEqualLength) {
  for (double c : {0.5, 2.0, 7.0}) {
    auto g = diamond_graph();
    std::vector<Edge> scaled = g.edges();
    for (auto& e : scaled) e.p *= c;
    auto h = graph(g.dim(), g.node_count(), scaled);
    auto a = expectation(g), b = expectation(h);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-9);
  }
}

TEST(OracleProperty, RandomDagsAgree) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto g = random_dag(seed);
    ASSERT_LE(count_paths(g), 20u);
    ASSERT_LE(g.node_count(), 8u);
    ASSERT_LE(g.dim(), 3u);
    EXPECT_TRUE(approx_equal(forward_total(g), brute_force_total(g))) << "seed " << seed;
  }
}

TEST(Graph, IngestionErrors) {
  EXPECT_THROW(graph(1, 2, {{0, 1, 0.5, {1.0, 2.0}}}), DimensionMismatch);
  EXPECT_THROW(graph(0, 3, {{0, 1, 1, {}}, {1, 2, 1, {}}, {2, 1, 1, {}}}), InvalidGraph);
  EXPECT_THROW(graph(0, 4, {{0, 1, 1, {}}, {1, 2, 1, {}}, {2, 1, 1, {}}, {2, 3, 1, {}}}), CycleDetected);
  EXPECT_THROW(graph(0, 2, {{0, 1, -0.5, {}}}), InvalidGraph);
  EXPECT_THROW(graph(0, 2, {{0, 5, 0.5, {}}}), InvalidGraph);
}

TEST(Graph, TooManyPathsForOracle) {
  // Ten stages of two parallel edges: 1024 paths.
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 10; ++i) {
    edges.push_back({i, i + 1, 0.5, {}});
    edges.push_back({i, i + 1, 0.5, {}});
  }
  auto g = graph(0, 11, edges);
  EXPECT_EQ(count_paths(g), 1024u);
  EXPECT_THROW(brute_force_total(g), TooManyPaths);
  EXPECT_NEAR(brute_force_total(g, 2000).p, forward_total(g).p, 1e-12);
}
