#include <gtest/gtest.h>

#include "expsr/catalog.hpp"
#include "expsr/expectation.hpp"
#include "oracles.hpp"

using namespace expsr;

namespace {

ExpectationInstance make(const std::string& module) {
  auto m = builtin_module(module);
  return build_expectation(m->base_ptr(), m);
}

}  // namespace

TEST(Expectation, BooleanProductMultiplication) {
  auto e = make("boolean/self");
  EXPECT_EQ(e.product().size(), 4u);
  const Index x = e.index(1, 1);
  EXPECT_EQ(e.pair(e.product().mul(x, x)), (Pair{1, 1}));
}

TEST(Expectation, Zmod4Square) {
  auto e = make("zmod_4/self");
  const Index x = e.index(2, 1);
  EXPECT_EQ(e.pair(e.product().mul(x, x)), (Pair{0, 0}));
}

TEST(Expectation, PairingIsRowMajor) {
  auto e = make("zmod_4/zmod_2");
  for (Index s = 0; s < 4; ++s)
    for (Index m = 0; m < 2; ++m) {
      EXPECT_EQ(e.index(s, m), s * 2 + m);
      EXPECT_EQ(e.pair(e.index(s, m)), (Pair{s, m}));
    }
}

// Tables of every builtin product equal the ones computed straight from the
// defining formulas.
TEST(ExpectationProperty, TablesMatchFormulaOracle) {
  for (const auto& name : builtin_module_names()) {
    auto m = builtin_module(name);
    if (m->base().size() * m->size() > 36) continue;
    auto e = build_expectation(m->base_ptr(), m);
    auto want = oracle::product(oracle::Ring::of(m->base()), oracle::Module::of(*m));
    auto got = oracle::Ring::of(e.product());
    EXPECT_EQ(got.add, want.add) << name;
    EXPECT_EQ(got.mul, want.mul) << name;
    EXPECT_EQ(got.zero, want.zero) << name;
    EXPECT_EQ(got.one, want.one) << name;
  }
}

TEST(ExpectationProperty, ProductIsCommutativeAndNilpotencyHolds) {
  for (const auto& name : builtin_module_names()) {
    auto m = builtin_module(name);
    if (m->base().size() * m->size() > 36) continue;
    auto e = build_expectation(m->base_ptr(), m);
    EXPECT_TRUE(is_commutative_mul(e.product())) << name;
    EXPECT_TRUE(embedding_is_homomorphism(e)) << name;
    EXPECT_TRUE(matrix_iso_check(e)) << name;
    EXPECT_EQ(zero_m_ideal_nilpotency(e), m->is_zero_module() ? 1 : 2) << name;

    // (0, m)(0, n) = (0, 0) for all m, n.
    for (Index a = 0; a < m->size(); ++a)
      for (Index b = 0; b < m->size(); ++b)
        EXPECT_EQ(e.product().mul(e.index(m->base().zero(), a), e.index(m->base().zero(), b)),
                  e.product().zero());
  }
}

TEST(Expectation, NilpotencyExamples) {
  EXPECT_EQ(zero_m_ideal_nilpotency(make("boolean/self")), 2);
  EXPECT_EQ(zero_m_ideal_nilpotency(make("zmod_4/self")), 2);
  EXPECT_EQ(zero_m_ideal_nilpotency(make("boolean/zero")), 1);
}

TEST(Expectation, EmbeddingAndMatrixChecks) {
  EXPECT_TRUE(embedding_is_homomorphism(make("zmod_4/self")));
  EXPECT_TRUE(matrix_iso_check(make("boolean/self")));
  EXPECT_TRUE(matrix_iso_check(make("zmod_4/zmod_2")));
  auto e = make("zmod_4/self");
  for (Index s = 0; s < 4; ++s) EXPECT_EQ(e.pair(embed_s(e, s)), (Pair{s, 0}));
}

TEST(Expectation, GradedDecompositionOfBooleanSquare) {
  auto e = make("boolean/self");
  auto g = graded_decomposition(e);
  EXPECT_TRUE(g.verified);
  EXPECT_EQ(g.t0, e.box(Subset::full(2), Subset(2, {0})));
  EXPECT_EQ(g.t1, e.box(Subset(2, {0}), Subset::full(2)));
  EXPECT_EQ(oracle::to_set(g.t0), (oracle::Set{e.index(0, 0), e.index(1, 0)}));
  EXPECT_EQ(oracle::to_set(g.t1), (oracle::Set{e.index(0, 0), e.index(0, 1)}));
}

TEST(Expectation, IdealProductIsAdditivelyClosed) {
  auto s = builtin_semiring("zmod_6");
  Subset a(6, {0, 2, 4}), b(6, {0, 3});
  EXPECT_EQ(oracle::to_set(ideal_product(*s, a, b)), (oracle::Set{0}));
  Subset c(6, {0, 3});
  EXPECT_EQ(oracle::to_set(ideal_product(*s, c, c)), (oracle::Set{0, 3}));
}

TEST(Expectation, BaseMismatch) {
  auto m = builtin_module("zmod_4/self");
  EXPECT_THROW(build_expectation(builtin_semiring("boolean"), m), BaseMismatch);
  // A fresh copy of the same tables is accepted.
  EXPECT_NO_THROW(build_expectation(builtin_semiring("zmod_4"), m));
}
