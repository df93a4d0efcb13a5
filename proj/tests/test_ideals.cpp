#include <gtest/gtest.h>

#include "expsr/catalog.hpp"
#include "expsr/ideals.hpp"
#include "oracles.hpp"

using namespace expsr;
using oracle::Set;
using oracle::to_set;

namespace {

std::vector<Set> as_sets(const std::vector<Subset>& v) {
  std::vector<Set> out;
  for (const auto& s : v) out.push_back(to_set(s));
  return out;
}

ExpectationInstance z4z4() {
  auto m = builtin_module("zmod_4/self");
  return build_expectation(m->base_ptr(), m);
}

}  // namespace

TEST(IdealClosure, Examples) {
  auto z4 = builtin_semiring("zmod_4");
  EXPECT_EQ(to_set(ideal_closure(*z4, Subset(4, {2}))), (Set{0, 2}));
  EXPECT_EQ(to_set(ideal_closure(*z4, Subset(4))), (Set{0}));
  auto b = builtin_semiring("boolean");
  EXPECT_EQ(to_set(ideal_closure(*b, Subset(2, {1}))), (Set{0, 1}));
}

TEST(EnumerateIdeals, Examples) {
  EXPECT_EQ(as_sets(enumerate_ideals(*builtin_semiring("boolean"))), (std::vector<Set>{{0}, {0, 1}}));
  EXPECT_EQ(as_sets(enumerate_ideals(*builtin_semiring("zmod_4"))),
            (std::vector<Set>{{0}, {0, 2}, {0, 1, 2, 3}}));
  EXPECT_EQ(as_sets(enumerate_ideals(*builtin_semiring("trunc_nat_2"))),
            (std::vector<Set>{{0}, {0, 2}, {0, 1, 2}}));
}

TEST(EnumerateIdealsProperty, StrategiesAgreeWithSubsetOracle) {
  for (const auto& name : builtin_module_names()) {
    auto m = builtin_module(name);
    auto e = build_expectation(m->base_ptr(), m);
    const auto& p = e.product();
    if (p.size() > 16) continue;
    auto scan = enumerate_ideals_by_subset_scan(p);
    auto gen = enumerate_ideals_by_generation(p);
    EXPECT_EQ(scan, gen) << name;
    auto want = oracle::ideals(oracle::Ring::of(p));
    std::sort(want.begin(), want.end(), [](const Set& a, const Set& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    EXPECT_EQ(as_sets(scan), want) << name;
  }
}

TEST(EnumerateIdeals, BoundIsEnforced) {
  EXPECT_THROW(enumerate_ideals(*builtin_semiring("zmod_6"), 5), CarrierTooLarge);
}

TEST(Subtractive, Examples) {
  auto z4 = builtin_semiring("zmod_4");
  auto n2 = builtin_semiring("trunc_nat_2");
  EXPECT_TRUE(is_subtractive(*z4, Subset(4, {0, 2})));
  EXPECT_FALSE(is_subtractive(*n2, Subset(3, {0, 2})));
  EXPECT_TRUE(is_subtractive(*n2, Subset::full(3)));
}

TEST(PrimeMaximalPrimary, Examples) {
  auto z4 = builtin_semiring("zmod_4");
  const Subset two(4, {0, 2}), zero(4, {0});
  EXPECT_TRUE(is_prime(*z4, two));
  EXPECT_TRUE(is_maximal(*z4, two));
  EXPECT_TRUE(is_primary(*z4, two));
  EXPECT_FALSE(is_prime(*z4, zero));
  EXPECT_TRUE(is_primary(*z4, zero));
  EXPECT_TRUE(is_prime(*builtin_semiring("boolean"), Subset(2, {0})));
  EXPECT_THROW(is_prime(*z4, Subset::full(4)), NotProper);
  EXPECT_THROW(is_primary(*z4, Subset::full(4)), NotProper);

  auto z6 = builtin_semiring("zmod_6");
  EXPECT_FALSE(is_primary(*z6, Subset(6, {0})));
  EXPECT_TRUE(is_maximal(*z6, Subset(6, {0, 2, 4})));
  EXPECT_TRUE(is_maximal(*z6, Subset(6, {0, 3})));
}

TEST(PrimeProperty, AgreesWithOracleOnProducts) {
  for (const auto& name : builtin_module_names()) {
    auto m = builtin_module(name);
    auto e = build_expectation(m->base_ptr(), m);
    const auto& p = e.product();
    if (p.size() > 16) continue;
    auto r = oracle::Ring::of(p);
    for (const auto& j : enumerate_ideals(p)) {
      if (j.is_full()) continue;
      EXPECT_EQ(is_prime(p, j), oracle::is_prime(r, to_set(j))) << name;
      EXPECT_EQ(is_subtractive(p, j), oracle::is_subtractive(r.add, to_set(j))) << name;
    }
  }
}

TEST(Radical, Examples) {
  EXPECT_EQ(to_set(radical(*builtin_semiring("zmod_4"), Subset(4, {0}))), (Set{0, 2}));
  EXPECT_EQ(to_set(radical(*builtin_semiring("boolean"), Subset(2, {0}))), (Set{0}));
  auto e = z4z4();
  const Subset zero(4, {0});
  const Subset got = radical(e.product(), e.box(zero, zero));
  EXPECT_EQ(got, e.box(Subset(4, {0, 2}), Subset::full(4)));
  // Oracle: every x with some power landing in {(0,0)}.
  auto r = oracle::Ring::of(e.product());
  EXPECT_EQ(to_set(got), oracle::nilpotents(r));
}

TEST(Residual, Examples) {
  auto m = builtin_module("zmod_4/self");
  EXPECT_EQ(to_set(residual(*m, Subset(4, {0}))), (Set{0}));
  EXPECT_EQ(to_set(residual(*m, Subset(4, {0, 2}))), (Set{0, 2}));
  EXPECT_TRUE(residual(*m, Subset::full(4)).is_full());
}

TEST(SubmoduleRadical, Examples) {
  auto m = builtin_module("zmod_4/self");
  EXPECT_EQ(to_set(submodule_radical(*m, Subset(4, {0}))), (Set{0, 2}));
  EXPECT_TRUE(submodule_radical(*m, Subset::full(4)).is_full());
  auto b = builtin_module("boolean/self");
  EXPECT_EQ(to_set(submodule_radical(*b, Subset(2, {0}))), (Set{0}));
}

TEST(PrimarySubmodule, Examples) {
  auto m = builtin_module("zmod_4/self");
  EXPECT_TRUE(is_primary_submodule(*m, Subset(4, {0})));
  EXPECT_TRUE(is_primary_submodule(*m, Subset(4, {0, 2})));
  EXPECT_THROW(is_primary_submodule(*m, Subset::full(4)), NotProper);
}

TEST(WeaklyPrime, Examples) {
  auto z4 = builtin_semiring("zmod_4");
  EXPECT_TRUE(is_weakly_prime(*z4, Subset(4, {0})));
  EXPECT_TRUE(is_weakly_prime(*z4, Subset(4, {0, 2})));
  EXPECT_TRUE(is_weakly_prime(*builtin_semiring("zmod_6"), Subset(6, {0})));
  auto e = z4z4();
  EXPECT_TRUE(is_weakly_prime(e.product(), e.box(Subset(4, {0, 2}), Subset::full(4))));
}

TEST(Annihilator, Examples) {
  EXPECT_EQ(to_set(annihilator(*builtin_module("zmod_4/self"))), (Set{0}));
  EXPECT_EQ(to_set(annihilator(*builtin_module("zmod_4/zmod_2"))), (Set{0, 2}));
  EXPECT_TRUE(annihilator(*builtin_module("zmod_4/zero")).is_full());
}

TEST(BoxIdeal, Examples) {
  auto e = z4z4();
  auto full = box_ideal(e, Subset(4, {0, 2}), Subset::full(4));
  ASSERT_TRUE(full.is_ideal());
  EXPECT_EQ(full.ideal->count(), 8u);

  auto bad = box_ideal(e, Subset(4, {0, 2}), Subset(4, {0}));
  EXPECT_FALSE(bad.is_ideal());
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_EQ(*bad.witness, (std::pair<Index, Index>{2, 1}));

  auto trivial = box_ideal(e, Subset(4, {0}), Subset(4, {0}));
  ASSERT_TRUE(trivial.is_ideal());
  EXPECT_EQ(to_set(*trivial.ideal), (Set{e.index(0, 0)}));
}

TEST(Projections, Examples) {
  auto e = z4z4();
  const Subset zero(4, {0}), full = Subset::full(4);
  auto p = ideal_projections(e, e.box(zero, full));
  EXPECT_EQ(p.ideal, zero);
  EXPECT_EQ(p.sub, full);

  const Subset j = ideal_closure(e.product(), Subset(16, {e.index(2, 0)}));
  auto q = ideal_projections(e, j);
  EXPECT_EQ(to_set(q.ideal), (Set{0, 2}));
  EXPECT_TRUE(j.subset_of(e.box(q.ideal, q.sub)));

  auto whole = ideal_projections(e, Subset::full(16));
  EXPECT_TRUE(whole.ideal.is_full());
  EXPECT_TRUE(whole.sub.is_full());
}

TEST(WeakGaussian, Examples) {
  EXPECT_TRUE(is_weak_gaussian(*builtin_semiring("zmod_4")));
  EXPECT_TRUE(is_weak_gaussian(*builtin_semiring("boolean")));
  EXPECT_FALSE(is_weak_gaussian(*builtin_semiring("trunc_nat_2")));
}

TEST(Subsemimodules, ZmodFourOverItself) {
  EXPECT_EQ(as_sets(enumerate_subsemimodules(*builtin_module("zmod_4/self"))),
            (std::vector<Set>{{0}, {0, 2}, {0, 1, 2, 3}}));
}
