#include <gtest/gtest.h>

#include "expsr/catalog.hpp"
#include "expsr/errors.hpp"

using namespace expsr;

namespace {

// Counts commutative semirings on {0..n-1} with zero 0 and one 1 by filling
// every free table cell independently and testing all axioms literally.
std::size_t count_semirings_naively(std::size_t n) {
  std::vector<std::pair<Index, Index>> add_cells, mul_cells;
  for (Index a = 1; a < n; ++a)
    for (Index b = a; b < n; ++b) add_cells.emplace_back(a, b);
  for (Index a = 2; a < n; ++a)
    for (Index b = a; b < n; ++b) mul_cells.emplace_back(a, b);

  auto fill = [n](std::vector<std::vector<Index>>& t, const auto& cells, std::size_t code) {
    for (const auto& [a, b] : cells) {
      t[a][b] = t[b][a] = code % n;
      code /= n;
    }
  };
  auto ipow = [n](std::size_t k) {
    std::size_t r = 1;
    while (k--) r *= n;
    return r;
  };

  std::size_t count = 0;
  std::vector<std::vector<Index>> add(n, std::vector<Index>(n)), mul = add;
  for (Index a = 0; a < n; ++a) {
    add[0][a] = add[a][0] = a;
    mul[0][a] = mul[a][0] = 0;
    mul[1][a] = mul[a][1] = a;
  }
  mul[0][1] = mul[1][0] = 0;
  for (std::size_t ac = 0; ac < ipow(add_cells.size()); ++ac) {
    fill(add, add_cells, ac);
    bool ok = true;
    for (Index a = 0; a < n && ok; ++a)
      for (Index b = 0; b < n && ok; ++b)
        for (Index c = 0; c < n && ok; ++c) ok = add[add[a][b]][c] == add[a][add[b][c]];
    if (!ok) continue;
    for (std::size_t mc = 0; mc < ipow(mul_cells.size()); ++mc) {
      fill(mul, mul_cells, mc);
      bool good = true;
      for (Index a = 0; a < n && good; ++a)
        for (Index b = 0; b < n && good; ++b)
          for (Index c = 0; c < n && good; ++c)
            good = mul[mul[a][b]][c] == mul[a][mul[b][c]] &&
                   mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]];
      count += good;
    }
  }
  return count;
}

bool contains_up_to_iso(const std::vector<CatalogEntry>& list, const FiniteSemiring& s) {
  return std::any_of(list.begin(), list.end(),
                     [&](const CatalogEntry& e) { return are_isomorphic(**e.semiring(), s); });
}

}  // namespace

TEST(Builtins, Tables) {
  auto b = builtin_semiring("boolean");
  EXPECT_EQ(b->add(1, 1), 1u);
  auto n2 = builtin_semiring("trunc_nat_2");
  EXPECT_EQ(n2->size(), 3u);
  EXPECT_EQ(n2->add(1, 2), 2u);
  EXPECT_EQ(n2->mul(2, 2), 2u);
  auto d = builtin_semiring("diamond");
  EXPECT_EQ(d->add(1, 2), 3u);
  EXPECT_EQ(d->mul(1, 2), 0u);
  EXPECT_EQ(d->one(), 3u);
}

TEST(Builtins, ModulesValidate) {
  for (const auto& name : builtin_module_names()) EXPECT_NO_THROW(builtin_module(name)) << name;
  EXPECT_EQ(builtin_module("zmod_4/zmod_2")->size(), 2u);
}

TEST(Builtins, UnknownNames) {
  EXPECT_THROW(builtin_semiring("field_4"), UnknownName);
  EXPECT_THROW(builtin_semiring("nonsense"), UnknownName);
  EXPECT_THROW(builtin_module("zmod_4/zmod_3"), UnknownName);
  EXPECT_THROW(builtin_module("zmod_4/mystery"), UnknownName);
}

TEST(Enumeration, OrderTwoIsBooleanAndZ2) {
  auto list = enumerate_semirings(2);
  ASSERT_EQ(list.size(), 2u);
  EXPECT_TRUE(contains_up_to_iso(list, *builtin_semiring("boolean")));
  EXPECT_TRUE(contains_up_to_iso(list, *builtin_semiring("zmod_2")));
}

TEST(Enumeration, OrderThreeContainsBuiltins) {
  auto list = enumerate_semirings(3);
  EXPECT_FALSE(list.empty());
  for (const char* name : {"zmod_3", "chain_2", "trunc_nat_2"})
    EXPECT_TRUE(contains_up_to_iso(list, *builtin_semiring(name))) << name;
}

TEST(Enumeration, CountsMatchNaiveSearch) {
  for (std::size_t n : {2u, 3u, 4u}) EXPECT_EQ(enumerate_semirings(n).size(), count_semirings_naively(n)) << n;
}

TEST(Enumeration, DeterministicAndJobsIndependent) {
  auto a = enumerate_semirings(4);
  EnumerationOptions opts;
  opts.jobs = 3;
  auto b = enumerate_semirings(4, opts);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_TRUE((*a[i].semiring())->same_tables(**b[i].semiring()));
  }
}

TEST(Enumeration, DeduplicationAtOrderFour) {
  EnumerationOptions opts;
  opts.deduplicate = true;
  auto classes = enumerate_semirings(4, opts);
  auto all = enumerate_semirings(4);
  EXPECT_LT(classes.size(), all.size());
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      EXPECT_FALSE(are_isomorphic(**classes[i].semiring(), **classes[j].semiring()));
  for (const auto& e : all) EXPECT_TRUE(contains_up_to_iso(classes, **e.semiring()));
  for (const char* name : {"zmod_4", "diamond", "trunc_nat_3"})
    EXPECT_TRUE(contains_up_to_iso(classes, *builtin_semiring(name))) << name;
}

TEST(Enumeration, Limits) {
  EXPECT_THROW(enumerate_semirings(5), OrderTooLarge);
  EXPECT_THROW(enumerate_semirings(1), SizeMismatch);
}

TEST(ModuleEnumeration, Examples) {
  auto b = builtin_semiring("boolean");
  EXPECT_EQ(enumerate_semimodules(b, 1).size(), 1u);
  auto two = enumerate_semimodules(b, 2);
  auto self = regular_module(b);
  EXPECT_TRUE(std::any_of(two.begin(), two.end(), [&](const CatalogEntry& e) {
    auto m = *e.module();
    for (Index s = 0; s < 2; ++s)
      for (Index x = 0; x < 2; ++x)
        if (m->act(s, x) != self.act(s, x) || m->add(s, x) != self.add(s, x)) return false;
    return true;
  }));
  // Over B the semimodules are the join-semilattices with bottom; on three
  // labeled points with bottom 0 these are the two chains.
  EXPECT_EQ(enumerate_semimodules(b, 3).size(), 2u);

  auto z2 = builtin_semiring("zmod_2");
  auto z2mods = enumerate_semimodules(z2, 2);
  ASSERT_EQ(z2mods.size(), 1u);
  EXPECT_EQ((*z2mods[0].module())->add(1, 1), 0u);
  // Over Z/3 the additive monoid is a group of exponent 3.
  EXPECT_TRUE(enumerate_semimodules(builtin_semiring("zmod_3"), 2).empty());
}

TEST(DirectSum, SquareOfBoolean) {
  auto m = builtin_module("boolean/square");
  EXPECT_EQ(m->size(), 4u);
  auto self = regular_module(builtin_semiring("boolean"));
  auto sum = direct_sum(self, self);
  EXPECT_EQ(sum.size(), 4u);
}
