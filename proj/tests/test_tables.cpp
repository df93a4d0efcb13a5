#include <gtest/gtest.h>

#include <random>

#include "expsr/catalog.hpp"
#include "expsr/errors.hpp"
#include "expsr/tables.hpp"
#include "oracles.hpp"

using namespace expsr;

namespace {

RawSemiring boolean_raw() { return {"B", 2, 0, 1, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}}; }

RawSemiring zmod_raw(std::size_t n) {
  RawSemiring r{"Z/" + std::to_string(n), n, 0, 1, Table(n, std::vector<Index>(n)), Table(n, std::vector<Index>(n))};
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      r.add[a][b] = (a + b) % n;
      r.mul[a][b] = (a * b) % n;
    }
  return r;
}

bool has_axiom(const std::vector<Violation>& vs, const std::string& axiom) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.axiom == axiom; });
}

// Every semiring axiom evaluated literally over all tuples.
bool oracle_semiring(const RawSemiring& r) {
  const std::size_t n = r.size;
  if (r.zero == r.one) return false;
  for (Index a = 0; a < n; ++a) {
    if (r.add[r.zero][a] != a || r.add[a][r.zero] != a) return false;
    if (r.mul[r.one][a] != a || r.mul[a][r.one] != a) return false;
    if (r.mul[r.zero][a] != r.zero || r.mul[a][r.zero] != r.zero) return false;
    for (Index b = 0; b < n; ++b) {
      if (r.add[a][b] != r.add[b][a] || r.mul[a][b] != r.mul[b][a]) return false;
      for (Index c = 0; c < n; ++c) {
        if (r.add[r.add[a][b]][c] != r.add[a][r.add[b][c]]) return false;
        if (r.mul[r.mul[a][b]][c] != r.mul[a][r.mul[b][c]]) return false;
        if (r.mul[a][r.add[b][c]] != r.add[r.mul[a][b]][r.mul[a][c]]) return false;
        if (r.mul[r.add[a][b]][c] != r.add[r.mul[a][c]][r.mul[b][c]]) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST(Validator, AcceptsBooleanAndZmod4) {
  EXPECT_TRUE(check_semiring(boolean_raw()).empty());
  EXPECT_TRUE(check_semiring(zmod_raw(4)).empty());
  EXPECT_NO_THROW(validate_semiring(zmod_raw(4)));
}

TEST(Validator, BrokenAdditiveIdentityNamesTheAxiom) {
  RawSemiring r = boolean_raw();
  r.add = {{0, 0}, {0, 0}};  // 0 + 1 = 0
  auto vs = check_semiring(r);
  ASSERT_TRUE(has_axiom(vs, "additive-identity"));
  auto it = std::find_if(vs.begin(), vs.end(), [](const Violation& v) { return v.axiom == "additive-identity"; });
  EXPECT_EQ(it->witness, std::vector<Index>{1});
  try {
    validate_semiring(r);
    FAIL() << "expected AxiomViolation";
  } catch (const AxiomViolation& e) {
    EXPECT_EQ(e.violations(), vs);
  }
}

TEST(Validator, ReportsAllViolations) {
  RawSemiring r = zmod_raw(3);
  r.mul[1][2] = 0;  // breaks identity, commutativity and more at once
  auto vs = check_semiring(r);
  EXPECT_TRUE(has_axiom(vs, "multiplicative-identity"));
  EXPECT_TRUE(has_axiom(vs, "multiplicative-commutativity"));
  EXPECT_GT(vs.size(), 2u);
}

TEST(Validator, ShapeErrors) {
  RawSemiring tiny{"one", 1, 0, 0, {{0}}, {{0}}};
  EXPECT_THROW(check_semiring(tiny), SizeMismatch);
  RawSemiring ragged = boolean_raw();
  ragged.mul[1].push_back(0);
  EXPECT_THROW(check_semiring(ragged), SizeMismatch);
}

TEST(Validator, OutOfRangeEntriesAndDistinguishedElements) {
  RawSemiring r = boolean_raw();
  r.add[1][1] = 7;
  EXPECT_TRUE(has_axiom(check_semiring(r), "addition-table-range"));
  r = boolean_raw();
  r.one = 5;
  EXPECT_TRUE(has_axiom(check_semiring(r), "distinguished-element-range"));
  r = boolean_raw();
  r.one = 0;
  EXPECT_TRUE(has_axiom(check_semiring(r), "zero-distinct-from-one"));
}

TEST(Validator, ArbitraryZeroAndOneIndices) {
  // Boolean semiring with the labels swapped: zero is index 1, one is index 0.
  RawSemiring r{"B'", 2, 1, 0, {{0, 0}, {0, 1}}, {{0, 1}, {1, 1}}};
  auto s = validate_semiring(r);
  EXPECT_EQ(s.zero(), 1u);
  EXPECT_EQ(s.one(), 0u);
}

TEST(Validator, NoncommutativeTablesRejectedByDefault) {
  RawSemiring r = zmod_raw(4);
  r.mul[2][3] = 0;
  EXPECT_TRUE(has_axiom(check_semiring(r), "multiplicative-commutativity"));
}

// Differential: on random 3-element tables with fixed zero and one, the
// validator accepts exactly what the literal axiom oracle accepts.
TEST(ValidatorProperty, AgreesWithLiteralOracleOnRandomTables) {
  std::mt19937_64 rng(7);
  std::size_t accepted = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    RawSemiring r{"rand", 3, 0, 1, Table(3, std::vector<Index>(3)), Table(3, std::vector<Index>(3))};
    for (Index a = 0; a < 3; ++a)
      for (Index b = 0; b < 3; ++b) {
        r.add[a][b] = a == 0 ? b : b == 0 ? a : rng() % 3;
        r.mul[a][b] = a == 1 ? b : b == 1 ? a : (a == 0 || b == 0) ? 0 : rng() % 3;
      }
    // Bias towards commutative tables so acceptances actually occur.
    if (trial % 2 == 0)
      for (Index a = 0; a < 3; ++a)
        for (Index b = 0; b < a; ++b) {
          r.add[a][b] = r.add[b][a];
          r.mul[a][b] = r.mul[b][a];
        }
    const bool ok = check_semiring(r).empty();
    EXPECT_EQ(ok, oracle_semiring(r)) << "trial " << trial;
    accepted += ok;
  }
  EXPECT_GT(accepted, 0u);
}

TEST(Semimodule, RegularAndReduction) {
  auto z4 = builtin_semiring("zmod_4");
  EXPECT_NO_THROW(regular_module(z4));
  RawSemimodule red{"Z/2", "zmod_4", 2, 0, {{0, 1}, {1, 0}}, {{0, 0}, {0, 1}, {0, 0}, {0, 1}}};
  EXPECT_TRUE(check_semimodule(*z4, red).empty());
  // Oracle: s.x = (s mod 2) x mod 2 for all 8 products.
  for (Index s = 0; s < 4; ++s)
    for (Index x = 0; x < 2; ++x) EXPECT_EQ(red.action[s][x], (s % 2) * x % 2);
}

TEST(Semimodule, BrokenUnitality) {
  auto z4 = builtin_semiring("zmod_4");
  RawSemimodule bad{"bad", "zmod_4", 2, 0, {{0, 1}, {1, 0}}, {{0, 0}, {0, 0}, {0, 0}, {0, 0}}};
  auto vs = check_semimodule(*z4, bad);
  auto it = std::find_if(vs.begin(), vs.end(), [](const Violation& v) { return v.axiom == "action-unitality"; });
  ASSERT_NE(it, vs.end());
  EXPECT_EQ(it->witness, std::vector<Index>{1});
}

TEST(Semimodule, WrongBaseIsRejected) {
  auto z4 = builtin_semiring("zmod_4");
  RawSemimodule short_rows{"x", "", 2, 0, {{0, 1}, {1, 0}}, {{0, 0}, {0, 1}}};
  EXPECT_THROW(validate_semimodule(z4, short_rows), BaseMismatch);
  RawSemimodule named{"x", "boolean", 2, 0, {{0, 1}, {1, 0}}, {{0, 0}, {0, 1}, {0, 0}, {0, 1}}};
  EXPECT_THROW(validate_semimodule(z4, named), BaseMismatch);
}

TEST(Semimodule, ZeroModule) {
  auto b = builtin_semiring("boolean");
  auto z = zero_module(b);
  EXPECT_TRUE(z.is_zero_module());
  EXPECT_EQ(z.size(), 1u);
}

TEST(VSet, Examples) {
  EXPECT_EQ(oracle::to_set(v_set(*builtin_semiring("boolean"))), (oracle::Set{0}));
  EXPECT_EQ(oracle::to_set(v_set(*builtin_semiring("zmod_4"))), (oracle::Set{0, 1, 2, 3}));
  EXPECT_EQ(oracle::to_set(v_set(*builtin_semiring("trunc_nat_2"))), (oracle::Set{0}));
}

TEST(VSetProperty, ClosedAndDivisorClosedOnEveryBuiltin) {
  for (const auto& name : builtin_semiring_names()) {
    auto s = builtin_semiring(name);
    const Subset v = v_set(*s);
    for (Index x = 0; x < s->size(); ++x)
      for (Index y = 0; y < s->size(); ++y)
        EXPECT_EQ(v.contains(s->add(x, y)), v.contains(x) && v.contains(y)) << name;
  }
}

TEST(Commutativity, Examples) {
  EXPECT_TRUE(is_commutative_mul(*builtin_semiring("boolean")));
  EXPECT_TRUE(is_commutative_mul(*builtin_semiring("zmod_4")));

  EnumerationOptions opts;
  opts.require_commutative = false;
  std::size_t noncommutative = 0;
  for (const auto& e : enumerate_semirings(4, opts)) {
    const auto& s = **e.semiring();
    bool symmetric = true;
    for (Index a = 0; a < s.size(); ++a)
      for (Index b = 0; b < s.size(); ++b) symmetric = symmetric && s.mul(a, b) == s.mul(b, a);
    EXPECT_EQ(is_commutative_mul(s), symmetric);
    noncommutative += !symmetric;
  }
  EXPECT_GT(noncommutative, 0u);
}
