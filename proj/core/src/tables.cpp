#include "expsr/tables.hpp"

#include <sstream>

namespace expsr {

std::string to_string(const Violation& v) {
  std::ostringstream os;
  os << v.axiom << " (witness";
  for (Index w : v.witness) os << ' ' << w;
  os << ')';
  return os.str();
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::ostringstream os;
  os << violations.size() << " axiom violation(s)";
  if (!violations.empty()) os << ", first: " << to_string(violations.front());
  return os.str();
}

void require_square(const Table& t, std::size_t n, const char* what) {
  if (t.size() != n) throw SizeMismatch(std::string(what) + " table has wrong row count");
  for (const auto& row : t)
    if (row.size() != n) throw SizeMismatch(std::string(what) + " table has a ragged row");
}

// Collects violations, optionally stopping after the first one.
class Collector {
public:
  explicit Collector(bool first_only) : first_only_(first_only) {}

  void add(std::string axiom, std::vector<Index> witness) {
    out_.push_back({std::move(axiom), std::move(witness)});
  }
  bool done() const { return first_only_ && !out_.empty(); }
  std::vector<Violation> take() { return std::move(out_); }

private:
  bool first_only_;
  std::vector<Violation> out_;
};

bool in_range(const Table& t, std::size_t bound, const char* what, Collector& c) {
  bool ok = true;
  for (Index i = 0; i < t.size(); ++i)
    for (Index j = 0; j < t[i].size(); ++j)
      if (t[i][j] >= bound) {
        c.add(std::string(what) + "-table-range", {i, j});
        ok = false;
      }
  return ok;
}

// Commutative-monoid laws shared by semirings and semimodules.
void check_additive_monoid(const Table& add, Index zero, std::size_t n, Collector& c) {
  for (Index x = 0; x < n && !c.done(); ++x)
    if (add[zero][x] != x || add[x][zero] != x) c.add("additive-identity", {x});
  for (Index a = 0; a < n && !c.done(); ++a)
    for (Index b = a + 1; b < n && !c.done(); ++b)
      if (add[a][b] != add[b][a]) c.add("additive-commutativity", {a, b});
  for (Index a = 0; a < n && !c.done(); ++a)
    for (Index b = 0; b < n && !c.done(); ++b)
      for (Index d = 0; d < n && !c.done(); ++d)
        if (add[add[a][b]][d] != add[a][add[b][d]]) c.add("additive-associativity", {a, b, d});
}

}  // namespace

AxiomViolation::AxiomViolation(std::vector<Violation> violations)
    : Error(summarize(violations)), violations_(std::move(violations)) {}

Index FiniteSemiring::pow(Index a, std::size_t k) const {
  Index r = one_;
  for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

RawSemiring FiniteSemiring::raw() const {
  RawSemiring r{name_, n_, zero_, one_, Table(n_, std::vector<Index>(n_)),
                Table(n_, std::vector<Index>(n_))};
  for (Index a = 0; a < n_; ++a)
    for (Index b = 0; b < n_; ++b) {
      r.add[a][b] = add(a, b);
      r.mul[a][b] = mul(a, b);
    }
  return r;
}

bool FiniteSemiring::same_tables(const FiniteSemiring& other) const {
  return n_ == other.n_ && zero_ == other.zero_ && one_ == other.one_ && add_ == other.add_ &&
         mul_ == other.mul_;
}

RawSemimodule FiniteSemimodule::raw() const {
  RawSemimodule r{name_, base_->name(), m_, zero_, Table(m_, std::vector<Index>(m_)),
                  Table(base_->size(), std::vector<Index>(m_))};
  for (Index x = 0; x < m_; ++x)
    for (Index y = 0; y < m_; ++y) r.add[x][y] = add(x, y);
  for (Index s = 0; s < base_->size(); ++s)
    for (Index x = 0; x < m_; ++x) r.action[s][x] = act(s, x);
  return r;
}

std::vector<Violation> check_semiring(const RawSemiring& raw, const SemiringChecks& checks) {
  const std::size_t n = raw.size;
  if (n < 2) throw SizeMismatch("a semiring needs at least two elements (zero != one)");
  require_square(raw.add, n, "addition");
  require_square(raw.mul, n, "multiplication");

  Collector c(checks.first_only);
  if (raw.zero >= n || raw.one >= n) {
    c.add("distinguished-element-range", {raw.zero, raw.one});
    return c.take();
  }
  bool ranged = in_range(raw.add, n, "addition", c);
  ranged = in_range(raw.mul, n, "multiplication", c) && ranged;
  if (!ranged) return c.take();

  const auto& add = raw.add;
  const auto& mul = raw.mul;
  const Index zero = raw.zero;
  const Index one = raw.one;

  if (zero == one) c.add("zero-distinct-from-one", {zero, one});
  check_additive_monoid(add, zero, n, c);

  for (Index x = 0; x < n && !c.done(); ++x)
    if (mul[one][x] != x || mul[x][one] != x) c.add("multiplicative-identity", {x});
  for (Index a = 0; a < n && !c.done(); ++a)
    for (Index b = 0; b < n && !c.done(); ++b)
      for (Index d = 0; d < n && !c.done(); ++d)
        if (mul[mul[a][b]][d] != mul[a][mul[b][d]])
          c.add("multiplicative-associativity", {a, b, d});
  if (checks.require_commutative)
    for (Index a = 0; a < n && !c.done(); ++a)
      for (Index b = a + 1; b < n && !c.done(); ++b)
        if (mul[a][b] != mul[b][a]) c.add("multiplicative-commutativity", {a, b});

  for (Index a = 0; a < n && !c.done(); ++a)
    for (Index b = 0; b < n && !c.done(); ++b)
      for (Index d = 0; d < n && !c.done(); ++d) {
        if (mul[a][add[b][d]] != add[mul[a][b]][mul[a][d]])
          c.add("left-distributivity", {a, b, d});
        if (!c.done() && mul[add[b][d]][a] != add[mul[b][a]][mul[d][a]])
          c.add("right-distributivity", {a, b, d});
      }
  for (Index a = 0; a < n && !c.done(); ++a)
    if (mul[a][zero] != zero || mul[zero][a] != zero) c.add("zero-annihilation", {a});
  return c.take();
}

FiniteSemiring validate_semiring(const RawSemiring& raw, const SemiringChecks& checks) {
  auto violations = check_semiring(raw, checks);
  if (!violations.empty()) throw AxiomViolation(std::move(violations));

  FiniteSemiring s;
  s.name_ = raw.name;
  s.n_ = raw.size;
  s.zero_ = raw.zero;
  s.one_ = raw.one;
  s.add_.reserve(s.n_ * s.n_);
  s.mul_.reserve(s.n_ * s.n_);
  for (Index a = 0; a < s.n_; ++a)
    for (Index b = 0; b < s.n_; ++b) {
      s.add_.push_back(raw.add[a][b]);
      s.mul_.push_back(raw.mul[a][b]);
    }
  return s;
}

std::vector<Violation> check_semimodule(const FiniteSemiring& base, const RawSemimodule& raw,
                                        bool first_only) {
  const std::size_t m = raw.size;
  const std::size_t n = base.size();
  if (m < 1) throw SizeMismatch("a semimodule needs at least the zero element");
  if (!raw.base.empty() && !base.name().empty() && raw.base != base.name())
    throw BaseMismatch("semimodule declares base '" + raw.base + "' but was checked against '" +
                       base.name() + "'");
  if (raw.action.size() != n)
    throw BaseMismatch("action table needs one row per element of the base semiring");
  for (const auto& row : raw.action)
    if (row.size() != m) throw SizeMismatch("action table has a ragged row");
  require_square(raw.add, m, "addition");

  Collector c(first_only);
  if (raw.zero >= m) {
    c.add("distinguished-element-range", {raw.zero});
    return c.take();
  }
  bool ranged = in_range(raw.add, m, "addition", c);
  ranged = in_range(raw.action, m, "action", c) && ranged;
  if (!ranged) return c.take();

  const auto& add = raw.add;
  const auto& act = raw.action;
  const Index zero = raw.zero;
  check_additive_monoid(add, zero, m, c);

  for (Index s = 0; s < n && !c.done(); ++s)
    for (Index x = 0; x < m && !c.done(); ++x)
      for (Index y = 0; y < m && !c.done(); ++y)
        if (act[s][add[x][y]] != add[act[s][x]][act[s][y]])
          c.add("action-distributes-over-module-addition", {s, x, y});
  for (Index s = 0; s < n && !c.done(); ++s)
    for (Index t = 0; t < n && !c.done(); ++t)
      for (Index x = 0; x < m && !c.done(); ++x) {
        if (act[base.add(s, t)][x] != add[act[s][x]][act[t][x]])
          c.add("action-distributes-over-scalar-addition", {s, t, x});
        if (!c.done() && act[base.mul(s, t)][x] != act[s][act[t][x]])
          c.add("action-associativity", {s, t, x});
      }
  for (Index s = 0; s < n && !c.done(); ++s)
    if (act[s][zero] != zero) c.add("action-zero-vector", {s});
  for (Index x = 0; x < m && !c.done(); ++x)
    if (act[base.zero()][x] != zero) c.add("action-zero-scalar", {x});
  for (Index x = 0; x < m && !c.done(); ++x)
    if (act[base.one()][x] != x) c.add("action-unitality", {x});
  return c.take();
}

FiniteSemimodule validate_semimodule(SemiringPtr base, const RawSemimodule& raw, bool first_only) {
  if (!base) throw BaseMismatch("semimodule needs a base semiring");
  auto violations = check_semimodule(*base, raw, first_only);
  if (!violations.empty()) throw AxiomViolation(std::move(violations));

  FiniteSemimodule mod;
  mod.name_ = raw.name;
  mod.m_ = raw.size;
  mod.zero_ = raw.zero;
  mod.base_ = std::move(base);
  for (Index x = 0; x < mod.m_; ++x)
    for (Index y = 0; y < mod.m_; ++y) mod.add_.push_back(raw.add[x][y]);
  for (Index s = 0; s < mod.base_->size(); ++s)
    for (Index x = 0; x < mod.m_; ++x) mod.action_.push_back(raw.action[s][x]);
  return mod;
}

FiniteSemimodule regular_module(SemiringPtr s) {
  RawSemiring r = s->raw();
  RawSemimodule raw{r.name, r.name, r.size, r.zero, r.add, r.mul};
  return validate_semimodule(std::move(s), raw);
}

FiniteSemimodule zero_module(SemiringPtr s) {
  RawSemimodule raw{"zero", s->name(), 1, 0, Table{{0}},
                    Table(s->size(), std::vector<Index>{0})};
  return validate_semimodule(std::move(s), raw);
}

bool is_commutative_mul(const FiniteSemiring& s) {
  for (Index a = 0; a < s.size(); ++a)
    for (Index b = a + 1; b < s.size(); ++b)
      if (s.mul(a, b) != s.mul(b, a)) return false;
  return true;
}

}  // namespace expsr
