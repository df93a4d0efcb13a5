#include "expsr/catalog.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <map>
#include <numeric>
#include <string_view>

namespace expsr {

namespace {

constexpr Index kUnknown = std::numeric_limits<Index>::max();

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

// Parses the integer suffix of "prefix<k>"; -1 when malformed.
long suffix_number(const std::string& name, std::string_view prefix) {
  if (!starts_with(name, prefix) || name.size() == prefix.size()) return -1;
  long v = 0;
  for (char c : name.substr(prefix.size())) {
    if (c < '0' || c > '9') return -1;
    v = v * 10 + (c - '0');
    if (v > 1000) return -1;
  }
  return v;
}

bool is_prime_number(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

template <typename AddFn, typename MulFn>
RawSemiring tabulate(std::string name, std::size_t n, Index zero, Index one, AddFn add, MulFn mul) {
  RawSemiring r{std::move(name), n, zero, one, Table(n, std::vector<Index>(n)),
                Table(n, std::vector<Index>(n))};
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      r.add[a][b] = add(a, b);
      r.mul[a][b] = mul(a, b);
    }
  return r;
}

RawSemiring diamond_tables() {
  // 0 = bottom, 1 = a, 2 = b, 3 = top; join is +, meet is .
  const Index join[4][4] = {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}};
  const Index meet[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}};
  return tabulate("diamond", 4, 0, 3, [&](Index a, Index b) { return join[a][b]; },
                  [&](Index a, Index b) { return meet[a][b]; });
}

// True when every associativity instance whose entries are all known holds.
bool associative_so_far(const Table& t) {
  const std::size_t n = t.size();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      Index ab = t[a][b];
      if (ab == kUnknown) continue;
      for (Index c = 0; c < n; ++c) {
        Index bc = t[b][c];
        if (bc == kUnknown) continue;
        Index l = t[ab][c];
        Index r = t[a][bc];
        if (l != kUnknown && r != kUnknown && l != r) return false;
      }
    }
  return true;
}

bool distributive_so_far(const Table& add, const Table& mul) {
  const std::size_t n = add.size();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) {
        Index l = mul[a][add[b][c]];
        Index ab = mul[a][b];
        Index ac = mul[a][c];
        if (l != kUnknown && ab != kUnknown && ac != kUnknown && l != add[ab][ac]) return false;
        Index r = mul[add[b][c]][a];
        Index ba = mul[b][a];
        Index ca = mul[c][a];
        if (r != kUnknown && ba != kUnknown && ca != kUnknown && r != add[ba][ca]) return false;
      }
  return true;
}

// Commutative monoid tables on {0..n-1} with identity 0, in lexicographic
// order of the free upper-triangle entries.
std::vector<Table> commutative_monoid_tables(std::size_t n) {
  Table t(n, std::vector<Index>(n, kUnknown));
  for (Index x = 0; x < n; ++x) t[0][x] = t[x][0] = x;
  std::vector<std::pair<Index, Index>> cells;
  for (Index a = 1; a < n; ++a)
    for (Index b = a; b < n; ++b) cells.emplace_back(a, b);

  std::vector<Table> out;
  auto fill = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      out.push_back(t);
      return;
    }
    auto [a, b] = cells[k];
    for (Index v = 0; v < n; ++v) {
      t[a][b] = t[b][a] = v;
      if (associative_so_far(t)) self(self, k + 1);
    }
    t[a][b] = t[b][a] = kUnknown;
  };
  fill(fill, 0);
  return out;
}

// Multiplication tables compatible with a fixed addition (zero = 0, one = 1).
std::vector<RawSemiring> semirings_over_addition(const Table& add, bool commutative) {
  const std::size_t n = add.size();
  Table mul(n, std::vector<Index>(n, kUnknown));
  for (Index x = 0; x < n; ++x) {
    mul[0][x] = mul[x][0] = 0;
    mul[1][x] = mul[x][1] = x;
  }
  std::vector<std::pair<Index, Index>> cells;
  for (Index a = 2; a < n; ++a)
    for (Index b = commutative ? a : 2; b < n; ++b) cells.emplace_back(a, b);

  std::vector<RawSemiring> out;
  SemiringChecks checks;
  checks.require_commutative = commutative;
  checks.first_only = true;
  auto fill = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      RawSemiring raw{"", n, 0, 1, add, mul};
      // The validator has the final word; pruning only skips dead branches.
      if (check_semiring(raw, checks).empty()) out.push_back(std::move(raw));
      return;
    }
    auto [a, b] = cells[k];
    for (Index v = 0; v < n; ++v) {
      mul[a][b] = v;
      if (commutative) mul[b][a] = v;
      if (associative_so_far(mul) && distributive_so_far(add, mul)) self(self, k + 1);
    }
    mul[a][b] = kUnknown;
    if (commutative) mul[b][a] = kUnknown;
  };
  fill(fill, 0);
  return out;
}

bool isomorphic_under(const FiniteSemiring& a, const FiniteSemiring& b,
                      const std::vector<Index>& perm) {
  if (perm[a.zero()] != b.zero() || perm[a.one()] != b.one()) return false;
  for (Index x = 0; x < a.size(); ++x)
    for (Index y = 0; y < a.size(); ++y)
      if (perm[a.add(x, y)] != b.add(perm[x], perm[y]) ||
          perm[a.mul(x, y)] != b.mul(perm[x], perm[y]))
        return false;
  return true;
}

}  // namespace

SemiringPtr builtin_semiring(const std::string& name) {
  RawSemiring raw;
  if (name == "boolean") {
    raw = tabulate(name, 2, 0, 1, [](Index a, Index b) { return a | b; },
                   [](Index a, Index b) { return a & b; });
  } else if (name == "diamond") {
    raw = diamond_tables();
  } else if (long k = suffix_number(name, "chain_"); k >= 1) {
    raw = tabulate(name, static_cast<std::size_t>(k) + 1, 0, static_cast<Index>(k),
                   [](Index a, Index b) { return std::max(a, b); },
                   [](Index a, Index b) { return std::min(a, b); });
  } else if (long k = suffix_number(name, "trunc_nat_"); k >= 1) {
    const auto top = static_cast<Index>(k);
    raw = tabulate(name, top + 1, 0, 1, [top](Index a, Index b) { return std::min(a + b, top); },
                   [top](Index a, Index b) { return std::min(a * b, top); });
  } else if (long n = suffix_number(name, "zmod_"); n >= 2) {
    const auto mod = static_cast<Index>(n);
    raw = tabulate(name, mod, 0, 1, [mod](Index a, Index b) { return (a + b) % mod; },
                   [mod](Index a, Index b) { return (a * b) % mod; });
  } else if (long p = suffix_number(name, "field_"); is_prime_number(p)) {
    const auto mod = static_cast<Index>(p);
    raw = tabulate(name, mod, 0, 1, [mod](Index a, Index b) { return (a + b) % mod; },
                   [mod](Index a, Index b) { return (a * b) % mod; });
  } else {
    throw UnknownName("unknown builtin semiring '" + name + "'");
  }
  return std::make_shared<const FiniteSemiring>(validate_semiring(raw));
}

FiniteSemimodule direct_sum(const FiniteSemimodule& a, const FiniteSemimodule& b) {
  if (!a.base().same_tables(b.base())) throw BaseMismatch("direct sum needs a common base");
  const std::size_t ma = a.size(), mb = b.size(), m = ma * mb;
  RawSemimodule raw;
  raw.name = a.name() + "x" + b.name();
  raw.base = a.base().name();
  raw.size = m;
  raw.zero = a.zero() * mb + b.zero();
  raw.add.assign(m, std::vector<Index>(m));
  raw.action.assign(a.base().size(), std::vector<Index>(m));
  for (Index x = 0; x < m; ++x) {
    for (Index y = 0; y < m; ++y)
      raw.add[x][y] = a.add(x / mb, y / mb) * mb + b.add(x % mb, y % mb);
    for (Index s = 0; s < a.base().size(); ++s)
      raw.action[s][x] = a.act(s, x / mb) * mb + b.act(s, x % mb);
  }
  return validate_semimodule(a.base_ptr(), raw);
}

ModulePtr builtin_module(const std::string& name) {
  const auto slash = name.find('/');
  if (slash == std::string::npos) throw UnknownName("module names look like '<semiring>/<kind>'");
  const std::string base_name = name.substr(0, slash);
  const std::string kind = name.substr(slash + 1);
  SemiringPtr s = builtin_semiring(base_name);

  FiniteSemimodule m = [&]() -> FiniteSemimodule {
    if (kind == "self") return regular_module(s);
    if (kind == "zero") return zero_module(s);
    if (kind == "square") {
      auto self = regular_module(s);
      return direct_sum(self, self);
    }
    long d = suffix_number(kind, "zmod_");
    long n = suffix_number(base_name, "zmod_");
    if (d >= 2 && n >= 2 && n % d == 0) {
      const auto md = static_cast<Index>(d);
      RawSemimodule raw;
      raw.base = base_name;
      raw.size = md;
      raw.zero = 0;
      raw.add.assign(md, std::vector<Index>(md));
      raw.action.assign(s->size(), std::vector<Index>(md));
      for (Index x = 0; x < md; ++x) {
        for (Index y = 0; y < md; ++y) raw.add[x][y] = (x + y) % md;
        for (Index r = 0; r < s->size(); ++r) raw.action[r][x] = (r * x) % md;
      }
      return validate_semimodule(s, raw);
    }
    throw UnknownName("unknown builtin module '" + name + "'");
  }();
  m.rename(name);
  return std::make_shared<const FiniteSemimodule>(std::move(m));
}

CatalogEntry builtin(const std::string& name) {
  if (name.find('/') != std::string::npos) return {name, builtin_module(name), Provenance::builtin};
  return {name, builtin_semiring(name), Provenance::builtin};
}

std::vector<std::string> builtin_semiring_names() {
  return {"boolean", "chain_2", "trunc_nat_2", "trunc_nat_3", "zmod_2",  "zmod_3", "zmod_4",
          "zmod_5",  "zmod_6",  "field_2",     "field_3",     "diamond"};
}

std::vector<std::string> builtin_module_names() {
  std::vector<std::string> out;
  for (const auto& s : builtin_semiring_names()) {
    out.push_back(s + "/zero");
    out.push_back(s + "/self");
    if (s == "boolean" || s == "zmod_2" || s == "field_2") out.push_back(s + "/square");
  }
  out.push_back("zmod_4/zmod_2");
  out.push_back("zmod_6/zmod_2");
  out.push_back("zmod_6/zmod_3");
  return out;
}

std::vector<CatalogEntry> enumerate_semirings(std::size_t order, const EnumerationOptions& options) {
  if (order > kMaxEnumerationOrder)
    throw OrderTooLarge("semiring enumeration is limited to order " +
                        std::to_string(kMaxEnumerationOrder));
  if (order < 2) throw SizeMismatch("semirings have at least two elements");

  const auto additions = commutative_monoid_tables(order);

  // Partition the addition tables by their first free row (row of element 1).
  std::map<std::vector<Index>, std::vector<const Table*>> partitions;
  for (const auto& t : additions) partitions[t[1]].push_back(&t);

  auto run = [&](const std::vector<const Table*>& tables) {
    std::vector<RawSemiring> found;
    for (const Table* t : tables) {
      auto part = semirings_over_addition(*t, options.require_commutative);
      std::move(part.begin(), part.end(), std::back_inserter(found));
    }
    return found;
  };

  std::vector<std::vector<RawSemiring>> results;
  if (options.jobs > 1) {
    std::vector<std::future<std::vector<RawSemiring>>> futures;
    for (const auto& [row, tables] : partitions)
      futures.push_back(std::async(std::launch::async, run, std::cref(tables)));
    for (auto& f : futures) results.push_back(f.get());
  } else {
    for (const auto& [row, tables] : partitions) results.push_back(run(tables));
  }

  std::vector<CatalogEntry> out;
  std::vector<SemiringPtr> kept;
  SemiringChecks checks;
  checks.require_commutative = options.require_commutative;
  for (auto& group : results)
    for (auto& raw : group) {
      raw.name = "sr" + std::to_string(order) + "_" + std::to_string(out.size());
      auto s = std::make_shared<const FiniteSemiring>(validate_semiring(raw, checks));
      if (options.deduplicate && order == kMaxEnumerationOrder &&
          std::any_of(kept.begin(), kept.end(),
                      [&](const SemiringPtr& k) { return are_isomorphic(*k, *s); }))
        continue;
      kept.push_back(s);
      out.push_back({s->name(), s, Provenance::enumerated});
    }
  return out;
}

std::vector<CatalogEntry> enumerate_semimodules(const SemiringPtr& s, std::size_t order) {
  if (order > kMaxEnumerationOrder)
    throw OrderTooLarge("semimodule enumeration is limited to order " +
                        std::to_string(kMaxEnumerationOrder));
  if (order < 1) throw SizeMismatch("a semimodule has at least the zero element");

  const std::size_t n = s->size();
  std::vector<Index> free_scalars;
  for (Index r = 0; r < n; ++r)
    if (r != s->zero() && r != s->one()) free_scalars.push_back(r);

  std::vector<CatalogEntry> out;
  for (const Table& add : commutative_monoid_tables(order)) {
    Table action(n, std::vector<Index>(order, kUnknown));
    for (Index x = 0; x < order; ++x) {
      action[s->zero()][x] = 0;
      action[s->one()][x] = x;
    }
    for (Index r : free_scalars) action[r][0] = 0;

    std::vector<std::pair<Index, Index>> cells;
    for (Index r : free_scalars)
      for (Index x = 1; x < order; ++x) cells.emplace_back(r, x);

    // Each completed row must be an additive endomorphism.
    auto row_ok = [&](Index r) {
      for (Index x = 0; x < order; ++x)
        for (Index y = 0; y < order; ++y)
          if (action[r][add[x][y]] != add[action[r][x]][action[r][y]]) return false;
      return true;
    };
    auto fill = [&](auto&& self, std::size_t k) -> void {
      if (k == cells.size()) {
        RawSemimodule raw{"", s->name(), order, 0, add, action};
        if (check_semimodule(*s, raw, true).empty()) {
          raw.name = "mod" + std::to_string(order) + "_" + std::to_string(out.size()) + "@" +
                     s->name();
          auto m = std::make_shared<const FiniteSemimodule>(validate_semimodule(s, raw));
          out.push_back({raw.name, m, Provenance::enumerated});
        }
        return;
      }
      auto [r, x] = cells[k];
      for (Index v = 0; v < order; ++v) {
        action[r][x] = v;
        if (x + 1 < order || row_ok(r)) self(self, k + 1);
      }
      action[r][x] = kUnknown;
    };
    fill(fill, 0);
  }
  return out;
}

bool are_isomorphic(const FiniteSemiring& a, const FiniteSemiring& b) {
  if (a.size() != b.size()) return false;
  std::vector<Index> perm(a.size());
  std::iota(perm.begin(), perm.end(), Index{0});
  do {
    if (isomorphic_under(a, b, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace expsr
