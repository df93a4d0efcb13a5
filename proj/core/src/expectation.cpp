#include "expsr/expectation.hpp"

#include <algorithm>
#include <optional>

namespace expsr {

ExpectationInstance::ExpectationInstance(FiniteSemiring product, SemiringPtr s, ModulePtr m)
    : product_(std::make_shared<const FiniteSemiring>(std::move(product))),
      s_(std::move(s)),
      m_(std::move(m)) {
  pairs_.reserve(product_->size());
  for (Index a = 0; a < s_->size(); ++a)
    for (Index x = 0; x < m_->size(); ++x) pairs_.push_back({a, x});
}

Subset ExpectationInstance::box(const Subset& t, const Subset& n) const {
  Subset out(product_->size());
  for (Index a : t.members())
    for (Index x : n.members()) out.insert(index(a, x));
  return out;
}

ExpectationInstance build_expectation(SemiringPtr s, ModulePtr m) {
  if (!s || !m) throw BaseMismatch("expectation semiring needs both factors");
  if (!m->base().same_tables(*s))
    throw BaseMismatch("semimodule '" + m->name() + "' is not over semiring '" + s->name() + "'");

  const std::size_t ns = s->size();
  const std::size_t nm = m->size();
  const std::size_t n = ns * nm;
  auto at = [nm](Index a, Index x) { return a * nm + x; };

  RawSemiring raw;
  raw.name = s->name() + "(+)" + m->name();
  raw.size = n;
  raw.zero = at(s->zero(), m->zero());
  raw.one = at(s->one(), m->zero());
  raw.add.assign(n, std::vector<Index>(n));
  raw.mul.assign(n, std::vector<Index>(n));
  for (Index a1 = 0; a1 < ns; ++a1)
    for (Index x1 = 0; x1 < nm; ++x1)
      for (Index a2 = 0; a2 < ns; ++a2)
        for (Index x2 = 0; x2 < nm; ++x2) {
          const Index p = at(a1, x1);
          const Index q = at(a2, x2);
          raw.add[p][q] = at(s->add(a1, a2), m->add(x1, x2));
          raw.mul[p][q] = at(s->mul(a1, a2), m->add(m->act(a1, x2), m->act(a2, x1)));
        }
  // Commutativity is required only when S is commutative.
  SemiringChecks checks;
  checks.require_commutative = is_commutative_mul(*s);
  return ExpectationInstance(validate_semiring(raw, checks), std::move(s), std::move(m));
}

Index embed_s(const ExpectationInstance& e, Index s) { return e.index(s, e.factor_m().zero()); }

bool embedding_is_homomorphism(const ExpectationInstance& e) {
  const auto& s = e.factor_s();
  const auto& p = e.product();
  Subset image(p.size());
  for (Index a = 0; a < s.size(); ++a) {
    Index img = embed_s(e, a);
    if (image.contains(img)) return false;
    image.insert(img);
  }
  if (embed_s(e, s.zero()) != p.zero() || embed_s(e, s.one()) != p.one()) return false;
  for (Index a = 0; a < s.size(); ++a)
    for (Index b = 0; b < s.size(); ++b) {
      Index ea = embed_s(e, a), eb = embed_s(e, b);
      if (p.add(ea, eb) != embed_s(e, s.add(a, b))) return false;
      if (p.mul(ea, eb) != embed_s(e, s.mul(a, b))) return false;
      if (!image.contains(p.add(ea, eb)) || !image.contains(p.mul(ea, eb))) return false;
    }
  return true;
}

Subset ideal_product(const FiniteSemiring& s, const Subset& a, const Subset& b) {
  Subset products(s.size());
  for (Index x : a.members())
    for (Index y : b.members()) products.insert(s.mul(x, y));
  // Additive closure of the products, starting from the empty sum.
  Subset sums(s.size(), {s.zero()});
  bool grew = true;
  while (grew) {
    grew = false;
    for (Index x : sums.members())
      for (Index y : products.members()) {
        Index z = s.add(x, y);
        if (!sums.contains(z)) {
          sums.insert(z);
          grew = true;
        }
      }
  }
  return sums;
}

int zero_m_ideal_nilpotency(const ExpectationInstance& e) {
  const auto& p = e.product();
  const Subset zero_set(p.size(), {p.zero()});
  const Subset ideal = e.box(Subset(e.factor_s().size(), {e.factor_s().zero()}),
                             Subset::full(e.factor_m().size()));
  Subset power = ideal;
  for (int k = 1; k <= static_cast<int>(p.size()) + 1; ++k) {
    if (power == zero_set) return k;
    power = ideal_product(p, power, ideal);
  }
  return -1;  // not nilpotent; impossible for a valid instance
}

namespace {

// General upper-triangular record [[top, corner], [0, bottom]].
struct Record {
  Index top;
  Index corner;
  Index bottom;
  bool operator==(const Record&) const = default;
};

}  // namespace

bool matrix_iso_check(const ExpectationInstance& e) {
  const auto& s = e.factor_s();
  const auto& m = e.factor_m();

  // E: records with equal diagonal entries, enumerated corner-major so the
  // record numbering differs from the pair numbering of the product.
  std::vector<Record> records;
  for (Index x = 0; x < m.size(); ++x)
    for (Index a = 0; a < s.size(); ++a)
      for (Index d = 0; d < s.size(); ++d)
        if (a == d) records.push_back({a, x, d});

  auto find = [&](const Record& r) -> std::optional<Index> {
    auto it = std::find(records.begin(), records.end(), r);
    if (it == records.end()) return std::nullopt;
    return static_cast<Index>(it - records.begin());
  };
  auto radd = [&](const Record& u, const Record& v) {
    return Record{s.add(u.top, v.top), m.add(u.corner, v.corner), s.add(u.bottom, v.bottom)};
  };
  // [[a, x], [0, d]] [[a', x'], [0, d']] = [[a a', a x' + d' x], [0, d d']]
  auto rmul = [&](const Record& u, const Record& v) {
    return Record{s.mul(u.top, v.top), m.add(m.act(u.top, v.corner), m.act(v.bottom, u.corner)),
                  s.mul(u.bottom, v.bottom)};
  };

  const std::size_t n = records.size();
  if (n != e.product().size()) return false;
  RawSemiring raw;
  raw.name = "E";
  raw.size = n;
  raw.add.assign(n, std::vector<Index>(n));
  raw.mul.assign(n, std::vector<Index>(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      auto sum = find(radd(records[i], records[j]));
      auto prod = find(rmul(records[i], records[j]));
      if (!sum || !prod) return false;  // E not closed
      raw.add[i][j] = *sum;
      raw.mul[i][j] = *prod;
    }
  auto zero = find({s.zero(), m.zero(), s.zero()});
  auto one = find({s.one(), m.zero(), s.one()});
  if (!zero || !one) return false;
  raw.zero = *zero;
  raw.one = *one;
  SemiringChecks checks;
  checks.require_commutative = is_commutative_mul(s);
  if (!check_semiring(raw, checks).empty()) return false;

  // phi(s, m) = [[s, m], [0, s]]
  std::vector<Index> phi(e.product().size());
  Subset hit(n);
  for (Index p = 0; p < e.product().size(); ++p) {
    Pair c = e.pair(p);
    auto r = find({c.s, c.m, c.s});
    if (!r || hit.contains(*r)) return false;
    phi[p] = *r;
    hit.insert(*r);
  }
  const auto& prod = e.product();
  if (phi[prod.zero()] != raw.zero || phi[prod.one()] != raw.one) return false;
  for (Index p = 0; p < prod.size(); ++p)
    for (Index q = 0; q < prod.size(); ++q) {
      if (phi[prod.add(p, q)] != raw.add[phi[p]][phi[q]]) return false;
      if (phi[prod.mul(p, q)] != raw.mul[phi[p]][phi[q]]) return false;
    }
  return true;
}

GradedDecomposition graded_decomposition(const ExpectationInstance& e) {
  const auto& s = e.factor_s();
  const auto& m = e.factor_m();
  const auto& p = e.product();
  GradedDecomposition g{e.box(Subset::full(s.size()), Subset(m.size(), {m.zero()})),
                        e.box(Subset(s.size(), {s.zero()}), Subset::full(m.size())), false};

  // Every element is t0 + t1 for exactly one pair (t0, t1).
  for (Index x = 0; x < p.size(); ++x) {
    int ways = 0;
    for (Index a : g.t0.members())
      for (Index b : g.t1.members())
        if (p.add(a, b) == x) ++ways;
    if (ways != 1) return g;
  }
  const Subset t2(p.size(), {p.zero()});
  auto within = [&](const Subset& a, const Subset& b, const Subset& target) {
    for (Index x : a.members())
      for (Index y : b.members())
        if (!target.contains(p.mul(x, y))) return false;
    return true;
  };
  g.verified = within(g.t0, g.t0, g.t0) && within(g.t0, g.t1, g.t1) &&
               within(g.t1, g.t0, g.t1) && within(g.t1, g.t1, t2);
  return g;
}

}  // namespace expsr
