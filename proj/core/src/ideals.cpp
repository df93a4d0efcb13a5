#include "expsr/ideals.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace expsr {

namespace {

using Closure = std::function<Subset(const Subset&)>;
using Membership = std::function<bool(const Subset&)>;

std::vector<Subset> scan_subsets(std::size_t n, Index zero, const Membership& accept) {
  std::vector<Subset> out;
  const unsigned long long limit = 1ULL << n;
  for (unsigned long long mask = 0; mask < limit; ++mask) {
    if (!((mask >> zero) & 1ULL)) continue;
    Subset candidate = Subset::from_mask(n, mask);
    if (accept(candidate)) out.push_back(std::move(candidate));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Every finite closed set is reached from the least one by adding its
// elements one at a time and closing after each step.
std::vector<Subset> generate_closed_sets(std::size_t n, const Closure& close) {
  std::set<Subset> seen;
  std::deque<Subset> queue;
  Subset least = close(Subset(n));
  seen.insert(least);
  queue.push_back(least);
  while (!queue.empty()) {
    Subset current = std::move(queue.front());
    queue.pop_front();
    for (Index x = 0; x < n; ++x) {
      if (current.contains(x)) continue;
      Subset grown = current;
      grown.insert(x);
      Subset next = close(grown);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

template <typename AddFn, typename ScaleFn>
Subset close_under(std::size_t n, Index zero, std::size_t scalars, Subset gens, AddFn add,
                   ScaleFn scale) {
  Subset out = std::move(gens);
  if (out.carrier_size() != n) out = Subset(n);
  out.insert(zero);
  bool grew = true;
  while (grew) {
    grew = false;
    auto members = out.members();
    for (Index x : members) {
      for (Index y : members) {
        Index z = add(x, y);
        if (!out.contains(z)) {
          out.insert(z);
          grew = true;
        }
      }
      for (Index s = 0; s < scalars; ++s) {
        Index z = scale(s, x);
        if (!out.contains(z)) {
          out.insert(z);
          grew = true;
        }
      }
    }
  }
  return out;
}

void require_proper(const Subset& members) {
  if (members.is_full()) throw NotProper();
}

bool is_nilpotent_into(const FiniteSemiring& s, Index a, const Subset& ideal) {
  Index p = a;
  for (std::size_t k = 1; k <= s.size(); ++k) {
    if (ideal.contains(p)) return true;
    p = s.mul(p, a);
  }
  return false;
}

// s^k M within N for some 1 <= k <= |S|.
bool power_carries_into(const FiniteSemimodule& m, Index a, const Subset& sub) {
  const auto& s = m.base();
  Index p = a;
  for (std::size_t k = 1; k <= s.size(); ++k) {
    bool inside = true;
    for (Index x = 0; x < m.size() && inside; ++x) inside = sub.contains(m.act(p, x));
    if (inside) return true;
    p = s.mul(p, a);
  }
  return false;
}

}  // namespace

bool is_ideal(const FiniteSemiring& s, const Subset& members) {
  if (members.carrier_size() != s.size() || !members.contains(s.zero())) return false;
  for (Index a : members.members()) {
    for (Index b : members.members())
      if (!members.contains(s.add(a, b))) return false;
    for (Index r = 0; r < s.size(); ++r)
      if (!members.contains(s.mul(r, a))) return false;
  }
  return true;
}

bool is_subsemimodule(const FiniteSemimodule& m, const Subset& members) {
  if (members.carrier_size() != m.size() || !members.contains(m.zero())) return false;
  for (Index x : members.members()) {
    for (Index y : members.members())
      if (!members.contains(m.add(x, y))) return false;
    for (Index r = 0; r < m.base().size(); ++r)
      if (!members.contains(m.act(r, x))) return false;
  }
  return true;
}

Subset ideal_closure(const FiniteSemiring& s, const Subset& gens) {
  return close_under(
      s.size(), s.zero(), s.size(), gens, [&](Index a, Index b) { return s.add(a, b); },
      [&](Index r, Index a) { return s.mul(r, a); });
}

Subset subsemimodule_closure(const FiniteSemimodule& m, const Subset& gens) {
  return close_under(
      m.size(), m.zero(), m.base().size(), gens, [&](Index a, Index b) { return m.add(a, b); },
      [&](Index r, Index x) { return m.act(r, x); });
}

std::vector<Subset> enumerate_ideals_by_subset_scan(const FiniteSemiring& s) {
  if (s.size() > 62) throw CarrierTooLarge("subset scan needs a carrier below 63 elements");
  return scan_subsets(s.size(), s.zero(), [&](const Subset& c) { return is_ideal(s, c); });
}

std::vector<Subset> enumerate_ideals_by_generation(const FiniteSemiring& s) {
  return generate_closed_sets(s.size(), [&](const Subset& g) { return ideal_closure(s, g); });
}

std::vector<Subset> enumerate_ideals(const FiniteSemiring& s, std::size_t bound) {
  if (s.size() > bound)
    throw CarrierTooLarge("ideal enumeration bound is " + std::to_string(bound) + " elements");
  return s.size() <= kSubsetScanLimit ? enumerate_ideals_by_subset_scan(s)
                                      : enumerate_ideals_by_generation(s);
}

std::vector<Subset> enumerate_subsemimodules(const FiniteSemimodule& m, std::size_t bound) {
  if (m.size() > bound)
    throw CarrierTooLarge("subsemimodule enumeration bound is " + std::to_string(bound));
  if (m.size() <= kSubsetScanLimit)
    return scan_subsets(m.size(), m.zero(),
                        [&](const Subset& c) { return is_subsemimodule(m, c); });
  return generate_closed_sets(m.size(),
                              [&](const Subset& g) { return subsemimodule_closure(m, g); });
}

bool is_prime(const FiniteSemiring& s, const Subset& ideal) {
  require_proper(ideal);
  for (Index a = 0; a < s.size(); ++a) {
    if (ideal.contains(a)) continue;
    for (Index b = 0; b < s.size(); ++b)
      if (!ideal.contains(b) && ideal.contains(s.mul(a, b))) return false;
  }
  return true;
}

bool is_maximal(const FiniteSemiring& s, const Subset& ideal) {
  require_proper(ideal);
  // A proper ideal strictly above I contains some x outside I, hence the
  // closure of I + x.
  for (Index x = 0; x < s.size(); ++x) {
    if (ideal.contains(x)) continue;
    Subset grown = ideal;
    grown.insert(x);
    if (!ideal_closure(s, grown).is_full()) return false;
  }
  return true;
}

bool is_primary(const FiniteSemiring& s, const Subset& ideal) {
  require_proper(ideal);
  for (Index a = 0; a < s.size(); ++a) {
    if (ideal.contains(a)) continue;
    for (Index b = 0; b < s.size(); ++b)
      if (ideal.contains(s.mul(a, b)) && !is_nilpotent_into(s, b, ideal)) return false;
  }
  return true;
}

bool is_weakly_prime(const FiniteSemiring& s, const Subset& ideal) {
  require_proper(ideal);
  for (Index a = 0; a < s.size(); ++a) {
    if (ideal.contains(a)) continue;
    for (Index b = 0; b < s.size(); ++b) {
      if (ideal.contains(b)) continue;
      Index ab = s.mul(a, b);
      if (ab != s.zero() && ideal.contains(ab)) return false;
    }
  }
  return true;
}

Subset radical(const FiniteSemiring& s, const Subset& ideal) {
  Subset out(s.size());
  for (Index a = 0; a < s.size(); ++a)
    if (is_nilpotent_into(s, a, ideal)) out.insert(a);
  return out;
}

Subset residual(const FiniteSemimodule& m, const Subset& sub) {
  const auto& s = m.base();
  Subset out(s.size());
  for (Index a = 0; a < s.size(); ++a) {
    bool inside = true;
    for (Index x = 0; x < m.size() && inside; ++x) inside = sub.contains(m.act(a, x));
    if (inside) out.insert(a);
  }
  return out;
}

Subset submodule_radical(const FiniteSemimodule& m, const Subset& sub) {
  return radical(m.base(), residual(m, sub));
}

bool is_primary_submodule(const FiniteSemimodule& m, const Subset& sub) {
  require_proper(sub);
  const auto& s = m.base();
  for (Index x = 0; x < m.size(); ++x) {
    if (sub.contains(x)) continue;
    for (Index a = 0; a < s.size(); ++a)
      if (sub.contains(m.act(a, x)) && !power_carries_into(m, a, sub)) return false;
  }
  return true;
}

Subset annihilator(const FiniteSemimodule& m) {
  return residual(m, Subset(m.size(), {m.zero()}));
}

std::optional<std::pair<Index, Index>> box_condition_witness(const FiniteSemimodule& m,
                                                            const Subset& ideal,
                                                            const Subset& sub) {
  for (Index a : ideal.members())
    for (Index x = 0; x < m.size(); ++x)
      if (!sub.contains(m.act(a, x))) return std::pair{a, x};
  return std::nullopt;
}

BoxIdealResult box_ideal(const ExpectationInstance& e, const Subset& ideal, const Subset& sub) {
  BoxIdealResult r;
  r.witness = box_condition_witness(e.factor_m(), ideal, sub);
  if (!r.witness) r.ideal = e.box(ideal, sub);
  return r;
}

IdealProjections ideal_projections(const ExpectationInstance& e, const Subset& j) {
  IdealProjections out{Subset(e.factor_s().size()), Subset(e.factor_m().size())};
  for (Index p : j.members()) {
    Pair c = e.pair(p);
    out.ideal.insert(c.s);
    out.sub.insert(c.m);
  }
  return out;
}

bool is_graded_ideal(const ExpectationInstance& e, const Subset& j) {
  const auto& p = e.product();
  GradedDecomposition g = graded_decomposition(e);
  const Subset j0 = j & g.t0;
  const Subset j1 = j & g.t1;
  const Subset j2(p.size(), {p.zero()});
  // J is the internal direct sum of its homogeneous parts.
  Subset sums(p.size());
  for (Index a : j0.members())
    for (Index b : j1.members()) sums.insert(p.add(a, b));
  if (sums != j) return false;
  auto within = [&](const Subset& a, const Subset& b, const Subset& target) {
    for (Index x : a.members())
      for (Index y : b.members())
        if (!target.contains(p.mul(x, y))) return false;
    return true;
  };
  return within(g.t0, j0, j0) && within(g.t0, j1, j1) && within(g.t1, j0, j1) &&
         within(g.t1, j1, j2);
}

bool is_weak_gaussian(const FiniteSemiring& s) {
  for (const Subset& ideal : enumerate_ideals(s)) {
    if (ideal.is_full()) continue;
    if (is_prime(s, ideal) && !is_subtractive(s, ideal)) return false;
  }
  return true;
}

IdealProfile profile_ideal(const FiniteSemiring& s, const Subset& ideal) {
  IdealProfile p;
  p.members = ideal;
  p.proper = !ideal.is_full();
  p.subtractive = is_subtractive(s, ideal);
  if (p.proper) {
    p.prime = is_prime(s, ideal);
    p.maximal = is_maximal(s, ideal);
    p.primary = is_primary(s, ideal);
    p.weakly_prime = is_weakly_prime(s, ideal);
  }
  p.radical = radical(s, ideal);
  return p;
}

}  // namespace expsr
