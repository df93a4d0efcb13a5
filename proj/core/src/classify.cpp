#include "expsr/classify.hpp"

#include "expsr/ideals.hpp"

namespace expsr {

namespace {

// m ~ n implies m = u n for a unit u, over an arbitrary scalar action.
template <typename Act>
bool strongly_associate_over(std::size_t scalars, std::size_t elements, Act act,
                             const Subset& unit_set) {
  std::vector<Subset> cyc;
  cyc.reserve(elements);
  for (Index x = 0; x < elements; ++x) {
    Subset c(elements);
    for (Index r = 0; r < scalars; ++r) c.insert(act(r, x));
    cyc.push_back(std::move(c));
  }
  for (Index x = 0; x < elements; ++x)
    for (Index y = 0; y < elements; ++y) {
      if (cyc[x] != cyc[y]) continue;
      bool strong = false;
      for (Index u : unit_set.members())
        if (act(u, y) == x) {
          strong = true;
          break;
        }
      if (!strong) return false;
    }
  return true;
}

bool decomposes(const FiniteSemiring& s, Index x, const Subset& left, const Subset& idem) {
  for (Index t : left.members())
    for (Index e : idem.members())
      if (s.add(t, e) == x) return true;
  return false;
}

}  // namespace

Subset units(const FiniteSemiring& s) {
  Subset out(s.size());
  for (Index a = 0; a < s.size(); ++a)
    for (Index b = 0; b < s.size(); ++b)
      if (s.mul(a, b) == s.one()) {
        out.insert(a);
        break;
      }
  return out;
}

Subset idempotents(const FiniteSemiring& s) {
  Subset out(s.size());
  for (Index a = 0; a < s.size(); ++a)
    if (s.mul(a, a) == a) out.insert(a);
  return out;
}

Subset nilpotents(const FiniteSemiring& s) {
  return radical(s, Subset(s.size(), {s.zero()}));
}

Subset zero_divisors(const FiniteSemiring& s) {
  Subset out(s.size());
  for (Index a = 0; a < s.size(); ++a)
    for (Index t = 0; t < s.size(); ++t)
      if (t != s.zero() && s.mul(a, t) == s.zero()) {
        out.insert(a);
        break;
      }
  return out;
}

Subset zero_divisors_mod(const FiniteSemimodule& m) {
  if (m.is_zero_module()) throw EmptyModule();
  const auto& s = m.base();
  Subset out(s.size());
  for (Index a = 0; a < s.size(); ++a)
    for (Index x = 0; x < m.size(); ++x)
      if (x != m.zero() && m.act(a, x) == m.zero()) {
        out.insert(a);
        break;
      }
  return out;
}

Subset zero_divisors_with_module(const FiniteSemimodule& m) {
  Subset z = zero_divisors(m.base());
  if (!m.is_zero_module()) z = z | zero_divisors_mod(m);
  return z;
}

bool is_local(const FiniteSemiring& s) { return is_ideal(s, units(s).complement()); }

bool is_semifield(const FiniteSemiring& s) {
  Subset u = units(s);
  for (Index a = 0; a < s.size(); ++a)
    if (a != s.zero() && !u.contains(a)) return false;
  return true;
}

bool is_presimplifiable(const FiniteSemiring& s) {
  Subset u = units(s);
  for (Index a = 0; a < s.size(); ++a) {
    if (u.contains(a)) continue;
    for (Index t = 0; t < s.size(); ++t)
      if (t != s.zero() && s.mul(a, t) == t) return false;
  }
  return true;
}

bool is_presimplifiable_mod(const FiniteSemimodule& m) {
  Subset u = units(m.base());
  for (Index a = 0; a < m.base().size(); ++a) {
    if (u.contains(a)) continue;
    for (Index x = 0; x < m.size(); ++x)
      if (x != m.zero() && m.act(a, x) == x) return false;
  }
  return true;
}

Subset cyclic(const FiniteSemimodule& m, Index x) {
  Subset out(m.size());
  for (Index r = 0; r < m.base().size(); ++r) out.insert(m.act(r, x));
  return out;
}

Subset cyclic(const FiniteSemiring& s, Index x) {
  Subset out(s.size());
  for (Index r = 0; r < s.size(); ++r) out.insert(s.mul(r, x));
  return out;
}

bool associates(const FiniteSemimodule& m, Index x, Index y) { return cyclic(m, x) == cyclic(m, y); }
bool associates(const FiniteSemiring& s, Index x, Index y) { return cyclic(s, x) == cyclic(s, y); }

bool strong_associates(const FiniteSemimodule& m, Index x, Index y) {
  for (Index u : units(m.base()).members())
    if (m.act(u, y) == x) return true;
  return false;
}

bool strong_associates(const FiniteSemiring& s, Index x, Index y) {
  for (Index u : units(s).members())
    if (s.mul(u, y) == x) return true;
  return false;
}

bool is_strongly_associate(const FiniteSemiring& s) {
  return strongly_associate_over(
      s.size(), s.size(), [&](Index r, Index x) { return s.mul(r, x); }, units(s));
}

bool is_strongly_associate_mod(const FiniteSemimodule& m) {
  return strongly_associate_over(
      m.base().size(), m.size(), [&](Index r, Index x) { return m.act(r, x); }, units(m.base()));
}

bool is_strongly_associate(const ExpectationInstance& e) {
  const auto& p = e.product();
  const Subset unit_set = e.box(units(e.factor_s()), v_set(e.factor_m()));
  return strongly_associate_over(
      p.size(), p.size(), [&](Index r, Index x) { return p.mul(r, x); }, unit_set);
}

bool is_domainlike(const FiniteSemiring& s) { return zero_divisors(s).subset_of(nilpotents(s)); }

bool is_domainlike_mod(const FiniteSemimodule& m) {
  if (m.is_zero_module()) return true;
  return zero_divisors_mod(m).subset_of(nilpotents(m.base()));
}

bool is_clean(const FiniteSemiring& s) {
  const Subset u = units(s);
  const Subset idem = idempotents(s);
  for (Index x = 0; x < s.size(); ++x)
    if (!decomposes(s, x, u, idem)) return false;
  return true;
}

bool is_almost_clean(const FiniteSemiring& s) {
  const Subset regular = zero_divisors(s).complement();
  const Subset idem = idempotents(s);
  for (Index x = 0; x < s.size(); ++x)
    if (!decomposes(s, x, regular, idem)) return false;
  return true;
}

bool almost_clean_criterion(const FiniteSemimodule& m) {
  const auto& s = m.base();
  const Subset regular = zero_divisors_with_module(m).complement();
  const Subset idem = idempotents(s);
  for (Index x = 0; x < s.size(); ++x)
    if (!decomposes(s, x, regular, idem)) return false;
  return true;
}

bool is_weakly_clean(const FiniteSemiring& s) {
  const Subset u = units(s);
  const Subset idem = idempotents(s);
  for (Index x = 0; x < s.size(); ++x) {
    bool ok = false;
    for (Index a : u.members()) {
      for (Index e : idem.members())
        if (s.add(a, e) == x || s.add(x, e) == a) {
          ok = true;
          break;
        }
      if (ok) break;
    }
    if (!ok) return false;
  }
  return true;
}

bool is_weakly_clean_literal(const FiniteSemiring& s) {
  const Subset u = units(s);
  const Subset idem = idempotents(s);
  bool second_clause = false;
  for (Index a : u.members())
    for (Index e : idem.members())
      if (s.add(a, e) == a) second_clause = true;
  if (second_clause) return true;
  for (Index x = 0; x < s.size(); ++x)
    if (!decomposes(s, x, u, idem)) return false;
  return true;
}

namespace {

ClassReport base_report(const FiniteSemiring& s) {
  ClassReport r{units(s), v_set(s), idempotents(s), nilpotents(s), zero_divisors(s), {}};
  r.flags.local = is_local(s);
  r.flags.semifield = is_semifield(s);
  r.flags.presimplifiable = is_presimplifiable(s);
  r.flags.domainlike = r.zero_divisors.subset_of(r.nilpotents);
  r.flags.clean = is_clean(s);
  r.flags.almost_clean = is_almost_clean(s);
  r.flags.weakly_clean = is_weakly_clean(s);
  r.flags.weakly_clean_literal = is_weakly_clean_literal(s);
  r.flags.additively_regular = is_additively_regular(s);
  return r;
}

}  // namespace

ClassReport classify(const FiniteSemiring& s) {
  ClassReport r = base_report(s);
  r.flags.strongly_associate = is_strongly_associate(s);
  return r;
}

ClassReport classify(const ExpectationInstance& e) {
  ClassReport r = base_report(e.product());
  r.flags.strongly_associate = is_strongly_associate(e);
  return r;
}

ModuleFlags classify_module(const FiniteSemimodule& m) {
  ModuleFlags f;
  f.zero_module = m.is_zero_module();
  f.v_set = v_set(m);
  f.zero_divisors = m.is_zero_module() ? Subset(m.base().size()) : zero_divisors_mod(m);
  f.annihilator = annihilator(m);
  f.presimplifiable = is_presimplifiable_mod(m);
  f.strongly_associate = is_strongly_associate_mod(m);
  f.domainlike = is_domainlike_mod(m);
  f.additively_regular = is_additively_regular(m);
  f.subtractive = true;
  for (const Subset& n : enumerate_subsemimodules(m))
    if (!is_subtractive(m, n)) {
      f.subtractive = false;
      break;
    }
  return f;
}

}  // namespace expsr
