#pragma once

#include "expsr/expectation.hpp"
#include "expsr/subset.hpp"
#include "expsr/tables.hpp"

namespace expsr {

Subset units(const FiniteSemiring& s);
Subset idempotents(const FiniteSemiring& s);
Subset nilpotents(const FiniteSemiring& s);

/// Z(S) = { s : st = 0 for some t != 0 }. Contains zero.
Subset zero_divisors(const FiniteSemiring& s);
/// Z(M) = { s : sm = 0 for some m != 0 }. Throws EmptyModule on M = {0}.
Subset zero_divisors_mod(const FiniteSemimodule& m);
/// Z(S) union Z(M), with Z({0}) read as empty.
Subset zero_divisors_with_module(const FiniteSemimodule& m);

/// Nonunits form an ideal.
bool is_local(const FiniteSemiring& s);
/// Every nonzero element is a unit.
bool is_semifield(const FiniteSemiring& s);

/// st = t  =>  s unit or t = 0.
bool is_presimplifiable(const FiniteSemiring& s);
/// sm = m  =>  s unit or m = 0.
bool is_presimplifiable_mod(const FiniteSemimodule& m);

/// Cyclic subsemimodule S x.
Subset cyclic(const FiniteSemimodule& m, Index x);
Subset cyclic(const FiniteSemiring& s, Index x);

/// (x) = (y).
bool associates(const FiniteSemimodule& m, Index x, Index y);
bool associates(const FiniteSemiring& s, Index x, Index y);
/// x = u y for a unit u of the base.
bool strong_associates(const FiniteSemimodule& m, Index x, Index y);
bool strong_associates(const FiniteSemiring& s, Index x, Index y);

bool is_strongly_associate(const FiniteSemiring& s);
bool is_strongly_associate_mod(const FiniteSemimodule& m);
/// Product flag, taking the unit group of S (+)~ M as U(S) x V(M).
bool is_strongly_associate(const ExpectationInstance& e);

/// Z(S) within Nil(S).
bool is_domainlike(const FiniteSemiring& s);
/// Z(M) within Nil(S); true for M = {0}.
bool is_domainlike_mod(const FiniteSemimodule& m);

/// Every element is unit + idempotent.
bool is_clean(const FiniteSemiring& s);
/// Every element is non-zero-divisor + idempotent.
bool is_almost_clean(const FiniteSemiring& s);
/// Every s in S is t + e with t outside Z(S) and Z(M), e idempotent.
bool almost_clean_criterion(const FiniteSemimodule& m);
/// For each s there are a unit u and an idempotent e with s = u + e or
/// s + e = u.
bool is_weakly_clean(const FiniteSemiring& s);
/// Literal form: s = u + e, or u + e = u, for some unit u and idempotent e.
/// The second clause does not mention s and always holds with e = 0, u = 1.
bool is_weakly_clean_literal(const FiniteSemiring& s);

struct ClassFlags {
  bool local = false;
  bool semifield = false;
  bool presimplifiable = false;
  bool strongly_associate = false;
  bool domainlike = false;
  bool clean = false;
  bool almost_clean = false;
  bool weakly_clean = false;
  bool weakly_clean_literal = false;
  bool additively_regular = false;
};

struct ClassReport {
  Subset units;
  Subset v_set;
  Subset idempotents;
  Subset nilpotents;
  Subset zero_divisors;
  ClassFlags flags;
};

ClassReport classify(const FiniteSemiring& s);
ClassReport classify(const ExpectationInstance& e);

/// Module-side flags used next to a product report.
struct ModuleFlags {
  bool zero_module = false;
  Subset v_set;
  Subset zero_divisors;  // empty for M = {0}
  Subset annihilator;
  bool presimplifiable = false;
  bool strongly_associate = false;
  bool domainlike = false;
  bool additively_regular = false;
  bool subtractive = false;  // every subsemimodule subtractive
};

ModuleFlags classify_module(const FiniteSemimodule& m);

}  // namespace expsr
