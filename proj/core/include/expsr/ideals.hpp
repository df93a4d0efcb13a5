#pragma once

#include <optional>
#include <vector>

#include "expsr/expectation.hpp"
#include "expsr/subset.hpp"
#include "expsr/tables.hpp"

namespace expsr {

// Ideals and subsemimodules are plain Subsets of the parent carrier; the
// functions below take the parent alongside.

bool is_ideal(const FiniteSemiring& s, const Subset& members);
bool is_subsemimodule(const FiniteSemimodule& m, const Subset& members);

/// Least ideal containing `gens` (the zero ideal for empty `gens`).
Subset ideal_closure(const FiniteSemiring& s, const Subset& gens);
Subset subsemimodule_closure(const FiniteSemimodule& m, const Subset& gens);

/// Carriers up to this size use the exhaustive subset scan; larger ones are
/// explored by closing ideals under one added element at a time.
inline constexpr std::size_t kSubsetScanLimit = 12;
inline constexpr std::size_t kDefaultEnumerationBound = 64;

/// All ideals, sorted by size then members. Throws CarrierTooLarge above
/// `bound`.
std::vector<Subset> enumerate_ideals(const FiniteSemiring& s,
                                     std::size_t bound = kDefaultEnumerationBound);
std::vector<Subset> enumerate_subsemimodules(const FiniteSemimodule& m,
                                             std::size_t bound = kDefaultEnumerationBound);

/// The two strategies behind enumerate_ideals, exposed for cross-checking.
std::vector<Subset> enumerate_ideals_by_subset_scan(const FiniteSemiring& s);
std::vector<Subset> enumerate_ideals_by_generation(const FiniteSemiring& s);

/// x in N and x + y in N imply y in N.
template <AdditiveMonoid T>
bool is_subtractive(const T& parent, const Subset& members) {
  for (Index x : members.members())
    for (Index y = 0; y < parent.size(); ++y)
      if (members.contains(parent.add(x, y)) && !members.contains(y)) return false;
  return true;
}

// The following predicates require a proper ideal and throw NotProper
// otherwise.
bool is_prime(const FiniteSemiring& s, const Subset& ideal);
bool is_maximal(const FiniteSemiring& s, const Subset& ideal);
/// ab in I, a not in I  =>  b^k in I for some 1 <= k <= |S|.
bool is_primary(const FiniteSemiring& s, const Subset& ideal);
/// 0 != ab in I  =>  a in I or b in I.
bool is_weakly_prime(const FiniteSemiring& s, const Subset& ideal);

/// { s : s^k in I for some 1 <= k <= |S| }. Powers of an element of a
/// finite semiring become periodic within |S| steps, so the bound is exact.
Subset radical(const FiniteSemiring& s, const Subset& ideal);

/// [N : M] = { s : sM within N }.
Subset residual(const FiniteSemimodule& m, const Subset& sub);
/// sqrt([N : M]).
Subset submodule_radical(const FiniteSemimodule& m, const Subset& sub);
/// N != M and: sx in N, x not in N  =>  s^k M within N for some k.
/// Throws NotProper when N = M.
bool is_primary_submodule(const FiniteSemimodule& m, const Subset& sub);
/// ann(M) = [0 : M].
Subset annihilator(const FiniteSemimodule& m);

/// I M within N?  On failure reports the first (a, x) with a x not in N.
std::optional<std::pair<Index, Index>> box_condition_witness(const FiniteSemimodule& m,
                                                            const Subset& ideal,
                                                            const Subset& sub);

struct BoxIdealResult {
  std::optional<Subset> ideal;                       // I (+)~ N when it is an ideal
  std::optional<std::pair<Index, Index>> witness;   // (a, x) with a x not in N
  bool is_ideal() const { return ideal.has_value(); }
};

/// I (+)~ N as an ideal of the product, or the witness showing IM is not
/// within N.
BoxIdealResult box_ideal(const ExpectationInstance& e, const Subset& ideal, const Subset& sub);

struct IdealProjections {
  Subset ideal;  // I = { s : (s, m) in J for some m }
  Subset sub;    // N = { n : (s, n) in J for some s }
};

IdealProjections ideal_projections(const ExpectationInstance& e, const Subset& j);

/// J = (J cap T0) (+) (J cap T1) with T_k J_l within J_{k+l}.
bool is_graded_ideal(const ExpectationInstance& e, const Subset& j);

/// Every prime ideal is subtractive.
bool is_weak_gaussian(const FiniteSemiring& s);

/// Predicate vector used by reports. Predicates on the improper ideal are
/// left empty.
struct IdealProfile {
  Subset members;
  bool proper = false;
  bool subtractive = false;
  std::optional<bool> prime;
  std::optional<bool> maximal;
  std::optional<bool> primary;
  std::optional<bool> weakly_prime;
  Subset radical;
};

IdealProfile profile_ideal(const FiniteSemiring& s, const Subset& ideal);

}  // namespace expsr
