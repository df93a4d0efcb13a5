#pragma once

#include <concepts>
#include <memory>
#include <string>
#include <vector>

#include "expsr/errors.hpp"
#include "expsr/subset.hpp"

namespace expsr {

/// n x n operation table, row index = left operand.
using Table = std::vector<std::vector<Index>>;

/// Unvalidated semiring data as read from JSON or produced by the enumerator.
struct RawSemiring {
  std::string name;
  std::size_t size = 0;
  Index zero = 0;
  Index one = 1;
  Table add;
  Table mul;
};

/// Unvalidated semimodule data. `action[s][x]` is the scalar product s.x.
struct RawSemimodule {
  std::string name;
  std::string base;  // optional label of the intended base semiring
  std::size_t size = 0;
  Index zero = 0;
  Table add;
  Table action;
};

struct SemiringChecks {
  /// Commutativity of multiplication is part of the semiring contract used
  /// throughout the library; the enumerator can lift it to find the
  /// noncommutative tables too.
  bool require_commutative = true;
  /// Stop after the first violation (used on hot enumeration paths).
  bool first_only = false;
};

/// A validated finite semiring over the carrier 0..n-1. Instances can only be
/// produced by validate_semiring (or by builders that validate internally),
/// so every FiniteSemiring satisfies the axioms it was checked against.
class FiniteSemiring {
public:
  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return n_; }
  Index zero() const noexcept { return zero_; }
  Index one() const noexcept { return one_; }

  Index add(Index a, Index b) const { return add_[a * n_ + b]; }
  Index mul(Index a, Index b) const { return mul_[a * n_ + b]; }
  /// a^k with a^0 = one.
  Index pow(Index a, std::size_t k) const;

  RawSemiring raw() const;
  void rename(std::string name) { name_ = std::move(name); }

  /// Table equality; names are ignored.
  bool same_tables(const FiniteSemiring& other) const;

private:
  friend FiniteSemiring validate_semiring(const RawSemiring&, const SemiringChecks&);
  FiniteSemiring() = default;

  std::string name_;
  std::size_t n_ = 0;
  Index zero_ = 0;
  Index one_ = 0;
  std::vector<Index> add_;
  std::vector<Index> mul_;
};

using SemiringPtr = std::shared_ptr<const FiniteSemiring>;

/// A validated semimodule over a FiniteSemiring.
class FiniteSemimodule {
public:
  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return m_; }
  Index zero() const noexcept { return zero_; }
  const FiniteSemiring& base() const noexcept { return *base_; }
  const SemiringPtr& base_ptr() const noexcept { return base_; }

  Index add(Index x, Index y) const { return add_[x * m_ + y]; }
  Index act(Index s, Index x) const { return action_[s * m_ + x]; }

  /// True when the carrier is {0}.
  bool is_zero_module() const noexcept { return m_ == 1; }

  RawSemimodule raw() const;
  void rename(std::string name) { name_ = std::move(name); }

private:
  friend FiniteSemimodule validate_semimodule(SemiringPtr, const RawSemimodule&, bool);
  FiniteSemimodule() = default;

  std::string name_;
  std::size_t m_ = 0;
  Index zero_ = 0;
  SemiringPtr base_;
  std::vector<Index> add_;
  std::vector<Index> action_;
};

/// Runs every axiom check and returns all violations (empty = valid).
/// Throws SizeMismatch when table shapes disagree with `size` or size < 2.
std::vector<Violation> check_semiring(const RawSemiring& raw, const SemiringChecks& checks = {});

/// Validates and freezes the tables. Throws AxiomViolation listing every
/// failed law, or SizeMismatch for malformed input.
FiniteSemiring validate_semiring(const RawSemiring& raw, const SemiringChecks& checks = {});

std::vector<Violation> check_semimodule(const FiniteSemiring& base, const RawSemimodule& raw,
                                        bool first_only = false);

/// Throws BaseMismatch when the action table does not have one row per
/// element of `base` (or names a different base), SizeMismatch for
/// malformed tables, AxiomViolation for failed laws.
FiniteSemimodule validate_semimodule(SemiringPtr base, const RawSemimodule& raw,
                                     bool first_only = false);

/// S acting on itself by multiplication.
FiniteSemimodule regular_module(SemiringPtr s);

/// The zero semimodule {0} over `s`.
FiniteSemimodule zero_module(SemiringPtr s);

bool is_commutative_mul(const FiniteSemiring& s);

/// Anything with a finite commutative additive monoid: FiniteSemiring and
/// FiniteSemimodule both qualify.
template <typename T>
concept AdditiveMonoid = requires(const T& t, Index a) {
  { t.size() } -> std::convertible_to<std::size_t>;
  { t.zero() } -> std::convertible_to<Index>;
  { t.add(a, a) } -> std::convertible_to<Index>;
};

/// V(M): elements with an additive inverse.
template <AdditiveMonoid T>
Subset v_set(const T& monoid) {
  Subset out(monoid.size());
  for (Index x = 0; x < monoid.size(); ++x)
    for (Index y = 0; y < monoid.size(); ++y)
      if (monoid.add(x, y) == monoid.zero()) {
        out.insert(x);
        break;
      }
  return out;
}

/// Elements a with a + a + b = a for some b.
template <AdditiveMonoid T>
Subset additively_regular_elements(const T& monoid) {
  Subset out(monoid.size());
  for (Index a = 0; a < monoid.size(); ++a) {
    Index aa = monoid.add(a, a);
    for (Index b = 0; b < monoid.size(); ++b)
      if (monoid.add(aa, b) == a) {
        out.insert(a);
        break;
      }
  }
  return out;
}

template <AdditiveMonoid T>
bool is_additively_regular(const T& monoid) {
  return additively_regular_elements(monoid).is_full();
}

}  // namespace expsr
