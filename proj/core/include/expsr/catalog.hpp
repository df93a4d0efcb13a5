#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "expsr/expectation.hpp"
#include "expsr/tables.hpp"

namespace expsr {

enum class Provenance { builtin, enumerated };

struct CatalogEntry {
  std::string name;
  std::variant<SemiringPtr, ModulePtr> structure;
  Provenance provenance = Provenance::builtin;

  const SemiringPtr* semiring() const { return std::get_if<SemiringPtr>(&structure); }
  const ModulePtr* module() const { return std::get_if<ModulePtr>(&structure); }
};

/// Builtin semirings: boolean, chain_k, trunc_nat_k, zmod_n, field_p, diamond.
/// Throws UnknownName for anything else (including field_p with p not prime).
SemiringPtr builtin_semiring(const std::string& name);

/// Builtin semimodules over a builtin semiring, addressed as
/// "<semiring>/<kind>" with kind one of: self, zero, square (S x S), or
/// zmod_d for the reduction action of zmod_n on zmod_d (d divides n).
ModulePtr builtin_module(const std::string& name);

/// Either kind of builtin; module names contain a '/'.
CatalogEntry builtin(const std::string& name);

/// The names accepted by builtin_semiring for the default catalog.
std::vector<std::string> builtin_semiring_names();
/// Module names for the default catalog, one entry per listed module of every
/// builtin semiring.
std::vector<std::string> builtin_module_names();

FiniteSemimodule direct_sum(const FiniteSemimodule& a, const FiniteSemimodule& b);

struct EnumerationOptions {
  bool require_commutative = true;
  /// Keep one representative per isomorphism class (only honoured at n = 4;
  /// smaller orders are always returned up to the fixed labeling).
  bool deduplicate = false;
  /// Partitions (first free addition row) evaluated concurrently.
  unsigned jobs = 1;
};

inline constexpr std::size_t kMaxEnumerationOrder = 4;

/// All semirings on {0, .., n-1} with zero = 0 and one = 1, in a fixed
/// deterministic order. Throws OrderTooLarge for n > 4.
std::vector<CatalogEntry> enumerate_semirings(std::size_t order,
                                              const EnumerationOptions& options = {});

/// All semimodules of the given order over `s` with zero = 0. Throws
/// OrderTooLarge for order > 4.
std::vector<CatalogEntry> enumerate_semimodules(const SemiringPtr& s, std::size_t order);

/// Structure-preserving relabeling exists (brute force over permutations).
bool are_isomorphic(const FiniteSemiring& a, const FiniteSemiring& b);

}  // namespace expsr
