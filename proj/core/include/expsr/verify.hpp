#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "expsr/expectation.hpp"
#include "expsr/numeric.hpp"

namespace expsr {

enum class Status { pass, fail, not_applicable, informational };

const char* to_string(Status s);

/// One (theorem, instance) cell of the verification grid.
struct TheoremRecord {
  std::string theorem;   // e.g. "Thm-2.6-3"
  std::string anchor;    // short quote of the statement being checked
  std::string instance;  // "<S> (+) <M>"
  Status status = Status::pass;
  std::string witness;   // factor-pair coordinates on failure / finding
  double runtime_ms = 0.0;
};

struct VerificationCase {
  std::string name;
  SemiringPtr s;
  ModulePtr m;
};

struct GridOptions {
  std::size_t max_order = 3;          // enumerated |S| and |M| up to this
  bool include_builtins = true;       // builtin pairs up to max_product_size
  std::size_t max_product_size = 16;
};

/// Enumerated commutative S with 2 <= |S| <= max_order, every enumerated M
/// over each with 1 <= |M| <= max_order, then the builtin pairs.
std::vector<VerificationCase> verification_grid(const GridOptions& options = {});

/// Every algebraic check for one (S, M) pair, in a fixed order.
std::vector<TheoremRecord> verify_case(const VerificationCase& c);

struct NumericOptions {
  std::uint64_t seed = 20010701;
  std::size_t random_graphs = 100;
  std::size_t law_triples = 1000;
};

/// Random DAG with at most `max_nodes` nodes, between 1 and `max_paths`
/// source->sink paths and feature dimension at most `max_dim`.
WeightedDag random_dag(std::uint64_t seed, std::size_t max_nodes = 8, std::size_t max_paths = 20,
                       std::size_t max_dim = 3);

/// Two parallel edges (0.3, [1]) and (0.7, [2]).
WeightedDag parallel_edges_graph();
/// Chain of (0.5, [1]) then (0.4, [3]).
WeightedDag chain_graph();
/// Two stages of two parallel branches each (four paths), d = 2.
WeightedDag diamond_graph();

/// Random weight with p in [0, 2) and components of r in [-2, 2).
NumericWeight random_weight(std::mt19937_64& rng, std::size_t dim);

/// forward_total vs brute_force_total on fixed and seeded random graphs, and
/// the semiring laws on seeded random weight triples.
std::vector<TheoremRecord> verify_numeric(const NumericOptions& options = {});

struct VerificationReport {
  std::vector<TheoremRecord> records;
  std::size_t cases = 0;

  std::size_t count(Status s) const;
  bool all_passed() const { return count(Status::fail) == 0; }
};

struct SuiteOptions {
  GridOptions grid;
  NumericOptions numeric;
  bool include_numeric = true;
  unsigned jobs = 1;
};

/// Runs verify_case over the grid (optionally concurrently; records are
/// assembled in grid order) followed by the numeric checks.
VerificationReport run_verification(const SuiteOptions& options = {});

/// Weakly-prime forward-direction probe on one (S, I, M): reports whether
/// I (+)~ M is weakly prime while some a, b with ab = 0, a, b != 0 fall
/// outside ann(M).
struct WeaklyPrimeProbe {
  bool product_weakly_prime = false;
  bool ideal_weakly_prime = false;
  bool annihilator_condition = false;
  std::string failing_pair;  // "(a,b)" violating the annihilator condition
  bool counterexample() const { return product_weakly_prime && !annihilator_condition; }
};

WeaklyPrimeProbe probe_weakly_prime_forward(const ExpectationInstance& e, const Subset& ideal);

}  // namespace expsr
