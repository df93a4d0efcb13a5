#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace expsr {

/// Equality tolerances for NumericWeight.
inline constexpr double kRelativeTolerance = 1e-9;
inline constexpr double kAbsoluteTolerance = 1e-12;

/// |a - b| <= max(abs_tol, rel_tol * max(|a|, |b|)).
bool approx_equal(double a, double b, double rel_tol = kRelativeTolerance,
                  double abs_tol = kAbsoluteTolerance);

/// An element (p, r) of the expectation semiring over the nonnegative reals
/// with the real vectors of dimension d as semimodule.
struct NumericWeight {
  double p = 0.0;
  std::vector<double> r;

  std::size_t dim() const noexcept { return r.size(); }

  static NumericWeight zero(std::size_t d) { return {0.0, std::vector<double>(d, 0.0)}; }
  static NumericWeight one(std::size_t d) { return {1.0, std::vector<double>(d, 0.0)}; }
};

/// Componentwise within tolerance; dimensions must agree.
bool approx_equal(const NumericWeight& a, const NumericWeight& b,
                  double rel_tol = kRelativeTolerance, double abs_tol = kAbsoluteTolerance);

/// (p1 + p2, r1 + r2). Throws DimensionMismatch.
NumericWeight wadd(const NumericWeight& a, const NumericWeight& b);
/// (p1 p2, p1 r2 + p2 r1). Throws DimensionMismatch.
NumericWeight wmul(const NumericWeight& a, const NumericWeight& b);

inline NumericWeight operator+(const NumericWeight& a, const NumericWeight& b) { return wadd(a, b); }
inline NumericWeight operator*(const NumericWeight& a, const NumericWeight& b) { return wmul(a, b); }

/// (p, p v). Throws std::invalid_argument for p < 0.
NumericWeight lift_edge(double p, const std::vector<double>& v);

struct Edge {
  std::size_t from;
  std::size_t to;
  double p;
  std::vector<double> v;  // raw feature vector, lifted internally
};

/// Acyclic graph with a distinguished source and sink. Construction checks
/// the invariants and fixes a topological order, so every WeightedDag is
/// ready for a forward pass.
class WeightedDag {
public:
  /// Throws CycleDetected, DimensionMismatch or InvalidGraph.
  WeightedDag(std::size_t dim, std::vector<std::string> nodes, std::size_t source,
              std::size_t sink, std::vector<Edge> edges);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  const std::vector<std::string>& nodes() const noexcept { return nodes_; }
  std::size_t source() const noexcept { return source_; }
  std::size_t sink() const noexcept { return sink_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& topological_order() const noexcept { return order_; }
  const std::vector<std::vector<std::size_t>>& out_edges() const noexcept { return out_; }

private:
  std::size_t dim_;
  std::vector<std::string> nodes_;
  std::size_t source_;
  std::size_t sink_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;  // edge ids by source node
  std::vector<std::size_t> order_;
};

/// Semiring sum over source->sink paths of the product of lifted edge
/// weights, in one pass over the topological order. Zero when the sink is
/// unreachable.
NumericWeight forward_total(const WeightedDag& g);

/// r / Z. Throws ZeroMass when Z <= abs tolerance.
std::vector<double> expectation(const WeightedDag& g);

inline constexpr std::size_t kBruteForcePathLimit = 20;

/// Explicit path enumeration: sum over paths of (prod p, prod p * sum v).
/// Throws TooManyPaths above `path_limit`.
NumericWeight brute_force_total(const WeightedDag& g,
                                std::size_t path_limit = kBruteForcePathLimit);

/// Number of source->sink paths (saturating at SIZE_MAX).
std::size_t count_paths(const WeightedDag& g);

}  // namespace expsr
