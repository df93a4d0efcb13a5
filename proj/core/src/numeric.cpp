#include "expsr/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "expsr/errors.hpp"

namespace expsr {

namespace {

void require_same_dim(const NumericWeight& a, const NumericWeight& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("weights of dimension " + std::to_string(a.dim()) + " and " +
                            std::to_string(b.dim()));
}

}  // namespace

bool approx_equal(double a, double b, double rel_tol, double abs_tol) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= std::max(abs_tol, rel_tol * scale);
}

bool approx_equal(const NumericWeight& a, const NumericWeight& b, double rel_tol, double abs_tol) {
  if (a.dim() != b.dim()) return false;
  if (!approx_equal(a.p, b.p, rel_tol, abs_tol)) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!approx_equal(a.r[i], b.r[i], rel_tol, abs_tol)) return false;
  return true;
}

NumericWeight wadd(const NumericWeight& a, const NumericWeight& b) {
  require_same_dim(a, b);
  NumericWeight out{a.p + b.p, a.r};
  for (std::size_t i = 0; i < out.dim(); ++i) out.r[i] += b.r[i];
  return out;
}

NumericWeight wmul(const NumericWeight& a, const NumericWeight& b) {
  require_same_dim(a, b);
  NumericWeight out{a.p * b.p, std::vector<double>(a.dim())};
  for (std::size_t i = 0; i < out.dim(); ++i) out.r[i] = a.p * b.r[i] + b.p * a.r[i];
  return out;
}

NumericWeight lift_edge(double p, const std::vector<double>& v) {
  if (!(p >= 0.0)) throw std::invalid_argument("edge weight must be nonnegative");
  NumericWeight out{p, v};
  for (double& x : out.r) x *= p;
  return out;
}

WeightedDag::WeightedDag(std::size_t dim, std::vector<std::string> nodes, std::size_t source,
                         std::size_t sink, std::vector<Edge> edges)
    : dim_(dim), nodes_(std::move(nodes)), source_(source), sink_(sink), edges_(std::move(edges)) {
  const std::size_t n = nodes_.size();
  if (source_ >= n || sink_ >= n) throw InvalidGraph("source or sink is not a node");
  if (source_ == sink_) throw InvalidGraph("source and sink must differ");
  out_.assign(n, {});
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    if (e.from >= n || e.to >= n) throw InvalidGraph("edge endpoint is not a node");
    if (!(e.p >= 0.0) || !std::isfinite(e.p)) throw InvalidGraph("edge weight must be finite and >= 0");
    if (e.v.size() != dim_)
      throw DimensionMismatch("edge vector has dimension " + std::to_string(e.v.size()) +
                              ", graph has " + std::to_string(dim_));
    if (e.to == source_) throw InvalidGraph("source has an incoming edge");
    if (e.from == sink_) throw InvalidGraph("sink has an outgoing edge");
    out_[e.from].push_back(id);
    ++indegree[e.to];
  }
  // Kahn's algorithm; lowest node index first keeps the order deterministic.
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    auto it = std::min_element(ready.begin(), ready.end());
    std::size_t v = *it;
    ready.erase(it);
    order_.push_back(v);
    for (std::size_t id : out_[v])
      if (--indegree[edges_[id].to] == 0) ready.push_back(edges_[id].to);
  }
  if (order_.size() != n) throw CycleDetected("graph contains a directed cycle");
}

NumericWeight forward_total(const WeightedDag& g) {
  std::vector<NumericWeight> alpha(g.node_count(), NumericWeight::zero(g.dim()));
  alpha[g.source()] = NumericWeight::one(g.dim());
  for (std::size_t v : g.topological_order())
    for (std::size_t id : g.out_edges()[v]) {
      const Edge& e = g.edges()[id];
      alpha[e.to] = alpha[e.to] + alpha[v] * lift_edge(e.p, e.v);
    }
  return alpha[g.sink()];
}

std::vector<double> expectation(const WeightedDag& g) {
  NumericWeight total = forward_total(g);
  if (total.p <= kAbsoluteTolerance) throw ZeroMass();
  std::vector<double> out = total.r;
  for (double& x : out) x /= total.p;
  return out;
}

std::size_t count_paths(const WeightedDag& g) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> ways(g.node_count(), 0);
  ways[g.source()] = 1;
  for (std::size_t v : g.topological_order())
    for (std::size_t id : g.out_edges()[v]) {
      std::size_t& w = ways[g.edges()[id].to];
      w = (kMax - w < ways[v]) ? kMax : w + ways[v];
    }
  return ways[g.sink()];
}

NumericWeight brute_force_total(const WeightedDag& g, std::size_t path_limit) {
  if (count_paths(g) > path_limit)
    throw TooManyPaths("graph has more than " + std::to_string(path_limit) + " paths");

  // Plain arithmetic on each explicit path, no semiring operations.
  NumericWeight total = NumericWeight::zero(g.dim());
  std::vector<std::size_t> stack_edges;
  auto walk = [&](auto&& self, std::size_t v) -> void {
    if (v == g.sink()) {
      double mass = 1.0;
      std::vector<double> feature(g.dim(), 0.0);
      for (std::size_t id : stack_edges) {
        const Edge& e = g.edges()[id];
        mass *= e.p;
        for (std::size_t i = 0; i < g.dim(); ++i) feature[i] += e.v[i];
      }
      total.p += mass;
      for (std::size_t i = 0; i < g.dim(); ++i) total.r[i] += mass * feature[i];
      return;
    }
    for (std::size_t id : g.out_edges()[v]) {
      stack_edges.push_back(id);
      self(self, g.edges()[id].to);
      stack_edges.pop_back();
    }
  };
  walk(walk, g.source());
  return total;
}

}  // namespace expsr
