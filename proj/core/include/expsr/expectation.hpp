#pragma once

#include <memory>
#include <utility>

#include "expsr/subset.hpp"
#include "expsr/tables.hpp"

namespace expsr {

using ModulePtr = std::shared_ptr<const FiniteSemimodule>;

/// Coordinates of a product element (s, m).
struct Pair {
  Index s;
  Index m;
  bool operator==(const Pair&) const = default;
};

/// S (+)~ M packaged as a FiniteSemiring over the product carrier, together
/// with its factors. Product indices are row-major: (s, m) -> s * |M| + m.
class ExpectationInstance {
public:
  ExpectationInstance(FiniteSemiring product, SemiringPtr s, ModulePtr m);

  const FiniteSemiring& product() const noexcept { return *product_; }
  const SemiringPtr& product_ptr() const noexcept { return product_; }
  const FiniteSemiring& factor_s() const noexcept { return *s_; }
  const SemiringPtr& factor_s_ptr() const noexcept { return s_; }
  const FiniteSemimodule& factor_m() const noexcept { return *m_; }
  const ModulePtr& factor_m_ptr() const noexcept { return m_; }

  Index index(Index s, Index m) const { return s * m_->size() + m; }
  Index index(Pair p) const { return index(p.s, p.m); }
  Pair pair(Index product_index) const { return pairs_[product_index]; }

  /// T (+)~ N as a subset of the product carrier.
  Subset box(const Subset& t, const Subset& n) const;

private:
  SemiringPtr product_;
  SemiringPtr s_;
  ModulePtr m_;
  std::vector<Pair> pairs_;
};

/// Builds S (+)~ M with componentwise addition and
/// (s1, m1)(s2, m2) = (s1 s2, s1 m2 + s2 m1). The product is run through the
/// full axiom validator before it is returned.
/// Throws BaseMismatch when M is not a semimodule over (a copy of) S.
ExpectationInstance build_expectation(SemiringPtr s, ModulePtr m);

/// s -> (s, 0).
Index embed_s(const ExpectationInstance& e, Index s);

/// Checks that embed_s is an injective homomorphism preserving +, ., 0, 1 and
/// that its image is closed under both operations.
bool embedding_is_homomorphism(const ExpectationInstance& e);

/// Set of all finite sums of products a*b with a in A, b in B.
Subset ideal_product(const FiniteSemiring& s, const Subset& a, const Subset& b);

/// Least k >= 1 with ({0} x M)^k = {zero}.
int zero_m_ideal_nilpotency(const ExpectationInstance& e);

/// Builds the semiring of formal upper-triangular records [[s, m], [0, s]]
/// under the general triangular multiplication rule and checks that
/// (s, m) <-> record is a semiring isomorphism onto it.
bool matrix_iso_check(const ExpectationInstance& e);

struct GradedDecomposition {
  Subset t0;  // S (+)~ (0)
  Subset t1;  // (0) (+)~ M
  /// Direct-sum uniqueness and T_i T_j within T_{i+j} (T_2 = {zero}) held.
  bool verified = false;
};

GradedDecomposition graded_decomposition(const ExpectationInstance& e);

}  // namespace expsr
