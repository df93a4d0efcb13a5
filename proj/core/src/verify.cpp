#include "expsr/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <sstream>

#include "expsr/catalog.hpp"
#include "expsr/classify.hpp"
#include "expsr/ideals.hpp"

namespace expsr {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::not_applicable: return "not-applicable";
    case Status::informational: return "informational";
  }
  return "?";
}

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(), [s](const TheoremRecord& r) { return r.status == s; }));
}

namespace {

struct Outcome {
  Status status = Status::pass;
  std::string witness;
};

Outcome pass() { return {}; }
Outcome fail(std::string w) { return {Status::fail, std::move(w)}; }
Outcome not_applicable(std::string why = {}) { return {Status::not_applicable, std::move(why)}; }
Outcome info(std::string w) { return {Status::informational, std::move(w)}; }

std::string fmt_factor(const Subset& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Index x : s.members()) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << '}';
  return os.str();
}

// Everything one (S, M) pair needs, computed once.
struct Context {
  const VerificationCase& c;
  ExpectationInstance e;
  const FiniteSemiring& s;
  const FiniteSemimodule& m;
  const FiniteSemiring& p;
  std::vector<Subset> ideals_s;
  std::vector<Subset> subs_m;
  std::vector<Subset> ideals_e;
  Subset full_m;
  Subset zero_s;
  Subset zero_m_ideal;  // {0} x M

  explicit Context(const VerificationCase& vc)
      : c(vc),
        e(build_expectation(vc.s, vc.m)),
        s(e.factor_s()),
        m(e.factor_m()),
        p(e.product()),
        ideals_s(enumerate_ideals(s)),
        subs_m(enumerate_subsemimodules(m)),
        ideals_e(enumerate_ideals(p)),
        full_m(Subset::full(m.size())),
        zero_s(s.size(), {s.zero()}),
        zero_m_ideal(e.box(zero_s, full_m)) {}

  std::string pair(Index x) const {
    Pair q = e.pair(x);
    return "(" + std::to_string(q.s) + "," + std::to_string(q.m) + ")";
  }
  std::string product_set(const Subset& j) const {
    std::string out = "{";
    bool first = true;
    for (Index x : j.members()) {
      out += (first ? "" : ",") + pair(x);
      first = false;
    }
    return out + "}";
  }
  std::string box_name(const Subset& i, const Subset& n) const {
    return "I=" + fmt_factor(i) + " N=" + fmt_factor(n);
  }
  bool box_condition(const Subset& i, const Subset& n) const {
    return !box_condition_witness(m, i, n).has_value();
  }
  bool all_subs_subtractive() const {
    return std::all_of(subs_m.begin(), subs_m.end(),
                       [&](const Subset& n) { return is_subtractive(m, n); });
  }
  std::vector<Subset> primes_e() const {
    std::vector<Subset> out;
    for (const auto& j : ideals_e)
      if (!j.is_full() && is_prime(p, j)) out.push_back(j);
    return out;
  }
};

struct Check {
  const char* id;
  const char* anchor;
  Outcome (*run)(const Context&);
};

// ---------------------------------------------------------------------------
// Construction

Outcome prop_2_1_1(const Context& x) {
  SemiringChecks checks;
  checks.require_commutative = is_commutative_mul(x.s);
  auto v = check_semiring(x.p.raw(), checks);
  if (!v.empty()) return fail(to_string(v.front()));
  return pass();
}

Outcome prop_2_1_2(const Context& x) {
  return embedding_is_homomorphism(x.e) ? pass() : fail("s -> (s,0) is not a homomorphism");
}

Outcome prop_2_1_3(const Context& x) {
  const int expected = x.m.is_zero_module() ? 1 : 2;
  const int k = zero_m_ideal_nilpotency(x.e);
  if (k != expected) return fail("nilpotency index " + std::to_string(k));
  return pass();
}

Outcome prop_2_1_4(const Context& x) {
  return matrix_iso_check(x.e) ? pass() : fail("matrix records not isomorphic");
}

// ---------------------------------------------------------------------------
// Ideals of the product

Outcome thm_2_6_1(const Context& x) {
  return graded_decomposition(x.e).verified ? pass() : fail("grading T0 + T1 fails");
}

Outcome thm_2_6_2(const Context& x) {
  for (const auto& i : x.ideals_s)
    for (const auto& n : x.subs_m) {
      const Subset box = x.e.box(i, n);
      const bool cond = x.box_condition(i, n);
      if (is_ideal(x.p, box) != cond) return fail(x.box_name(i, n) + " ideal-ness disagrees with IM in N");
      if (cond && !is_graded_ideal(x.e, box)) return fail(x.box_name(i, n) + " not graded");
    }
  for (const auto& j : x.ideals_e) {
    if (!is_graded_ideal(x.e, j)) continue;
    auto proj = ideal_projections(x.e, j);
    if (!is_ideal(x.s, proj.ideal) || !is_subsemimodule(x.m, proj.sub) ||
        x.e.box(proj.ideal, proj.sub) != j)
      return fail("graded J=" + x.product_set(j) + " is not of the form I (+) N");
  }
  return pass();
}

Outcome thm_2_6_3(const Context& x) {
  for (const auto& i : x.ideals_s)
    for (const auto& n : x.subs_m) {
      if (!x.box_condition(i, n)) continue;
      if (radical(x.p, x.e.box(i, n)) != x.e.box(radical(x.s, i), x.full_m))
        return fail(x.box_name(i, n));
    }
  return pass();
}

Outcome thm_2_6_4(const Context& x) {
  for (const auto& j : x.ideals_e) {
    auto proj = ideal_projections(x.e, j);
    if (!is_ideal(x.s, proj.ideal)) return fail("J=" + x.product_set(j) + ": I not an ideal");
    if (!is_subsemimodule(x.m, proj.sub))
      return fail("J=" + x.product_set(j) + ": N not a subsemimodule");
    if (auto w = box_condition_witness(x.m, proj.ideal, proj.sub))
      return fail("J=" + x.product_set(j) + ": IM not in N at (a,x)=(" +
                  std::to_string(w->first) + "," + std::to_string(w->second) + ")");
    if (!j.subset_of(x.e.box(proj.ideal, proj.sub)))
      return fail("J=" + x.product_set(j) + " not inside I (+) N");
  }
  return pass();
}

Outcome thm_2_6_5(const Context& x) {
  for (const auto& j : x.ideals_e) {
    if (!x.zero_m_ideal.subset_of(j) || !is_subtractive(x.p, j)) continue;
    auto proj = ideal_projections(x.e, j);
    if (!is_ideal(x.s, proj.ideal) || x.e.box(proj.ideal, x.full_m) != j)
      return fail("J=" + x.product_set(j));
  }
  return pass();
}

Outcome thm_2_6_6(const Context& x) {
  for (const auto& j : x.primes_e())
    if (!x.zero_m_ideal.subset_of(j)) return fail("prime P=" + x.product_set(j));
  return pass();
}

Outcome thm_2_6_7(const Context& x) {
  for (const auto& j : x.primes_e()) {
    if (!is_subtractive(x.p, j)) continue;
    auto proj = ideal_projections(x.e, j);
    if (x.e.box(proj.ideal, x.full_m) != j) return fail("P=" + x.product_set(j) + " not p (+) M");
    if (proj.ideal.is_full() || !is_prime(x.s, proj.ideal) || !is_subtractive(x.s, proj.ideal))
      return fail("P=" + x.product_set(j) + ": p=" + fmt_factor(proj.ideal) +
                  " not a subtractive prime");
  }
  return pass();
}

Outcome cor_2_7_1(const Context& x) {
  bool boxes = true;
  std::string first;
  for (const auto& i : x.ideals_s)
    for (const auto& n : x.subs_m)
      if (x.box_condition(i, n) && !is_subtractive(x.p, x.e.box(i, n)) && boxes) {
        boxes = false;
        first = x.box_name(i, n);
      }
  const bool factors =
      std::all_of(x.ideals_s.begin(), x.ideals_s.end(),
                  [&](const Subset& i) { return is_subtractive(x.s, i); }) &&
      x.all_subs_subtractive();
  if (boxes != factors)
    return fail(std::string("graded ideals subtractive=") + (boxes ? "yes" : "no") +
                " factors subtractive=" + (factors ? "yes" : "no") + " " + first);
  return pass();
}

Outcome cor_2_7_2(const Context& x) {
  const bool product_subtractive = std::all_of(
      x.ideals_e.begin(), x.ideals_e.end(), [&](const Subset& j) { return is_subtractive(x.p, j); });
  if (!product_subtractive) return not_applicable("S (+) M not subtractive");
  for (const auto& i : x.ideals_s)
    if (!is_subtractive(x.s, i)) return fail("I=" + fmt_factor(i));
  for (const auto& n : x.subs_m)
    if (!is_subtractive(x.m, n)) return fail("N=" + fmt_factor(n));
  return pass();
}

Outcome cor_2_8(const Context& x) {
  const auto primes = x.primes_e();
  const bool weak_gaussian = std::all_of(primes.begin(), primes.end(),
                                         [&](const Subset& j) { return is_subtractive(x.p, j); });
  if (!weak_gaussian) return not_applicable("S (+) M not weak Gaussian");
  for (const auto& j : primes) {
    auto proj = ideal_projections(x.e, j);
    if (x.e.box(proj.ideal, x.full_m) != j || proj.ideal.is_full() ||
        !is_prime(x.s, proj.ideal) || !is_subtractive(x.s, proj.ideal))
      return fail("prime P=" + x.product_set(j));
  }
  for (const auto& j : x.ideals_e) {
    if (j.is_full() || !is_maximal(x.p, j)) continue;
    auto proj = ideal_projections(x.e, j);
    if (x.e.box(proj.ideal, x.full_m) != j || proj.ideal.is_full() ||
        !is_maximal(x.s, proj.ideal) || !is_subtractive(x.s, proj.ideal))
      return fail("maximal P=" + x.product_set(j));
  }
  return pass();
}

// ab = 0, a != 0, b != 0  =>  a, b in ann(M); reports the first failing pair.
std::optional<std::pair<Index, Index>> annihilator_condition_failure(const FiniteSemimodule& m) {
  const auto& s = m.base();
  const Subset ann = annihilator(m);
  for (Index a = 0; a < s.size(); ++a)
    for (Index b = 0; b < s.size(); ++b)
      if (a != s.zero() && b != s.zero() && s.mul(a, b) == s.zero() &&
          (!ann.contains(a) || !ann.contains(b)))
        return std::pair{a, b};
  return std::nullopt;
}

Outcome prop_2_11_reverse(const Context& x) {
  if (annihilator_condition_failure(x.m)) return not_applicable("annihilator condition fails");
  for (const auto& i : x.ideals_s) {
    if (i.is_full() || !is_weakly_prime(x.s, i)) continue;
    if (!is_weakly_prime(x.p, x.e.box(i, x.full_m))) return fail("I=" + fmt_factor(i));
  }
  return pass();
}

Outcome prop_2_11_forward_probe(const Context& x) {
  for (const auto& i : x.ideals_s) {
    if (i.is_full()) continue;
    WeaklyPrimeProbe probe = probe_weakly_prime_forward(x.e, i);
    if (probe.product_weakly_prime && !(probe.ideal_weakly_prime && probe.annihilator_condition))
      return info("I=" + fmt_factor(i) + ": I (+) M weakly prime but " +
                  (probe.ideal_weakly_prime ? "annihilator condition fails at (a,b)=" +
                                                  probe.failing_pair
                                            : std::string("I not weakly prime")));
  }
  return info("no counterexample to the forward direction");
}

Outcome prop_2_13_1(const Context& x) {
  for (const auto& n : x.subs_m)
    if (!is_ideal(x.s, residual(x.m, n))) return fail("N=" + fmt_factor(n));
  return pass();
}

Outcome prop_2_13_2(const Context& x) {
  bool any = false;
  for (const auto& n : x.subs_m) {
    if (n.is_full() || !is_primary_submodule(x.m, n)) continue;
    any = true;
    const Subset r = submodule_radical(x.m, n);
    if (r.is_full() || !is_prime(x.s, r)) return fail("N=" + fmt_factor(n) + " sqrt=" + fmt_factor(r));
  }
  return any ? pass() : not_applicable("no primary subsemimodule");
}

Outcome thm_2_14_1(const Context& x) {
  for (const auto& i : x.ideals_s) {
    if (i.is_full()) continue;
    if (is_primary(x.s, i) != is_primary(x.p, x.e.box(i, x.full_m))) return fail("I=" + fmt_factor(i));
  }
  return pass();
}

Outcome thm_2_14_2(const Context& x) {
  bool any = false;
  for (const auto& i : x.ideals_s)
    for (const auto& n : x.subs_m) {
      if (n.is_full()) continue;
      const Subset box = x.e.box(i, n);
      if (!is_ideal(x.p, box) || !is_primary(x.p, box)) continue;
      any = true;
      if (!is_primary_submodule(x.m, n) || !x.box_condition(i, n) ||
          radical(x.s, i) != submodule_radical(x.m, n))
        return fail(x.box_name(i, n));
    }
  return any ? pass() : not_applicable("no primary I (+) N with N proper");
}

Outcome cor_2_15(const Context& x) {
  if (!x.all_subs_subtractive()) return not_applicable("M has a non-subtractive subsemimodule");
  for (const auto& i : x.ideals_s)
    for (const auto& n : x.subs_m) {
      if (n.is_full()) continue;
      const Subset box = x.e.box(i, n);
      const bool lhs = is_ideal(x.p, box) && is_primary(x.p, box);
      const bool rhs = is_primary_submodule(x.m, n) && x.box_condition(i, n) &&
                       radical(x.s, i) == submodule_radical(x.m, n);
      if (lhs != rhs)
        return fail(x.box_name(i, n) + (lhs ? " primary but criterion fails"
                                            : " criterion holds but not primary"));
    }
  return pass();
}

// ---------------------------------------------------------------------------
// Distinguished elements

// For every z in Z there is a prime P of `s` with z in P within Z.
std::optional<Index> union_of_primes_failure(const FiniteSemiring& s,
                                             const std::vector<Subset>& ideals, const Subset& z) {
  std::vector<Subset> primes;
  for (const auto& j : ideals)
    if (!j.is_full() && is_prime(s, j) && j.subset_of(z)) primes.push_back(j);
  for (Index a : z.members())
    if (std::none_of(primes.begin(), primes.end(), [a](const Subset& q) { return q.contains(a); }))
      return a;
  return std::nullopt;
}

Outcome prop_3_1(const Context& x) {
  if (!x.m.is_zero_module())
    if (auto a = union_of_primes_failure(x.s, x.ideals_s, zero_divisors_mod(x.m)))
      return fail("Z(M) element " + std::to_string(*a) + " in no prime inside Z(M)");
  if (auto a = union_of_primes_failure(x.p, x.ideals_e, zero_divisors(x.p)))
    return fail("Z(S (+) M) element " + x.pair(*a) + " in no prime inside Z");
  return pass();
}

Outcome thm_3_3_1(const Context& x) {
  const Subset got = units(x.p);
  const Subset want = x.e.box(units(x.s), v_set(x.m));
  if (got != want) return fail("U=" + x.product_set(got) + " expected " + x.product_set(want));
  return pass();
}

Outcome thm_3_3_2(const Context& x) {
  const Subset got = idempotents(x.p);
  Subset want(x.p.size());
  for (Index a = 0; a < x.s.size(); ++a)
    for (Index v = 0; v < x.m.size(); ++v) {
      Index sm = x.m.act(a, v);
      if (x.s.mul(a, a) == a && x.m.add(sm, sm) == v) want.insert(x.e.index(a, v));
    }
  if (got != want) return fail("Idem=" + x.product_set(got) + " expected " + x.product_set(want));

  bool only_zero_additive_idempotent = true;
  for (Index v = 0; v < x.m.size(); ++v)
    if (v != x.m.zero() && x.m.add(v, v) == v) only_zero_additive_idempotent = false;
  if (only_zero_additive_idempotent)
    for (Index q : got.members())
      if (x.e.pair(q).m != x.m.zero()) return fail("idempotent " + x.pair(q) + " has m != 0");
  return pass();
}

Outcome thm_3_3_3(const Context& x) {
  const Subset got = nilpotents(x.p);
  const Subset want = x.e.box(nilpotents(x.s), x.full_m);
  if (got != want) return fail("Nil=" + x.product_set(got) + " expected " + x.product_set(want));
  if (!is_ideal(x.p, got)) return fail("Nil not an ideal");
  return pass();
}

Outcome thm_3_3_4(const Context& x) {
  const Subset got = zero_divisors(x.p);
  const Subset want = x.e.box(zero_divisors_with_module(x.m), x.full_m);
  if (got != want) return fail("Z=" + x.product_set(got) + " expected " + x.product_set(want));
  return pass();
}

Outcome prop_3_5(const Context& x) {
  if (!is_semifield(x.s)) return not_applicable("S not a semifield");
  return is_local(x.p) ? pass() : fail("nonunits of S (+) M do not form an ideal");
}

Outcome thm_3_7(const Context& x) {
  const bool lhs = is_presimplifiable(x.p);
  const bool rhs =
      v_set(x.m).is_full() && is_presimplifiable(x.s) && is_presimplifiable_mod(x.m);
  if (lhs != rhs) return fail(std::string("product presimplifiable=") + (lhs ? "yes" : "no"));
  return pass();
}

Outcome prop_3_9(const Context& x) {
  const bool pm = is_presimplifiable_mod(x.m);
  const bool ps = is_presimplifiable(x.s);
  const bool pe = is_presimplifiable(x.p);
  if (!pm && !ps && !pe) return not_applicable("nothing presimplifiable");
  if (pm && !is_strongly_associate_mod(x.m)) return fail("M");
  if (ps && !is_strongly_associate(x.s)) return fail("S");
  if (pe && !is_strongly_associate(x.e)) return fail("S (+) M");
  return pass();
}

Outcome prop_3_9_converse_census(const Context& x) {
  std::string found;
  if (is_strongly_associate_mod(x.m) && !is_presimplifiable_mod(x.m)) found += " M";
  if (is_strongly_associate(x.s) && !is_presimplifiable(x.s)) found += " S";
  if (is_strongly_associate(x.e) && !is_presimplifiable(x.p)) found += " S(+)M";
  return info(found.empty() ? "no strongly-associate non-presimplifiable structure"
                            : "strongly associate but not presimplifiable:" + found);
}

Outcome prop_3_10_1(const Context& x) {
  if (!is_strongly_associate(x.e)) return not_applicable("S (+) M not strongly associate");
  if (!is_strongly_associate(x.s)) return fail("S not strongly associate");
  if (!is_strongly_associate_mod(x.m)) return fail("M not strongly associate");
  return pass();
}

Outcome prop_3_10_2(const Context& x) {
  if (!is_presimplifiable(x.s) || !v_set(x.m).is_full())
    return not_applicable("needs S presimplifiable and V(M) = M");
  if (is_strongly_associate(x.e) != is_strongly_associate_mod(x.m)) return fail("flags differ");
  return pass();
}

Outcome prop_3_12(const Context& x) {
  if (is_domainlike(x.p) != (is_domainlike(x.s) && is_domainlike_mod(x.m))) return fail("flags differ");
  return pass();
}

Outcome prop_3_14(const Context& x) {
  if (!v_set(x.m).is_full()) return not_applicable("V(M) != M");
  if (is_clean(x.p) != is_clean(x.s)) return fail("flags differ");
  return pass();
}

Outcome prop_3_16(const Context& x) {
  if (is_almost_clean(x.p) != almost_clean_criterion(x.m)) return fail("flags differ");
  return pass();
}

Outcome prop_3_18(const Context& x) {
  if (!v_set(x.m).is_full()) return not_applicable("V(M) != M");
  if (is_weakly_clean(x.p) != is_weakly_clean(x.s)) return fail("flags differ");
  return pass();
}

Outcome def_3_17_readings(const Context& x) {
  return info(std::string("weakly clean (s+e=u reading) S=") + (is_weakly_clean(x.s) ? "yes" : "no") +
              " S(+)M=" + (is_weakly_clean(x.p) ? "yes" : "no") + "; literal reading S=" +
              (is_weakly_clean_literal(x.s) ? "yes" : "no") +
              " S(+)M=" + (is_weakly_clean_literal(x.p) ? "yes" : "no"));
}

Outcome prop_3_19_1(const Context& x) {
  const Subset got = additively_regular_elements(x.p);
  const Subset want =
      x.e.box(additively_regular_elements(x.s), additively_regular_elements(x.m));
  if (got != want) return fail("AR=" + x.product_set(got) + " expected " + x.product_set(want));
  return pass();
}

Outcome prop_3_19_2(const Context& x) {
  if (is_additively_regular(x.p) != (is_additively_regular(x.s) && is_additively_regular(x.m)))
    return fail("flags differ");
  return pass();
}

Outcome units_vs_zero_divisors(const Context& x) {
  for (const FiniteSemiring* r : {&x.s, &x.p}) {
    const Subset z = zero_divisors(*r);
    if (!(units(*r) & z).empty()) return fail(r == &x.s ? "S" : "S (+) M");
    if (!nilpotents(*r).subset_of(z)) return fail("Nil not inside Z");
  }
  return pass();
}

Outcome nilpotents_in_primes(const Context& x) {
  const Subset nil = nilpotents(x.p);
  for (const auto& j : x.primes_e())
    if (!nil.subset_of(j)) return fail("P=" + x.product_set(j));
  return pass();
}

const Check kChecks[] = {
    {"Prop-2.1-1", "is a semiring", prop_2_1_1},
    {"Prop-2.1-2", "isomorphic to the subsemiring S x {0}", prop_2_1_2},
    {"Prop-2.1-3", "the index of nilpotency of {0} x M is 2", prop_2_1_3},
    {"Prop-2.1-4", "equipped with componentwise addition", prop_2_1_4},
    {"Thm-2.6-1", "is an N0-graded semiring", thm_2_6_1},
    {"Thm-2.6-2", "if and only if IM in N", thm_2_6_2},
    {"Thm-2.6-3", "sqrt(I (+) N) = sqrt(I) (+) M", thm_2_6_3},
    {"Thm-2.6-4", "I = {s : exists m (s,m) in J}", thm_2_6_4},
    {"Thm-2.6-5", "there is an ideal I of S such that J = I (+) M", thm_2_6_5},
    {"Thm-2.6-6", "each prime ideal includes (0) (+) M", thm_2_6_6},
    {"Thm-2.6-7", "each subtractive prime ideal P is of the form p (+) M", thm_2_6_7},
    {"Cor-2.7-1", "all N0-graded ideals are subtractive iff", cor_2_7_1},
    {"Cor-2.7-2", "S (+) M subtractive implies S and M subtractive", cor_2_7_2},
    {"Cor-2.8", "each prime ideal of a weak Gaussian S (+) M is p (+) M", cor_2_8},
    {"Prop-2.11-reverse", "I weakly prime and ab = 0 imply a,b in ann(M)", prop_2_11_reverse},
    {"Prop-2.11-forward-probe", "imply that a,b in ann(M)", prop_2_11_forward_probe},
    {"Prop-2.13-1", "the residual [N:M] is an ideal", prop_2_13_1},
    {"Prop-2.13-2", "the radical of a primary N is prime", prop_2_13_2},
    {"Thm-2.14-1", "I primary iff I (+) M primary", thm_2_14_1},
    {"Thm-2.14-2", "I (+) N primary implies N primary, IM in N, sqrt(I) = sqrt(N)", thm_2_14_2},
    {"Cor-2.15", "M subtractive: I (+) N primary iff", cor_2_15},
    {"Prop-3.1", "Z(M) is a union of prime ideals", prop_3_1},
    {"Thm-3.3-1", "U(S (+) M) = U(S) (+) V(M)", thm_3_3_1},
    {"Thm-3.3-2", "s idempotent and sm + sm = m", thm_3_3_2},
    {"Thm-3.3-3", "Nil(S (+) M) = Nil(S) (+) M", thm_3_3_3},
    {"Thm-3.3-4", "Z(S (+) M) = (Z(S) u Z(M)) x M", thm_3_3_4},
    {"Prop-3.5", "k a semifield: k (+) M is local", prop_3_5},
    {"Thm-3.7", "presimplifiable iff V(M) = M and S, M presimplifiable", thm_3_7},
    {"Prop-3.9", "presimplifiable implies strongly associate", prop_3_9},
    {"Prop-3.9-converse-census", "converse not claimed", prop_3_9_converse_census},
    {"Prop-3.10-1", "S (+) M strongly associate implies S, M strongly associate", prop_3_10_1},
    {"Prop-3.10-2", "S presimplifiable, V(M) = M: iff M strongly associate", prop_3_10_2},
    {"Prop-3.12", "domainlike iff S and M domainlike", prop_3_12},
    {"Prop-3.14", "V(M) = M: clean iff S clean", prop_3_14},
    {"Prop-3.16", "almost clean iff s = t + e, t not in Z(S) u Z(M)", prop_3_16},
    {"Def-3.17-readings", "either s = u + e or u + e = u", def_3_17_readings},
    {"Prop-3.18", "V(M) = M: weakly clean iff S weakly clean", prop_3_18},
    {"Prop-3.19-1", "(a,m) additively regular iff a and m are", prop_3_19_1},
    {"Prop-3.19-2", "additively regular iff S and M are", prop_3_19_2},
    {"Units-disjoint-zero-divisors", "U and Z disjoint, Nil inside Z", units_vs_zero_divisors},
    {"Nilpotents-in-primes", "Nil inside every prime", nilpotents_in_primes},
};

template <typename F>
TheoremRecord timed(const char* id, const char* anchor, const std::string& instance, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& ex) {
    o = fail(std::string("exception: ") + ex.what());
  }
  const auto t1 = std::chrono::steady_clock::now();
  return {id, anchor, instance, o.status, std::move(o.witness),
          std::chrono::duration<double, std::milli>(t1 - t0).count()};
}

}  // namespace

WeaklyPrimeProbe probe_weakly_prime_forward(const ExpectationInstance& e, const Subset& ideal) {
  WeaklyPrimeProbe probe;
  probe.ideal_weakly_prime = is_weakly_prime(e.factor_s(), ideal);
  probe.product_weakly_prime =
      is_weakly_prime(e.product(), e.box(ideal, Subset::full(e.factor_m().size())));
  auto failure = annihilator_condition_failure(e.factor_m());
  probe.annihilator_condition = !failure.has_value();
  if (failure)
    probe.failing_pair =
        "(" + std::to_string(failure->first) + "," + std::to_string(failure->second) + ")";
  return probe;
}

std::vector<VerificationCase> verification_grid(const GridOptions& options) {
  std::vector<VerificationCase> out;
  for (std::size_t n = 2; n <= options.max_order; ++n)
    for (const auto& se : enumerate_semirings(n)) {
      const SemiringPtr s = *se.semiring();
      for (std::size_t order = 1; order <= options.max_order; ++order)
        for (const auto& me : enumerate_semimodules(s, order))
          out.push_back({s->name() + " (+) " + me.name, s, *me.module()});
    }
  if (options.include_builtins)
    for (const auto& name : builtin_module_names()) {
      ModulePtr m = builtin_module(name);
      if (m->base().size() * m->size() > options.max_product_size) continue;
      out.push_back({m->base().name() + " (+) " + name, m->base_ptr(), m});
    }
  return out;
}

std::vector<TheoremRecord> verify_case(const VerificationCase& c) {
  std::vector<TheoremRecord> out;
  std::optional<Context> ctx;
  TheoremRecord setup = timed("Setup", "build S (+) M and its ideal lattices", c.name, [&] {
    ctx.emplace(c);
    return pass();
  });
  if (!ctx) {
    out.push_back(std::move(setup));
    return out;
  }
  for (const Check& check : kChecks)
    out.push_back(timed(check.id, check.anchor, c.name, [&] { return check.run(*ctx); }));
  return out;
}

// ---------------------------------------------------------------------------
// Numeric

namespace {

WeightedDag make_graph(std::size_t dim, std::size_t nodes, std::vector<Edge> edges) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nodes; ++i) names.push_back("n" + std::to_string(i));
  return WeightedDag(dim, std::move(names), 0, nodes - 1, std::move(edges));
}

}  // namespace

WeightedDag parallel_edges_graph() {
  return make_graph(1, 2, {{0, 1, 0.3, {1.0}}, {0, 1, 0.7, {2.0}}});
}

WeightedDag chain_graph() { return make_graph(1, 3, {{0, 1, 0.5, {1.0}}, {1, 2, 0.4, {3.0}}}); }

WeightedDag diamond_graph() {
  return make_graph(2, 3,
                    {{0, 1, 0.25, {1.0, 0.0}},
                     {0, 1, 0.75, {0.0, 1.0}},
                     {1, 2, 0.6, {2.0, -1.0}},
                     {1, 2, 0.4, {-1.0, 3.0}}});
}

NumericWeight random_weight(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_real_distribution<double> mass(0.0, 2.0);
  std::uniform_real_distribution<double> comp(-2.0, 2.0);
  NumericWeight w{mass(rng), std::vector<double>(dim)};
  for (double& x : w.r) x = comp(rng);
  return w;
}

WeightedDag random_dag(std::uint64_t seed, std::size_t max_nodes, std::size_t max_paths,
                       std::size_t max_dim) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> mass(0.05, 1.5);
  std::uniform_real_distribution<double> comp(-2.0, 2.0);
  for (;;) {
    const std::size_t nodes = 2 + rng() % (std::max<std::size_t>(max_nodes, 2) - 1);
    const std::size_t dim = rng() % (max_dim + 1);
    auto edge = [&](std::size_t a, std::size_t b) {
      Edge e{a, b, mass(rng), std::vector<double>(dim)};
      for (double& x : e.v) x = comp(rng);
      return e;
    };
    std::vector<Edge> edges;
    // A guaranteed source->sink path through a random increasing subsequence.
    std::size_t at = 0;
    while (at != nodes - 1) {
      std::size_t next = at + 1 + rng() % (nodes - 1 - at);
      edges.push_back(edge(at, next));
      at = next;
    }
    for (std::size_t a = 0; a + 1 < nodes; ++a)
      for (std::size_t b = a + 1; b < nodes; ++b)
        if (unit(rng) < 0.3) edges.push_back(edge(a, b));
    WeightedDag g = make_graph(dim, nodes, std::move(edges));
    if (count_paths(g) <= max_paths) return g;
  }
}

std::vector<TheoremRecord> verify_numeric(const NumericOptions& options) {
  std::vector<TheoremRecord> out;
  const std::string inst = "numeric";
  auto fixed = [&](const char* id, WeightedDag g, NumericWeight want) {
    out.push_back(timed(id, "forward pass equals path enumeration", inst, [&] {
      NumericWeight f = forward_total(g);
      NumericWeight b = brute_force_total(g);
      if (!approx_equal(f, want) || !approx_equal(b, want)) return fail("totals differ from expected");
      return pass();
    }));
  };
  fixed("Numeric-parallel-edges", parallel_edges_graph(), {1.0, {1.7}});
  fixed("Numeric-chain", chain_graph(), {0.2, {0.8}});

  out.push_back(timed("Numeric-random-dags", "forward pass equals path enumeration", inst, [&] {
    for (std::size_t k = 0; k < options.random_graphs; ++k) {
      WeightedDag g = random_dag(options.seed + k);
      if (!approx_equal(forward_total(g), brute_force_total(g)))
        return fail("graph seed " + std::to_string(options.seed + k));
    }
    return pass();
  }));

  out.push_back(timed("Numeric-semiring-laws", "semiring laws over the reals", inst, [&] {
    std::mt19937_64 rng(options.seed);
    for (std::size_t k = 0; k < options.law_triples; ++k) {
      const std::size_t dim = rng() % 4;
      NumericWeight a = random_weight(rng, dim), b = random_weight(rng, dim),
                    c = random_weight(rng, dim);
      const auto zero = NumericWeight::zero(dim), one = NumericWeight::one(dim);
      const std::string at = "triple " + std::to_string(k);
      if (!approx_equal((a + b) + c, a + (b + c))) return fail(at + ": additive associativity");
      if (!approx_equal(a + b, b + a)) return fail(at + ": additive commutativity");
      if (!approx_equal((a * b) * c, a * (b * c))) return fail(at + ": multiplicative associativity");
      if (!approx_equal(a * b, b * a)) return fail(at + ": multiplicative commutativity");
      if (!approx_equal(a * (b + c), a * b + a * c)) return fail(at + ": distributivity");
      if (!approx_equal(a * zero, zero) || !approx_equal(a + zero, a) || !approx_equal(a * one, a))
        return fail(at + ": identities");
    }
    return pass();
  }));
  return out;
}

VerificationReport run_verification(const SuiteOptions& options) {
  VerificationReport report;
  const auto cases = verification_grid(options.grid);
  report.cases = cases.size();

  std::vector<std::vector<TheoremRecord>> per_case(cases.size());
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) per_case[i] = verify_case(cases[i]);
  } else {
    // Strided partitions; results land in their grid slot.
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < cases.size(); i += jobs) per_case[i] = verify_case(cases[i]);
      }));
    for (auto& f : workers) f.get();
  }
  for (auto& records : per_case)
    std::move(records.begin(), records.end(), std::back_inserter(report.records));
  if (options.include_numeric) {
    auto numeric = verify_numeric(options.numeric);
    std::move(numeric.begin(), numeric.end(), std::back_inserter(report.records));
  }
  return report;
}

}  // namespace expsr
