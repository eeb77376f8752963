#pragma once

// Certificate producers for the negative results (coprime-to-6 orders and
// non-prime orders), the exhaustive positive checks, and the overall
// classification of Z and Z/nZ.
//
// Every certificate is re-verified from the primitives by reverify() before
// `verified` is set; nothing is trusted from the construction path.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "amp/certificate.hpp"
#include "amp/config.hpp"
#include "amp/exhaustive.hpp"
#include "amp/genfun.hpp"

namespace amp {

// Orders up to which coprime-to-6 certificates also enumerate every matching.
inline constexpr std::int64_t kCoprimeEnumerationLimit = 14;

struct GroupDescriptor {
  bool integers = false;
  std::int64_t n = 0;  // cyclic order when !integers

  static GroupDescriptor cyclic(std::int64_t n) { return {false, n}; }
  static GroupDescriptor z() { return {true, 0}; }

  std::string describe() const { return integers ? "Z" : "Z/" + std::to_string(n) + "Z"; }
};

/// "Z" (or "z") for the integers, otherwise a positive decimal order.
inline GroupDescriptor parse_descriptor(const std::string& s) {
  if (s == "Z" || s == "z") return GroupDescriptor::z();
  if (s.empty() || s.size() > 9 ||
      !std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch) != 0; })) {
    throw ContractError("invalid group descriptor '" + s + "' (expected a positive integer or Z)");
  }
  const std::int64_t n = std::stoll(s);
  if (n < 1) throw ContractError("group order must be positive");
  return GroupDescriptor::cyclic(n);
}

/// Verdict the classification predicts: Z and Z/pZ for p in {2,3,5} hold,
/// the trivial group holds vacuously, every other Z/nZ fails.
inline Verdict expected_verdict(const GroupDescriptor& d) {
  if (d.integers) return Verdict::holds;
  if (d.n == 1) return Verdict::vacuous_holds;
  if (d.n == 2 || d.n == 3 || d.n == 5) return Verdict::holds;
  return Verdict::fails;
}

namespace detail {

inline EnumerationSummary summarize(const AcyclicityReport& r) {
  EnumerationSummary s;
  s.total_matchings = r.total_matchings;
  s.class_sizes = class_size_multiset(r);
  s.singleton_classes = static_cast<std::uint64_t>(std::count(s.class_sizes.begin(), s.class_sizes.end(), 1));
  return s;
}

inline std::vector<std::uint64_t> sorted_coefficients(const GenPoly& p) {
  std::vector<std::uint64_t> out;
  for (const auto& [e, c] : p.terms()) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::pair<std::int64_t, std::int64_t>> residues(const GenPoly& p, std::int64_t n,
                                                                   std::int64_t m) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& [e, c] : p.terms()) {
    const std::int64_t w0 = e.w0, w1 = e.w1, w3 = e.w3;
    out.emplace_back(w0 + w1 + w3 - (n - 3), 2 * w0 + w1 + 1 - w3 - m);
  }
  return out;
}

// n = 6k+1 forces 3w0 + 2w1 = n - 2 = 6k - 1, which is odd (so w0 != 0) and
// not a multiple of 3 (so w1 != 0). Checks the arithmetic and every term.
inline bool case1_obstruction_holds(const GenPoly& p, std::int64_t n) {
  const std::int64_t rhs = n - 2;
  if (rhs % 2 == 0 || rhs % 3 == 0) return false;
  for (const auto& [e, c] : p.terms()) {
    if (3 * static_cast<std::int64_t>(e.w0) + 2 * static_cast<std::int64_t>(e.w1) != rhs) return false;
    if (e.w0 == 0 || e.w1 == 0) return false;
  }
  return true;
}

inline PairWitness witness_of(const SubsetPair& p, const AcyclicityReport& r) {
  return PairWitness{values_of(p.a()), values_of(p.b()), r.total_matchings, class_size_multiset(r)};
}

inline std::string dump(const std::string& what, const GenPoly& x, const GenPoly& y) {
  return what + "\n  left:  " + to_string(x) + "\n  right: " + to_string(y);
}

inline void expect(std::vector<std::string>& problems, bool ok, const std::string& msg) {
  if (!ok) problems.push_back(msg);
}

struct Reverifier {
  const RunConfig& cfg;
  std::vector<std::string>& problems;

  void operator()(const Coprime6Evidence& e) const {
    if (e.n <= 5 || std::gcd(e.n, std::int64_t{6}) != 1) {
      problems.push_back("n is not > 5 and coprime to 6");
      return;
    }
    const std::int64_t want_m = e.n % 6 == 1 ? 2 : 6;
    expect(problems, e.m == want_m, "m does not match n mod 6");
    expect(problems, e.case_number == (want_m == 2 ? 1 : 2), "case number does not match n mod 6");
    expect(problems, e.k == e.n / 6, "k != n / 6");
    if (e.m != want_m) return;
    const auto pair = construction_pair(e.n, e.m);
    expect(problems, e.a == values_of(pair.a()) && e.b == values_of(pair.b()),
           "pair is not Z/nZ \\ {0,1,3} -> Z/nZ \\ {0,1,m}");

    const GenPoly transfer = transfer_genfun(e.n, e.m);
    expect(problems, transfer == e.polynomial, dump("polynomial differs from transfer matrix", e.polynomial, transfer));
    expect(problems, e.transfer_agrees, "certificate records transfer disagreement");
    if (has_closed_form(e.n, e.m)) {
      const GenPoly closed = closed_form(e.n, e.m);
      expect(problems, closed == e.polynomial, dump("polynomial differs from closed form", e.polynomial, closed));
    }
    expect(problems, !e.polynomial.is_zero(), "polynomial is zero (pair has no matching)");
    expect(problems, e.polynomial.min_coefficient() == e.min_coefficient, "min_coefficient mismatch");
    expect(problems, e.polynomial.coefficient_sum() == e.coefficient_sum, "coefficient_sum mismatch");
    expect(problems, e.min_coefficient >= 2,
           "coefficient " + std::to_string(e.min_coefficient) + " < 2: a singleton multiplicity class exists");
    const auto res = residues(e.polynomial, e.n, e.m);
    expect(problems, res == e.constraint_residues, "constraint residues mismatch");
    expect(problems, std::all_of(res.begin(), res.end(), [](const auto& r) { return r.first == 0 && r.second == 0; }),
           "some term violates the exponent constraints");
    if (e.case_number == 1) {
      const bool ok = case1_obstruction_holds(e.polynomial, e.n);
      expect(problems, e.modular_obstruction.has_value() && *e.modular_obstruction == ok,
             "modular obstruction record mismatch");
      expect(problems, ok, "modular obstruction 3w0 + 2w1 = n - 2 fails");
    }
    if (e.enumeration) {
      const auto report = acyclicity_report(pair, cfg.enumeration_bound);
      const auto summary = summarize(report);
      expect(problems, summary.total_matchings == e.enumeration->total_matchings &&
                           summary.class_sizes == e.enumeration->class_sizes &&
                           summary.singleton_classes == e.enumeration->singleton_classes,
             "enumeration summary mismatch");
      expect(problems, summary.singleton_classes == 0, "enumeration found a singleton multiplicity class");
      expect(problems, summary.class_sizes == sorted_coefficients(e.polynomial),
             "class sizes differ from polynomial coefficients");
      const GenPoly brute = brute_genfun(e.n, e.m, cfg.enumeration_bound);
      expect(problems, brute == e.polynomial, dump("polynomial differs from enumeration", e.polynomial, brute));
      expect(problems, e.brute_agrees.value_or(false), "certificate records enumeration disagreement");
    }
  }

  void operator()(const NonprimeEvidence& e) const {
    if (e.n < 4 || is_prime(e.n)) {
      problems.push_back("n is not composite");
      return;
    }
    const auto g = GroupCtx::cyclic(e.n);
    expect(problems, e.generator == smallest_prime_divisor(e.n), "generator is not the least prime divisor");
    const auto sub = subgroup_generated(g, Element{e.generator});
    std::vector<std::int64_t> sub_values;
    for (Element s : sub) sub_values.push_back(s.value);
    expect(problems, e.a == sub_values, "A is not the subgroup <a>");
    const bool x_outside = !std::binary_search(sub_values.begin(), sub_values.end(), e.x);
    expect(problems, x_outside && e.x > 0 && e.x < e.n, "x must lie outside <a>");
    std::vector<std::int64_t> want_b;
    for (std::int64_t v : sub_values) {
      if (v != 0) want_b.push_back(v);
    }
    want_b.push_back(e.x);
    std::sort(want_b.begin(), want_b.end());
    expect(problems, e.b == want_b, "B is not (<a> u {x}) \\ {0}");
    const bool exists = matching_exists(SubsetPair::make(g, e.a, e.b));
    expect(problems, !exists, "a matching exists");
    expect(problems, e.matching_exists == exists, "matching_exists record mismatch");
  }

  void operator()(const ExhaustiveEvidence& e) const {
    const auto g = GroupCtx::cyclic(e.n);
    const auto r = verify_group_amp(g, e.symmetry_reduction, cfg.exhaustive_group_bound);
    expect(problems, r.holds == e.holds, "exhaustive verdict mismatch on re-run");
    expect(problems, r.pairs_checked == e.pairs_checked && r.pairs_skipped == e.pairs_skipped,
           "pair counts mismatch on re-run");
    expect(problems, r.total_matchings == e.total_matchings, "matching total mismatch on re-run");
    expect(problems, r.digest == e.digest, "digest mismatch on re-run");
    expect(problems, e.holds == !e.counterexample.has_value(), "counterexample presence inconsistent");
    if (e.counterexample) {
      const auto pair = SubsetPair::make(g, e.counterexample->a, e.counterexample->b);
      const auto report = acyclicity_report(pair, cfg.enumeration_bound);
      expect(problems, !report.acyclic_witness, "counterexample has an acyclic matching");
      expect(problems, witness_of(pair, report).class_sizes == e.counterexample->class_sizes,
             "counterexample class sizes mismatch");
    }
  }

  void operator()(const SampleEvidence& e) const {
    const auto r = verify_integer_sample(IntegerSampleSpec{e.seed, e.samples, e.max_size, e.range},
                                         cfg.enumeration_bound);
    expect(problems, r.all_acyclic == e.all_acyclic, "sample verdict mismatch on re-run");
    expect(problems, r.samples == e.samples && r.total_matchings == e.total_matchings,
           "sample totals mismatch on re-run");
    expect(problems, e.all_acyclic == !e.failure.has_value(), "failure presence inconsistent");
  }

  void operator()(const VacuousEvidence& e) const {
    expect(problems, e.n == 1, "vacuous evidence only applies to the trivial group");
  }
};

inline Verdict verdict_of(const Evidence& ev) {
  if (const auto* e = std::get_if<ExhaustiveEvidence>(&ev)) return e->holds ? Verdict::holds : Verdict::fails;
  if (const auto* e = std::get_if<SampleEvidence>(&ev)) return e->all_acyclic ? Verdict::holds : Verdict::fails;
  if (std::holds_alternative<VacuousEvidence>(ev)) return Verdict::vacuous_holds;
  return Verdict::fails;
}

}  // namespace detail

/// Re-checks a certificate's evidence against the primitives. Returns the
/// list of problems; empty means the evidence supports the verdict.
inline std::vector<std::string> reverify(const Certificate& cert, const RunConfig& cfg = {}) {
  std::vector<std::string> problems;
  try {
    std::visit(detail::Reverifier{cfg, problems}, cert.evidence);
  } catch (const ContractError& e) {
    problems.push_back(std::string("evidence violates a precondition: ") + e.what());
  }
  if (detail::verdict_of(cert.evidence) != cert.verdict) {
    problems.push_back("verdict " + verdict_name(cert.verdict) + " is not what the evidence shows");
  }
  return problems;
}

namespace detail {

inline void finalize(Certificate& cert, const RunConfig& cfg) {
  auto problems = reverify(cert, cfg);
  cert.verified = problems.empty();
  for (auto& p : problems) cert.notes.push_back("re-verification: " + p);
}

}  // namespace detail

/// Failure certificate for Z/nZ with n > 5 coprime to 6, using the pair
/// A = Z/nZ \ {0,1,3}, B = Z/nZ \ {0,1,m} with m = 2 (n = 1 mod 6) or
/// m = 6 (n = 5 mod 6). Throws VerificationFailure when two evidence routes
/// disagree.
inline Certificate certify_coprime6(std::int64_t n, const RunConfig& cfg = {}) {
  if (n <= 5 || std::gcd(n, std::int64_t{6}) != 1) {
    throw ContractError("certify_coprime6 needs n > 5 coprime to 6, got " + std::to_string(n));
  }
  Coprime6Evidence e;
  e.n = n;
  e.k = n / 6;
  e.case_number = n % 6 == 1 ? 1 : 2;
  e.m = e.case_number == 1 ? 2 : 6;
  const auto pair = construction_pair(n, e.m);
  e.a = values_of(pair.a());
  e.b = values_of(pair.b());

  e.polynomial = closed_form(n, e.m);
  const GenPoly transfer = transfer_genfun(n, e.m);
  e.transfer_agrees = transfer == e.polynomial;
  if (!e.transfer_agrees) {
    throw VerificationFailure(detail::dump("closed form and transfer matrix disagree for n=" + std::to_string(n),
                                           e.polynomial, transfer));
  }
  e.min_coefficient = e.polynomial.min_coefficient();
  e.coefficient_sum = e.polynomial.coefficient_sum();
  e.constraint_residues = detail::residues(e.polynomial, n, e.m);
  if (e.case_number == 1) e.modular_obstruction = detail::case1_obstruction_holds(e.polynomial, n);

  Certificate cert;
  cert.claim = Claim::coprime6_failure;
  cert.subject = GroupDescriptor::cyclic(n).describe();
  cert.verdict = Verdict::fails;

  if (n <= kCoprimeEnumerationLimit && static_cast<std::size_t>(n - 3) <= cfg.enumeration_bound) {
    const auto report = acyclicity_report(pair, cfg.enumeration_bound);
    const GenPoly brute = brute_genfun(n, e.m, cfg.enumeration_bound);
    e.brute_agrees = brute == e.polynomial;
    e.enumeration = detail::summarize(report);
    if (!*e.brute_agrees || report.total_matchings != e.coefficient_sum ||
        e.enumeration->class_sizes != detail::sorted_coefficients(e.polynomial)) {
      throw VerificationFailure(detail::dump("enumeration and closed form disagree for n=" + std::to_string(n),
                                             e.polynomial, brute));
    }
  } else {
    cert.notes.push_back("enumeration skipped (n above " + std::to_string(kCoprimeEnumerationLimit) +
                         " or enumeration bound)");
  }
  if (e.min_coefficient < 2) {
    cert.notes.push_back("COEFFICIENT BELOW 2: the pair has an acyclic matching; the failure claim is falsified");
  }
  cert.evidence = std::move(e);
  detail::finalize(cert, cfg);
  return cert;
}

/// Failure certificate for composite n: A = <a> with a the least prime
/// divisor of n, B = (<a> u {x}) \ {0} with x the least element outside <a>.
inline Certificate nonprime_counterexample(std::int64_t n, const RunConfig& cfg = {}) {
  if (n < 4 || is_prime(n)) {
    throw ContractError("nonprime_counterexample needs composite n, got " + std::to_string(n));
  }
  const auto g = GroupCtx::cyclic(n);
  NonprimeEvidence e;
  e.n = n;
  e.generator = smallest_prime_divisor(n);
  const auto sub = subgroup_generated(g, Element{e.generator});
  const ElementSet sub_set(sub);
  e.x = 1;
  while (sub_set.contains(Element{e.x})) ++e.x;
  for (Element s : sub) e.a.push_back(s.value);
  for (Element s : sub) {
    if (s.value != 0) e.b.push_back(s.value);
  }
  e.b.push_back(e.x);
  std::sort(e.b.begin(), e.b.end());
  e.matching_exists = matching_exists(SubsetPair::make(g, e.a, e.b));

  Certificate cert;
  cert.claim = Claim::nonprime_failure;
  cert.subject = GroupDescriptor::cyclic(n).describe();
  cert.verdict = Verdict::fails;
  if (e.matching_exists) cert.notes.push_back("MATCHING EXISTS: the failure claim is falsified");
  cert.evidence = std::move(e);
  detail::finalize(cert, cfg);
  return cert;
}

/// Exhaustive acyclic-matching-property certificate for a small Z/nZ.
inline Certificate certify_amp(std::int64_t n, const RunConfig& cfg = {}) {
  const auto g = GroupCtx::cyclic(n);
  const auto r = verify_group_amp(g, cfg.symmetry_reduction, cfg.exhaustive_group_bound);
  ExhaustiveEvidence e;
  e.n = n;
  e.symmetry_reduction = cfg.symmetry_reduction;
  e.pairs_checked = r.pairs_checked;
  e.pairs_skipped = r.pairs_skipped;
  e.total_matchings = r.total_matchings;
  e.holds = r.holds;
  e.digest = r.digest;
  if (r.counterexample) {
    e.counterexample = detail::witness_of(*r.counterexample, acyclicity_report(*r.counterexample, cfg.enumeration_bound));
  }
  Certificate cert;
  cert.claim = Claim::amp_holds;
  cert.subject = g.describe();
  cert.verdict = r.holds ? Verdict::holds : Verdict::fails;
  cert.evidence = std::move(e);
  detail::finalize(cert, cfg);
  return cert;
}

/// Spot check of Z by seeded random subsets of [-6, 6].
inline Certificate certify_integers_sampled(const RunConfig& cfg = {}) {
  const IntegerSampleSpec spec{cfg.seed, cfg.samples, 5, 6};
  const auto r = verify_integer_sample(spec, cfg.enumeration_bound);
  SampleEvidence e;
  e.seed = spec.seed;
  e.samples = r.samples;
  e.max_size = spec.max_size;
  e.range = spec.range;
  e.total_matchings = r.total_matchings;
  e.all_acyclic = r.all_acyclic;
  if (r.first_failure) {
    e.failure = detail::witness_of(*r.first_failure, acyclicity_report(*r.first_failure, cfg.enumeration_bound));
  }
  Certificate cert;
  cert.claim = Claim::amp_holds;
  cert.subject = "Z";
  cert.verdict = r.all_acyclic ? Verdict::holds : Verdict::fails;
  cert.evidence = std::move(e);
  detail::finalize(cert, cfg);
  return cert;
}

/// Classification verdict with supporting evidence:
///   Z          -> holds, spot-checked by sampling;
///   Z/1Z       -> holds vacuously (no valid pair exists);
///   Z/nZ, n in {2,3,5} -> exhaustive search;
///   Z/nZ, n > 5 coprime to 6 -> coprime6 construction;
///   other Z/nZ -> non-prime construction.
/// `verified` additionally requires the verdict to match expected_verdict().
inline Certificate classify(const GroupDescriptor& d, const RunConfig& cfg = {}) {
  Certificate cert;
  if (d.integers) {
    cert = certify_integers_sampled(cfg);
  } else if (d.n < 1) {
    throw ContractError("group order must be positive");
  } else if (d.n == 1) {
    cert.subject = d.describe();
    cert.verdict = Verdict::vacuous_holds;
    cert.evidence = VacuousEvidence{1};
    cert.notes.push_back("trivial group: no pair with 0 outside B exists, property holds vacuously");
    detail::finalize(cert, cfg);
  } else if (d.n == 2 || d.n == 3 || d.n == 5) {
    cert = certify_amp(d.n, cfg);
  } else if (d.n > 5 && std::gcd(d.n, std::int64_t{6}) == 1) {
    cert = certify_coprime6(d.n, cfg);
  } else {
    cert = nonprime_counterexample(d.n, cfg);
  }
  cert.claim = Claim::classification;
  if (cert.verdict != expected_verdict(d)) {
    cert.notes.push_back("verdict " + verdict_name(cert.verdict) + " disagrees with expected " +
                         verdict_name(expected_verdict(d)));
    cert.verified = false;
  }
  return cert;
}

inline std::string basis_label(const Certificate& c) {
  const auto type = evidence_type(c.evidence);
  if (type == "sampled") return "torsion-free, sampled";
  if (type == "vacuous") return "trivial group, vacuous";
  return type;
}

}  // namespace amp
