#pragma once

// Certificates: serialized evidence for a holds/fails verdict that can be
// re-checked from the primitives without trusting how it was produced.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "amp/poly.hpp"

namespace amp {

inline constexpr int kCertificateSchemaVersion = 1;

enum class Claim { coprime6_failure, nonprime_failure, amp_holds, classification };
enum class Verdict { holds, fails, vacuous_holds };

inline std::string claim_name(Claim c) {
  switch (c) {
    case Claim::coprime6_failure: return "coprime6_failure";
    case Claim::nonprime_failure: return "nonprime_failure";
    case Claim::amp_holds: return "amp_holds";
    case Claim::classification: return "classification";
  }
  return "?";
}

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::vacuous_holds: return "vacuous_holds";
  }
  return "?";
}

struct EnumerationSummary {
  std::uint64_t total_matchings = 0;
  std::vector<std::uint64_t> class_sizes;  // ascending
  std::uint64_t singleton_classes = 0;
};

/// A = Z/nZ \ {0,1,3}, B = Z/nZ \ {0,1,m} admits no acyclic matching.
struct Coprime6Evidence {
  std::int64_t n = 0;
  std::int64_t m = 0;
  int case_number = 0;  // 1: n = 6k+1, m = 2; 2: n = 6k+5, m = 6
  std::int64_t k = 0;
  std::vector<std::int64_t> a, b;
  GenPoly polynomial;
  std::uint64_t min_coefficient = 0;
  std::uint64_t coefficient_sum = 0;
  // Per term: (w0+w1+w3-(n-3), 2w0+w1+1-w3-m). All zero when valid.
  std::vector<std::pair<std::int64_t, std::int64_t>> constraint_residues;
  bool transfer_agrees = false;
  // Case 1 only: 3w0 + 2w1 = n - 2 is odd and not divisible by 3, so neither
  // w0 = 0 nor w1 = 0 occurs.
  std::optional<bool> modular_obstruction;
  std::optional<bool> brute_agrees;
  std::optional<EnumerationSummary> enumeration;
};

/// A = <a>, B = (<a> u {x}) \ {0} admits no matching at all.
struct NonprimeEvidence {
  std::int64_t n = 0;
  std::int64_t generator = 0;
  std::int64_t x = 0;
  std::vector<std::int64_t> a, b;
  bool matching_exists = true;
};

struct PairWitness {
  std::vector<std::int64_t> a, b;
  std::uint64_t total_matchings = 0;
  std::vector<std::uint64_t> class_sizes;
};

struct ExhaustiveEvidence {
  std::int64_t n = 0;
  bool symmetry_reduction = true;
  std::uint64_t pairs_checked = 0;
  std::uint64_t pairs_skipped = 0;
  std::uint64_t total_matchings = 0;
  bool holds = true;
  std::optional<PairWitness> counterexample;
  std::string digest;
};

struct SampleEvidence {
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::size_t max_size = 0;
  std::int64_t range = 0;
  std::uint64_t total_matchings = 0;
  bool all_acyclic = true;
  std::optional<PairWitness> failure;
};

struct VacuousEvidence {
  std::int64_t n = 1;
};

using Evidence =
    std::variant<Coprime6Evidence, NonprimeEvidence, ExhaustiveEvidence, SampleEvidence, VacuousEvidence>;

inline std::string evidence_type(const Evidence& e) {
  struct V {
    std::string operator()(const Coprime6Evidence&) const { return "coprime6"; }
    std::string operator()(const NonprimeEvidence&) const { return "nonprime"; }
    std::string operator()(const ExhaustiveEvidence&) const { return "exhaustive"; }
    std::string operator()(const SampleEvidence&) const { return "sampled"; }
    std::string operator()(const VacuousEvidence&) const { return "vacuous"; }
  };
  return std::visit(V{}, e);
}

struct Certificate {
  Claim claim = Claim::classification;
  std::string subject;  // "Z/7Z" or "Z"
  Verdict verdict = Verdict::fails;
  Evidence evidence;
  bool verified = false;
  std::vector<std::string> notes;
};

// ---------------------------------------------------------------------------
// JSON

namespace detail {

inline nlohmann::json witness_json(const PairWitness& w) {
  return {{"A", w.a}, {"B", w.b}, {"total_matchings", w.total_matchings}, {"class_sizes", w.class_sizes}};
}

inline PairWitness witness_from_json(const nlohmann::json& j) {
  PairWitness w;
  w.a = j.at("A").get<std::vector<std::int64_t>>();
  w.b = j.at("B").get<std::vector<std::int64_t>>();
  w.total_matchings = j.at("total_matchings").get<std::uint64_t>();
  w.class_sizes = j.at("class_sizes").get<std::vector<std::uint64_t>>();
  return w;
}

struct EvidenceToJson {
  nlohmann::json operator()(const Coprime6Evidence& e) const {
    nlohmann::json j = {{"type", "coprime6"},
                        {"n", e.n},
                        {"m", e.m},
                        {"case", e.case_number},
                        {"k", e.k},
                        {"A", e.a},
                        {"B", e.b},
                        {"polynomial", to_json(e.polynomial)},
                        {"polynomial_text", to_string(e.polynomial)},
                        {"min_coefficient", e.min_coefficient},
                        {"coefficient_sum", e.coefficient_sum},
                        {"transfer_agrees", e.transfer_agrees}};
    auto residues = nlohmann::json::array();
    for (const auto& [r1, r2] : e.constraint_residues) residues.push_back({r1, r2});
    j["constraint_residues"] = residues;
    j["modular_obstruction"] = e.modular_obstruction ? nlohmann::json(*e.modular_obstruction) : nullptr;
    j["brute_agrees"] = e.brute_agrees ? nlohmann::json(*e.brute_agrees) : nullptr;
    if (e.enumeration) {
      j["enumeration"] = {{"total_matchings", e.enumeration->total_matchings},
                          {"class_sizes", e.enumeration->class_sizes},
                          {"singleton_classes", e.enumeration->singleton_classes}};
    } else {
      j["enumeration"] = nullptr;
    }
    return j;
  }
  nlohmann::json operator()(const NonprimeEvidence& e) const {
    return {{"type", "nonprime"}, {"n", e.n},   {"generator", e.generator},          {"x", e.x},
            {"A", e.a},           {"B", e.b},   {"matching_exists", e.matching_exists}};
  }
  nlohmann::json operator()(const ExhaustiveEvidence& e) const {
    nlohmann::json j = {{"type", "exhaustive"},
                        {"n", e.n},
                        {"symmetry_reduction", e.symmetry_reduction},
                        {"pairs_checked", e.pairs_checked},
                        {"pairs_skipped", e.pairs_skipped},
                        {"total_matchings", e.total_matchings},
                        {"holds", e.holds},
                        {"digest", e.digest}};
    j["counterexample"] = e.counterexample ? witness_json(*e.counterexample) : nlohmann::json(nullptr);
    return j;
  }
  nlohmann::json operator()(const SampleEvidence& e) const {
    nlohmann::json j = {{"type", "sampled"},
                        {"seed", e.seed},
                        {"samples", e.samples},
                        {"max_size", e.max_size},
                        {"range", e.range},
                        {"total_matchings", e.total_matchings},
                        {"all_acyclic", e.all_acyclic}};
    j["failure"] = e.failure ? witness_json(*e.failure) : nlohmann::json(nullptr);
    return j;
  }
  nlohmann::json operator()(const VacuousEvidence& e) const { return {{"type", "vacuous"}, {"n", e.n}}; }
};

template <class T>
std::optional<T> opt(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

inline Evidence evidence_from_json(const nlohmann::json& j) {
  const auto type = j.at("type").get<std::string>();
  if (type == "coprime6") {
    Coprime6Evidence e;
    e.n = j.at("n").get<std::int64_t>();
    e.m = j.at("m").get<std::int64_t>();
    e.case_number = j.at("case").get<int>();
    e.k = j.at("k").get<std::int64_t>();
    e.a = j.at("A").get<std::vector<std::int64_t>>();
    e.b = j.at("B").get<std::vector<std::int64_t>>();
    e.polynomial = poly_from_json(j.at("polynomial"));
    e.min_coefficient = j.at("min_coefficient").get<std::uint64_t>();
    e.coefficient_sum = j.at("coefficient_sum").get<std::uint64_t>();
    for (const auto& r : j.at("constraint_residues")) {
      e.constraint_residues.emplace_back(r.at(0).get<std::int64_t>(), r.at(1).get<std::int64_t>());
    }
    e.transfer_agrees = j.at("transfer_agrees").get<bool>();
    e.modular_obstruction = opt<bool>(j, "modular_obstruction");
    e.brute_agrees = opt<bool>(j, "brute_agrees");
    if (j.contains("enumeration") && !j.at("enumeration").is_null()) {
      const auto& en = j.at("enumeration");
      e.enumeration = EnumerationSummary{en.at("total_matchings").get<std::uint64_t>(),
                                         en.at("class_sizes").get<std::vector<std::uint64_t>>(),
                                         en.at("singleton_classes").get<std::uint64_t>()};
    }
    return e;
  }
  if (type == "nonprime") {
    NonprimeEvidence e;
    e.n = j.at("n").get<std::int64_t>();
    e.generator = j.at("generator").get<std::int64_t>();
    e.x = j.at("x").get<std::int64_t>();
    e.a = j.at("A").get<std::vector<std::int64_t>>();
    e.b = j.at("B").get<std::vector<std::int64_t>>();
    e.matching_exists = j.at("matching_exists").get<bool>();
    return e;
  }
  if (type == "exhaustive") {
    ExhaustiveEvidence e;
    e.n = j.at("n").get<std::int64_t>();
    e.symmetry_reduction = j.at("symmetry_reduction").get<bool>();
    e.pairs_checked = j.at("pairs_checked").get<std::uint64_t>();
    e.pairs_skipped = j.at("pairs_skipped").get<std::uint64_t>();
    e.total_matchings = j.at("total_matchings").get<std::uint64_t>();
    e.holds = j.at("holds").get<bool>();
    e.digest = j.at("digest").get<std::string>();
    if (!j.at("counterexample").is_null()) e.counterexample = witness_from_json(j.at("counterexample"));
    return e;
  }
  if (type == "sampled") {
    SampleEvidence e;
    e.seed = j.at("seed").get<std::uint64_t>();
    e.samples = j.at("samples").get<std::uint64_t>();
    e.max_size = j.at("max_size").get<std::size_t>();
    e.range = j.at("range").get<std::int64_t>();
    e.total_matchings = j.at("total_matchings").get<std::uint64_t>();
    e.all_acyclic = j.at("all_acyclic").get<bool>();
    if (!j.at("failure").is_null()) e.failure = witness_from_json(j.at("failure"));
    return e;
  }
  if (type == "vacuous") return VacuousEvidence{j.at("n").get<std::int64_t>()};
  throw ContractError("unknown evidence type '" + type + "'");
}

}  // namespace detail

inline nlohmann::json to_json(const Certificate& c) {
  return {{"schema_version", kCertificateSchemaVersion},
          {"claim", claim_name(c.claim)},
          {"subject", c.subject},
          {"verdict", verdict_name(c.verdict)},
          {"evidence_type", evidence_type(c.evidence)},
          {"evidence", std::visit(detail::EvidenceToJson{}, c.evidence)},
          {"verified", c.verified},
          {"notes", c.notes}};
}

inline Certificate certificate_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema_version").get<int>() != kCertificateSchemaVersion) {
      throw ContractError("unsupported certificate schema version");
    }
    Certificate c;
    const auto claim = j.at("claim").get<std::string>();
    if (claim == "coprime6_failure") c.claim = Claim::coprime6_failure;
    else if (claim == "nonprime_failure") c.claim = Claim::nonprime_failure;
    else if (claim == "amp_holds") c.claim = Claim::amp_holds;
    else if (claim == "classification") c.claim = Claim::classification;
    else throw ContractError("unknown claim '" + claim + "'");
    c.subject = j.at("subject").get<std::string>();
    const auto verdict = j.at("verdict").get<std::string>();
    if (verdict == "holds") c.verdict = Verdict::holds;
    else if (verdict == "fails") c.verdict = Verdict::fails;
    else if (verdict == "vacuous_holds") c.verdict = Verdict::vacuous_holds;
    else throw ContractError("unknown verdict '" + verdict + "'");
    c.evidence = detail::evidence_from_json(j.at("evidence"));
    c.verified = j.at("verified").get<bool>();
    c.notes = j.at("notes").get<std::vector<std::string>>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace amp
