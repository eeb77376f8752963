#pragma once

// Command implementations behind the `amp` CLI. Each command writes its
// payload to `out` (or to RunConfig::output_path) and returns an exit code:
//   0 success, 1 verification failure, 2 usage error, 3 resource bound exceeded.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "amp/verifier.hpp"

namespace amp {

enum ExitCode : int { kExitOk = 0, kExitVerification = 1, kExitUsage = 2, kExitResource = 3 };

inline constexpr int kReportSchemaVersion = 1;

/// Runs `body`, mapping library exceptions to exit codes with a message on `err`.
inline int run_guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ContractError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "resource bound exceeded: " << e.what() << "\n";
    return kExitResource;
  } catch (const OverflowError& e) {
    err << "resource bound exceeded (overflow): " << e.what() << "\n";
    return kExitResource;
  } catch (const VerificationFailure& e) {
    err << "VERIFICATION FAILURE\n" << e.what() << "\n";
    return kExitVerification;
  }
}

namespace detail {

inline std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw ContractError("not an integer: '" + item + "'");
    }
    if (used != item.size()) throw ContractError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

/// Writes `payload` to the configured output path, or to `out`.
inline void emit(const std::string& payload, const RunConfig& cfg, std::ostream& out) {
  if (!cfg.output_path) {
    out << payload;
    return;
  }
  std::ofstream f(*cfg.output_path, std::ios::binary | std::ios::trunc);
  if (!f) throw ContractError("cannot open output file " + *cfg.output_path);
  f << payload;
  if (!f) throw ContractError("write failed for output file " + *cfg.output_path);
}

inline std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return "{" + s + "}";
}

inline std::string certificate_summary(const Certificate& c) {
  std::ostringstream os;
  os << c.subject << ": " << verdict_name(c.verdict) << " (" << basis_label(c) << ")\n";
  struct V {
    std::ostringstream& os;
    void operator()(const Coprime6Evidence& e) const {
      os << "  pair: A = Z/" << e.n << "Z \\ {0,1,3}, B = Z/" << e.n << "Z \\ {0,1," << e.m << "} (case "
         << e.case_number << ")\n";
      os << "  generating function: " << to_string(e.polynomial) << "\n";
      os << "  min coefficient: " << e.min_coefficient << ", matchings: " << e.coefficient_sum << "\n";
      if (e.enumeration) {
        os << "  enumeration: " << e.enumeration->total_matchings << " matchings, "
           << e.enumeration->class_sizes.size() << " classes, " << e.enumeration->singleton_classes
           << " singleton\n";
      }
    }
    void operator()(const NonprimeEvidence& e) const {
      os << "  pair: A = <" << e.generator << "> = " << join(e.a) << ", B = " << join(e.b) << "\n";
      os << "  matching exists: " << (e.matching_exists ? "yes" : "no") << "\n";
    }
    void operator()(const ExhaustiveEvidence& e) const {
      os << "  pairs checked: " << e.pairs_checked << ", skipped by symmetry: " << e.pairs_skipped
         << ", matchings: " << e.total_matchings << ", digest: " << e.digest << "\n";
      if (e.counterexample) {
        os << "  counterexample: A = " << join(e.counterexample->a) << ", B = " << join(e.counterexample->b)
           << " (size " << e.counterexample->a.size() << ")\n";
      }
    }
    void operator()(const SampleEvidence& e) const {
      os << "  samples: " << e.samples << ", seed: " << e.seed << ", elements in [-" << e.range << ", "
         << e.range << "], |A| <= " << e.max_size << ", all acyclic: " << (e.all_acyclic ? "yes" : "no")
         << "\n";
    }
    void operator()(const VacuousEvidence&) const { os << "  no valid pair exists\n"; }
  };
  std::visit(V{os}, c.evidence);
  os << "  verified: " << (c.verified ? "yes" : "NO") << "\n";
  for (const auto& note : c.notes) os << "  note: " << note << "\n";
  return os.str();
}

// Certificates are nested, so json and csv both emit the JSON form.
inline int emit_certificate(const Certificate& cert, const RunConfig& cfg, std::ostream& out,
                            std::ostream& err) {
  const std::string json = to_json(cert).dump(2) + "\n";
  if (cfg.output_path) {
    emit(json, cfg, out);
    out << certificate_summary(cert) << "certificate: " << *cfg.output_path << "\n";
  } else if (cfg.output_format == OutputFormat::text) {
    out << certificate_summary(cert);
  } else {
    out << json;
  }
  if (!cert.verified) {
    err << "VERIFICATION FAILURE: certificate for " << cert.subject << " did not verify\n" << json;
    return kExitVerification;
  }
  return kExitOk;
}

inline std::int64_t parse_order(const std::string& s) {
  const auto d = parse_descriptor(s);
  if (d.integers) throw ContractError("this command needs a cyclic group order");
  return d.n;
}

}  // namespace detail

inline int cmd_classify(const std::string& descriptor, const RunConfig& cfg, std::ostream& out,
                        std::ostream& err) {
  return run_guarded(err, [&] {
    const auto cert = classify(parse_descriptor(descriptor), cfg);
    return detail::emit_certificate(cert, cfg, out, err);
  });
}

inline int cmd_verify_amp(const std::string& order, const RunConfig& cfg, std::ostream& out,
                          std::ostream& err) {
  return run_guarded(err, [&] {
    const auto cert = certify_amp(detail::parse_order(order), cfg);
    return detail::emit_certificate(cert, cfg, out, err);
  });
}

/// kind: auto, coprime6, nonprime or exhaustive.
inline int cmd_certify(const std::string& order, const std::string& kind, const RunConfig& cfg,
                       std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    const std::int64_t n = detail::parse_order(order);
    std::string k = kind;
    if (k == "auto") {
      if (n > 5 && std::gcd(n, std::int64_t{6}) == 1) k = "coprime6";
      else if (n >= 4 && !is_prime(n)) k = "nonprime";
      else k = "exhaustive";
    }
    Certificate cert;
    if (k == "coprime6") cert = certify_coprime6(n, cfg);
    else if (k == "nonprime") cert = nonprime_counterexample(n, cfg);
    else if (k == "exhaustive") cert = certify_amp(n, cfg);
    else throw ContractError("unknown certificate kind '" + kind + "'");
    return detail::emit_certificate(cert, cfg, out, err);
  });
}

/// method: transfer, brute or closed. With `check`, every applicable method
/// runs and agreement is reported.
inline int cmd_genfun(std::int64_t n, std::int64_t m, const std::string& method, bool check,
                      const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    auto compute = [&](const std::string& how) -> GenPoly {
      if (how == "transfer") return transfer_genfun(n, m);
      if (how == "brute") return brute_genfun(n, m, cfg.enumeration_bound);
      if (how == "closed") {
        if (!has_closed_form(n, m)) {
          throw ContractError("no closed form for n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                              " (available: m=2 with n>=6, m=6 with n>=10)");
        }
        return closed_form(n, m);
      }
      throw ContractError("unknown method '" + how + "' (expected transfer, brute or closed)");
    };

    if (!check) {
      const GenPoly p = compute(method);
      std::string payload;
      if (cfg.output_format == OutputFormat::text) {
        payload = to_string(p) + "\n";
      } else if (cfg.output_format == OutputFormat::json) {
        nlohmann::json j = {{"n", n}, {"m", m}, {"method", method}, {"polynomial", to_json(p)},
                            {"text", to_string(p)}};
        payload = j.dump(2) + "\n";
      } else {
        std::ostringstream os;
        os << "w0,w1,w3,coefficient\n";
        for (const auto& [e, c] : p.terms()) os << e.w0 << "," << e.w1 << "," << e.w3 << "," << c << "\n";
        payload = os.str();
      }
      detail::emit(payload, cfg, out);
      return kExitOk;
    }

    std::vector<std::pair<std::string, GenPoly>> results;
    results.emplace_back("transfer", transfer_genfun(n, m));
    if (static_cast<std::size_t>(n - 3) <= cfg.enumeration_bound) {
      results.emplace_back("brute", brute_genfun(n, m, cfg.enumeration_bound));
    }
    if (has_closed_form(n, m)) results.emplace_back("closed", closed_form(n, m));
    bool agree = true;
    for (const auto& r : results) agree = agree && r.second == results.front().second;

    std::string payload;
    if (cfg.output_format == OutputFormat::json) {
      nlohmann::json j = {{"n", n}, {"m", m}, {"agreement", agree}};
      nlohmann::json methods = nlohmann::json::object();
      for (const auto& [name, p] : results) methods[name] = {{"polynomial", to_json(p)}, {"text", to_string(p)}};
      j["methods"] = methods;
      payload = j.dump(2) + "\n";
    } else {
      std::ostringstream os;
      for (const auto& [name, p] : results) os << name << ": " << to_string(p) << "\n";
      os << "agreement: " << (agree ? "yes" : "NO") << " (";
      for (std::size_t i = 0; i < results.size(); ++i) os << (i ? ", " : "") << results[i].first;
      os << ")\n";
      payload = os.str();
    }
    detail::emit(payload, cfg, out);
    if (!agree) {
      err << "VERIFICATION FAILURE: generating-function methods disagree\n" << payload;
      return kExitVerification;
    }
    return kExitOk;
  });
}

/// Lists every matching of A -> B in the given group with its multiplicity
/// vector, followed by the multiplicity classes.
inline int cmd_enumerate(const std::string& group, const std::string& a_list, const std::string& b_list,
                         const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    const auto d = parse_descriptor(group);
    const GroupCtx g = d.integers ? GroupCtx::integers() : GroupCtx::cyclic(d.n);
    const auto pair = SubsetPair::make(g, detail::parse_int_list(a_list), detail::parse_int_list(b_list));
    const auto matchings = enumerate_matchings(pair, cfg.enumeration_bound);
    const auto report = acyclicity_report(pair, cfg.enumeration_bound);

    std::ostringstream os;
    if (cfg.output_format == OutputFormat::json) {
      auto mv_json = [](const MultiplicityVector& mv) {
        auto arr = nlohmann::json::array();
        for (const auto& [x, c] : mv.entries) arr.push_back({x.value, c});
        return arr;
      };
      auto as_values = [](const Matching& m) {
        std::vector<std::int64_t> v;
        for (Element e : m.assignment) v.push_back(e.value);
        return v;
      };
      nlohmann::json j = {{"group", g.describe()}, {"A", values_of(pair.a())}, {"B", values_of(pair.b())}};
      auto ms = nlohmann::json::array();
      for (const auto& m : matchings) {
        ms.push_back({{"assignment", as_values(m)}, {"multiplicity", mv_json(multiplicity(pair, m))}});
      }
      j["matchings"] = ms;
      auto cls = nlohmann::json::array();
      for (const auto& c : report.classes) {
        cls.push_back({{"multiplicity", mv_json(c.key)}, {"count", c.count}, {"witness", as_values(c.witness)}});
      }
      j["classes"] = cls;
      j["total_matchings"] = report.total_matchings;
      j["acyclic_witness"] =
          report.acyclic_witness ? nlohmann::json(as_values(*report.acyclic_witness)) : nlohmann::json(nullptr);
      os << j.dump(2) << "\n";
    } else if (cfg.output_format == OutputFormat::csv) {
      os << "index,assignment,multiplicity\n";
      for (std::size_t i = 0; i < matchings.size(); ++i) {
        os << i << ",\"" << to_string(matchings[i]) << "\",\"" << to_string(multiplicity(pair, matchings[i]))
           << "\"\n";
      }
    } else {
      os << to_string(pair) << "\n";
      for (const auto& m : matchings) {
        os << "  f = " << to_string(m) << "  m_f = " << to_string(multiplicity(pair, m)) << "\n";
      }
      os << "matchings: " << report.total_matchings << ", classes: " << report.classes.size() << "\n";
      for (const auto& c : report.classes) os << "  " << to_string(c.key) << " x" << c.count << "\n";
      os << "acyclic: "
         << (report.acyclic_witness ? "yes, witness " + to_string(*report.acyclic_witness) : std::string("no"))
         << "\n";
    }
    detail::emit(os.str(), cfg, out);
    return kExitOk;
  });
}

// ---------------------------------------------------------------------------
// report

struct ReportRow {
  std::int64_t n = 0;
  std::string verdict;
  std::string evidence;
  bool verified = false;
  std::uint64_t matching_count = 0;
  std::optional<std::uint64_t> min_coefficient;
};

struct Report {
  std::vector<ReportRow> rows;
  std::vector<double> wall_ms;  // parallel to rows; kept out of the data rows
};

/// filter: "all", or "coprime6" for n > 5 coprime to 6 only.
inline Report build_report(std::int64_t lo, std::int64_t hi, const std::string& filter, const RunConfig& cfg) {
  if (filter != "all" && filter != "coprime6") {
    throw ContractError("unknown report filter '" + filter + "' (expected all or coprime6)");
  }
  Report r;
  for (std::int64_t n = std::max<std::int64_t>(lo, 1); n <= hi; ++n) {
    if (filter == "coprime6" && (n <= 5 || std::gcd(n, std::int64_t{6}) != 1)) continue;
    const auto start = std::chrono::steady_clock::now();
    const auto cert = classify(GroupDescriptor::cyclic(n), cfg);
    const auto stop = std::chrono::steady_clock::now();
    ReportRow row;
    row.n = n;
    row.verdict = verdict_name(cert.verdict);
    row.evidence = evidence_type(cert.evidence);
    row.verified = cert.verified;
    if (const auto* e = std::get_if<Coprime6Evidence>(&cert.evidence)) {
      row.matching_count = e->coefficient_sum;
      row.min_coefficient = e->min_coefficient;
    } else if (const auto* e = std::get_if<ExhaustiveEvidence>(&cert.evidence)) {
      row.matching_count = e->total_matchings;
    }
    r.rows.push_back(std::move(row));
    r.wall_ms.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return r;
}

/// Data rows only; byte-identical for identical inputs and configuration.
inline std::string render_rows(const Report& r, OutputFormat fmt) {
  std::ostringstream os;
  if (fmt == OutputFormat::json) {
    auto rows = nlohmann::json::array();
    for (const auto& row : r.rows) {
      rows.push_back({{"n", row.n},
                      {"verdict", row.verdict},
                      {"evidence", row.evidence},
                      {"verified", row.verified},
                      {"matching_count", row.matching_count},
                      {"min_coefficient", row.min_coefficient ? nlohmann::json(*row.min_coefficient)
                                                              : nlohmann::json(nullptr)}});
    }
    os << rows.dump(2);
  } else if (fmt == OutputFormat::csv) {
    os << "n,verdict,evidence,verified,matching_count,min_coefficient\n";
    for (const auto& row : r.rows) {
      os << row.n << "," << row.verdict << "," << row.evidence << "," << (row.verified ? "true" : "false") << ","
         << row.matching_count << "," << (row.min_coefficient ? std::to_string(*row.min_coefficient) : "") << "\n";
    }
  } else {
    os << std::left << std::setw(6) << "n" << std::setw(15) << "verdict" << std::setw(12) << "evidence"
       << std::setw(10) << "verified" << std::setw(16) << "matchings" << "min_coeff\n";
    for (const auto& row : r.rows) {
      os << std::left << std::setw(6) << row.n << std::setw(15) << row.verdict << std::setw(12) << row.evidence
         << std::setw(10) << (row.verified ? "yes" : "NO") << std::setw(16) << row.matching_count
         << (row.min_coefficient ? std::to_string(*row.min_coefficient) : "-") << "\n";
    }
  }
  return os.str();
}

inline std::string render_metadata(const Report& r) {
  nlohmann::json times = nlohmann::json::array();
  double total = 0;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    times.push_back({{"n", r.rows[i].n}, {"wall_ms", r.wall_ms[i]}});
    total += r.wall_ms[i];
  }
  return nlohmann::json({{"wall_time", times}, {"total_wall_ms", total}}).dump();
}

inline int cmd_report(std::int64_t lo, std::int64_t hi, const std::string& filter, const RunConfig& cfg,
                      std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    const auto report = build_report(lo, hi, filter, cfg);
    std::string payload;
    if (cfg.output_format == OutputFormat::json) {
      auto config = to_json(cfg);
      config.erase("output_path");
      const auto rows = nlohmann::json::parse(render_rows(report, OutputFormat::json));
      nlohmann::json j = {{"schema_version", kReportSchemaVersion},
                          {"config", config},
                          {"range", {lo, hi}},
                          {"filter", filter},
                          {"rows", rows},
                          {"metadata", nlohmann::json::parse(render_metadata(report))}};
      payload = j.dump(2) + "\n";
    } else {
      payload = render_rows(report, cfg.output_format);
      err << "metadata: " << render_metadata(report) << "\n";
    }
    detail::emit(payload, cfg, out);
    for (const auto& row : report.rows) {
      if (!row.verified) {
        err << "VERIFICATION FAILURE: row n=" << row.n << " did not verify\n";
        return kExitVerification;
      }
    }
    return kExitOk;
  });
}

}  // namespace amp
