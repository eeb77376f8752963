#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "amp/commands.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <class F>
Run run(F&& f) {
  std::ostringstream out, err;
  const int code = f(out, err);
  return {code, out.str(), err.str()};
}

amp::RunConfig with_format(amp::OutputFormat f) {
  amp::RunConfig cfg;
  cfg.output_format = f;
  return cfg;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("amp_commands_test_" + name);
}

}  // namespace

TEST(CmdGenfun, TextOutput) {
  const amp::RunConfig cfg;
  auto r = run([&](auto& o, auto& e) { return amp::cmd_genfun(7, 2, "transfer", false, cfg, o, e); });
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2*c0*c1*c3^2\n");
  r = run([&](auto& o, auto& e) { return amp::cmd_genfun(6, 2, "transfer", false, cfg, o, e); });
  EXPECT_EQ(r.out, "c1^2*c3\n");
  r = run([&](auto& o, auto& e) { return amp::cmd_genfun(8, 2, "closed", false, cfg, o, e); });
  EXPECT_EQ(r.out, "c1^3*c3^2 + c0^2*c3^3\n");
}

TEST(CmdGenfun, CheckReportsAgreement) {
  const amp::RunConfig cfg;
  const auto r = run([&](auto& o, auto& e) { return amp::cmd_genfun(10, 6, "transfer", true, cfg, o, e); });
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("agreement: yes (transfer, brute, closed)"), std::string::npos) << r.out;
}

TEST(CmdGenfun, JsonAndCsv) {
  auto r = run([&](auto& o, auto& e) {
    return amp::cmd_genfun(8, 2, "transfer", false, with_format(amp::OutputFormat::json), o, e);
  });
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("polynomial").dump(), R"([{"c":1,"w":[0,3,2]},{"c":1,"w":[2,0,3]}])");
  r = run([&](auto& o, auto& e) {
    return amp::cmd_genfun(8, 2, "transfer", false, with_format(amp::OutputFormat::csv), o, e);
  });
  EXPECT_EQ(r.out, "w0,w1,w3,coefficient\n0,3,2,1\n2,0,3,1\n");
}

TEST(CmdGenfun, UsageAndResourceErrors) {
  const amp::RunConfig cfg;
  EXPECT_EQ(run([&](auto& o, auto& e) { return amp::cmd_genfun(12, 3, "closed", false, cfg, o, e); }).code,
            amp::kExitUsage);
  EXPECT_EQ(run([&](auto& o, auto& e) { return amp::cmd_genfun(5, 2, "transfer", false, cfg, o, e); }).code,
            amp::kExitUsage);
  EXPECT_EQ(run([&](auto& o, auto& e) { return amp::cmd_genfun(9, 2, "magic", false, cfg, o, e); }).code,
            amp::kExitUsage);
  EXPECT_EQ(run([&](auto& o, auto& e) { return amp::cmd_genfun(30, 2, "brute", false, cfg, o, e); }).code,
            amp::kExitResource);
}

TEST(CmdClassify, Verdicts) {
  const amp::RunConfig cfg;
  auto r = run([&](auto& o, auto& e) { return amp::cmd_classify("5", cfg, o, e); });
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("holds (exhaustive)"), std::string::npos) << r.out;
  r = run([&](auto& o, auto& e) { return amp::cmd_classify("Z", cfg, o, e); });
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("holds (torsion-free, sampled)"), std::string::npos) << r.out;
  EXPECT_EQ(run([&](auto& o, auto& e) { return amp::cmd_classify("Q", cfg, o, e); }).code, amp::kExitUsage);
}

TEST(CmdClassify, WritesCertificateFile) {
  amp::RunConfig cfg;
  const auto path = temp_file("classify7.json");
  cfg.output_path = path.string();
  const auto r = run([&](auto& o, auto& e) { return amp::cmd_classify("7", cfg, o, e); });
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("fails"), std::string::npos);
  EXPECT_NE(r.out.find("certificate: " + path.string()), std::string::npos);
  std::ifstream in(path);
  const auto cert = amp::certificate_from_json(nlohmann::json::parse(in));
  EXPECT_TRUE(cert.verified);
  EXPECT_TRUE(amp::reverify(cert).empty());
  std::filesystem::remove(path);
}

TEST(CmdClassify, UnwritableOutputIsReported) {
  amp::RunConfig cfg;
  cfg.output_path = "/nonexistent-dir/x.json";
  const auto r = run([&](auto& o, auto& e) { return amp::cmd_classify("7", cfg, o, e); });
  EXPECT_EQ(r.code, amp::kExitUsage);
  EXPECT_NE(r.err.find("/nonexistent-dir/x.json"), std::string::npos);
}

TEST(CmdVerifyAmp, ReportsCounterexample) {
  const amp::RunConfig cfg;
  const auto r = run([&](auto& o, auto& e) { return amp::cmd_verify_amp("7", cfg, o, e); });
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("counterexample: A = {0,1,3}, B = {1,2,4}"), std::string::npos) << r.out;
  EXPECT_EQ(run([&](auto& o, auto& e) { return amp::cmd_verify_amp("9", cfg, o, e); }).code, amp::kExitResource);
  EXPECT_EQ(run([&](auto& o, auto& e) { return amp::cmd_verify_amp("Z", cfg, o, e); }).code, amp::kExitUsage);
}

TEST(CmdCertify, KindsAndErrors) {
  const auto cfg = with_format(amp::OutputFormat::json);
  auto r = run([&](auto& o, auto& e) { return amp::cmd_certify("11", "auto", cfg, o, e); });
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("claim"), "coprime6_failure");
  r = run([&](auto& o, auto& e) { return amp::cmd_certify("10", "auto", cfg, o, e); });
  EXPECT_EQ(nlohmann::json::parse(r.out).at("claim"), "nonprime_failure");
  EXPECT_EQ(run([&](auto& o, auto& e) { return amp::cmd_certify("7", "nonprime", cfg, o, e); }).code,
            amp::kExitUsage);
}

TEST(CmdEnumerate, ListsMatchings) {
  const amp::RunConfig cfg;
  auto r = run([&](auto& o, auto& e) { return amp::cmd_enumerate("7", "2,4,5,6", "3,4,5,6", cfg, o, e); });
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("f = [5,6,3,4]  m_f = {0:1, 1:1, 3:2}"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("acyclic: no"), std::string::npos);

  r = run([&](auto& o, auto& e) {
    return amp::cmd_enumerate("Z", "-2,1,3", "-1,2,5", with_format(amp::OutputFormat::json), o, e);
  });
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j.at("acyclic_witness").is_null());

  EXPECT_EQ(run([&](auto& o, auto& e) { return amp::cmd_enumerate("7", "1,2", "0,3", cfg, o, e); }).code,
            amp::kExitUsage);
  EXPECT_EQ(run([&](auto& o, auto& e) { return amp::cmd_enumerate("7", "1,x", "2,3", cfg, o, e); }).code,
            amp::kExitUsage);
}

TEST(CmdReport, VerdictsOverRange) {
  const auto cfg = with_format(amp::OutputFormat::csv);
  const auto r = run([&](auto& o, auto& e) { return amp::cmd_report(2, 8, "all", cfg, o, e); });
  EXPECT_EQ(r.code, 0);
  const auto report = amp::build_report(2, 8, "all", cfg);
  ASSERT_EQ(report.rows.size(), 7u);
  for (const auto& row : report.rows) {
    const bool holds = row.n == 2 || row.n == 3 || row.n == 5;
    EXPECT_EQ(row.verdict, holds ? "holds" : "fails") << row.n;
    EXPECT_TRUE(row.verified);
  }
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,verdict,evidence,verified,matching_count,min_coefficient");
}

TEST(CmdReport, CoprimeFilter) {
  const auto report = amp::build_report(7, 13, "coprime6", amp::RunConfig{});
  ASSERT_EQ(report.rows.size(), 3u);
  for (const auto& row : report.rows) {
    EXPECT_EQ(row.verdict, "fails");
    ASSERT_TRUE(row.min_coefficient.has_value());
    EXPECT_GE(*row.min_coefficient, 2u);
  }
}

TEST(CmdReport, EmptyRange) {
  const auto r = run([&](auto& o, auto& e) {
    return amp::cmd_report(9, 8, "all", with_format(amp::OutputFormat::json), o, e);
  });
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(r.out).at("rows").empty());
}

TEST(CmdReport, DataRowsAreByteIdentical) {
  const auto cfg = with_format(amp::OutputFormat::json);
  const auto a = run([&](auto& o, auto& e) { return amp::cmd_report(2, 11, "all", cfg, o, e); });
  const auto b = run([&](auto& o, auto& e) { return amp::cmd_report(2, 11, "all", cfg, o, e); });
  auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
  EXPECT_EQ(ja.at("config").at("seed"), amp::kDefaultSeed);
  ja.erase("metadata");
  jb.erase("metadata");
  EXPECT_EQ(ja.dump(), jb.dump());
  for (auto fmt : {amp::OutputFormat::csv, amp::OutputFormat::text}) {
    const auto c1 = run([&](auto& o, auto& e) { return amp::cmd_report(2, 9, "all", with_format(fmt), o, e); });
    const auto c2 = run([&](auto& o, auto& e) { return amp::cmd_report(2, 9, "all", with_format(fmt), o, e); });
    EXPECT_EQ(c1.out, c2.out);
  }
}

TEST(Config, JsonOverlayAndEnvironment) {
  const auto path = temp_file("config.json");
  {
    std::ofstream f(path);
    f << R"({"enumeration_bound": 12, "symmetry_reduction": false, "output_format": "csv", "seed": 7})";
  }
  const auto cfg = amp::load_config_file(path.string());
  EXPECT_EQ(cfg.enumeration_bound, 12u);
  EXPECT_FALSE(cfg.symmetry_reduction);
  EXPECT_EQ(cfg.output_format, amp::OutputFormat::csv);
  EXPECT_EQ(cfg.seed, 7u);
  EXPECT_EQ(cfg.exhaustive_group_bound, 8);

  ::setenv(amp::kConfigEnvVar, path.string().c_str(), 1);
  EXPECT_EQ(amp::default_config().enumeration_bound, 12u);
  ::unsetenv(amp::kConfigEnvVar);
  EXPECT_EQ(amp::default_config().enumeration_bound, 20u);
  std::filesystem::remove(path);

  EXPECT_THROW(amp::config_from_json(nlohmann::json{{"enumeration_bound", 0}}), amp::ContractError);
  EXPECT_THROW(amp::config_from_json(nlohmann::json{{"output_format", "xml"}}), amp::ContractError);
  EXPECT_THROW(amp::load_config_file("/nonexistent/amp.json"), amp::ContractError);
}
