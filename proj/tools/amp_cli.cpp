// amp: command-line front end for the acyclic matching laboratory.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "amp/amp.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Acyclic matching property laboratory for Z and Z/nZ"};
  app.require_subcommand(1);

  std::optional<std::size_t> bound;
  std::optional<std::int64_t> group_bound;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
  std::optional<std::string> format;
  std::optional<std::string> out_path;
  std::optional<std::string> config_path;
  bool no_symmetry = false;

  app.add_option("--bound", bound, "Enumeration bound on |A| (default 20)");
  app.add_option("--group-bound", group_bound, "Largest n for exhaustive group search (default 8)");
  app.add_flag("--no-symmetry", no_symmetry, "Disable unit-scaling symmetry reduction");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", out_path, "Write the payload to this file");
  app.add_option("--seed", seed, "Seed for sampled checks of Z");
  app.add_option("--samples", samples, "Number of sampled pairs for Z (default 500)");
  app.add_option("--config", config_path, std::string("JSON config file (default: $") + amp::kConfigEnvVar + ")");

  std::string descriptor;
  auto* classify = app.add_subcommand("classify", "Classify Z/nZ or Z (\"Z\") with a certificate");
  classify->add_option("group", descriptor, "Group order n, or Z")->required();

  std::string order;
  auto* verify = app.add_subcommand("verify-amp", "Exhaustively check every pair of a small Z/nZ");
  verify->add_option("n", order, "Group order")->required();

  std::string a_list, b_list;
  auto* enumerate = app.add_subcommand("enumerate", "List all matchings A -> B with multiplicities");
  enumerate->add_option("group", descriptor, "Group order n, or Z")->required();
  enumerate->add_option("A", a_list, "Comma-separated elements of A")->required();
  enumerate->add_option("B", b_list, "Comma-separated elements of B")->required();

  std::int64_t gn = 0, gm = 0;
  std::string method = "transfer";
  bool check = false;
  auto* genfun = app.add_subcommand("genfun", "Generating function for Z/nZ \\ {0,1,3} -> Z/nZ \\ {0,1,m}");
  genfun->add_option("n", gn, "Group order")->required();
  genfun->add_option("m", gm, "Removed element of B")->required();
  genfun->add_option("--method", method, "transfer, brute or closed")
      ->check(CLI::IsMember({"transfer", "brute", "closed"}));
  genfun->add_flag("--check", check, "Run every applicable method and compare");

  std::string kind = "auto";
  auto* certify = app.add_subcommand("certify", "Emit a failure or exhaustive certificate for Z/nZ");
  certify->add_option("n", order, "Group order")->required();
  certify->add_option("--kind", kind, "auto, coprime6, nonprime or exhaustive")
      ->check(CLI::IsMember({"auto", "coprime6", "nonprime", "exhaustive"}));

  std::int64_t lo = 0, hi = 0;
  std::string filter = "all";
  auto* report = app.add_subcommand("report", "Verdict table over a range of n");
  report->add_option("lo", lo, "First n")->required();
  report->add_option("hi", hi, "Last n (inclusive)")->required();
  report->add_option("--filter", filter, "all or coprime6")->check(CLI::IsMember({"all", "coprime6"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return amp::kExitUsage;
  }

  amp::RunConfig cfg;
  const int code = amp::run_guarded(std::cerr, [&] {
    cfg = config_path ? amp::load_config_file(*config_path) : amp::default_config();
    if (bound) cfg.enumeration_bound = *bound;
    if (group_bound) cfg.exhaustive_group_bound = *group_bound;
    if (no_symmetry) cfg.symmetry_reduction = false;
    if (format) cfg.output_format = amp::parse_format(*format);
    if (out_path) cfg.output_path = *out_path;
    if (seed) cfg.seed = *seed;
    if (samples) cfg.samples = *samples;
    cfg.validate();
    return amp::kExitOk;
  });
  if (code != amp::kExitOk) return code;

  auto& out = std::cout;
  auto& err = std::cerr;
  if (*classify) return amp::cmd_classify(descriptor, cfg, out, err);
  if (*verify) return amp::cmd_verify_amp(order, cfg, out, err);
  if (*enumerate) return amp::cmd_enumerate(descriptor, a_list, b_list, cfg, out, err);
  if (*genfun) return amp::cmd_genfun(gn, gm, method, check, cfg, out, err);
  if (*certify) return amp::cmd_certify(order, kind, cfg, out, err);
  if (*report) return amp::cmd_report(lo, hi, filter, cfg, out, err);
  return amp::kExitUsage;
}
