// Acceptance suite: one line per criterion, exact equality or exhaustive
// property, each under its wall-clock budget. Exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "amp/amp.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;
  std::function<std::string()> check;  // empty string = pass, else reason
};

std::string ac1_base_cases() {
  const struct {
    std::int64_t n;
    const char* want;
  } cases[] = {{6, "c1^2*c3\n"}, {7, "2*c0*c1*c3^2\n"}, {8, "c1^3*c3^2 + c0^2*c3^3\n"}};
  for (const auto& c : cases) {
    std::ostringstream out, err;
    const int code = amp::cmd_genfun(c.n, 2, "transfer", false, amp::RunConfig{}, out, err);
    if (code != 0 || out.str() != c.want) {
      return "genfun " + std::to_string(c.n) + " 2 gave '" + out.str() + "' (exit " + std::to_string(code) + ")";
    }
  }
  return {};
}

std::string ac2_oracle_equivalence() {
  for (std::int64_t n = 6; n <= 16; ++n) {
    if (amp::transfer_genfun(n, 2) != amp::brute_genfun(n, 2)) return "m=2 differs at n=" + std::to_string(n);
  }
  for (std::int64_t n = 10; n <= 16; ++n) {
    if (amp::transfer_genfun(n, 6) != amp::brute_genfun(n, 6)) return "m=6 differs at n=" + std::to_string(n);
  }
  return {};
}

std::string ac3_closed_forms() {
  for (std::int64_t n = 6; n <= 20; ++n) {
    if (amp::closed_form_m2(n) != amp::transfer_genfun(n, 2)) return "m=2 differs at n=" + std::to_string(n);
  }
  for (std::int64_t n = 10; n <= 20; ++n) {
    if (amp::closed_form_m6(n) != amp::transfer_genfun(n, 6)) return "m=6 differs at n=" + std::to_string(n);
  }
  return {};
}

std::string ac4_recurrence() {
  auto seq = [](auto&& f, std::int64_t lo, std::int64_t hi) {
    std::vector<amp::GenPoly> s;
    for (std::int64_t n = lo; n <= hi; ++n) s.push_back(f(n));
    return s;
  };
  if (!amp::recurrence_check(seq([](std::int64_t n) { return amp::transfer_genfun(n, 2); }, 6, 20))) {
    return "transfer m=2 sequence";
  }
  if (!amp::recurrence_check(seq([](std::int64_t n) { return amp::transfer_genfun(n, 6); }, 10, 20))) {
    return "transfer m=6 sequence";
  }
  const struct {
    std::int64_t d, e, m, lo;
  } families[] = {{0, 0, 2, 6}, {2, 0, 6, 10}, {3, 1, 6, 10}, {3, 3, 6, 10}};
  for (const auto& f : families) {
    const auto s = seq([&](std::int64_t n) { return amp::binomial_family(n, f.d, f.e, f.m); }, f.lo, 20);
    if (!amp::recurrence_check(s)) {
      return "binomial family d=" + std::to_string(f.d) + " e=" + std::to_string(f.e) + " m=" + std::to_string(f.m);
    }
  }
  return {};
}

std::string ac5_positive_classification() {
  for (std::int64_t n : {2, 3, 5}) {
    const auto g = amp::GroupCtx::cyclic(n);
    const auto with = amp::verify_group_amp(g, true);
    const auto without = amp::verify_group_amp(g, false);
    if (!with.holds || !without.holds) return "Z/" + std::to_string(n) + "Z has a pair without acyclic matching";
  }
  return {};
}

std::string ac6_negative_classification() {
  for (std::int64_t n : {7, 11, 13}) {
    const auto cert = amp::certify_coprime6(n);
    const auto& e = std::get<amp::Coprime6Evidence>(cert.evidence);
    if (!cert.verified) return "certificate for n=" + std::to_string(n) + " did not verify";
    if (e.min_coefficient < 2) return "coefficient below 2 at n=" + std::to_string(n);
    if (n != 13) {
      if (!e.enumeration) return "no enumeration for n=" + std::to_string(n);
      if (e.enumeration->singleton_classes != 0) return "singleton class at n=" + std::to_string(n);
    }
  }
  return {};
}

std::string ac7_nonprime_failures() {
  for (std::int64_t n : {4, 6, 8, 9, 10, 12}) {
    const auto cert = amp::nonprime_counterexample(n);
    const auto& e = std::get<amp::NonprimeEvidence>(cert.evidence);
    if (e.matching_exists || !cert.verified) return "matching exists for n=" + std::to_string(n);
  }
  return {};
}

std::string ac8_large_sets() {
  std::string failed;
  bool only_unmatched = true;
  for (std::int64_t n = 3; n <= 8; ++n) {
    const auto g = amp::GroupCtx::cyclic(n);
    if (amp::large_set_check(g)) continue;
    failed += (failed.empty() ? "" : ", ") + std::to_string(n);
    only_unmatched = only_unmatched && amp::large_set_check_matched(g);
  }
  if (failed.empty()) return {};
  return "fails for n=" + failed + (only_unmatched ? "; every failing pair admits no matching at all" : "");
}

std::string ac9_torsion_free() {
  const amp::IntegerSampleSpec spec{amp::kDefaultSeed, 500, 5, 6};
  const auto r = amp::verify_integer_sample(spec);
  if (r.samples != 500) return "ran " + std::to_string(r.samples) + " samples";
  if (!r.all_acyclic) return "no acyclic matching for " + amp::to_string(*r.first_failure);
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "generating-function base cases n=6,7,8 (m=2, transfer)", 1, ac1_base_cases},
      {"AC2", "transfer = brute force, m=2 n<=16 and m=6 n<=16", 300, ac2_oracle_equivalence},
      {"AC3", "closed forms = transfer for n<=20", 10, ac3_closed_forms},
      {"AC4", "recurrence x^3 - c1c3x - c0c3^2 on transfer and 4 binomial families", 10, ac4_recurrence},
      {"AC5", "acyclic matching property holds exhaustively for n=2,3,5 (both symmetry modes)", 60,
       ac5_positive_classification},
      {"AC6", "coprime-to-6 failure certificates n=7,11,13; no singleton class for n=7,11", 300,
       ac6_negative_classification},
      {"AC7", "non-prime pairs without matching for n=4,6,8,9,10,12", 1, ac7_nonprime_failures},
      {"AC8", "|A| in {n-1,n-2} always acyclically matched for 3<=n<=8", 120, ac8_large_sets},
      {"AC9", "500 seeded random pairs in Z all acyclically matched", 60, ac9_torsion_free},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    std::string reason;
    try {
      reason = c.check();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (reason.empty() && secs > c.budget_seconds) {
      reason = "over budget (" + std::to_string(secs) + " s > " + std::to_string(c.budget_seconds) + " s)";
    }
    const bool pass = reason.empty();
    failures += pass ? 0 : 1;
    std::printf("[%s] %s %s (%.3f s, budget %.0f s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.title, secs,
                c.budget_seconds, pass ? "" : ": ", reason.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
  return failures == 0 ? 0 : 1;
}
