// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <cstdio>

#include "starfact/selftest.hpp"

namespace {

// Runtime budgets (seconds) for the criteria that state one.
double budget_for(int id) {
  switch (id) {
  case 1: return 60.0;
  case 3: return 30.0;
  case 8: return 10.0;
  default: return 0.0;
  }
}

} // namespace

int main() {
  starfact::SelftestOptions options;
  options.n_max = 5;
  options.seed = 0;
  options.sample_draws = 100'000;

  const starfact::SelftestReport report = starfact::run_selftest(options);
  bool all = true;
  for (const auto& c : report.checks) {
    const double budget = budget_for(c.id);
    const bool in_time = budget == 0.0 || c.seconds < budget;
    const bool ok = c.passed && in_time;
    all = all && ok;
    std::printf("[%s] criterion %d %-30s %7.2fs  %s%s\n", ok ? "PASS" : "FAIL", c.id,
                c.name.c_str(), c.seconds, c.detail.c_str(),
                in_time ? "" : "  (over time budget)");
  }
  std::printf("%s\n", all ? "ALL ACCEPTANCE CRITERIA PASSED" : "ACCEPTANCE FAILED");
  return all ? 0 : 1;
}
