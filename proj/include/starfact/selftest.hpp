#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace starfact {

struct SelftestOptions {
  /// Largest degree for the exhaustive sweeps (criteria that are pinned to
  /// a fixed degree are capped by it instead).
  int n_max = 5;
  std::uint64_t seed = 0;
  std::uint64_t sample_draws = 100'000;
  /// Negative control: perturbs a constant in the expected transitive
  /// count so that check fails.
  bool inject_fault = false;
};

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct SelftestReport {
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Runs every acceptance check in order.
SelftestReport run_selftest(const SelftestOptions& options = {});

// Individual checks, numbered as in the acceptance list.
CheckResult check_transitive_count_oracle(const SelftestOptions& options);
CheckResult check_worked_example(const SelftestOptions& options);
CheckResult check_characterization_equivalence(const SelftestOptions& options);
CheckResult check_word_bijection(const SelftestOptions& options);
CheckResult check_minimal_count_oracle(const SelftestOptions& options);
CheckResult check_pak_consistency(const SelftestOptions& options);
CheckResult check_tree_bijection(const SelftestOptions& options);
CheckResult check_sampling_uniformity(const SelftestOptions& options);

} // namespace starfact
