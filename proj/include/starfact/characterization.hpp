#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "starfact/permutation.hpp"

namespace starfact {

/// Structural verdict on a star factorization relative to a target.
struct CharacterizationReport {
  bool occurrence_ok = false; ///< per-cycle multiplicities of each (1 a)
  bool order_ok = false;      ///< factors meeting a cycle follow the cycle, read right to left
  bool nesting_ok = false;    ///< factor spans of distinct cycles never interleave
  bool overall = false;

  friend bool operator==(const CharacterizationReport&, const CharacterizationReport&) = default;
};

/// (1 i) meets a cycle when the cycle contains i.
bool meets(StarTransposition t, std::span<const int> cycle);

/// n + m - 2, where m is the number of cycles of p.
std::size_t minimal_transitive_length(const Permutation& p);

/// Direct definition: product equals p, factors act transitively, and the
/// length is n + m - 2.
bool is_minimal_transitive(const StarFactorization& f, const Permutation& p);

bool check_occurrence_counts(const StarFactorization& f, const Permutation& p);
bool check_cyclic_order(const StarFactorization& f, const Permutation& p);
bool check_nesting(const StarFactorization& f, const Permutation& p);

/// Runs the three structural checks. overall holds exactly when f is a
/// minimal transitive star factorization of p, without evaluating f.
CharacterizationReport characterize(const StarFactorization& f, const Permutation& p);

struct SearchOptions {
  /// Upper bound on (n-1)^length candidate sequences.
  std::uint64_t guard = 100'000'000;
  /// Cut branches that already violate the per-symbol multiplicity limits
  /// of a minimal transitive factorization. Only active for transitive
  /// searches at length n + m - 2, where it cannot discard a solution.
  bool prune = true;
  /// Split the search by first factor across threads. Output order is
  /// unaffected.
  bool parallel = true;
};

/// Every length-`length` sequence of star transpositions whose product is
/// p (and which is transitive, if required), in lexicographic order of
/// factor symbols. Throws GuardExceeded if (n-1)^length > options.guard.
std::vector<StarFactorization> brute_force_enumerate(const Permutation& p,
                                                     bool transitive_required,
                                                     std::size_t length,
                                                     const SearchOptions& options = {});

/// Number of candidate sequences (n-1)^length, saturated at UINT64_MAX.
std::uint64_t candidate_count(int n, std::size_t length);

} // namespace starfact
