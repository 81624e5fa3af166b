#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "starfact/permutation.hpp"

namespace starfact {

/// Word over {1,...,m} recording which cycle each factor meets.
struct CanonicalWord {
  std::vector<int> letters;

  friend bool operator==(const CanonicalWord&, const CanonicalWord&) = default;
  friend auto operator<=>(const CanonicalWord&, const CanonicalWord&) = default;
};

/// anchors[j-2] is k_j, the symbol of the leftmost factor meeting sigma_j.
struct AnchorTuple {
  std::vector<int> anchors;

  friend bool operator==(const AnchorTuple&, const AnchorTuple&) = default;
  friend auto operator<=>(const AnchorTuple&, const AnchorTuple&) = default;
};

struct EncodedFactorization {
  CanonicalWord word;
  AnchorTuple anchors;

  friend bool operator==(const EncodedFactorization&, const EncodedFactorization&) = default;
};

/// Membership in W_pi: letter 1 occurs l_1 - 1 times, letter j >= 2 occurs
/// l_j + 1 times, and no scattered subsequence abab or a1a occurs
/// (a, b distinct and != 1).
bool is_valid_word(std::span<const int> w, const CycleDecomposition& decomp);

/// k_j lies in cycle j for every j = 2..m.
bool is_valid_anchors(const AnchorTuple& anchors, const CycleDecomposition& decomp);

/// Forward bijection. Throws ValidationError naming the first failed
/// structural check if f is not minimal transitive for p.
EncodedFactorization phi(const StarFactorization& f, const Permutation& p);

/// Inverse bijection. Throws ValidationError on an invalid word or anchors.
StarFactorization phi_inverse(const CanonicalWord& w, const AnchorTuple& anchors,
                              const CycleDecomposition& decomp);

/// All of W_pi in lexicographic order. Throws GuardExceeded once more than
/// `guard` words have been produced.
std::vector<CanonicalWord> enumerate_words(const CycleDecomposition& decomp,
                                           std::uint64_t guard = 10'000'000);

/// All anchor tuples, row-major over orbits 2..m with each orbit's symbols
/// in cycle order.
std::vector<AnchorTuple> enumerate_anchors(const CycleDecomposition& decomp);

std::string format_word(const CanonicalWord& w);                 // "5 5 5 1"
CanonicalWord parse_word(std::string_view text);
std::string format_anchors(const AnchorTuple& a);                // "3,10,6,9"
AnchorTuple parse_anchors(std::string_view text);

/// Canonical permutation with cycles (1..l_1)(l_1+1 ...)... of the cycle
/// type a word implies by its letter counts. Throws ValidationError if the
/// counts cannot come from any cycle type.
CycleDecomposition decomposition_for_word(std::span<const int> w);

} // namespace starfact
