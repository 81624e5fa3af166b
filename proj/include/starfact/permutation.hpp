#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace starfact {

/// A bijection of {1,...,n}. Symbols are 1-based on every public surface.
class Permutation {
public:
  /// Identity of degree n (n >= 1).
  explicit Permutation(int n);

  /// images[i-1] is the image of symbol i. Throws std::invalid_argument
  /// unless images is a bijection of {1,...,images.size()}.
  static Permutation from_images(std::vector<int> images);

  /// Builds a permutation of degree n from disjoint cycles; unmentioned
  /// symbols are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  static Permutation identity(int n) { return Permutation(n); }

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int symbol) const { return images_.at(symbol - 1); }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

/// result(j) = p(q(j)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

/// Canonical cycle form: cycles sorted by least element, each rotated to
/// start at its least element, fixed points included. cycles[0] holds 1.
struct CycleDecomposition {
  int degree = 0;
  std::vector<std::vector<int>> cycles;
  std::vector<int> lengths;

  int cycle_count() const noexcept { return static_cast<int>(cycles.size()); }

  /// 1-based index j of the cycle sigma_j containing symbol.
  int orbit_of(int symbol) const;

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

CycleDecomposition cycle_decomposition(const Permutation& p);

/// Canonical decomposition with the given lengths whose cycles are
/// consecutive blocks: (1 ... l_1)(l_1+1 ... l_1+l_2)...
CycleDecomposition block_decomposition(std::span<const int> lengths);
Permutation to_permutation(const CycleDecomposition& decomp);

/// Parses cycle notation such as "(1 8 2)(3)(4 5 10 7)". Degree is n when
/// given, else the largest symbol mentioned (1 for empty text).
/// Throws ParseError with the offending character offset.
Permutation parse_cycles(std::string_view text, std::optional<int> n = std::nullopt);

/// Canonical cycle notation with fixed points, e.g. "(1 8 2)(3)(4 5 10 7)".
std::string format_cycles(const Permutation& p);

/// All n! permutations of degree n in lexicographic order of image vectors.
std::vector<Permutation> all_permutations(int n);

/// A star transposition (1 other), other >= 2.
struct StarTransposition {
  int other = 2;

  friend bool operator==(const StarTransposition&, const StarTransposition&) = default;
  friend auto operator<=>(const StarTransposition&, const StarTransposition&) = default;
};

/// Ordered product tau_1 tau_2 ... tau_r of star transpositions in S_degree.
struct StarFactorization {
  int degree = 1;
  std::vector<StarTransposition> factors;

  StarFactorization() = default;
  StarFactorization(int n, std::vector<StarTransposition> fs);
  /// Convenience: factors given by their non-1 symbols.
  static StarFactorization from_symbols(int n, std::span<const int> symbols);

  std::size_t length() const noexcept { return factors.size(); }
  std::vector<int> symbols() const;

  friend bool operator==(const StarFactorization&, const StarFactorization&) = default;
  friend auto operator<=>(const StarFactorization&, const StarFactorization&) = default;
};

/// tau_1 o tau_2 o ... o tau_r, rightmost applied first. Empty -> identity.
Permutation evaluate(const StarFactorization& f);

/// Whether the factors generate a group transitive on {1,...,n}. For star
/// transpositions this is: n == 1 or every symbol 2..n occurs.
bool is_transitive(const StarFactorization& f);

StarFactorization reversed(const StarFactorization& f);

/// Space-separated non-1 symbols, e.g. "9 11 9 2".
std::string format_factors(const StarFactorization& f);

/// Inverse of format_factors; every symbol must lie in {2,...,n}.
StarFactorization parse_factors(std::string_view text, int n);

} // namespace starfact
