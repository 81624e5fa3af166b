#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "starfact/permutation.hpp"

namespace starfact {

/// Exact nonnegative count.
using Count = boost::multiprecision::cpp_int;

/// Cycle lengths l_1, ..., l_m with l_1 the length of the cycle holding 1.
class CycleType {
public:
  /// Throws std::invalid_argument unless lengths is nonempty and positive.
  explicit CycleType(std::vector<int> lengths);

  static CycleType of(const Permutation& p);
  static CycleType of(const CycleDecomposition& d);

  int degree() const noexcept { return degree_; }
  int cycle_count() const noexcept { return static_cast<int>(lengths_.size()); }
  const std::vector<int>& lengths() const noexcept { return lengths_; }

  /// Fixed points other than 1: #{i >= 2 : l_i = 1}.
  int fixed_count() const;

  /// b_j = #{i >= 2 : l_i = j}.
  std::map<int, int> multiplicities() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;

private:
  std::vector<int> lengths_;
  int degree_ = 0;
};

/// Parses "3,1,4,1,2" (l_1 first).
CycleType parse_cycle_type(std::string_view text);

Count factorial(int n);
Count binomial(int n, int k);

/// (n+m-2)! l_1 ... l_m / n!, the number of minimal transitive star
/// factorizations.
Count count_minimal_transitive(const CycleType& ct);

/// (n+m-2(k+1))! l_1 ... l_m / (n-k)!, the number of minimal star
/// factorizations, k = fixed points other than 1.
Count count_minimal(const CycleType& ct);

/// k^m (mk+m)! / n! with n = mk+1, for a permutation fixing 1 whose other
/// cycles all have length k >= 2.
Count pak_count(int cycle_length, int cycle_count);

/// l_1 (m-2)! binom(n+m-2, m-2) for m >= 2, and 1 for m = 1: the number
/// of words (equivalently trees) for the type.
Count count_words_closed_form(const CycleType& ct);

/// l_2 ... l_m, the number of anchor tuples.
Count anchor_product(const CycleType& ct);

std::string to_string(const Count& c);

} // namespace starfact
