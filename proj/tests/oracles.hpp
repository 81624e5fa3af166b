#pragma once

// Independent reference computations used only by the tests. Nothing here
// reuses the library's search, pattern or evaluation code paths.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "starfact/permutation.hpp"

namespace oracle {

using starfact::Permutation;
using starfact::StarFactorization;

inline Permutation transposition(int n, int a, int b) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::swap(images[a - 1], images[b - 1]);
  return Permutation::from_images(images);
}

/// Product by repeated general composition, left to right.
inline Permutation product_of(const StarFactorization& f) {
  Permutation product(f.degree);
  for (const auto& t : f.factors)
    product = starfact::compose(product, transposition(f.degree, 1, t.other));
  return product;
}

/// Orbits of the generated group via union-find over the generators' edges.
inline bool generates_transitive(const StarFactorization& f) {
  std::vector<int> parent(static_cast<std::size_t>(f.degree) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& t : f.factors)
    parent[find(t.other)] = find(1);
  for (int a = 1; a <= f.degree; ++a)
    if (find(a) != find(1))
      return false;
  return true;
}

/// Number of length-L star sequences with product p (and transitive).
inline std::uint64_t count_by_definition(const Permutation& p, std::size_t length,
                                         bool transitive_required) {
  const int n = p.degree();
  if (n == 1)
    return length == 0 ? 1 : 0;
  std::vector<int> symbols(length, 2);
  std::uint64_t count = 0;
  while (true) {
    const auto f = StarFactorization::from_symbols(n, symbols);
    if (product_of(f) == p && (!transitive_required || generates_transitive(f)))
      ++count;
    std::size_t i = length;
    while (i > 0 && symbols[i - 1] == n)
      symbols[--i] = 2;
    if (i == 0)
      return count;
    ++symbols[i - 1];
  }
}

/// Scattered abab (a != b, both != 1) or a1a (a != 1), by position tuples.
inline bool has_forbidden_pattern(const std::vector<int>& w) {
  const std::size_t r = w.size();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      for (std::size_t k = j + 1; k < r; ++k) {
        if (w[i] != 1 && w[j] == 1 && w[k] == w[i])
          return true;
        if (w[i] == 1 || w[j] == 1 || w[i] == w[j] || w[k] != w[i])
          continue;
        for (std::size_t l = k + 1; l < r; ++l)
          if (w[l] == w[j])
            return true;
      }
  return false;
}

/// Word class by filtering every arrangement of the required multiset.
inline std::vector<std::vector<int>> words_by_filter(const std::vector<int>& lengths) {
  std::vector<int> letters(static_cast<std::size_t>(lengths[0] - 1), 1);
  for (std::size_t j = 1; j < lengths.size(); ++j)
    letters.insert(letters.end(), static_cast<std::size_t>(lengths[j] + 1),
                   static_cast<int>(j) + 1);
  std::sort(letters.begin(), letters.end());
  std::vector<std::vector<int>> out;
  do {
    if (!has_forbidden_pattern(letters))
      out.push_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

} // namespace oracle
