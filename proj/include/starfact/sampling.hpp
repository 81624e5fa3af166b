#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "starfact/permutation.hpp"
#include "starfact/words.hpp"

namespace starfact {

/// Uniform sampler over the minimal transitive star factorizations of a
/// permutation: a uniform word from the enumerated word class, an
/// independent uniform anchor per cycle, then the inverse bijection.
class FactorizationSampler {
public:
  /// Throws GuardExceeded if the word class has more than `guard` words.
  FactorizationSampler(const Permutation& p, std::uint64_t guard = 10'000'000);

  StarFactorization draw(std::mt19937_64& rng) const;

  const std::vector<CanonicalWord>& words() const noexcept { return words_; }
  const CycleDecomposition& decomposition() const noexcept { return decomp_; }

private:
  CycleDecomposition decomp_;
  std::vector<CanonicalWord> words_;
};

} // namespace starfact
