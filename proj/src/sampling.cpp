#include "starfact/sampling.hpp"

namespace starfact {

FactorizationSampler::FactorizationSampler(const Permutation& p, std::uint64_t guard)
    : decomp_(cycle_decomposition(p)), words_(enumerate_words(decomp_, guard)) {}

StarFactorization FactorizationSampler::draw(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::size_t> pick_word(0, words_.size() - 1);
  const CanonicalWord& w = words_[pick_word(rng)];

  AnchorTuple anchors;
  for (std::size_t j = 1; j < decomp_.cycles.size(); ++j) {
    const auto& cycle = decomp_.cycles[j];
    std::uniform_int_distribution<std::size_t> pick(0, cycle.size() - 1);
    anchors.anchors.push_back(cycle[pick(rng)]);
  }
  return phi_inverse(w, anchors, decomp_);
}

} // namespace starfact
