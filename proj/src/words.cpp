#include "starfact/words.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include "starfact/characterization.hpp"
#include "starfact/errors.hpp"

namespace starfact {

namespace {

template <std::size_t K>
bool contains_scattered(std::span<const int> w, const std::array<int, K>& pattern) {
  std::size_t matched = 0;
  for (int letter : w)
    if (letter == pattern[matched] && ++matched == K)
      return true;
  return false;
}

bool counts_match(std::span<const int> w, const CycleDecomposition& decomp) {
  const int m = decomp.cycle_count();
  std::vector<int> count(static_cast<std::size_t>(m) + 1, 0);
  for (int letter : w) {
    if (letter < 1 || letter > m)
      return false;
    ++count[letter];
  }
  if (count[1] != decomp.lengths[0] - 1)
    return false;
  for (int j = 2; j <= m; ++j)
    if (count[j] != decomp.lengths[j - 1] + 1)
      return false;
  return true;
}

std::vector<int> parse_int_list(std::string_view text, bool commas) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c) || (commas && c == ',')) {
      ++i;
      continue;
    }
    if (!std::isdigit(c))
      throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
    const std::size_t begin = i;
    long long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1'000'000'000)
        throw ParseError("value too large", begin);
      ++i;
    }
    if (value == 0)
      throw ParseError("values are 1-based; 0 is not allowed", begin);
    out.push_back(static_cast<int>(value));
  }
  return out;
}

// sigma^k(x) for the permutation whose cycles are given.
int power_apply(const Permutation& sigma, int x, int k) {
  for (int i = 0; i < k; ++i)
    x = sigma(x);
  return x;
}

} // namespace

bool is_valid_word(std::span<const int> w, const CycleDecomposition& decomp) {
  if (!counts_match(w, decomp))
    return false;
  const int m = decomp.cycle_count();
  for (int a = 2; a <= m; ++a) {
    if (contains_scattered<3>(w, {a, 1, a}))
      return false;
    for (int b = 2; b <= m; ++b)
      if (a != b && contains_scattered<4>(w, {a, b, a, b}))
        return false;
  }
  return true;
}

bool is_valid_anchors(const AnchorTuple& anchors, const CycleDecomposition& decomp) {
  if (anchors.anchors.size() + 1 != decomp.cycles.size())
    return false;
  for (std::size_t j = 1; j < decomp.cycles.size(); ++j) {
    const auto& cycle = decomp.cycles[j];
    if (std::find(cycle.begin(), cycle.end(), anchors.anchors[j - 1]) == cycle.end())
      return false;
  }
  return true;
}

EncodedFactorization phi(const StarFactorization& f, const Permutation& p) {
  const CharacterizationReport report = characterize(f, p);
  if (!report.occurrence_ok)
    throw ValidationError("not a minimal transitive star factorization: occurrence counts fail");
  if (!report.order_ok)
    throw ValidationError("not a minimal transitive star factorization: cyclic order fails");
  if (!report.nesting_ok)
    throw ValidationError("not a minimal transitive star factorization: nesting fails");

  const CycleDecomposition d = cycle_decomposition(p);
  std::vector<int> orbit(static_cast<std::size_t>(d.degree) + 1, 0);
  for (std::size_t j = 0; j < d.cycles.size(); ++j)
    for (int a : d.cycles[j])
      orbit[a] = static_cast<int>(j) + 1;

  EncodedFactorization out;
  out.anchors.anchors.assign(d.cycles.size() - 1, 0);
  for (const auto& t : f.factors) {
    const int j = orbit[t.other];
    out.word.letters.push_back(j);
    if (j >= 2 && out.anchors.anchors[j - 2] == 0)
      out.anchors.anchors[j - 2] = t.other;
  }
  return out;
}

StarFactorization phi_inverse(const CanonicalWord& w, const AnchorTuple& anchors,
                              const CycleDecomposition& decomp) {
  if (!is_valid_word(w.letters, decomp))
    throw ValidationError("word \"" + format_word(w) + "\" is not in the word class of type");
  if (!is_valid_anchors(anchors, decomp))
    throw ValidationError("anchors \"" + format_anchors(anchors) +
                          "\" do not pick one symbol from each cycle 2..m");

  const Permutation sigma = to_permutation(decomp);
  const int m = decomp.cycle_count();
  std::vector<std::vector<std::size_t>> positions(static_cast<std::size_t>(m) + 1);
  for (std::size_t i = 0; i < w.letters.size(); ++i)
    positions[w.letters[i]].push_back(i);

  std::vector<StarTransposition> factors(w.letters.size());

  // Cycle of 1: the t-th occurrence (1-based) receives sigma^{l_1 - t}(1).
  const int l1 = decomp.lengths[0];
  for (std::size_t t = 1; t <= positions[1].size(); ++t)
    factors[positions[1][t - 1]] = {power_apply(sigma, 1, l1 - static_cast<int>(t))};

  // Other cycles: the outer occurrences carry k_j; reading the middle ones
  // left to right gives sigma^{l-1}(k), ..., sigma(k).
  for (int j = 2; j <= m; ++j) {
    const auto& pos = positions[j];
    const int k = anchors.anchors[j - 2];
    const int len = decomp.lengths[j - 1];
    factors[pos.front()] = {k};
    factors[pos.back()] = {k};
    for (std::size_t t = 2; t + 1 <= pos.size(); ++t)
      factors[pos[t - 1]] = {power_apply(sigma, k, len + 1 - static_cast<int>(t))};
  }
  return StarFactorization(decomp.degree, std::move(factors));
}

namespace {

class WordSearch {
public:
  WordSearch(const CycleDecomposition& d, std::uint64_t guard)
      : m_(d.cycle_count()), guard_(guard), remaining_(static_cast<std::size_t>(m_) + 1),
        first_(remaining_.size(), -1), last_(remaining_.size(), -1),
        occurrences_(remaining_.size()) {
    remaining_[1] = d.lengths[0] - 1;
    for (int j = 2; j <= m_; ++j)
      remaining_[j] = d.lengths[j - 1] + 1;
    for (int j = 1; j <= m_; ++j)
      length_ += static_cast<std::size_t>(remaining_[j]);
  }

  std::vector<CanonicalWord> run() {
    descend();
    return std::move(found_);
  }

private:
  // Whether appending x to the current prefix completes a forbidden
  // pattern, or makes a1a unavoidable.
  bool blocked(int x) const {
    const int pos = static_cast<int>(current_.size());
    if (x == 1)
      return open_ > 0;
    if (first_[x] >= 0 && last_one_ > first_[x])
      return true;
    const auto& xs = occurrences_[x];
    for (int a = 2; a <= m_; ++a) {
      if (a == x || first_[a] < 0)
        continue;
      // a ... x ... a ... x(new)
      const auto after = std::upper_bound(xs.begin(), xs.end(), first_[a]);
      if (after != xs.end() && last_[a] > *after && last_[a] < pos)
        return true;
    }
    return false;
  }

  void push(int x) {
    const int pos = static_cast<int>(current_.size());
    current_.push_back(x);
    --remaining_[x];
    if (x == 1) {
      last_one_ = pos;
    } else {
      if (first_[x] < 0) {
        first_[x] = pos;
        ++open_;
      }
      if (remaining_[x] == 0)
        --open_;
      saved_last_.push_back(last_[x]);
      last_[x] = pos;
      occurrences_[x].push_back(pos);
    }
  }

  void pop(int saved_last_one) {
    const int x = current_.back();
    current_.pop_back();
    if (x == 1) {
      last_one_ = saved_last_one;
    } else {
      if (remaining_[x] == 0)
        ++open_;
      occurrences_[x].pop_back();
      last_[x] = saved_last_.back();
      saved_last_.pop_back();
      if (occurrences_[x].empty()) {
        first_[x] = -1;
        --open_;
      }
    }
    ++remaining_[x];
  }

  void descend() {
    if (current_.size() == length_) {
      if (found_.size() >= guard_)
        throw GuardExceeded("word enumeration exceeds budget", guard_);
      found_.push_back({current_});
      return;
    }
    for (int x = 1; x <= m_; ++x) {
      if (remaining_[x] == 0 || blocked(x))
        continue;
      const int saved = last_one_;
      push(x);
      descend();
      pop(saved);
    }
  }

  int m_;
  std::uint64_t guard_;
  std::size_t length_ = 0;
  std::vector<int> remaining_;
  std::vector<int> first_;
  std::vector<int> last_;
  std::vector<std::vector<int>> occurrences_;
  std::vector<int> saved_last_;
  int last_one_ = -1;
  int open_ = 0;
  std::vector<int> current_;
  std::vector<CanonicalWord> found_;
};

} // namespace

std::vector<CanonicalWord> enumerate_words(const CycleDecomposition& decomp, std::uint64_t guard) {
  return WordSearch(decomp, guard).run();
}

std::vector<AnchorTuple> enumerate_anchors(const CycleDecomposition& decomp) {
  std::vector<AnchorTuple> out{AnchorTuple{}};
  for (std::size_t j = 1; j < decomp.cycles.size(); ++j) {
    std::vector<AnchorTuple> next;
    for (const auto& prefix : out)
      for (int k : decomp.cycles[j]) {
        AnchorTuple a = prefix;
        a.anchors.push_back(k);
        next.push_back(std::move(a));
      }
    out = std::move(next);
  }
  return out;
}

std::string format_word(const CanonicalWord& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.letters.size(); ++i)
    out << (i ? " " : "") << w.letters[i];
  return out.str();
}

CanonicalWord parse_word(std::string_view text) { return {parse_int_list(text, false)}; }

std::string format_anchors(const AnchorTuple& a) {
  std::ostringstream out;
  for (std::size_t i = 0; i < a.anchors.size(); ++i)
    out << (i ? "," : "") << a.anchors[i];
  return out.str();
}

AnchorTuple parse_anchors(std::string_view text) { return {parse_int_list(text, true)}; }

CycleDecomposition decomposition_for_word(std::span<const int> w) {
  int m = 1;
  for (int letter : w) {
    if (letter < 1)
      throw ValidationError("word letters must be positive");
    m = std::max(m, letter);
  }
  std::vector<int> count(static_cast<std::size_t>(m) + 1, 0);
  for (int letter : w)
    ++count[letter];

  std::vector<int> lengths{count[1] + 1};
  for (int j = 2; j <= m; ++j) {
    if (count[j] < 2)
      throw ValidationError("letter " + std::to_string(j) + " occurs " +
                            std::to_string(count[j]) + " times; letters 2..m need at least 2");
    lengths.push_back(count[j] - 1);
  }
  return block_decomposition(lengths);
}

} // namespace starfact
