#include "starfact/characterization.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <stdexcept>

#include "starfact/errors.hpp"

namespace starfact {

namespace {

void require_same_degree(const StarFactorization& f, const Permutation& p) {
  if (f.degree != p.degree())
    throw std::invalid_argument("factorization degree " + std::to_string(f.degree) +
                                " differs from permutation degree " +
                                std::to_string(p.degree()));
}

// positions[j] lists the (0-based) positions of factors meeting cycle j+1.
std::vector<std::vector<std::size_t>> positions_by_cycle(const StarFactorization& f,
                                                         const CycleDecomposition& d) {
  std::vector<int> orbit(static_cast<std::size_t>(d.degree) + 1, 0);
  for (std::size_t j = 0; j < d.cycles.size(); ++j)
    for (int a : d.cycles[j])
      orbit[a] = static_cast<int>(j);
  std::vector<std::vector<std::size_t>> positions(d.cycles.size());
  for (std::size_t i = 0; i < f.factors.size(); ++i)
    positions[orbit[f.factors[i].other]].push_back(i);
  return positions;
}

} // namespace

bool meets(StarTransposition t, std::span<const int> cycle) {
  return std::find(cycle.begin(), cycle.end(), t.other) != cycle.end();
}

std::size_t minimal_transitive_length(const Permutation& p) {
  return static_cast<std::size_t>(p.degree() + cycle_decomposition(p).cycle_count() - 2);
}

bool is_minimal_transitive(const StarFactorization& f, const Permutation& p) {
  require_same_degree(f, p);
  return f.length() == minimal_transitive_length(p) && is_transitive(f) && evaluate(f) == p;
}

bool check_occurrence_counts(const StarFactorization& f, const Permutation& p) {
  require_same_degree(f, p);
  std::vector<int> count(static_cast<std::size_t>(p.degree()) + 1, 0);
  for (const auto& t : f.factors)
    ++count[t.other];

  const CycleDecomposition d = cycle_decomposition(p);
  for (std::size_t j = 0; j < d.cycles.size(); ++j) {
    const auto& cycle = d.cycles[j];
    if (j == 0) {
      // (1 b_2 ... b_l): every (1 b_i) exactly once.
      for (std::size_t i = 1; i < cycle.size(); ++i)
        if (count[cycle[i]] != 1)
          return false;
      continue;
    }
    int doubled = 0;
    for (int a : cycle) {
      if (count[a] == 2)
        ++doubled;
      else if (count[a] != 1)
        return false;
    }
    if (doubled != 1)
      return false;
  }
  return true;
}

bool check_cyclic_order(const StarFactorization& f, const Permutation& p) {
  if (!check_occurrence_counts(f, p))
    return false;
  const CycleDecomposition d = cycle_decomposition(p);
  const auto positions = positions_by_cycle(f, d);

  for (std::size_t j = 0; j < d.cycles.size(); ++j) {
    const auto& pos = positions[j];
    // Symbols read right to left must trace the cycle; for the cycle of 1
    // the trace starts at p(1).
    int expected = (j == 0) ? p(1) : f.factors[pos.back()].other;
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
      const int symbol = f.factors[*it].other;
      if (symbol != expected)
        return false;
      expected = p(symbol);
    }
  }
  return true;
}

bool check_nesting(const StarFactorization& f, const Permutation& p) {
  require_same_degree(f, p);
  const CycleDecomposition d = cycle_decomposition(p);
  const auto positions = positions_by_cycle(f, d);

  std::vector<std::size_t> cycle_at(f.length());
  for (std::size_t j = 0; j < positions.size(); ++j)
    for (std::size_t i : positions[j])
      cycle_at[i] = j;

  for (std::size_t c = 0; c < f.length(); ++c) {
    const std::size_t inner = cycle_at[c];
    for (std::size_t outer = 0; outer < positions.size(); ++outer) {
      if (outer == inner)
        continue;
      const auto& pos = positions[outer];
      // Tightest a < c < b with a, b meeting the outer cycle.
      const auto above = std::upper_bound(pos.begin(), pos.end(), c);
      if (above == pos.begin() || above == pos.end())
        continue;
      const std::size_t a = *(above - 1);
      const std::size_t b = *above;
      if (inner == 0)
        return false;
      const auto& inner_pos = positions[inner];
      if (inner_pos.front() <= a || inner_pos.back() >= b)
        return false;
    }
  }
  return true;
}

CharacterizationReport characterize(const StarFactorization& f, const Permutation& p) {
  CharacterizationReport r;
  r.occurrence_ok = check_occurrence_counts(f, p);
  r.order_ok = r.occurrence_ok && check_cyclic_order(f, p);
  r.nesting_ok = check_nesting(f, p);
  r.overall = r.occurrence_ok && r.order_ok && r.nesting_ok;
  return r;
}

std::uint64_t candidate_count(int n, std::size_t length) {
  const std::uint64_t base = static_cast<std::uint64_t>(n - 1);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (base == 0)
      return 0;
    if (total > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    total *= base;
  }
  return total;
}

namespace {

class Search {
public:
  Search(const Permutation& target, bool transitive, std::size_t length, bool prune)
      : target_(target.images()), n_(target.degree()), length_(length),
        transitive_(transitive), images_(static_cast<std::size_t>(n_)),
        uses_(static_cast<std::size_t>(n_) + 1, 0), limit_(uses_.size(), 0) {
    for (int i = 0; i < n_; ++i)
      images_[i] = i + 1;
    prune_ = prune && transitive && length == minimal_transitive_length(target);
    if (prune_) {
      const CycleDecomposition d = cycle_decomposition(target);
      for (std::size_t j = 0; j < d.cycles.size(); ++j)
        for (int a : d.cycles[j])
          limit_[a] = (j == 0) ? 1 : 2;
    }
  }

  std::vector<StarFactorization> run_from(int first) {
    current_.clear();
    if (length_ == 0) {
      if (images_ == target_ && (!transitive_ || n_ == 1))
        found_.emplace_back(n_, std::vector<StarTransposition>{});
      return std::move(found_);
    }
    push(first);
    descend();
    return std::move(found_);
  }

private:
  void push(int symbol) {
    std::swap(images_[0], images_[symbol - 1]);
    if (uses_[symbol]++ == 0)
      ++touched_;
    current_.push_back({symbol});
  }

  void pop() {
    const int symbol = current_.back().other;
    current_.pop_back();
    if (--uses_[symbol] == 0)
      --touched_;
    std::swap(images_[0], images_[symbol - 1]);
  }

  void descend() {
    const std::size_t remaining = length_ - current_.size();
    if (transitive_ && static_cast<std::size_t>(n_ - 1 - touched_) > remaining)
      return;
    if (remaining == 0) {
      if (images_ == target_)
        found_.emplace_back(n_, current_);
      return;
    }
    for (int s = 2; s <= n_; ++s) {
      if (prune_ && uses_[s] >= limit_[s])
        continue;
      push(s);
      descend();
      pop();
    }
  }

  std::vector<int> target_;
  int n_;
  std::size_t length_;
  bool transitive_;
  bool prune_ = false;
  std::vector<int> images_;
  std::vector<int> uses_;
  std::vector<int> limit_;
  int touched_ = 0;
  std::vector<StarTransposition> current_;
  std::vector<StarFactorization> found_;
};

constexpr std::uint64_t kParallelThreshold = 200'000;

} // namespace

std::vector<StarFactorization> brute_force_enumerate(const Permutation& p,
                                                     bool transitive_required,
                                                     std::size_t length,
                                                     const SearchOptions& options) {
  const std::uint64_t candidates = candidate_count(p.degree(), length);
  if (candidates > options.guard)
    throw GuardExceeded("(n-1)^length = " +
                            (candidates == std::numeric_limits<std::uint64_t>::max()
                                 ? std::string("overflow")
                                 : std::to_string(candidates)) +
                            " candidate sequences exceeds search budget",
                        options.guard);

  const int n = p.degree();
  if (n == 1 && length > 0)
    return {};
  if (length == 0)
    return Search(p, transitive_required, length, options.prune).run_from(2);

  std::vector<std::vector<StarFactorization>> parts(static_cast<std::size_t>(n - 1));
  if (options.parallel && candidates >= kParallelThreshold) {
    std::vector<std::future<std::vector<StarFactorization>>> jobs;
    for (int first = 2; first <= n; ++first)
      jobs.push_back(std::async(std::launch::async, [&, first] {
        return Search(p, transitive_required, length, options.prune).run_from(first);
      }));
    for (std::size_t i = 0; i < jobs.size(); ++i)
      parts[i] = jobs[i].get();
  } else {
    for (int first = 2; first <= n; ++first)
      parts[first - 2] = Search(p, transitive_required, length, options.prune).run_from(first);
  }

  std::vector<StarFactorization> out;
  for (auto& part : parts)
    std::move(part.begin(), part.end(), std::back_inserter(out));
  return out;
}

} // namespace starfact
