#include "starfact/selftest.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "starfact/characterization.hpp"
#include "starfact/counting.hpp"
#include "starfact/errors.hpp"
#include "starfact/permutation.hpp"
#include "starfact/sampling.hpp"
#include "starfact/trees.hpp"
#include "starfact/words.hpp"

namespace starfact {

namespace {

constexpr const char* kExamplePerm = "(1 8 2)(3)(4 5 10 7)(6)(9 11)";
constexpr const char* kExampleFactors = "9 11 9 2 10 5 3 3 4 7 6 6 10 8";
constexpr const char* kExampleWord = "5 5 5 1 3 3 2 2 3 3 4 4 3 1";
constexpr const char* kExampleAnchors = "3,10,6,9";
constexpr const char* kExampleTree = "1(5(*) * 3(* 2 * * 4) *)";

// Collects the first failure message; later failures only bump the count.
class Failures {
public:
  void add(const std::string& message) {
    if (count_++ == 0)
      first_ = message;
  }
  bool empty() const { return count_ == 0; }
  std::string summary() const {
    return std::to_string(count_) + " failure(s); first: " + first_;
  }

private:
  std::size_t count_ = 0;
  std::string first_;
};

CheckResult finish(int id, std::string name, const Failures& failures, std::string ok_detail) {
  CheckResult r;
  r.id = id;
  r.name = std::move(name);
  r.passed = failures.empty();
  r.detail = r.passed ? std::move(ok_detail) : failures.summary();
  return r;
}

std::string describe(const Permutation& p) {
  return format_cycles(p) + " in S" + std::to_string(p.degree());
}

// Calls visit(f) for every star sequence of the given length in S_n.
void for_each_sequence(int n, std::size_t length,
                       const std::function<void(const StarFactorization&)>& visit) {
  if (n == 1) {
    if (length == 0)
      visit(StarFactorization(1, {}));
    return;
  }
  std::vector<int> symbols(length, 2);
  while (true) {
    visit(StarFactorization::from_symbols(n, symbols));
    std::size_t i = length;
    while (i > 0 && symbols[i - 1] == n)
      symbols[--i] = 2;
    if (i == 0)
      return;
    ++symbols[i - 1];
  }
}

} // namespace

bool SelftestReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

CheckResult check_transitive_count_oracle(const SelftestOptions& options) {
  Failures failures;
  std::size_t perms = 0;
  for (int n = 1; n <= options.n_max; ++n) {
    for (const Permutation& p : all_permutations(n)) {
      ++perms;
      const CycleType ct = CycleType::of(p);
      const int m = ct.cycle_count();
      const auto found = brute_force_enumerate(p, true, static_cast<std::size_t>(n + m - 2));
      Count expected = count_minimal_transitive(ct);
      if (options.inject_fault) {
        Count product = 1;
        for (int l : ct.lengths())
          product *= l;
        expected = factorial(n + m - 1) * product / factorial(n);
      }
      if (Count(found.size()) != expected)
        failures.add(describe(p) + ": brute force " + std::to_string(found.size()) +
                     " vs formula " + to_string(expected));
    }
  }
  return finish(1, "transitive_count_oracle", failures,
                std::to_string(perms) + " permutations, n <= " + std::to_string(options.n_max));
}

CheckResult check_worked_example(const SelftestOptions&) {
  Failures failures;
  const Permutation p = parse_cycles(kExamplePerm, 11);
  const StarFactorization f = parse_factors(kExampleFactors, 11);
  const CycleDecomposition d = cycle_decomposition(p);
  const CycleType ct = CycleType::of(d);

  if (evaluate(f) != p)
    failures.add("product of factors is " + format_cycles(evaluate(f)));
  if (!is_minimal_transitive(f, p))
    failures.add("factorization is not minimal transitive");

  const CanonicalWord word = parse_word(kExampleWord);
  const AnchorTuple anchors = parse_anchors(kExampleAnchors);
  const EncodedFactorization encoded = phi(f, p);
  if (encoded.word != word)
    failures.add("word " + format_word(encoded.word));
  if (encoded.anchors != anchors)
    failures.add("anchors " + format_anchors(encoded.anchors));
  if (phi_inverse(word, anchors, d) != f)
    failures.add("inverse map gives " + format_factors(phi_inverse(word, anchors, d)));

  const BicolouredTree tree = word_to_tree(word, d);
  if (tree != parse_paren(kExampleTree))
    failures.add("tree " + to_paren(tree));
  const auto& root = tree.node(0);
  if (root.children.size() != 4)
    failures.add("root has " + std::to_string(root.children.size()) + " children");

  if (count_minimal_transitive(ct) != 52416)
    failures.add("transitive count " + to_string(count_minimal_transitive(ct)));
  const Count words_closed = count_words_closed_form(ct);
  if (words_closed != 6552)
    failures.add("word count closed form " + to_string(words_closed));
  const auto words = enumerate_words(d);
  if (Count(words.size()) != words_closed)
    failures.add("enumerated " + std::to_string(words.size()) + " words");

  return finish(2, "worked_example", failures,
                "product, word, anchors, inverse, tree, 52416, 6552 all reproduced");
}

CheckResult check_characterization_equivalence(const SelftestOptions& options) {
  Failures failures;
  std::size_t sequences = 0;
  std::size_t accepted = 0;
  const int top = std::min(4, options.n_max);
  for (int n = 1; n <= top; ++n) {
    for (const Permutation& p : all_permutations(n)) {
      const std::size_t length = minimal_transitive_length(p);
      for_each_sequence(n, length, [&](const StarFactorization& f) {
        ++sequences;
        const bool structural = characterize(f, p).overall;
        const bool direct = is_minimal_transitive(f, p);
        accepted += direct;
        if (structural != direct)
          failures.add(describe(p) + " with factors \"" + format_factors(f) + "\": structural " +
                       (structural ? "true" : "false") + ", direct " + (direct ? "true" : "false"));
      });
    }
  }
  return finish(3, "characterization_equivalence", failures,
                std::to_string(sequences) + " sequences, " + std::to_string(accepted) +
                    " minimal transitive, n <= " + std::to_string(top));
}

CheckResult check_word_bijection(const SelftestOptions& options) {
  Failures failures;
  std::size_t pairs = 0;
  for (int n = 1; n <= options.n_max; ++n) {
    for (const Permutation& p : all_permutations(n)) {
      const CycleDecomposition d = cycle_decomposition(p);
      const auto family = brute_force_enumerate(p, true, minimal_transitive_length(p));
      for (const auto& f : family) {
        const EncodedFactorization e = phi(f, p);
        if (phi_inverse(e.word, e.anchors, d) != f)
          failures.add(describe(p) + ": inverse(phi(" + format_factors(f) + ")) differs");
      }

      const auto words = enumerate_words(d);
      const auto anchor_tuples = enumerate_anchors(d);
      for (const auto& w : words) {
        for (const auto& a : anchor_tuples) {
          ++pairs;
          const StarFactorization f = phi_inverse(w, a, d);
          if (!is_minimal_transitive(f, p)) {
            failures.add(describe(p) + ": inverse(" + format_word(w) + "; " + format_anchors(a) +
                         ") is not minimal transitive");
            continue;
          }
          if (phi(f, p) != EncodedFactorization{w, a})
            failures.add(describe(p) + ": phi(inverse(" + format_word(w) + "; " +
                         format_anchors(a) + ")) differs");
        }
      }
      if (family.size() != words.size() * anchor_tuples.size())
        failures.add(describe(p) + ": |F| = " + std::to_string(family.size()) + " but |W| x |A| = " +
                     std::to_string(words.size()) + " x " + std::to_string(anchor_tuples.size()));
    }
  }
  return finish(4, "word_bijection", failures,
                std::to_string(pairs) + " (word, anchors) pairs, n <= " +
                    std::to_string(options.n_max));
}

CheckResult check_minimal_count_oracle(const SelftestOptions&) {
  Failures failures;
  const int n = 4;
  for (const Permutation& p : all_permutations(n)) {
    const CycleType ct = CycleType::of(p);
    const int m = ct.cycle_count();
    const int k = ct.fixed_count();
    const std::size_t length = static_cast<std::size_t>(n + m - 2 * (k + 1));
    SearchOptions plain;
    plain.prune = false;
    const auto found = brute_force_enumerate(p, false, length, plain);
    if (Count(found.size()) != count_minimal(ct))
      failures.add(describe(p) + ": brute force " + std::to_string(found.size()) + " vs formula " +
                   to_string(count_minimal(ct)));
    for (std::size_t shorter = 0; shorter < length; ++shorter)
      if (!brute_force_enumerate(p, false, shorter, plain).empty())
        failures.add(describe(p) + ": factorization of length " + std::to_string(shorter) +
                     " exists");
  }
  return finish(5, "minimal_count_oracle", failures, "all 24 permutations of S4");
}

CheckResult check_pak_consistency(const SelftestOptions&) {
  Failures failures;
  std::size_t grid = 0;
  for (int k = 2; k <= 8; ++k) {
    for (int m = 1; m * k + 1 <= 9; ++m) {
      ++grid;
      std::vector<int> lengths{1};
      lengths.insert(lengths.end(), static_cast<std::size_t>(m), k);
      const Count general = count_minimal_transitive(CycleType(lengths));
      if (pak_count(k, m) != general)
        failures.add("k=" + std::to_string(k) + ", m=" + std::to_string(m) + ": " +
                     to_string(pak_count(k, m)) + " vs " + to_string(general));
    }
  }
  const auto s3 = brute_force_enumerate(parse_cycles("(2 3)", 3), true, 3);
  if (pak_count(2, 1) != 2 || Count(s3.size()) != pak_count(2, 1))
    failures.add("k=2, m=1 brute force " + std::to_string(s3.size()));
  const auto s5 = brute_force_enumerate(parse_cycles("(2 3)(4 5)", 5), true, 6);
  if (pak_count(2, 2) != 24 || Count(s5.size()) != pak_count(2, 2))
    failures.add("k=2, m=2 brute force " + std::to_string(s5.size()));
  return finish(6, "pak_consistency", failures,
                std::to_string(grid) + " (k, m) pairs with mk+1 <= 9; brute force 2 and 24");
}

CheckResult check_tree_bijection(const SelftestOptions& options) {
  Failures failures;
  std::size_t trees = 0;
  for (int n = 1; n <= options.n_max; ++n) {
    for (const Permutation& p : all_permutations(n)) {
      const CycleDecomposition d = cycle_decomposition(p);
      const int m = d.cycle_count();
      const auto words = enumerate_words(d);
      if (Count(words.size()) != count_words_closed_form(CycleType::of(d)))
        failures.add(describe(p) + ": " + std::to_string(words.size()) +
                     " words vs closed form " + to_string(count_words_closed_form(CycleType::of(d))));
      for (const auto& w : words) {
        ++trees;
        const BicolouredTree t = word_to_tree(w, d);
        if (!validate_tree(t, d))
          failures.add(describe(p) + ": tree of " + format_word(w) + " invalid: " +
                       tree_violation(t, &d).value_or("?"));
        if (tree_to_word(t) != w)
          failures.add(describe(p) + ": word of tree of " + format_word(w) + " differs");
        if (word_to_tree(tree_to_word(t), d) != t)
          failures.add(describe(p) + ": tree round trip differs for " + to_paren(t));
        if (t.white_count() != m || t.black_count() != n - m)
          failures.add(describe(p) + ": vertex colours wrong for " + to_paren(t));
      }
    }
  }
  return finish(7, "tree_bijection", failures,
                std::to_string(trees) + " trees, n <= " + std::to_string(options.n_max));
}

CheckResult check_sampling_uniformity(const SelftestOptions& options) {
  Failures failures;
  const Permutation p = parse_cycles("(2 3)(4 5)", 5);
  const auto population = brute_force_enumerate(p, true, minimal_transitive_length(p));
  std::map<StarFactorization, std::uint64_t> hits;
  for (const auto& f : population)
    hits[f] = 0;

  const FactorizationSampler sampler(p);
  std::mt19937_64 rng(options.seed);
  for (std::uint64_t i = 0; i < options.sample_draws; ++i) {
    const StarFactorization f = sampler.draw(rng);
    const auto it = hits.find(f);
    if (it == hits.end()) {
      failures.add("drew a non-member " + format_factors(f));
      break;
    }
    ++it->second;
  }

  const double expected = static_cast<double>(options.sample_draws) /
                          static_cast<double>(population.size());
  double chi2 = 0.0;
  double worst = 0.0;
  for (const auto& [f, observed] : hits) {
    const double diff = static_cast<double>(observed) - expected;
    chi2 += diff * diff / expected;
    worst = std::max(worst, std::abs(diff) / expected);
  }
  const double dof = static_cast<double>(population.size()) - 1.0;
  const double p_value =
      boost::math::cdf(boost::math::complement(boost::math::chi_squared(dof), chi2));

  if (population.size() != 24)
    failures.add("population size " + std::to_string(population.size()) + ", expected 24");
  if (worst > 0.05)
    failures.add("max relative deviation " + std::to_string(worst) + " > 0.05");
  if (!(p_value > 0.01))
    failures.add("chi-square p-value " + std::to_string(p_value) + " <= 0.01");

  std::ostringstream detail;
  detail << options.sample_draws << " draws, max relative deviation " << worst
         << ", chi-square " << chi2 << " (p = " << p_value << ")";
  return finish(8, "sampling_uniformity", failures, detail.str());
}

SelftestReport run_selftest(const SelftestOptions& options) {
  struct Entry {
    const char* name;
    CheckResult (*run)(const SelftestOptions&);
  };
  static const Entry checks[] = {
      {"transitive_count_oracle", check_transitive_count_oracle},
      {"worked_example", check_worked_example},
      {"characterization_equivalence", check_characterization_equivalence},
      {"word_bijection", check_word_bijection},
      {"minimal_count_oracle", check_minimal_count_oracle},
      {"pak_consistency", check_pak_consistency},
      {"tree_bijection", check_tree_bijection},
      {"sampling_uniformity", check_sampling_uniformity},
  };
  SelftestReport report;
  int id = 0;
  for (const Entry& check : checks) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = check.run(options);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.id = ++id;
    r.name = check.name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(r));
  }
  return report;
}

} // namespace starfact
