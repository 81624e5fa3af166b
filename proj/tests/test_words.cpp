#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "starfact/characterization.hpp"
#include "starfact/counting.hpp"
#include "starfact/errors.hpp"
#include "starfact/words.hpp"

using namespace starfact;

namespace {

const Permutation kExamplePerm = parse_cycles("(1 8 2)(3)(4 5 10 7)(6)(9 11)", 11);
const std::vector<int> kExampleWord{5, 5, 5, 1, 3, 3, 2, 2, 3, 3, 4, 4, 3, 1};

StarFactorization star(int n, std::vector<int> symbols) {
  return StarFactorization::from_symbols(n, symbols);
}

} // namespace

TEST_CASE("word class membership") {
  CHECK(is_valid_word(kExampleWord, cycle_decomposition(kExamplePerm)));
  const auto d = cycle_decomposition(parse_cycles("(1 2)(3 4)"));
  CHECK_FALSE(is_valid_word(std::vector<int>{2, 2, 1, 2}, d));
  CHECK(is_valid_word(std::vector<int>{2, 2, 2, 1}, d));
  CHECK(is_valid_word(std::vector<int>{1, 2, 2, 2}, d));
  CHECK_FALSE(is_valid_word(std::vector<int>{2, 1, 2, 2}, d));
  CHECK_FALSE(is_valid_word(std::vector<int>{2, 2, 2}, d));       // wrong count
  CHECK_FALSE(is_valid_word(std::vector<int>{2, 2, 2, 3}, d));    // letter out of range

  // abab: (2 3)(4 5) has word length 6 over {2, 3}.
  const auto two = cycle_decomposition(parse_cycles("(2 3)(4 5)", 5));
  CHECK(is_valid_word(std::vector<int>{2, 2, 2, 3, 3, 3}, two));
  CHECK(is_valid_word(std::vector<int>{2, 3, 3, 3, 2, 2}, two));
  CHECK_FALSE(is_valid_word(std::vector<int>{2, 3, 2, 2, 3, 3}, two));
}

TEST_CASE("pattern check agrees with the position-tuple oracle") {
  // Every arrangement of the multiset for a few cycle types.
  for (const std::vector<int>& lengths :
       {std::vector<int>{1, 2, 2}, std::vector<int>{2, 1, 2}, std::vector<int>{3, 1, 1},
        std::vector<int>{1, 1, 1, 1}, std::vector<int>{2, 3}}) {
    const auto d = block_decomposition(lengths);
    std::vector<int> letters(static_cast<std::size_t>(lengths[0] - 1), 1);
    for (std::size_t j = 1; j < lengths.size(); ++j)
      letters.insert(letters.end(), static_cast<std::size_t>(lengths[j] + 1),
                     static_cast<int>(j) + 1);
    std::sort(letters.begin(), letters.end());
    do {
      CHECK(is_valid_word(letters, d) == !oracle::has_forbidden_pattern(letters));
    } while (std::next_permutation(letters.begin(), letters.end()));
  }
}

TEST_CASE("phi on the worked example") {
  const auto f = star(11, {9, 11, 9, 2, 10, 5, 3, 3, 4, 7, 6, 6, 10, 8});
  const auto e = phi(f, kExamplePerm);
  CHECK(e.word.letters == kExampleWord);
  CHECK(e.anchors.anchors == std::vector<int>{3, 10, 6, 9});
  CHECK(phi_inverse(e.word, e.anchors, cycle_decomposition(kExamplePerm)) == f);
}

TEST_CASE("phi small cases") {
  const auto swap = phi(star(3, {2, 3, 2}), parse_cycles("(2 3)", 3));
  CHECK(swap.word.letters == std::vector<int>{2, 2, 2});
  CHECK(swap.anchors.anchors == std::vector<int>{2});

  const auto cyc = phi(star(3, {3, 2}), parse_cycles("(1 2 3)"));
  CHECK(cyc.word.letters == std::vector<int>{1, 1});
  CHECK(cyc.anchors.anchors.empty());

  CHECK_THROWS_WITH_AS(phi(star(3, {2, 3}), parse_cycles("(1 2 3)")),
                       doctest::Contains("cyclic order"), ValidationError);
  CHECK_THROWS_WITH_AS(phi(star(3, {2, 2, 3}), parse_cycles("(1 2 3)")),
                       doctest::Contains("occurrence"), ValidationError);
}

TEST_CASE("phi_inverse small cases") {
  const auto swap = cycle_decomposition(parse_cycles("(2 3)", 3));
  CHECK(phi_inverse({{2, 2, 2}}, {{2}}, swap) == star(3, {2, 3, 2}));
  CHECK(phi_inverse({{2, 2, 2}}, {{3}}, swap) == star(3, {3, 2, 3}));
  const auto cyc = cycle_decomposition(parse_cycles("(1 2 3)"));
  CHECK(phi_inverse({{1, 1}}, {}, cyc) == star(3, {3, 2}));

  CHECK_THROWS_AS(phi_inverse({{2, 2, 2}}, {{1}}, swap), ValidationError);
  CHECK_THROWS_AS(phi_inverse({{2, 2, 2}}, {}, swap), ValidationError);
  CHECK_THROWS_AS(phi_inverse({{2, 2}}, {{2}}, swap), ValidationError);
}

TEST_CASE("enumerate_words examples") {
  const auto d = cycle_decomposition(parse_cycles("(1 2)(3 4)"));
  const auto words = enumerate_words(d);
  REQUIRE(words.size() == 2);
  CHECK(words[0].letters == std::vector<int>{1, 2, 2, 2});
  CHECK(words[1].letters == std::vector<int>{2, 2, 2, 1});

  const auto four = enumerate_words(cycle_decomposition(parse_cycles("(1 2 3 4)")));
  REQUIRE(four.size() == 1);
  CHECK(four[0].letters == std::vector<int>{1, 1, 1});

  // Oracle count for the worked example: filter all 14!/(2!1!2!5!2!3!) arrangements.
  const auto example = cycle_decomposition(kExamplePerm);
  const auto filtered = oracle::words_by_filter(example.lengths);
  CHECK(filtered.size() == 6552);
  const auto words_example = enumerate_words(example);
  REQUIRE(words_example.size() == filtered.size());
  for (std::size_t i = 0; i < filtered.size(); ++i)
    CHECK(words_example[i].letters == filtered[i]);

  CHECK_THROWS_AS(enumerate_words(example, 100), GuardExceeded);
}

TEST_CASE("enumerate_words equals the filtered multiset, exhaustive to S6") {
  std::map<std::vector<int>, std::vector<std::vector<int>>> by_type;
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : all_permutations(n)) {
      const auto d = cycle_decomposition(p);
      const auto words = enumerate_words(d);
      auto [it, fresh] = by_type.try_emplace(d.lengths);
      if (fresh)
        it->second = oracle::words_by_filter(d.lengths);
      const auto& filtered = it->second;
      REQUIRE(words.size() == filtered.size());
      for (std::size_t i = 0; i < words.size(); ++i)
        CHECK(words[i].letters == filtered[i]);
      CHECK(Count(words.size()) == count_words_closed_form(CycleType::of(d)));
    }
}

TEST_CASE("bijection round trips, exhaustive to S5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : all_permutations(n)) {
      const auto d = cycle_decomposition(p);
      const auto family = brute_force_enumerate(p, true, minimal_transitive_length(p));
      std::set<StarFactorization> images;
      for (const auto& w : enumerate_words(d))
        for (const auto& a : enumerate_anchors(d)) {
          const auto f = phi_inverse(w, a, d);
          CHECK(phi(f, p) == EncodedFactorization{w, a});
          images.insert(f);
        }
      CHECK(images == std::set<StarFactorization>(family.begin(), family.end()));
      for (const auto& f : family) {
        const auto e = phi(f, p);
        CHECK(is_valid_word(e.word.letters, d));
        CHECK(is_valid_anchors(e.anchors, d));
      }
    }
}

TEST_CASE("anchor enumeration") {
  const auto d = cycle_decomposition(kExamplePerm);
  const auto tuples = enumerate_anchors(d);
  CHECK(tuples.size() == 8);
  CHECK(tuples.front().anchors == std::vector<int>{3, 4, 6, 9});
  CHECK(tuples.back().anchors == std::vector<int>{3, 7, 6, 11});
  CHECK(enumerate_anchors(cycle_decomposition(parse_cycles("(1 2 3)"))).size() == 1);
}

TEST_CASE("word and anchor text formats") {
  CHECK(format_word({kExampleWord}) == "5 5 5 1 3 3 2 2 3 3 4 4 3 1");
  CHECK(parse_word("5 5 5 1 3 3 2 2 3 3 4 4 3 1").letters == kExampleWord);
  CHECK(format_anchors({{3, 10, 6, 9}}) == "3,10,6,9");
  CHECK(parse_anchors("3,10,6,9").anchors == std::vector<int>{3, 10, 6, 9});
  CHECK(parse_anchors("").anchors.empty());
  CHECK_THROWS_AS(parse_word("1 x"), ParseError);
}

TEST_CASE("decomposition implied by a word") {
  const auto d = decomposition_for_word(kExampleWord);
  CHECK(d.lengths == std::vector<int>{3, 1, 4, 1, 2});
  CHECK(d.degree == 11);
  CHECK(is_valid_word(kExampleWord, d));
  CHECK(decomposition_for_word(std::vector<int>{1, 1, 1}).lengths == std::vector<int>{4});
  CHECK(decomposition_for_word(std::vector<int>{}).degree == 1);
  CHECK_THROWS_AS(decomposition_for_word(std::vector<int>{1, 2}), ValidationError);
}
