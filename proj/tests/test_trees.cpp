#include <doctest.h>

#include "starfact/counting.hpp"
#include "starfact/errors.hpp"
#include "starfact/trees.hpp"

using namespace starfact;

namespace {

const Permutation kExamplePerm = parse_cycles("(1 8 2)(3)(4 5 10 7)(6)(9 11)", 11);
const CanonicalWord kExampleWord{{5, 5, 5, 1, 3, 3, 2, 2, 3, 3, 4, 4, 3, 1}};

} // namespace

TEST_CASE("word to tree on the worked example") {
  const auto d = cycle_decomposition(kExamplePerm);
  const BicolouredTree t = word_to_tree(kExampleWord, d);
  CHECK(to_paren(t) == "1(5(*) * 3(* 2 * * 4) *)");
  CHECK(t.size() == 11);

  const auto& root = t.node(0);
  REQUIRE(root.children.size() == 4);
  const auto& white5 = t.node(root.children[0]);
  const auto& white3 = t.node(root.children[2]);
  CHECK(white5.label == 5);
  CHECK(t.node(root.children[1]).colour == Colour::black);
  CHECK(white3.label == 3);
  CHECK(t.node(root.children[3]).colour == Colour::black);
  REQUIRE(white5.children.size() == 1);
  CHECK(t.node(white5.children[0]).colour == Colour::black);
  REQUIRE(white3.children.size() == 5);
  CHECK(t.node(white3.children[1]).label == 2);
  CHECK(t.node(white3.children[4]).label == 4);
  CHECK(t.node(white3.children[1]).children.empty());
  CHECK(t.node(white3.children[4]).children.empty());

  CHECK(validate_tree(t, d));
  CHECK(tree_to_word(t) == kExampleWord);
}

TEST_CASE("small trees") {
  const auto cyc = cycle_decomposition(parse_cycles("(1 2 3 4)"));
  const auto t = word_to_tree({{1, 1, 1}}, cyc);
  CHECK(to_paren(t) == "1(* * *)");
  CHECK(tree_to_word(t).letters == std::vector<int>{1, 1, 1});

  const auto swap = cycle_decomposition(parse_cycles("(2 3)", 3));
  CHECK(to_paren(word_to_tree({{2, 2, 2}}, swap)) == "1(2(*))");

  CHECK_THROWS_AS(word_to_tree({{2, 1, 2, 2}}, cycle_decomposition(parse_cycles("(1 2)(3 4)"))),
                  ValidationError);
}

TEST_CASE("validate_tree") {
  const auto d = cycle_decomposition(kExamplePerm);
  CHECK(validate_tree(parse_paren("1(5(*) * 3(* 2 * * 4) *)"), d));
  CHECK_FALSE(validate_tree(parse_paren("1(5(*) * 3(* 2 * * 4) *)"),
                            cycle_decomposition(parse_cycles("(1 2)(3 4)"))));

  BicolouredTree internal_black;
  const int b = internal_black.add_child(0, Colour::black);
  internal_black.add_child(b, Colour::black);
  CHECK(tree_violation(internal_black) == std::optional<std::string>("black vertices must be leaves"));

  CHECK(tree_violation(parse_paren("2(*)")).has_value());
  CHECK(tree_violation(parse_paren("1(3)")).has_value());
  CHECK(tree_violation(parse_paren("1(2 2)")).has_value());
  // Wrong number of black children for the type.
  CHECK_FALSE(validate_tree(parse_paren("1(2)"), cycle_decomposition(parse_cycles("(2 3)", 3))));
  CHECK_THROWS_WITH_AS(tree_to_word(internal_black), doctest::Contains("leaves"), ValidationError);
}

TEST_CASE("tree round trips and vertex counts, exhaustive to S5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : all_permutations(n)) {
      const auto d = cycle_decomposition(p);
      const int m = d.cycle_count();
      const auto words = enumerate_words(d);
      for (const auto& w : words) {
        const auto t = word_to_tree(w, d);
        CHECK(validate_tree(t, d));
        CHECK(tree_to_word(t) == w);
        CHECK(word_to_tree(tree_to_word(t), d) == t);
        CHECK(parse_paren(to_paren(t)) == t);
        CHECK(t.white_count() == m);
        CHECK(t.black_count() == n - m);
        int root_black = 0;
        for (int c : t.node(0).children)
          root_black += t.node(c).colour == Colour::black;
        CHECK(root_black == d.lengths[0] - 1);
      }
    }
}

TEST_CASE("structural equality") {
  CHECK(parse_paren("1(2(*) *)") == parse_paren("1( 2( * ) * )"));
  CHECK_FALSE(parse_paren("1(2(*) *)") == parse_paren("1(* 2(*))"));
  CHECK_FALSE(parse_paren("1(2 3)") == parse_paren("1(3 2)"));
  CHECK_THROWS_AS(parse_paren("1(2"), ParseError);
  CHECK_THROWS_AS(parse_paren("1(2) x"), ParseError);
}

TEST_CASE("DOT export") {
  CHECK(to_dot(BicolouredTree()) ==
        "digraph T {\n  ordering=out;\n  node [shape=circle];\n  n0 [label=\"1\"];\n}\n");

  const std::string two = to_dot(parse_paren("1(*)"));
  CHECK(two.find("n1 [label=\"\", style=filled, fillcolor=black") != std::string::npos);
  CHECK(two.find("n0 -> n1;") != std::string::npos);

  const std::string example = to_dot(word_to_tree(kExampleWord, cycle_decomposition(kExamplePerm)));
  auto count = [&](const std::string& needle) {
    std::size_t hits = 0;
    for (auto at = example.find(needle); at != std::string::npos; at = example.find(needle, at + 1))
      ++hits;
    return hits;
  };
  CHECK(count(" [label=") == 11);
  CHECK(count(" -> ") == 10);
  CHECK(example.find("ordering=out") != std::string::npos);
  // Preorder ids: n1 is white 5, n2 its black child, n3 the root's black child.
  CHECK(example.find("n1 [label=\"5\"]") != std::string::npos);
  CHECK(example.find("n1 -> n2;") != std::string::npos);
  CHECK(example.find("n0 -> n3;") != std::string::npos);
}
