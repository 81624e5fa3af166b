#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starfact/permutation.hpp"
#include "starfact/words.hpp"

namespace starfact {

enum class Colour { white, black };

/// Plane rooted tree with labelled white vertices and unlabelled black
/// vertices. Node 0 is the root; children are ordered left to right.
class BicolouredTree {
public:
  struct Node {
    Colour colour = Colour::white;
    int label = 0; ///< 0 for black vertices
    int parent = -1;
    std::vector<int> children;
  };

  /// A lone white root labelled 1.
  BicolouredTree() : BicolouredTree(Colour::white, 1) {}
  BicolouredTree(Colour root_colour, int root_label);

  int add_child(int parent, Colour colour, int label = 0);

  const Node& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  int size() const noexcept { return static_cast<int>(nodes_.size()); }
  int white_count() const;
  int black_count() const { return size() - white_count(); }

  /// Structural equality: shape, colours, labels and child order.
  friend bool operator==(const BicolouredTree& a, const BicolouredTree& b);

private:
  std::vector<Node> nodes_;
};

/// Left-to-right parse of a word into its tree. Throws ValidationError if
/// w is not a valid word for decomp.
BicolouredTree word_to_tree(const CanonicalWord& w, const CycleDecomposition& decomp);

/// Depth-first reading of a tree back into its word. Throws ValidationError
/// naming the violated structural rule.
CanonicalWord tree_to_word(const BicolouredTree& t);

/// All tree rules, including black-child counts and vertex total for the
/// cycle type of decomp.
bool validate_tree(const BicolouredTree& t, const CycleDecomposition& decomp);

/// Description of the first violated rule, or nullopt. Without a
/// decomposition only the type-independent rules are checked.
std::optional<std::string> tree_violation(const BicolouredTree& t,
                                          const CycleDecomposition* decomp = nullptr);

/// Graphviz digraph; node ids n0, n1, ... follow preorder.
std::string to_dot(const BicolouredTree& t);

/// Nested-parenthesis form, e.g. "1(5(*) * 3(* 2 * * 4) *)".
std::string to_paren(const BicolouredTree& t);
BicolouredTree parse_paren(std::string_view text);

} // namespace starfact
