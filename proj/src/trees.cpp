#include "starfact/trees.hpp"

#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "starfact/errors.hpp"

namespace starfact {

BicolouredTree::BicolouredTree(Colour root_colour, int root_label) {
  nodes_.push_back({root_colour, root_colour == Colour::white ? root_label : 0, -1, {}});
}

int BicolouredTree::add_child(int parent, Colour colour, int label) {
  if (parent < 0 || parent >= size())
    throw std::out_of_range("no such parent node " + std::to_string(parent));
  const int id = size();
  nodes_.push_back({colour, colour == Colour::white ? label : 0, parent, {}});
  nodes_[static_cast<std::size_t>(parent)].children.push_back(id);
  return id;
}

int BicolouredTree::white_count() const {
  int count = 0;
  for (const auto& node : nodes_)
    count += node.colour == Colour::white;
  return count;
}

bool operator==(const BicolouredTree& a, const BicolouredTree& b) {
  if (a.size() != b.size())
    return false;
  std::function<bool(int, int)> same = [&](int x, int y) {
    const auto& nx = a.node(x);
    const auto& ny = b.node(y);
    if (nx.colour != ny.colour || nx.label != ny.label ||
        nx.children.size() != ny.children.size())
      return false;
    for (std::size_t i = 0; i < nx.children.size(); ++i)
      if (!same(nx.children[i], ny.children[i]))
        return false;
    return true;
  };
  return same(0, 0);
}

BicolouredTree word_to_tree(const CanonicalWord& w, const CycleDecomposition& decomp) {
  if (!is_valid_word(w.letters, decomp))
    throw ValidationError("word \"" + format_word(w) + "\" is not in the word class of type");

  const int m = decomp.cycle_count();
  std::vector<std::size_t> first(static_cast<std::size_t>(m) + 1, w.letters.size());
  std::vector<std::size_t> last(first.size(), 0);
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const int j = w.letters[i];
    if (first[j] == w.letters.size())
      first[j] = i;
    last[j] = i;
  }

  BicolouredTree t;
  std::vector<int> active{0};
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const int j = w.letters[i];
    if (j != 1 && i == first[j]) {
      active.push_back(t.add_child(active.back(), Colour::white, j));
    } else if (j != 1 && i == last[j]) {
      if (t.node(active.back()).label != j)
        throw std::logic_error("tree parse: closing letter does not match active vertex");
      active.pop_back();
    } else {
      if (t.node(active.back()).label != j)
        throw std::logic_error("tree parse: black child added under the wrong white vertex");
      t.add_child(active.back(), Colour::black);
    }
  }
  if (active.size() != 1)
    throw std::logic_error("tree parse: unbalanced word");
  return t;
}

std::optional<std::string> tree_violation(const BicolouredTree& t,
                                          const CycleDecomposition* decomp) {
  const auto& root = t.node(0);
  if (root.colour != Colour::white || root.label != 1)
    return "root vertex must be white with label 1";

  for (const auto& node : t.nodes())
    if (node.colour == Colour::black && !node.children.empty())
      return "black vertices must be leaves";

  const int m = t.white_count();
  std::vector<int> black_children(static_cast<std::size_t>(m) + 1, 0);
  std::vector<bool> seen(black_children.size(), false);
  seen[1] = true;
  for (int id = 1; id < t.size(); ++id) {
    const auto& node = t.node(id);
    if (node.colour != Colour::white)
      continue;
    if (node.label < 2 || node.label > m || seen[node.label])
      return "non-root white vertices must carry distinct labels 2..m";
    seen[node.label] = true;
  }
  for (const auto& node : t.nodes()) {
    if (node.colour != Colour::white)
      continue;
    for (int c : node.children)
      black_children[node.label] += t.node(c).colour == Colour::black;
  }

  if (decomp) {
    if (m != decomp->cycle_count())
      return "white vertex count must equal the number of cycles m";
    for (int i = 1; i <= m; ++i)
      if (black_children[i] != decomp->lengths[i - 1] - 1)
        return "white vertex " + std::to_string(i) + " must have " +
               std::to_string(decomp->lengths[i - 1] - 1) + " black children";
    if (t.size() != decomp->degree)
      return "tree must have n vertices in total";
  }
  return std::nullopt;
}

bool validate_tree(const BicolouredTree& t, const CycleDecomposition& decomp) {
  return !tree_violation(t, &decomp).has_value();
}

CanonicalWord tree_to_word(const BicolouredTree& t) {
  if (auto violation = tree_violation(t))
    throw ValidationError("invalid tree: " + *violation);

  CanonicalWord w;
  std::function<void(int)> visit = [&](int id) {
    const auto& node = t.node(id);
    for (int c : node.children) {
      const auto& child = t.node(c);
      if (child.colour == Colour::black) {
        w.letters.push_back(node.label);
      } else {
        w.letters.push_back(child.label);
        visit(c);
        w.letters.push_back(child.label);
      }
    }
  };
  visit(0);
  return w;
}

namespace {

std::vector<int> preorder(const BicolouredTree& t) {
  std::vector<int> order;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    order.push_back(id);
    const auto& children = t.node(id).children;
    for (auto it = children.rbegin(); it != children.rend(); ++it)
      stack.push_back(*it);
  }
  return order;
}

} // namespace

std::string to_dot(const BicolouredTree& t) {
  const std::vector<int> order = preorder(t);
  std::vector<int> rank(order.size());
  for (std::size_t r = 0; r < order.size(); ++r)
    rank[order[r]] = static_cast<int>(r);

  std::ostringstream out;
  out << "digraph T {\n";
  out << "  ordering=out;\n";
  out << "  node [shape=circle];\n";
  for (int id : order) {
    const auto& node = t.node(id);
    out << "  n" << rank[id];
    if (node.colour == Colour::white)
      out << " [label=\"" << node.label << "\"];\n";
    else
      out << " [label=\"\", style=filled, fillcolor=black, width=0.15];\n";
  }
  for (int id : order)
    for (int c : t.node(id).children)
      out << "  n" << rank[id] << " -> n" << rank[c] << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_paren(const BicolouredTree& t) {
  std::ostringstream out;
  std::function<void(int)> emit = [&](int id) {
    const auto& node = t.node(id);
    if (node.colour == Colour::black)
      out << '*';
    else
      out << node.label;
    if (node.children.empty())
      return;
    out << '(';
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      if (i)
        out << ' ';
      emit(node.children[i]);
    }
    out << ')';
  };
  emit(0);
  return out.str();
}

namespace {

class ParenParser {
public:
  explicit ParenParser(std::string_view text) : text_(text) {}

  BicolouredTree parse() {
    skip_ws();
    const auto [colour, label] = token();
    BicolouredTree t(colour, label);
    children(t, 0);
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("trailing characters after tree", pos_);
    return t;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::pair<Colour, int> token() {
    if (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      return {Colour::black, 0};
    }
    const std::size_t begin = pos_;
    int value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000)
        throw ParseError("label too large", begin);
      ++pos_;
    }
    if (pos_ == begin)
      throw ParseError("expected '*' or a label", begin);
    return {Colour::white, value};
  }

  void children(BicolouredTree& t, int parent) {
    if (pos_ >= text_.size() || text_[pos_] != '(')
      return;
    ++pos_;
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] != ')') {
      const auto [colour, label] = token();
      const int id = t.add_child(parent, colour, label);
      children(t, id);
      skip_ws();
    }
    if (pos_ >= text_.size())
      throw ParseError("expected ')'", pos_);
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

BicolouredTree parse_paren(std::string_view text) { return ParenParser(text).parse(); }

} // namespace starfact
