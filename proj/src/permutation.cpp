#include "starfact/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "starfact/errors.hpp"

namespace starfact {

Permutation::Permutation(int n) {
  if (n < 1)
    throw std::invalid_argument("permutation degree must be positive");
  images_.resize(static_cast<std::size_t>(n));
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1)
    throw std::invalid_argument("permutation degree must be positive");
  std::vector<bool> seen(images.size(), false);
  for (int image : images) {
    if (image < 1 || image > n || seen[image - 1])
      throw std::invalid_argument("image list is not a bijection of {1,...,n}");
    seen[image - 1] = true;
  }
  Permutation p(n);
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p(n);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int a = cycle[i];
      if (a < 1 || a > n)
        throw std::invalid_argument("cycle symbol " + std::to_string(a) + " outside {1,...," +
                                    std::to_string(n) + "}");
      if (seen[a - 1])
        throw std::invalid_argument("symbol " + std::to_string(a) + " repeated in cycles");
      seen[a - 1] = true;
      p.images_[a - 1] = cycle[(i + 1) % cycle.size()];
    }
  }
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i] - 1] = static_cast<int>(i) + 1;
  return from_images(std::move(inv));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("cannot compose permutations of degree " +
                                std::to_string(p.degree()) + " and " + std::to_string(q.degree()));
  std::vector<int> images(q.images().size());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = p(q.images()[i]);
  return Permutation::from_images(std::move(images));
}

int CycleDecomposition::orbit_of(int symbol) const {
  for (std::size_t j = 0; j < cycles.size(); ++j)
    if (std::find(cycles[j].begin(), cycles[j].end(), symbol) != cycles[j].end())
      return static_cast<int>(j) + 1;
  throw std::out_of_range("symbol " + std::to_string(symbol) + " not in decomposition");
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  CycleDecomposition d;
  d.degree = p.degree();
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
  // Scanning symbols in increasing order yields cycles sorted by least
  // element, each starting at that element.
  for (int start = 1; start <= p.degree(); ++start) {
    if (seen[start - 1])
      continue;
    std::vector<int> cycle;
    for (int a = start; !seen[a - 1]; a = p(a)) {
      seen[a - 1] = true;
      cycle.push_back(a);
    }
    d.lengths.push_back(static_cast<int>(cycle.size()));
    d.cycles.push_back(std::move(cycle));
  }
  return d;
}

CycleDecomposition block_decomposition(std::span<const int> lengths) {
  CycleDecomposition d;
  int next = 1;
  for (int len : lengths) {
    if (len < 1)
      throw std::invalid_argument("cycle lengths must be positive");
    std::vector<int> cycle(static_cast<std::size_t>(len));
    std::iota(cycle.begin(), cycle.end(), next);
    next += len;
    d.cycles.push_back(std::move(cycle));
    d.lengths.push_back(len);
  }
  if (d.cycles.empty())
    throw std::invalid_argument("need at least one cycle");
  d.degree = next - 1;
  return d;
}

Permutation to_permutation(const CycleDecomposition& decomp) {
  return Permutation::from_cycles(decomp.degree, decomp.cycles);
}

namespace {

class CycleScanner {
public:
  explicit CycleScanner(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  int integer() {
    const std::size_t begin = pos_;
    long long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000)
        throw ParseError("symbol too large", begin);
      ++pos_;
    }
    if (pos_ == begin)
      throw ParseError("expected a positive integer", begin);
    if (value == 0)
      throw ParseError("symbols are 1-based; 0 is not allowed", begin);
    return static_cast<int>(value);
  }

  // sep := whitespace | ','  (surrounding whitespace tolerated around a comma)
  bool separator() {
    const std::size_t begin = pos_;
    skip_ws();
    if (peek() == ',') {
      ++pos_;
      skip_ws();
      return true;
    }
    return pos_ > begin && std::isdigit(static_cast<unsigned char>(peek()));
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

Permutation parse_cycles(std::string_view text, std::optional<int> n) {
  if (n && *n < 1)
    throw std::invalid_argument("degree must be positive");

  struct Symbol {
    int value;
    std::size_t pos;
  };
  std::vector<std::vector<Symbol>> cycles;

  CycleScanner scan(text);
  scan.skip_ws();
  while (!scan.at_end()) {
    scan.expect('(');
    scan.skip_ws();
    std::vector<Symbol> cycle;
    const std::size_t first = scan.pos();
    cycle.push_back({scan.integer(), first});
    while (scan.separator()) {
      const std::size_t at = scan.pos();
      cycle.push_back({scan.integer(), at});
    }
    scan.skip_ws();
    scan.expect(')');
    cycles.push_back(std::move(cycle));
    scan.skip_ws();
  }

  int degree = n.value_or(1);
  if (!n)
    for (const auto& cycle : cycles)
      for (const auto& s : cycle)
        degree = std::max(degree, s.value);

  std::vector<bool> seen(static_cast<std::size_t>(degree), false);
  std::vector<std::vector<int>> plain;
  for (const auto& cycle : cycles) {
    std::vector<int> symbols;
    for (const auto& s : cycle) {
      if (s.value > degree)
        throw ParseError("symbol " + std::to_string(s.value) + " exceeds degree " +
                             std::to_string(degree),
                         s.pos);
      if (seen[s.value - 1])
        throw ParseError("symbol " + std::to_string(s.value) + " repeated", s.pos);
      seen[s.value - 1] = true;
      symbols.push_back(s.value);
    }
    plain.push_back(std::move(symbols));
  }
  return Permutation::from_cycles(degree, plain);
}

std::string format_cycles(const Permutation& p) {
  std::ostringstream out;
  for (const auto& cycle : cycle_decomposition(p).cycles) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i)
      out << (i ? " " : "") << cycle[i];
    out << ')';
  }
  return out.str();
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

StarFactorization::StarFactorization(int n, std::vector<StarTransposition> fs)
    : degree(n), factors(std::move(fs)) {
  if (n < 1)
    throw std::invalid_argument("factorization degree must be positive");
  for (const auto& t : factors)
    if (t.other < 2 || t.other > n)
      throw std::invalid_argument("star transposition (1 " + std::to_string(t.other) +
                                  ") outside S_" + std::to_string(n));
}

StarFactorization StarFactorization::from_symbols(int n, std::span<const int> symbols) {
  std::vector<StarTransposition> fs;
  fs.reserve(symbols.size());
  for (int s : symbols)
    fs.push_back({s});
  return StarFactorization(n, std::move(fs));
}

std::vector<int> StarFactorization::symbols() const {
  std::vector<int> out;
  out.reserve(factors.size());
  for (const auto& t : factors)
    out.push_back(t.other);
  return out;
}

Permutation evaluate(const StarFactorization& f) {
  // Right-multiplying the running product by (1 i) swaps the images of 1 and i.
  std::vector<int> images(static_cast<std::size_t>(f.degree));
  std::iota(images.begin(), images.end(), 1);
  for (const auto& t : f.factors)
    std::swap(images[0], images[t.other - 1]);
  return Permutation::from_images(std::move(images));
}

bool is_transitive(const StarFactorization& f) {
  std::vector<bool> touched(static_cast<std::size_t>(f.degree), false);
  touched[0] = true;
  for (const auto& t : f.factors)
    touched[t.other - 1] = true;
  return std::all_of(touched.begin(), touched.end(), [](bool b) { return b; });
}

StarFactorization reversed(const StarFactorization& f) {
  StarFactorization r = f;
  std::reverse(r.factors.begin(), r.factors.end());
  return r;
}

std::string format_factors(const StarFactorization& f) {
  std::ostringstream out;
  for (std::size_t i = 0; i < f.factors.size(); ++i)
    out << (i ? " " : "") << f.factors[i].other;
  return out.str();
}

StarFactorization parse_factors(std::string_view text, int n) {
  std::vector<StarTransposition> fs;
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c) || c == ',') {
      ++i;
      continue;
    }
    if (!std::isdigit(c))
      throw ParseError("unexpected character in factor list", i);
    const std::size_t begin = i;
    long long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1'000'000'000)
        throw ParseError("symbol too large", begin);
      ++i;
    }
    if (value < 2 || value > n)
      throw ParseError("factor symbol " + std::to_string(value) + " outside {2,...," +
                           std::to_string(n) + "}",
                       begin);
    fs.push_back({static_cast<int>(value)});
  }
  return StarFactorization(n, std::move(fs));
}

} // namespace starfact
