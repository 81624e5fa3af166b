#include "starfact/counting.hpp"

#include <numeric>
#include <stdexcept>

#include "starfact/errors.hpp"
#include "starfact/words.hpp"

namespace starfact {

CycleType::CycleType(std::vector<int> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.empty())
    throw std::invalid_argument("cycle type needs at least one cycle");
  for (int l : lengths_)
    if (l < 1)
      throw std::invalid_argument("cycle lengths must be positive");
  degree_ = std::accumulate(lengths_.begin(), lengths_.end(), 0);
}

CycleType CycleType::of(const Permutation& p) { return of(cycle_decomposition(p)); }

CycleType CycleType::of(const CycleDecomposition& d) { return CycleType(d.lengths); }

int CycleType::fixed_count() const {
  int k = 0;
  for (std::size_t i = 1; i < lengths_.size(); ++i)
    k += lengths_[i] == 1;
  return k;
}

std::map<int, int> CycleType::multiplicities() const {
  std::map<int, int> b;
  for (std::size_t i = 1; i < lengths_.size(); ++i)
    ++b[lengths_[i]];
  return b;
}

CycleType parse_cycle_type(std::string_view text) {
  const AnchorTuple values = parse_anchors(text);
  if (values.anchors.empty())
    throw ParseError("cycle type needs at least one length", 0);
  return CycleType(values.anchors);
}

Count factorial(int n) {
  if (n < 0)
    throw std::invalid_argument("factorial of a negative number");
  Count f = 1;
  for (int i = 2; i <= n; ++i)
    f *= i;
  return f;
}

Count binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  Count c = 1;
  // Each partial product c * (n-k+i) / i is itself a binomial coefficient.
  for (int i = 1; i <= k; ++i)
    c = c * (n - k + i) / i;
  return c;
}

namespace {

Count length_product(const CycleType& ct) {
  Count p = 1;
  for (int l : ct.lengths())
    p *= l;
  return p;
}

Count exact_quotient(const Count& numerator, const Count& denominator, const char* what) {
  Count q, r;
  boost::multiprecision::divide_qr(numerator, denominator, q, r);
  if (r != 0)
    throw std::logic_error(std::string(what) + ": non-integral quotient");
  return q;
}

} // namespace

Count count_minimal_transitive(const CycleType& ct) {
  const int n = ct.degree();
  const int m = ct.cycle_count();
  return exact_quotient(factorial(n + m - 2) * length_product(ct), factorial(n),
                        "count_minimal_transitive");
}

Count count_minimal(const CycleType& ct) {
  const int n = ct.degree();
  const int m = ct.cycle_count();
  const int k = ct.fixed_count();
  return exact_quotient(factorial(n + m - 2 * (k + 1)) * length_product(ct), factorial(n - k),
                        "count_minimal");
}

Count pak_count(int cycle_length, int cycle_count) {
  if (cycle_length < 2)
    throw std::invalid_argument("cycle length must be at least 2");
  if (cycle_count < 1)
    throw std::invalid_argument("cycle count must be at least 1");
  const int n = cycle_count * cycle_length + 1;
  Count power = boost::multiprecision::pow(Count(cycle_length), static_cast<unsigned>(cycle_count));
  return exact_quotient(power * factorial(cycle_count * cycle_length + cycle_count), factorial(n),
                        "pak_count");
}

Count count_words_closed_form(const CycleType& ct) {
  const int m = ct.cycle_count();
  if (m == 1)
    return 1;
  const int n = ct.degree();
  return ct.lengths()[0] * factorial(m - 2) * binomial(n + m - 2, m - 2);
}

Count anchor_product(const CycleType& ct) {
  Count p = 1;
  for (std::size_t i = 1; i < ct.lengths().size(); ++i)
    p *= ct.lengths()[i];
  return p;
}

std::string to_string(const Count& c) { return c.str(); }

} // namespace starfact
