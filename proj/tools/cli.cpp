#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>
#include <stdexcept>

#include "starfact/characterization.hpp"
#include "starfact/counting.hpp"
#include "starfact/errors.hpp"
#include "starfact/permutation.hpp"
#include "starfact/sampling.hpp"
#include "starfact/selftest.hpp"
#include "starfact/trees.hpp"
#include "starfact/words.hpp"

namespace starfact::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kSearchGuard = 100'000'000;
constexpr std::uint64_t kWordGuard = 10'000'000;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Target {
  CycleDecomposition decomp;
  Permutation perm{1};
};

Target resolve_target(const RunConfig& cfg) {
  if (cfg.perm_text && cfg.type_text)
    throw UsageError("give either --perm or --type, not both");
  Target t;
  if (cfg.perm_text) {
    t.perm = parse_cycles(*cfg.perm_text, cfg.n);
    t.decomp = cycle_decomposition(t.perm);
  } else if (cfg.type_text) {
    const CycleType ct = parse_cycle_type(*cfg.type_text);
    if (cfg.n && *cfg.n != ct.degree())
      throw UsageError("--n disagrees with the sum of --type lengths");
    t.decomp = block_decomposition(ct.lengths());
    t.perm = to_permutation(t.decomp);
  } else if (cfg.n) {
    t.perm = Permutation(*cfg.n);
    t.decomp = cycle_decomposition(t.perm);
  } else {
    throw UsageError("--perm (or --type) is required for '" + cfg.command + "'");
  }
  return t;
}

const std::string& require(const std::optional<std::string>& value, const char* flag) {
  if (!value)
    throw UsageError(std::string(flag) + " is required");
  return *value;
}

Json header(const CycleDecomposition& d) {
  Json j;
  j["n"] = d.degree;
  j["m"] = d.cycle_count();
  j["lengths"] = d.lengths;
  return j;
}

std::string render_text(const Json& j) {
  std::ostringstream out;
  for (const auto& [key, value] : j.items()) {
    out << key << ":";
    if (value.is_null()) {
      out << " n/a\n";
    } else if (value.is_string()) {
      out << ' ' << value.get<std::string>() << '\n';
    } else if (value.is_array() && !value.empty() && value.front().is_string()) {
      out << '\n';
      for (const auto& item : value)
        out << "  " << item.get<std::string>() << '\n';
    } else if (value.is_array()) {
      for (const auto& item : value)
        out << ' ' << item.dump();
      out << '\n';
    } else {
      out << ' ' << value.dump() << '\n';
    }
  }
  return out.str();
}

CommandResult emit(const RunConfig& cfg, const Json& j, int code = kSuccess) {
  CommandResult r;
  r.exit_code = code;
  r.out = cfg.format == "json" ? j.dump(2) + "\n" : render_text(j);
  return r;
}

CommandResult cmd_count(const RunConfig& cfg) {
  const Target t = resolve_target(cfg);
  const CycleType ct = CycleType::of(t.decomp);
  const Count transitive = count_minimal_transitive(ct);

  Json j = header(t.decomp);
  j["count_transitive"] = to_string(transitive);
  j["count_minimal"] = to_string(count_minimal(ct));
  j["count_words"] = to_string(count_words_closed_form(ct));

  SearchOptions search;
  search.guard = cfg.guard.value_or(kSearchGuard);
  const std::size_t length = minimal_transitive_length(t.perm);
  bool agree = true;
  if (candidate_count(t.decomp.degree, length) <= search.guard) {
    const auto found = brute_force_enumerate(t.perm, true, length, search);
    agree = Count(found.size()) == transitive;
    j["brute_force_count"] = std::to_string(found.size());
    j["brute_force_agrees"] = agree;
  } else {
    j["brute_force_count"] = nullptr;
    j["brute_force_agrees"] = nullptr;
  }
  j["ok"] = agree;
  return emit(cfg, j, agree ? kSuccess : kValidationFailure);
}

CommandResult cmd_enumerate(const RunConfig& cfg) {
  const Target t = resolve_target(cfg);
  const CycleType ct = CycleType::of(t.decomp);
  const Count total = count_minimal_transitive(ct);
  const std::uint64_t guard = cfg.guard.value_or(kWordGuard);
  if (total > guard)
    throw GuardExceeded(to_string(total) + " factorizations exceed the enumeration budget; use "
                        "'count' instead",
                        guard);

  std::vector<StarFactorization> all;
  const auto anchor_tuples = enumerate_anchors(t.decomp);
  for (const auto& w : enumerate_words(t.decomp, guard))
    for (const auto& a : anchor_tuples)
      all.push_back(phi_inverse(w, a, t.decomp));
  std::sort(all.begin(), all.end());

  Json j = header(t.decomp);
  j["count_transitive"] = to_string(total);
  Json listed = Json::array();
  for (const auto& f : all)
    listed.push_back(format_factors(f));
  j["factorizations"] = listed;
  const bool ok = Count(all.size()) == total;
  j["ok"] = ok;

  if (cfg.format != "json") {
    CommandResult r;
    r.exit_code = ok ? kSuccess : kValidationFailure;
    for (const auto& f : all)
      r.out += format_factors(f) + "\n";
    return r;
  }
  return emit(cfg, j, ok ? kSuccess : kValidationFailure);
}

CommandResult cmd_verify(const RunConfig& cfg) {
  const Target t = resolve_target(cfg);
  const StarFactorization f = parse_factors(require(cfg.factors_text, "--factors"), t.decomp.degree);
  const CharacterizationReport report = characterize(f, t.perm);
  const bool direct = is_minimal_transitive(f, t.perm);

  Json j = header(t.decomp);
  j["factors"] = format_factors(f);
  j["product"] = format_cycles(evaluate(f));
  j["occurrence_ok"] = report.occurrence_ok;
  j["order_ok"] = report.order_ok;
  j["nesting_ok"] = report.nesting_ok;
  j["overall"] = report.overall;
  j["direct"] = direct;
  j["agree"] = report.overall == direct;
  const bool ok = report.overall && direct;
  j["ok"] = ok;
  return emit(cfg, j, ok ? kSuccess : kValidationFailure);
}

CommandResult cmd_map(const RunConfig& cfg) {
  const Target t = resolve_target(cfg);
  const StarFactorization f = parse_factors(require(cfg.factors_text, "--factors"), t.decomp.degree);
  const EncodedFactorization e = phi(f, t.perm);
  const BicolouredTree tree = word_to_tree(e.word, t.decomp);
  if (cfg.format == "dot")
    return {kSuccess, to_dot(tree), ""};

  const bool roundtrip = phi_inverse(e.word, e.anchors, t.decomp) == f &&
                         tree_to_word(tree) == e.word;
  Json j = header(t.decomp);
  j["word"] = format_word(e.word);
  j["anchors"] = format_anchors(e.anchors);
  j["tree_paren"] = to_paren(tree);
  j["factors"] = format_factors(f);
  j["roundtrip"] = roundtrip;
  j["ok"] = roundtrip;
  return emit(cfg, j, roundtrip ? kSuccess : kValidationFailure);
}

CommandResult cmd_invert(const RunConfig& cfg) {
  const Target t = resolve_target(cfg);
  const CanonicalWord w = parse_word(require(cfg.word_text, "--word"));
  const AnchorTuple a = parse_anchors(cfg.anchors_text.value_or(""));
  const StarFactorization f = phi_inverse(w, a, t.decomp);
  const bool roundtrip = phi(f, t.perm) == EncodedFactorization{w, a};

  Json j = header(t.decomp);
  j["word"] = format_word(w);
  j["anchors"] = format_anchors(a);
  j["tree_paren"] = to_paren(word_to_tree(w, t.decomp));
  j["factors"] = format_factors(f);
  j["roundtrip"] = roundtrip;
  j["ok"] = roundtrip;
  return emit(cfg, j, roundtrip ? kSuccess : kValidationFailure);
}

CommandResult cmd_tree(const RunConfig& cfg) {
  const CanonicalWord w = parse_word(require(cfg.word_text, "--word"));
  const CycleDecomposition d = (cfg.perm_text || cfg.type_text) ? resolve_target(cfg).decomp
                                                                 : decomposition_for_word(w.letters);
  const BicolouredTree tree = word_to_tree(w, d);
  if (cfg.format == "dot")
    return {kSuccess, to_dot(tree), ""};

  const bool roundtrip = tree_to_word(tree) == w && validate_tree(tree, d);
  Json j = header(d);
  j["word"] = format_word(w);
  j["tree_paren"] = to_paren(tree);
  j["roundtrip"] = roundtrip;
  j["ok"] = roundtrip;
  return emit(cfg, j, roundtrip ? kSuccess : kValidationFailure);
}

CommandResult cmd_sample(const RunConfig& cfg) {
  const Target t = resolve_target(cfg);
  const std::uint64_t guard = cfg.guard.value_or(kWordGuard);
  std::optional<FactorizationSampler> sampler;
  try {
    sampler.emplace(t.perm, guard);
  } catch (const GuardExceeded&) {
    throw GuardExceeded("word class too large to sample by enumeration; use 'count' for the "
                        "exact number instead",
                        guard);
  }

  std::mt19937_64 rng(cfg.seed);
  Json samples = Json::array();
  bool ok = true;
  for (std::uint64_t i = 0; i < cfg.draws; ++i) {
    const StarFactorization f = sampler->draw(rng);
    ok = ok && is_minimal_transitive(f, t.perm);
    samples.push_back(format_factors(f));
  }

  Json j = header(t.decomp);
  j["count_transitive"] = to_string(count_minimal_transitive(CycleType::of(t.decomp)));
  j["seed"] = cfg.seed;
  j["samples"] = samples;
  j["ok"] = ok;
  if (cfg.format != "json") {
    CommandResult r;
    r.exit_code = ok ? kSuccess : kValidationFailure;
    for (const auto& s : samples)
      r.out += s.get<std::string>() + "\n";
    return r;
  }
  return emit(cfg, j, ok ? kSuccess : kValidationFailure);
}

CommandResult cmd_selftest(const RunConfig& cfg) {
  SelftestOptions options;
  options.n_max = cfg.n_max;
  options.seed = cfg.seed;
  options.inject_fault = cfg.inject_fault;
  const SelftestReport report = run_selftest(options);

  CommandResult r;
  r.exit_code = report.passed() ? kSuccess : kValidationFailure;
  if (cfg.format == "json") {
    Json j;
    j["n_max"] = options.n_max;
    j["seed"] = options.seed;
    Json checks = Json::array();
    for (const auto& c : report.checks)
      checks.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["checks"] = checks;
    j["ok"] = report.passed();
    r.out = j.dump(2) + "\n";
  } else {
    for (const auto& c : report.checks)
      r.out += std::string(c.passed ? "PASS" : "FAIL") + " " + std::to_string(c.id) + " " +
               c.name + ": " + c.detail + "\n";
    r.out += report.passed() ? "all checks passed\n" : "some checks FAILED\n";
  }
  return r;
}

} // namespace

CommandResult run(const RunConfig& cfg) {
  try {
    if (cfg.format != "json" && cfg.format != "text" && cfg.format != "dot")
      throw UsageError("--format must be json, text or dot");
    if (cfg.guard && *cfg.guard == 0)
      throw UsageError("--guard must be positive");
    if (cfg.command == "count")
      return cmd_count(cfg);
    if (cfg.command == "enumerate")
      return cmd_enumerate(cfg);
    if (cfg.command == "verify")
      return cmd_verify(cfg);
    if (cfg.command == "map")
      return cmd_map(cfg);
    if (cfg.command == "invert")
      return cmd_invert(cfg);
    if (cfg.command == "tree")
      return cmd_tree(cfg);
    if (cfg.command == "sample")
      return cmd_sample(cfg);
    if (cfg.command == "selftest")
      return cmd_selftest(cfg);
    throw UsageError("unknown command '" + cfg.command + "'");
  } catch (const GuardExceeded& e) {
    return {kGuardExceeded, "", std::string("guard exceeded: ") + e.what() + "\n"};
  } catch (const ValidationError& e) {
    return {kValidationFailure, "", std::string("validation failed: ") + e.what() + "\n"};
  } catch (const ParseError& e) {
    return {kUsageError, "", std::string("parse error: ") + e.what() + "\n"};
  } catch (const UsageError& e) {
    return {kUsageError, "", std::string("usage error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {kUsageError, "", std::string("invalid argument: ") + e.what() + "\n"};
  }
}

int main(int argc, char** argv) {
  CLI::App app{"Count, enumerate, verify and encode minimal transitive star factorizations"};
  RunConfig cfg;
  app.add_option("command", cfg.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(commands()));
  app.add_option("--perm", cfg.perm_text, "Target permutation in cycle notation");
  app.add_option("--n", cfg.n, "Degree (defaults to the largest symbol mentioned)")
      ->check(CLI::PositiveNumber);
  app.add_option("--type", cfg.type_text, "Cycle type l1,l2,... (l1 = cycle containing 1)");
  app.add_option("--word", cfg.word_text, "Word, space-separated letters");
  app.add_option("--anchors", cfg.anchors_text, "Anchors, comma-separated");
  app.add_option("--factors", cfg.factors_text, "Factors as their non-1 symbols");
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--seed", cfg.seed, "Sampling seed");
  app.add_option("--guard", cfg.guard, "Search/enumeration budget");
  app.add_option("--draws", cfg.draws, "Number of samples to draw");
  app.add_option("--nmax", cfg.n_max, "Largest degree for the selftest sweep")
      ->check(CLI::Range(1, 7));
  app.add_flag("--inject-fault", cfg.inject_fault, "Selftest negative control");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  const CommandResult r = run(cfg);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

} // namespace starfact::cli
