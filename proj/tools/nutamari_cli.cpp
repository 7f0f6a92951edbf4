// nutamari: enumerate nu-Tamari objects, export Hasse diagrams, apply the
// bijections between guises and run the invariant suite.
//
// Exit codes: 0 ok, 1 check failure, 2 usage or parse error, 3 object count
// above --limit, 4 value is not a valid object for the given nu.

#include <algorithm>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nutamari/bijections.hpp"
#include "nutamari/bracket.hpp"
#include "nutamari/checks.hpp"
#include "nutamari/io.hpp"
#include "nutamari/lattice_path.hpp"
#include "nutamari/nu_tree.hpp"
#include "nutamari/pipe_dream.hpp"
#include "nutamari/poset.hpp"

namespace {

using namespace nutamari;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;
constexpr int kExitInvalidValue = 4;

struct ExitError : std::runtime_error {
  ExitError(int code, const std::string& message) : std::runtime_error(message), code(code) {}
  int code;
};

LatticePath parse_nu(const std::string& word) {
  try {
    return parse_path(word);
  } catch (const std::invalid_argument& e) {
    throw ExitError(kExitUsage, std::string("--nu: ") + e.what());
  }
}

void enforce_limit(const LatticePath& nu, std::size_t limit) {
  const std::size_t count = count_nu_paths(nu);
  if (count > limit) {
    throw ExitError(kExitLimit, nu.word() + " has " + std::to_string(count) + " objects, above --limit " +
                                    std::to_string(limit));
  }
}

int run_enumerate(const std::string& nu_word, const std::string& object, const std::string& format,
                  std::size_t limit) {
  const LatticePath nu = parse_nu(nu_word);
  enforce_limit(nu, limit);
  std::vector<std::string> items;
  nlohmann::json doc = nlohmann::json::array();
  if (object == "paths") {
    for (const auto& mu : enumerate_nu_paths(nu)) items.push_back(mu.word());
  } else if (object == "trees") {
    for (const auto& mu : enumerate_nu_paths(nu)) items.push_back(tree_label(right_flush(nu, mu)));
  } else {
    for (const auto& mu : enumerate_nu_paths(nu)) items.push_back(bracket_label(bracket_of_path(nu, mu)));
  }
  std::sort(items.begin(), items.end());
  if (format == "plain") {
    for (const auto& item : items) std::cout << item << '\n';
    return 0;
  }
  for (const auto& item : items) {
    if (object == "paths") {
      doc.push_back(item);
    } else if (object == "trees") {
      doc.push_back(nlohmann::json::parse(item));
    } else {
      doc.push_back(to_json(parse_bracket(item)));
    }
  }
  std::cout << doc.dump() << '\n';
  return 0;
}

int run_hasse(const std::string& nu_word, const std::string& guise, const std::string& format, std::size_t limit) {
  const LatticePath nu = parse_nu(nu_word);
  enforce_limit(nu, limit);
  std::optional<FinitePoset> poset;
  if (guise == "path") {
    poset.emplace(nu_tamari_poset(nu));
  } else if (guise == "tree") {
    poset.emplace(rotation_poset(nu));
  } else if (guise == "bracket") {
    poset.emplace(bracket_poset(nu));
  } else {
    poset.emplace(increasing_flip_poset(q_word(nu), pi_nu(nu)));
  }
  if (format == "dot") {
    std::cout << hasse_dot(*poset);
  } else {
    std::cout << to_json(*poset).dump() << '\n';
  }
  return 0;
}

NuTree tree_from_guise(const LatticePath& nu, const std::string& guise, const std::string& value) {
  if (guise == "path") return right_flush(nu, parse_path(value));
  if (guise == "tree") return tree_from_json(nu, value);
  if (guise == "bracket") return tree_of_bracket(nu, parse_bracket(value));
  if (guise == "subword") return tree_of_facet(nu, parse_facet(value));
  // binary
  auto [canopy, tree] = from_binary_tree(BinaryTree::parse(value));
  if (canopy != nu) throw std::invalid_argument("binary tree has canopy " + canopy.word() + ", not " + nu.word());
  return tree;
}

std::string tree_to_guise(const NuTree& tree, const std::string& guise) {
  if (guise == "path") return left_flush(tree).word();
  if (guise == "tree") return tree_label(tree);
  if (guise == "bracket") return bracket_label(bracket_of_tree(tree));
  if (guise == "subword") return facet_label(facet_of_tree(tree));
  if (guise == "path-dual") return left_flush(reflect_tree(tree)).word();
  if (guise == "pipedream") {
    std::string art = pipedream_of_tree(tree).render_ascii();
    if (!art.empty() && art.back() == '\n') art.pop_back();
    return art;
  }
  return to_binary_tree(tree).to_string();
}

int run_map(const std::string& nu_word, const std::string& from, const std::string& to, const std::string& value) {
  const LatticePath nu = parse_nu(nu_word);
  try {
    std::cout << tree_to_guise(tree_from_guise(nu, from, value), to) << '\n';
  } catch (const std::invalid_argument& e) {
    throw ExitError(kExitInvalidValue, "--value: " + std::string(e.what()));
  }
  return 0;
}

int run_check(int max_len, int k_max, const std::string& fault) {
  CheckOptions options;
  options.max_len = max_len;
  options.k_max = k_max;
  options.fault = fault == "meet-max" ? Fault::kMeetIsMax : Fault::kNone;
  const auto results = run_checks(options);
  std::cout << format_report(results);
  const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed(); });
  return ok ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nu-Tamari lattices: paths, trees, bracket vectors and subword facets"};
  app.require_subcommand(1);
  std::optional<unsigned> seed;
  app.add_option("--seed", seed, "Reserved; every algorithm is deterministic");

  std::string nu;
  std::size_t limit = 10000;
  std::string format;

  auto* enumerate = app.add_subcommand("enumerate", "List every object of one guise");
  std::string object = "paths";
  std::string list_format = "plain";
  enumerate->add_option("--nu", nu, "Ambient path over {N,E}")->required();
  enumerate->add_option("--object", object)->check(CLI::IsMember({"paths", "trees", "brackets"}));
  enumerate->add_option("--format", list_format)->check(CLI::IsMember({"json", "plain"}));
  enumerate->add_option("--limit", limit, "Refuse to list more objects than this");

  auto* hasse = app.add_subcommand("hasse", "Export the Hasse diagram of one guise");
  std::string guise = "path";
  std::string hasse_format = "dot";
  hasse->add_option("--nu", nu)->required();
  hasse->add_option("--guise", guise)->check(CLI::IsMember({"path", "tree", "bracket", "subword"}));
  hasse->add_option("--format", hasse_format)->check(CLI::IsMember({"dot", "json"}));
  hasse->add_option("--limit", limit);

  auto* map = app.add_subcommand("map", "Carry one object to another guise");
  std::string from, to, value;
  map->add_option("--nu", nu)->required();
  map->add_option("--from", from)->required()->check(CLI::IsMember({"path", "tree", "bracket", "subword", "binary"}));
  map->add_option("--to", to)->required()->check(
      CLI::IsMember({"path", "tree", "bracket", "subword", "path-dual", "pipedream", "binary"}));
  map->add_option("--value", value)->required();

  auto* check = app.add_subcommand("check", "Run the invariant suite over all short paths");
  int max_len = 6;
  int k_max = 2;
  std::string fault = "none";
  check->add_option("--max-len", max_len, "Longest nu to test")->check(CLI::Range(0, 12));
  check->add_option("--k", k_max, "Largest k for the multi-tree graphs")->check(CLI::Range(1, 4));
  check->add_option("--inject-fault", fault)->check(CLI::IsMember({"none", "meet-max"}))->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*enumerate) return run_enumerate(nu, object, list_format, limit);
    if (*hasse) return run_hasse(nu, guise, hasse_format, limit);
    if (*map) return run_map(nu, from, to, value);
    return run_check(max_len, k_max, fault);
  } catch (const ExitError& e) {
    std::cerr << "nutamari: " << e.what() << '\n';
    return e.code;
  }
}
