#include "nutamari/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "nutamari/bijections.hpp"
#include "nutamari/bracket.hpp"
#include "nutamari/edelman_greene.hpp"
#include "nutamari/lattice_path.hpp"
#include "nutamari/multi_tamari.hpp"
#include "nutamari/nu_tree.hpp"
#include "nutamari/pipe_dream.hpp"
#include "nutamari/poset.hpp"

namespace nutamari {

namespace {

constexpr std::size_t kMaxReportedFailures = 5;

// Everything the per-ν checks share, computed once.
struct Instance {
  LatticePath nu;
  std::vector<LatticePath> paths;
  std::vector<NuTree> trees;  // brute force, sorted
  FinitePoset tamari;
  FinitePoset rotations;

  explicit Instance(LatticePath path)
      : nu(std::move(path)),
        paths(enumerate_nu_paths(nu)),
        trees(enumerate_nu_trees_bruteforce(nu)),
        tamari(nu_tamari_poset(nu)),
        rotations(rotation_poset(nu)) {}
};

// A check returns an empty string on success, otherwise a description.
using InstanceCheck = std::function<std::string(const Instance&)>;

struct Spec {
  std::string tag;
  std::string summary;
  int max_len;  // cap on top of the user's --max-len
  InstanceCheck run;
};

std::string describe(const std::string& what, const std::string& detail) { return what + ": " + detail; }

std::set<std::string> tree_labels(const std::vector<NuTree>& trees) {
  std::set<std::string> out;
  for (const auto& t : trees) out.insert(tree_label(t));
  return out;
}

std::string check_lattice(const Instance& in) {
  return is_lattice(in.tamari) ? "" : "Tam(nu) is not a lattice";
}

std::string check_structure(const Instance& in) {
  if (in.trees.size() != in.paths.size()) {
    return describe("tree count", std::to_string(in.trees.size()) + " trees vs " +
                                      std::to_string(in.paths.size()) + " paths");
  }
  for (const auto& t : in.trees) {
    if (!structural_properties_hold(t)) return describe("structure", tree_label(t));
  }
  return "";
}

std::string check_connected(const Instance& in) {
  return enumerate_nu_trees_by_rotation(in.nu) == in.trees ? ""
                                                            : "rotations from T_min miss some trees";
}

std::string check_exchange(const Instance& in) {
  for (const auto& t : in.trees) {
    std::set<std::string> by_rotation;
    for (const auto& r : right_rotation_covers(t)) by_rotation.insert(tree_label(r.result));
    for (const auto& r : left_rotation_covers(t)) by_rotation.insert(tree_label(r.result));
    std::set<std::string> by_difference;
    for (const auto& u : in.trees) {
      std::vector<Point> common;
      std::set_intersection(t.nodes().begin(), t.nodes().end(), u.nodes().begin(), u.nodes().end(),
                            std::back_inserter(common), RowMajorTopDown{});
      if (common.size() + 1 == t.size()) by_difference.insert(tree_label(u));
    }
    if (by_rotation != by_difference) return describe("exchange", tree_label(t));

    const auto exchange = right_rotation_covers(t);
    const auto rectangle = right_rotations_by_rectangle(t);
    std::set<std::string> a, b;
    for (const auto& r : exchange) a.insert(tree_label(r.result));
    for (const auto& r : rectangle) b.insert(tree_label(r.result));
    if (a != b) return describe("rectangle rule", tree_label(t));
  }
  return "";
}

std::string check_flushing(const Instance& in) {
  std::set<std::string> images;
  const Region region(in.nu);
  for (const auto& mu : in.paths) {
    const auto flushed = right_flush_with_order(in.nu, mu);
    if (left_flush(flushed.tree) != mu) return describe("L(R(mu)) != mu", mu.word());
    if (flushing_order(flushed.tree) != flushed.placed) return describe("matching order", mu.word());
    const auto pts = mu.lattice_points();
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (horiz(region, pts[k]) != hroot(flushed.tree, flushed.placed[k])) {
        return describe("horiz != hroot", mu.word() + " at point " + std::to_string(k));
      }
    }
    images.insert(tree_label(flushed.tree));
  }
  if (images != tree_labels(in.trees)) return "right flushing is not onto the nu-trees";
  return "";
}

std::string check_rotation_iso(const Instance& in) {
  std::vector<std::string> image;
  for (const auto& mu : in.paths) image.push_back(tree_label(right_flush(in.nu, mu)));
  return isomorphic_via_labels(in.tamari, in.rotations, image) ? "" : "right flushing is not an isomorphism";
}

std::string check_duality(const Instance& in) {
  const LatticePath rev = reverse_path(in.nu);
  const FinitePoset target = dual(nu_tamari_poset(rev));
  std::vector<std::string> image;
  for (const auto& mu : in.paths) {
    const LatticePath d = duality_map(in.nu, mu);
    if (duality_map(rev, d) != mu) return describe("duality is not an involution", mu.word());
    image.push_back(d.word());
  }
  return isomorphic_via_labels(in.tamari, target, image) ? "" : "duality map is not an anti-isomorphism";
}

std::string check_brackets(const Instance& in) {
  std::set<BracketVector> from_trees;
  for (const auto& t : in.trees) from_trees.insert(bracket_of_tree(t));
  const auto valid = enumerate_brackets(in.nu);
  if (std::set<BracketVector>(valid.begin(), valid.end()) != from_trees) {
    return "valid vectors differ from tree brackets";
  }
  for (const auto& mu : in.paths) {
    const auto b = bracket_of_path(in.nu, mu);
    if (b != bracket_of_tree(right_flush(in.nu, mu))) return describe("b(mu) != b(R(mu))", mu.word());
    if (path_of_bracket(in.nu, b) != mu) return describe("path_of_bracket", mu.word());
  }
  return "";
}

std::string check_bracket_rotation(const Instance& in) {
  const int n = in.nu.north_count();
  for (const auto& t : in.trees) {
    const auto b = bracket_of_tree(t);
    std::set<BracketVector> rotated;
    for (int x = 0; x < n; ++x) {
      if (std::count(b.entries.begin(), b.entries.end(), x) >= 2) rotated.insert(bracket_rotate_first(in.nu, b, x));
    }
    std::set<BracketVector> covers;
    for (const auto& r : right_rotation_covers(t)) covers.insert(bracket_of_tree(r.result));
    if (rotated != covers) return describe("rotation rule", bracket_label(b));
  }
  return "";
}

// Transports each element of the rotation poset through `f`.
template <typename F>
std::vector<std::string> rotation_image(const Instance& in, F f) {
  std::map<std::string, const NuTree*> by_label;
  for (const auto& t : in.trees) by_label.emplace(tree_label(t), &t);
  std::vector<std::string> image;
  for (const auto& label : in.rotations.labels()) image.push_back(f(*by_label.at(label)));
  return image;
}

std::string check_bracket_iso(const Instance& in) {
  const auto image = rotation_image(in, [](const NuTree& t) { return bracket_label(bracket_of_tree(t)); });
  return isomorphic_via_labels(in.rotations, bracket_poset(in.nu), image) ? ""
                                                                          : "bracket map is not an isomorphism";
}

// Compares the Hasse-diagram meet (join) of every pair of bracket vectors
// with the formula.
std::string check_bound(const Instance& in, bool is_meet, Fault fault) {
  const FinitePoset poset = bracket_poset(in.nu);
  std::vector<BracketVector> elements;
  for (const auto& label : poset.labels()) elements.push_back(parse_bracket(label));
  for (std::size_t a = 0; a < poset.size(); ++a) {
    for (std::size_t b = a; b < poset.size(); ++b) {
      const Bound bound = is_meet ? meet(poset, a, b) : join(poset, a, b);
      if (!bound) return describe("no unique bound", poset.label(a) + " " + poset.label(b));
      BracketVector formula;
      if (!is_meet) {
        formula = bracket_join(in.nu, elements[a], elements[b]);
      } else if (fault == Fault::kMeetIsMax) {
        formula = elements[a];
        for (std::size_t i = 0; i < formula.size(); ++i) {
          formula.entries[i] = std::max(formula.entries[i], elements[b].entries[i]);
        }
      } else {
        formula = bracket_meet(elements[a], elements[b]);
      }
      if (bracket_label(formula) != poset.label(bound.element)) {
        return describe(is_meet ? "meet" : "join", poset.label(a) + " " + poset.label(b) + " gives " +
                                                       bracket_label(formula) + ", expected " +
                                                       poset.label(bound.element));
      }
    }
  }
  return "";
}

// Cells of F_nu shifted one step down and right, in (row, col) form.
std::vector<MatrixCell> shifted_ferrers(const LatticePath& nu) {
  std::vector<MatrixCell> cells;
  const auto widths = ferrers_row_widths(nu);
  for (std::size_t r = 0; r < widths.size(); ++r) {
    for (int c = 0; c < widths[r]; ++c) cells.push_back({static_cast<int>(r) + 2, c + 2});
  }
  return cells;
}

std::string check_pipe_dreams(const Instance& in) {
  const Permutation pi = pi_nu(in.nu);
  for (const auto& t : in.trees) {
    const PipeDream dream = pipedream_of_tree(t);
    if (trace_permutation(dream) != pi) return describe("permutation depends on the tree", tree_label(t));
    if (!is_reduced(dream)) return describe("non-reduced dream", tree_label(t));
    if (static_cast<int>(dream.crosses().size()) != pi.length()) return describe("cross count", tree_label(t));
  }
  if (pi(1) != 1) return "pi_nu does not fix 1";
  std::vector<int> rest;
  for (std::size_t i = 2; i <= pi.size(); ++i) rest.push_back(pi(i) - 1);
  const Permutation u(rest);
  if (direct_sum(Permutation::identity(1), u) != pi) return "pi_nu is not 1 + u";
  if (!is_dominant(u) || !avoids_132(u)) return "u is not dominant";
  if (rothe_diagram(pi) != shifted_ferrers(in.nu)) return "Rothe diagram of pi_nu is not the shifted Ferrers diagram";
  return "";
}

std::string check_subword(const Instance& in) {
  const auto q = q_word(in.nu);
  const Permutation pi = pi_nu(in.nu);
  std::set<Facet> from_trees;
  for (const auto& t : in.trees) from_trees.insert(facet_of_tree(t));
  const auto facets = subword_facets(q, pi);
  if (std::set<Facet>(facets.begin(), facets.end()) != from_trees) return "facets differ from tree facets";
  const FinitePoset flips = increasing_flip_poset(q, pi);
  const auto image = rotation_image(in, [](const NuTree& t) { return facet_label(facet_of_tree(t)); });
  if (!isomorphic_via_labels(in.rotations, flips, image)) return "increasing flips differ from rotations";
  if (!is_lattice(flips)) return "increasing flip poset is not a lattice";
  return "";
}

std::string check_edelman_greene(const Instance& in) {
  const auto widths = ferrers_row_widths(in.nu);
  for (const auto& t : in.trees) {
    const LatticePath flushed = left_flush(t);
    if (eg_path(t) != flushed) return describe("EG(T) != L(T)", tree_label(t));
    const auto lambda = lambda_of_path(flushed);
    if (lambda_eg_formula(t) != lambda || lambda_flush_formula(t) != lambda) {
      return describe("row counts", tree_label(t));
    }
    const EgPair pair = eg_pair(t);
    if (pair.insertion.shape() != widths || pair.recording.shape() != widths) {
      return describe("tableau shape", tree_label(t));
    }
    for (std::size_t r = 0; r < widths.size(); ++r) {
      const int k = static_cast<int>(r) + 1;
      for (int v : pair.recording.row(r)) {
        if (v != k && v != k + 1) return describe("recording row entries", tree_label(t));
      }
    }
  }
  return "";
}

std::string check_tableaux(const Instance& in) {
  for (const auto& t : in.trees) {
    const auto cells = tableau_of_tree(t);
    if (!is_tree_like_tableau(in.nu, cells) || has_crossing(in.nu, cells)) return describe("tableau", tree_label(t));
  }
  return "";
}

std::string check_binary(const Instance& in) {
  for (const auto& t : in.trees) {
    const BinaryTree b = to_binary_tree(t);
    if (BinaryTree::parse(b.to_string()).to_string() != b.to_string()) return describe("binary text", tree_label(t));
    const auto [canopy, back] = from_binary_tree(b);
    if (canopy != in.nu || !(back == t)) return describe("binary round trip", tree_label(t));
  }
  return "";
}

std::string check_single_k(const Instance& in) {
  std::set<std::string> from_k;
  for (const auto& f : enumerate_k_trees(in.nu, 1)) {
    std::string label = "[";
    for (std::size_t i = 0; i < f.size(); ++i) {
      label += (i ? ",[" : "[") + std::to_string(f[i].x) + "," + std::to_string(f[i].y) + "]";
    }
    from_k.insert(label + "]");
  }
  return from_k == tree_labels(in.trees) ? "" : "(1,nu)-trees differ from nu-trees";
}

LatticePath repeat_word(const std::string& block, int times) {
  std::string word;
  for (int i = 0; i < times; ++i) word += block;
  return parse_path(word);
}

// flip_graph((N E^m)^(k+1), k), the subword model and flip_graph(E^m N^k, k)
// agree; for m = k the graph is complete on k+1 vertices.
std::string check_fuss(int m, int k) {
  const std::string tag = "(m,k)=(" + std::to_string(m) + "," + std::to_string(k) + ")";
  const auto staircase = flip_graph(repeat_word("N" + std::string(static_cast<std::size_t>(m), 'E'), k + 1), k);
  const auto subword = fuss_subword_graph(m, k);
  const auto rectangle =
      flip_graph(parse_path(std::string(static_cast<std::size_t>(m), 'E') + std::string(static_cast<std::size_t>(k), 'N')), k);
  if (!graphs_isomorphic(staircase, subword)) return describe("staircase vs subword", tag);
  if (!graphs_isomorphic(subword, rectangle)) return describe("subword vs rectangle", tag);
  if (m == k) {
    const auto n = static_cast<std::size_t>(k) + 1;
    if (subword.vertex_count() != n || subword.edges.size() != n * (n - 1) / 2) return describe("complete graph", tag);
  }
  return "";
}

void record(CheckResult& result, const std::string& where, const std::function<std::string()>& body) {
  ++result.instances;
  std::string failure;
  try {
    failure = body();
  } catch (const std::exception& e) {
    failure = std::string("exception: ") + e.what();
  }
  if (!failure.empty() && result.failures.size() < kMaxReportedFailures) {
    result.failures.push_back(where + ": " + failure);
  } else if (!failure.empty() && result.failures.size() == kMaxReportedFailures) {
    result.failures.push_back("...");
  }
}

}  // namespace

std::vector<CheckResult> run_checks(const CheckOptions& options) {
  const Fault fault = options.fault;
  const std::vector<Spec> specs = {
      {"lattice", "Tam(nu) is a lattice", 8, check_lattice},
      {"tree-structure", "forced nodes, row/column cover, node count", 8, check_structure},
      {"rotation-connected", "right rotations from T_min reach every nu-tree", 8, check_connected},
      {"exchange", "one-point exchanges are exactly rotations; rectangle rule agrees", 7, check_exchange},
      {"flushing", "R and L are inverse; horiz = hroot", 8, check_flushing},
      {"rotation-iso", "right flushing is an isomorphism onto the rotation poset", 8, check_rotation_iso},
      {"duality", "Tam(nu) is anti-isomorphic to Tam(reverse nu)", 8, check_duality},
      {"bracket-valid", "valid vectors are the tree brackets; b(R(mu)) = b(mu)", 7, check_brackets},
      {"bracket-rotation", "first-occurrence replacement gives the rotation covers", 7, check_bracket_rotation},
      {"bracket-iso", "bracket map is an isomorphism onto the componentwise order", 7, check_bracket_iso},
      {"meet", "meet is the componentwise minimum", 7,
       [fault](const Instance& in) { return check_bound(in, true, fault); }},
      {"join", "join is the reflected meet", 7,
       [fault](const Instance& in) { return check_bound(in, false, fault); }},
      {"pipe-dreams", "one reduced pipe dream per tree, all for pi_nu = 1 + dominant", 7, check_pipe_dreams},
      {"subword", "increasing flips on SC(Q_nu, pi_nu) are rotations; lattice", 7, check_subword},
      {"edelman-greene", "EG(T) = L(T); row counts; recording rows; shapes", 7, check_edelman_greene},
      {"tableau", "nu-trees are non-crossing tree-like tableaux", 8, check_tableaux},
      {"binary", "binary tree and canopy round trip", 8, check_binary},
      {"multi-k1", "(1,nu)-trees are nu-trees", 7, check_single_k},
  };

  std::vector<CheckResult> results;
  for (const auto& spec : specs) results.push_back({spec.tag, spec.summary, 0, {}});

  for (const LatticePath& nu : all_paths_up_to(options.max_len)) {
    const std::string where = nu.empty() ? std::string("nu=<empty>") : "nu=" + nu.word();
    std::optional<Instance> instance;
    try {
      instance.emplace(nu);
    } catch (const std::exception& e) {
      for (auto& r : results) record(r, where, [&]() { return std::string("setup: ") + e.what(); });
      continue;
    }
    for (std::size_t i = 0; i < specs.size(); ++i) {
      if (nu.length() > specs[i].max_len) continue;
      record(results[i], where, [&]() { return specs[i].run(*instance); });
    }
  }

  CheckResult fuss{"multi", "staircase, subword and rectangle flip graphs agree", 0, {}};
  for (int k = 2; k <= options.k_max; ++k) {
    for (int m = k; m <= 4; ++m) {
      record(fuss, "(m,k)=(" + std::to_string(m) + "," + std::to_string(k) + ")",
             [&]() { return check_fuss(m, k); });
    }
  }
  results.push_back(std::move(fuss));
  return results;
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.passed() ? "PASS " : "FAIL ") << r.tag << " (" << r.instances << " instances): " << r.summary << '\n';
    for (const auto& f : r.failures) os << "    " << f << '\n';
  }
  return os.str();
}

}  // namespace nutamari
