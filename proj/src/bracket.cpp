#include "nutamari/bracket.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

#include "nutamari/bijections.hpp"
#include "nutamari/poset.hpp"

namespace nutamari {

BracketVector min_bracket(const LatticePath& nu) {
  BracketVector b;
  for (const Point& p : nu.lattice_points()) b.entries.push_back(p.y);
  return b;
}

std::vector<int> fixed_positions(const LatticePath& nu) {
  std::vector<int> f(static_cast<std::size_t>(nu.north_count()) + 1, 0);
  const auto bmin = min_bracket(nu);
  for (std::size_t i = 0; i < bmin.size(); ++i) {
    f[static_cast<std::size_t>(bmin.entries[i])] = static_cast<int>(i) + 1;
  }
  return f;
}

BracketVector bracket_of_tree(const NuTree& tree) {
  BracketVector b;
  b.entries.reserve(tree.size());
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    if (auto l = tree.left_child(v)) visit(*l);
    b.entries.push_back(tree.nodes()[v].y);
    if (auto r = tree.right_child(v)) visit(*r);
  };
  visit(NuTree::root());
  return b;
}

BracketVector bracket_of_path(const LatticePath& nu, const LatticePath& mu) {
  if (!is_nu_path(nu, mu)) {
    throw std::invalid_argument(mu.word() + " is not a " + nu.word() + "-path");
  }
  const auto f = fixed_positions(nu);
  std::vector<int> count(f.size(), 0);
  for (const Point& p : mu.lattice_points()) ++count[static_cast<std::size_t>(p.y)];

  std::vector<int> entries(static_cast<std::size_t>(mu.length()) + 1, -1);
  for (std::size_t k = 0; k < f.size(); ++k) {
    int pos = f[k];  // 1-indexed
    for (int c = 0; c < count[k]; ++c) {
      while (pos >= 1 && entries[static_cast<std::size_t>(pos) - 1] != -1) --pos;
      if (pos < 1) throw std::logic_error("no free position for a bracket entry");
      entries[static_cast<std::size_t>(pos) - 1] = static_cast<int>(k);
    }
  }
  return BracketVector{std::move(entries)};
}

bool avoids_121(const BracketVector& b) {
  const auto& e = b.entries;
  // For each middle position, look for a smaller equal pair around it.
  for (std::size_t j = 1; j + 1 < e.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (e[i] >= e[j]) continue;
      for (std::size_t k = j + 1; k < e.size(); ++k) {
        if (e[k] == e[i]) return false;
      }
    }
  }
  return true;
}

bool satisfies_bounded_descent(const LatticePath& nu, const BracketVector& b) {
  const auto f = fixed_positions(nu);
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int k = b.entries[i];
    if (k < 0 || static_cast<std::size_t>(k) >= f.size()) return false;
    for (int j = static_cast<int>(i) + 1; j <= f[static_cast<std::size_t>(k)]; ++j) {
      if (b.at(static_cast<std::size_t>(j)) > k) return false;
    }
  }
  return true;
}

bool is_valid_bracket(const LatticePath& nu, const BracketVector& b) {
  const auto bmin = min_bracket(nu);
  if (b.size() != bmin.size()) return false;
  const int n = nu.north_count();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b.entries[i] < bmin.entries[i] || b.entries[i] > n) return false;
  }
  const auto f = fixed_positions(nu);
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (b.at(static_cast<std::size_t>(f[k])) != static_cast<int>(k)) return false;
  }
  const bool pattern_free = avoids_121(b);
  if (pattern_free != satisfies_bounded_descent(nu, b)) {
    throw std::logic_error("121-avoidance and bounded descent disagree on " + bracket_label(b));
  }
  return pattern_free;
}

LatticePath path_of_bracket(const LatticePath& nu, const BracketVector& b) {
  if (!is_valid_bracket(nu, b)) {
    throw std::invalid_argument(bracket_label(b) + " is not a " + nu.word() + "-bracket vector");
  }
  std::vector<int> count(static_cast<std::size_t>(nu.north_count()) + 1, 0);
  for (int v : b.entries) ++count[static_cast<std::size_t>(v)];
  return path_from_row_counts(count);
}

NuTree tree_of_bracket(const LatticePath& nu, const BracketVector& b) {
  return right_flush(nu, path_of_bracket(nu, b));
}

BracketVector bracket_meet(const BracketVector& a, const BracketVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("bracket vectors differ in length");
  BracketVector out;
  out.entries.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.entries.push_back(std::min(a.entries[i], b.entries[i]));
  return out;
}

BracketVector reflect_bracket(const LatticePath& nu, const BracketVector& b) {
  return bracket_of_tree(reflect_tree(tree_of_bracket(nu, b)));
}

BracketVector bracket_join(const LatticePath& nu, const BracketVector& a, const BracketVector& b) {
  const LatticePath rev = reverse_path(nu);
  return reflect_bracket(rev, bracket_meet(reflect_bracket(nu, a), reflect_bracket(nu, b)));
}

BracketVector bracket_rotate_first(const LatticePath& nu, const BracketVector& b, int x) {
  const auto f = fixed_positions(nu);
  if (x < 0 || x >= nu.north_count()) {
    throw std::invalid_argument("rotation value " + std::to_string(x) + " must lie in [0, n)");
  }
  if (std::count(b.entries.begin(), b.entries.end(), x) < 2) {
    throw std::invalid_argument("value " + std::to_string(x) + " occurs fewer than twice");
  }
  const auto next = static_cast<std::size_t>(f[static_cast<std::size_t>(x)]) + 1;
  if (next > b.size()) throw std::invalid_argument("bracket vector too short for nu");
  BracketVector out = b;
  *std::find(out.entries.begin(), out.entries.end(), x) = b.at(next);
  return out;
}

std::vector<BracketVector> enumerate_bracket_candidates(const LatticePath& nu) {
  const auto bmin = min_bracket(nu);
  const auto f = fixed_positions(nu);
  const int n = nu.north_count();
  std::vector<bool> fixed(bmin.size(), false);
  for (int pos : f) fixed[static_cast<std::size_t>(pos) - 1] = true;

  std::vector<BracketVector> out;
  BracketVector current = bmin;
  std::function<void(std::size_t)> fill = [&](std::size_t i) {
    if (i == current.size()) {
      out.push_back(current);
      return;
    }
    if (fixed[i]) {
      fill(i + 1);
      return;
    }
    for (int v = bmin.entries[i]; v <= n; ++v) {
      current.entries[i] = v;
      fill(i + 1);
    }
    current.entries[i] = bmin.entries[i];
  };
  fill(0);
  return out;
}

std::vector<BracketVector> enumerate_brackets(const LatticePath& nu) {
  auto candidates = enumerate_bracket_candidates(nu);
  std::erase_if(candidates, [&](const BracketVector& b) { return !is_valid_bracket(nu, b); });
  return candidates;
}

FinitePoset bracket_poset(const LatticePath& nu) {
  const auto brackets = enumerate_brackets(nu);
  std::vector<std::string> labels;
  labels.reserve(brackets.size());
  for (const auto& b : brackets) labels.push_back(bracket_label(b));
  std::vector<Relation> relations;
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    for (std::size_t j = 0; j < brackets.size(); ++j) {
      if (i == j) continue;
      bool below = true;
      for (std::size_t t = 0; t < brackets[i].size() && below; ++t) {
        below = brackets[i].entries[t] <= brackets[j].entries[t];
      }
      if (below) relations.emplace_back(i, j);
    }
  }
  return FinitePoset(std::move(labels), relations);
}

std::string bracket_label(const BracketVector& b) {
  const bool single_digits =
      std::all_of(b.entries.begin(), b.entries.end(), [](int v) { return v >= 0 && v < 10; });
  std::string out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!single_digits && i) out.push_back(',');
    out += std::to_string(b.entries[i]);
  }
  return out;
}

BracketVector parse_bracket(std::string_view text) {
  std::string body;
  for (char c : text) {
    if (c == '[' || c == ']' || c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) continue;
    if (c != ',' && !std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("unexpected character '" + std::string(1, c) + "' in bracket vector");
    }
    body.push_back(c);
  }
  BracketVector b;
  if (body.find(',') == std::string::npos) {
    for (char c : body) b.entries.push_back(c - '0');
    return b;
  }
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t end = std::min(body.find(',', start), body.size());
    if (end == start) throw std::invalid_argument("empty entry in bracket vector");
    b.entries.push_back(std::stoi(body.substr(start, end - start)));
    start = end + 1;
  }
  return b;
}

}  // namespace nutamari
