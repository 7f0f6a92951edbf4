#include "nutamari/poset.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace nutamari {

FinitePoset::FinitePoset(std::vector<std::string> labels, std::span<const Relation> relations)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw std::invalid_argument("duplicate poset label '" + labels_[i] + "'");
    }
  }

  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [lo, hi] : relations) {
    if (lo >= n || hi >= n) throw std::invalid_argument("relation index out of range");
    if (lo == hi) continue;
    succ[lo].push_back(hi);
    ++indegree[hi];
  }

  // Kahn's algorithm; anything left over sits on a cycle.
  std::vector<std::size_t> order;
  order.reserve(n);
  std::deque<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  while (!ready.empty()) {
    const std::size_t v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (std::size_t w : succ[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  if (order.size() != n) throw std::invalid_argument("relations contain a cycle");

  up_.assign(n, boost::dynamic_bitset<>(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& up = up_[*it];
    up.set(*it);
    for (std::size_t w : succ[*it]) up |= up_[w];
  }
  down_.assign(n, boost::dynamic_bitset<>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (auto b = up_[a].find_first(); b != boost::dynamic_bitset<>::npos; b = up_[a].find_next(b)) {
      down_[b].set(a);
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    boost::dynamic_bitset<> strict = up_[a];
    strict.reset(a);
    boost::dynamic_bitset<> implied(n);
    for (auto c = strict.find_first(); c != boost::dynamic_bitset<>::npos; c = strict.find_next(c)) {
      boost::dynamic_bitset<> above_c = up_[c];
      above_c.reset(c);
      implied |= above_c;
    }
    const boost::dynamic_bitset<> direct = strict - implied;
    for (auto b = direct.find_first(); b != boost::dynamic_bitset<>::npos; b = direct.find_next(b)) {
      covers_.emplace_back(a, b);
    }
  }
}

std::optional<std::size_t> FinitePoset::index_of(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool FinitePoset::is_cover(std::size_t lower, std::size_t upper) const {
  return std::binary_search(covers_.begin(), covers_.end(), Relation{lower, upper});
}

std::vector<std::size_t> FinitePoset::upper_covers(std::size_t i) const {
  std::vector<std::size_t> out;
  for (const auto& [lo, hi] : covers_) {
    if (lo == i) out.push_back(hi);
  }
  return out;
}

std::vector<std::size_t> FinitePoset::lower_covers(std::size_t i) const {
  std::vector<std::size_t> out;
  for (const auto& [lo, hi] : covers_) {
    if (hi == i) out.push_back(lo);
  }
  return out;
}

namespace {

Bound extremal_bound(const FinitePoset& poset, const boost::dynamic_bitset<>& common,
                     bool below) {
  if (common.none()) return {BoundStatus::kNone, 0};
  for (auto c = common.find_first(); c != boost::dynamic_bitset<>::npos; c = common.find_next(c)) {
    const auto& cone = below ? poset.down_set(c) : poset.up_set(c);
    if (common.is_subset_of(cone)) return {BoundStatus::kUnique, c};
  }
  return {BoundStatus::kAmbiguous, 0};
}

}  // namespace

Bound meet(const FinitePoset& poset, std::size_t a, std::size_t b) {
  return extremal_bound(poset, poset.down_set(a) & poset.down_set(b), true);
}

Bound join(const FinitePoset& poset, std::size_t a, std::size_t b) {
  return extremal_bound(poset, poset.up_set(a) & poset.up_set(b), false);
}

bool is_lattice(const FinitePoset& poset) {
  const std::size_t n = poset.size();
  if (n == 0) return false;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!meet(poset, a, b) || !join(poset, a, b)) return false;
    }
  }
  return true;
}

FinitePoset dual(const FinitePoset& poset) {
  std::vector<Relation> flipped;
  flipped.reserve(poset.covers().size());
  for (const auto& [lo, hi] : poset.covers()) flipped.emplace_back(hi, lo);
  return FinitePoset(poset.labels(), flipped);
}

bool isomorphic_via(const FinitePoset& from, const FinitePoset& to,
                    std::span<const std::size_t> map) {
  if (from.size() != to.size() || map.size() != from.size()) return false;
  std::vector<bool> hit(to.size(), false);
  for (std::size_t image : map) {
    if (image >= to.size() || hit[image]) return false;
    hit[image] = true;
  }
  if (from.covers().size() != to.covers().size()) return false;
  return std::all_of(from.covers().begin(), from.covers().end(), [&](const Relation& c) {
    return to.is_cover(map[c.first], map[c.second]);
  });
}

bool isomorphic_via_labels(const FinitePoset& from, const FinitePoset& to,
                           const std::vector<std::string>& image_labels) {
  if (image_labels.size() != from.size()) return false;
  std::vector<std::size_t> map;
  map.reserve(image_labels.size());
  for (const auto& label : image_labels) {
    const auto idx = to.index_of(label);
    if (!idx) return false;
    map.push_back(*idx);
  }
  return isomorphic_via(from, to, map);
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string hasse_dot(const FinitePoset& poset) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < poset.size(); ++i) {
    os << "  n" << i << " [label=\"" << dot_escape(poset.label(i)) << "\"];\n";
  }
  for (const auto& [lo, hi] : poset.covers()) {
    os << "  n" << lo << " -> n" << hi << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace nutamari
