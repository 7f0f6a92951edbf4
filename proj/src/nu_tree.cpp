#include "nutamari/nu_tree.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

#include "nutamari/poset.hpp"

namespace nutamari {

bool incompatible(const Region& region, Point p, Point q) {
  Point low, high;
  if (p.x < q.x && p.y < q.y) {
    low = p;
    high = q;
  } else if (q.x < p.x && q.y < p.y) {
    low = q;
    high = p;
  } else {
    return false;
  }
  // The spanned rectangle stays inside F_nu iff its southeast corner does.
  return region.contains({high.x, low.y});
}

bool incompatible(const LatticePath& nu, Point p, Point q) {
  return incompatible(Region(nu), p, q);
}

bool is_compatible_set(const Region& region, std::span<const Point> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (incompatible(region, points[i], points[j])) return false;
    }
  }
  return true;
}

bool is_nu_tree(const LatticePath& nu, std::span<const Point> points) {
  const Region region(nu);
  std::set<Point> members;
  for (const Point& p : points) {
    if (!region.contains(p) || !members.insert(p).second) return false;
  }
  if (!is_compatible_set(region, points)) return false;
  for (const Point& a : region.points()) {
    if (members.count(a)) continue;
    const bool blocked = std::any_of(points.begin(), points.end(),
                                     [&](const Point& s) { return incompatible(region, a, s); });
    if (!blocked) return false;
  }
  return true;
}

NuTree::NuTree(LatticePath nu, std::vector<Point> nodes)
    : nu_(std::move(nu)), region_(nu_), nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end(), RowMajorTopDown{});
  if (!is_nu_tree(nu_, nodes_)) {
    throw std::invalid_argument("point set is not a " + nu_.word() + "-tree");
  }
  const std::size_t count = nodes_.size();
  parent_.assign(count, std::nullopt);
  left_.assign(count, std::nullopt);
  right_.assign(count, std::nullopt);
  for (std::size_t i = 1; i < count; ++i) {
    const Point q = nodes_[i];
    std::optional<ParentLink> link;
    for (int y = q.y + 1; y <= region_.height() && !link; ++y) {
      if (auto idx = index_of({q.x, y})) link = ParentLink{*idx, ChildSide::kLeft};
    }
    for (int x = q.x - 1; x >= 0 && !link; --x) {
      if (auto idx = index_of({x, q.y})) link = ParentLink{*idx, ChildSide::kRight};
    }
    if (!link) throw std::logic_error("nu-tree node without parent");
    auto& slot = (link->side == ChildSide::kLeft) ? left_[link->parent] : right_[link->parent];
    if (slot) throw std::logic_error("nu-tree node with two children on one side");
    slot = i;
    parent_[i] = link;
  }
}

std::optional<std::size_t> NuTree::index_of(Point p) const {
  const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), p, RowMajorTopDown{});
  if (it == nodes_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

namespace {

using Bits = boost::dynamic_bitset<>;

// Bron-Kerbosch with pivoting on the compatibility graph.
void maximal_cliques(const std::vector<Bits>& adj, Bits& chosen, Bits candidates, Bits excluded,
                     std::vector<Bits>& out) {
  if (candidates.none() && excluded.none()) {
    out.push_back(chosen);
    return;
  }
  const Bits pool = candidates | excluded;
  std::size_t pivot = pool.find_first();
  std::size_t best = 0;
  for (auto u = pool.find_first(); u != Bits::npos; u = pool.find_next(u)) {
    const std::size_t degree = (candidates & adj[u]).count();
    if (degree >= best) {
      best = degree;
      pivot = u;
    }
  }
  const Bits branch = candidates - adj[pivot];
  for (auto v = branch.find_first(); v != Bits::npos; v = branch.find_next(v)) {
    chosen.set(v);
    maximal_cliques(adj, chosen, candidates & adj[v], excluded & adj[v], out);
    chosen.reset(v);
    candidates.reset(v);
    excluded.set(v);
  }
}

}  // namespace

std::vector<NuTree> enumerate_nu_trees_bruteforce(const LatticePath& nu) {
  const Region region(nu);
  const auto pts = region.points();
  const std::size_t count = pts.size();
  std::vector<Bits> adj(count, Bits(count));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (i != j && !incompatible(region, pts[i], pts[j])) adj[i].set(j);
    }
  }
  Bits chosen(count);
  Bits all(count);
  all.set();
  std::vector<Bits> cliques;
  maximal_cliques(adj, chosen, all, Bits(count), cliques);

  std::vector<NuTree> trees;
  trees.reserve(cliques.size());
  for (const Bits& c : cliques) {
    std::vector<Point> nodes;
    for (auto v = c.find_first(); v != Bits::npos; v = c.find_next(v)) nodes.push_back(pts[v]);
    trees.emplace_back(nu, std::move(nodes));
  }
  std::sort(trees.begin(), trees.end());
  return trees;
}

std::pair<NuTree, NuTree> extreme_trees(const LatticePath& nu) {
  const int m = nu.east_count();
  const int n = nu.north_count();
  const auto pts = nu.lattice_points();
  std::set<Point> low, high;
  for (int y = 0; y <= n; ++y) low.insert({0, y});
  for (int x = 0; x <= m; ++x) high.insert({x, n});
  for (std::size_t i = 0; i < nu.steps().size(); ++i) {
    if (nu.steps()[i] == Step::kEast) {
      low.insert(pts[i + 1]);
    } else {
      high.insert(pts[i]);
    }
  }
  return {NuTree(nu, {low.begin(), low.end()}), NuTree(nu, {high.begin(), high.end()})};
}

namespace {

Rotation make_rotation(const NuTree& tree, std::size_t removed, Point q_prime) {
  const Point q = tree.nodes()[removed];
  std::vector<Point> nodes = tree.nodes();
  nodes[removed] = q_prime;
  const Point p{std::min(q.x, q_prime.x), std::max(q.y, q_prime.y)};
  const Point r{std::max(q.x, q_prime.x), std::min(q.y, q_prime.y)};
  return Rotation{NuTree(tree.nu(), std::move(nodes)), p, q, r, q_prime};
}

std::vector<Rotation> exchange_rotations(const NuTree& tree, bool rightward) {
  const Region& region = tree.region();
  const auto pts = region.points();
  std::vector<int> blockers(pts.size(), 0);
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (const Point& t : tree.nodes()) {
      if (incompatible(region, pts[a], t)) ++blockers[a];
    }
  }
  std::vector<Rotation> out;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const Point q = tree.nodes()[i];
    std::optional<Point> found;
    for (std::size_t a = 0; a < pts.size(); ++a) {
      if (blockers[a] != 1 || tree.contains(pts[a]) || !incompatible(region, pts[a], q)) continue;
      if (found) throw std::logic_error("node admits two distinct exchanges");
      found = pts[a];
    }
    if (!found) continue;
    const bool northeast = found->x > q.x;
    if (northeast == rightward) out.push_back(make_rotation(tree, i, *found));
  }
  return out;
}

}  // namespace

std::vector<Rotation> right_rotation_covers(const NuTree& tree) {
  return exchange_rotations(tree, true);
}

std::vector<Rotation> left_rotation_covers(const NuTree& tree) {
  return exchange_rotations(tree, false);
}

std::vector<Rotation> right_rotations_by_rectangle(const NuTree& tree) {
  const Region& region = tree.region();
  std::vector<Rotation> out;
  for (std::size_t i = 1; i < tree.size(); ++i) {
    const Point q = tree.nodes()[i];
    std::optional<Point> above, east;
    for (int y = q.y + 1; y <= region.height() && !above; ++y) {
      if (tree.contains({q.x, y})) above = Point{q.x, y};
    }
    for (int x = q.x + 1; x <= region.row_end(q.y) && !east; ++x) {
      if (tree.contains({x, q.y})) east = Point{x, q.y};
    }
    if (!above || !east) continue;
    out.push_back(make_rotation(tree, i, {east->x, above->y}));
  }
  return out;
}

std::vector<NuTree> enumerate_nu_trees_by_rotation(const LatticePath& nu) {
  std::set<NuTree> seen;
  std::deque<NuTree> queue;
  NuTree start = extreme_trees(nu).first;
  seen.insert(start);
  queue.push_back(std::move(start));
  while (!queue.empty()) {
    const NuTree tree = std::move(queue.front());
    queue.pop_front();
    for (auto& rot : right_rotation_covers(tree)) {
      if (seen.insert(rot.result).second) queue.push_back(std::move(rot.result));
    }
  }
  return {seen.begin(), seen.end()};
}

FinitePoset rotation_poset(const LatticePath& nu) {
  const auto trees = enumerate_nu_trees_by_rotation(nu);
  std::map<std::string, std::size_t> index;
  std::vector<std::string> labels;
  for (const auto& t : trees) {
    index.emplace(tree_label(t), labels.size());
    labels.push_back(tree_label(t));
  }
  std::vector<Relation> relations;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (const auto& rot : right_rotation_covers(trees[i])) {
      relations.emplace_back(i, index.at(tree_label(rot.result)));
    }
  }
  return FinitePoset(std::move(labels), relations);
}

std::string tree_label(const NuTree& tree) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < tree.size(); ++i) {
    if (i) os << ',';
    os << '[' << tree.nodes()[i].x << ',' << tree.nodes()[i].y << ']';
  }
  os << ']';
  return os.str();
}

int hroot(const NuTree& tree, Point p) {
  auto idx = tree.index_of(p);
  if (!idx) {
    throw std::invalid_argument("(" + std::to_string(p.x) + "," + std::to_string(p.y) +
                                ") is not a node of the tree");
  }
  int horizontal = 0;
  for (auto link = tree.parent(*idx); link; link = tree.parent(link->parent)) {
    if (link->side == ChildSide::kRight) ++horizontal;
  }
  return horizontal;
}

bool structural_properties_hold(const NuTree& tree) {
  const LatticePath& nu = tree.nu();
  const Region& region = tree.region();
  const int m = nu.east_count();
  const int n = nu.north_count();
  if (tree.size() != static_cast<std::size_t>(nu.length()) + 1) return false;
  if (!tree.contains({0, n})) return false;

  const auto pts = nu.lattice_points();
  const auto& steps = nu.steps();
  for (std::size_t i = 1; i < steps.size(); ++i) {
    if (steps[i - 1] == Step::kEast && steps[i] == Step::kNorth && !tree.contains(pts[i])) {
      return false;
    }
  }
  for (std::size_t i = 0; i < steps.size() && steps[i] == Step::kNorth; ++i) {
    if (!tree.contains(pts[i])) return false;
  }
  for (std::size_t i = steps.size(); i > 0 && steps[i - 1] == Step::kEast; --i) {
    if (!tree.contains(pts[i])) return false;
  }

  std::vector<bool> column(static_cast<std::size_t>(m) + 1, false);
  std::vector<bool> row(static_cast<std::size_t>(n) + 1, false);
  for (const Point& p : tree.nodes()) {
    column[static_cast<std::size_t>(p.x)] = true;
    row[static_cast<std::size_t>(p.y)] = true;
  }
  if (std::find(column.begin(), column.end(), false) != column.end()) return false;
  if (std::find(row.begin(), row.end(), false) != row.end()) return false;

  for (std::size_t i = 1; i < tree.size(); ++i) {
    const Point q = tree.nodes()[i];
    bool above = false, left = false;
    for (int y = q.y + 1; y <= region.height(); ++y) above = above || tree.contains({q.x, y});
    for (int x = 0; x < q.x; ++x) left = left || tree.contains({x, q.y});
    if (above == left) return false;
  }
  return true;
}

std::string BinaryTree::to_string() const {
  if (nodes.empty()) return "-";
  std::function<void(std::size_t, std::string&)> emit = [&](std::size_t v, std::string& out) {
    out.push_back('(');
    if (nodes[v].left) {
      emit(*nodes[v].left, out);
    } else {
      out.push_back('-');
    }
    out.push_back(' ');
    if (nodes[v].right) {
      emit(*nodes[v].right, out);
    } else {
      out.push_back('-');
    }
    out.push_back(')');
  };
  std::string out;
  emit(0, out);
  return out;
}

BinaryTree BinaryTree::parse(std::string_view text) {
  BinaryTree t;
  std::size_t pos = 0;
  auto fail = [&]() -> std::invalid_argument {
    return std::invalid_argument("malformed binary tree at offset " + std::to_string(pos));
  };
  std::function<std::optional<std::size_t>()> node = [&]() -> std::optional<std::size_t> {
    if (pos >= text.size()) throw fail();
    if (text[pos] == '-') {
      ++pos;
      return std::nullopt;
    }
    if (text[pos] != '(') throw fail();
    ++pos;
    const std::size_t id = t.nodes.size();
    t.nodes.emplace_back();
    const auto left = node();
    if (pos >= text.size() || text[pos] != ' ') throw fail();
    ++pos;
    const auto right = node();
    if (pos >= text.size() || text[pos] != ')') throw fail();
    ++pos;
    t.nodes[id].left = left;
    t.nodes[id].right = right;
    return id;
  };
  node();
  if (pos != text.size()) throw fail();
  return t;
}

BinaryTree to_binary_tree(const NuTree& tree) {
  BinaryTree t;
  t.nodes.resize(tree.size());
  for (std::size_t i = 0; i < tree.size(); ++i) {
    t.nodes[i].left = tree.left_child(i);
    t.nodes[i].right = tree.right_child(i);
  }
  return t;
}

std::pair<LatticePath, NuTree> from_binary_tree(const BinaryTree& t) {
  if (t.nodes.empty()) throw std::invalid_argument("empty binary tree");
  std::vector<Step> steps;
  std::vector<int> first_east(t.size(), 0);
  std::vector<int> north_before_last(t.size(), 0);
  int east = 0;
  int north = 0;
  // Counter-clockwise boundary walk: down to the left child, back up (N),
  // across to the right child (E), back left.
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    first_east[v] = east;
    if (const auto l = t.nodes[v].left) {
      walk(*l);
      steps.push_back(Step::kNorth);
      ++north;
    }
    if (const auto r = t.nodes[v].right) {
      steps.push_back(Step::kEast);
      ++east;
      walk(*r);
    }
    north_before_last[v] = north;
  };
  walk(0);
  std::vector<Point> nodes;
  nodes.reserve(t.size());
  for (std::size_t v = 0; v < t.size(); ++v) nodes.push_back({first_east[v], north_before_last[v]});
  LatticePath nu(std::move(steps));
  NuTree tree(nu, std::move(nodes));
  return {std::move(nu), std::move(tree)};
}

std::vector<Cell> tableau_of_tree(const NuTree& tree) {
  std::vector<Cell> cells;
  cells.reserve(tree.size());
  for (const Point& p : tree.nodes()) cells.push_back({p.x, p.y});
  std::sort(cells.begin(), cells.end());
  return cells;
}

namespace {

std::set<Cell> cell_set(const Region& region, std::span<const Cell> pointed, bool& inside) {
  std::set<Cell> set(pointed.begin(), pointed.end());
  inside = std::all_of(set.begin(), set.end(),
                       [&](const Cell& c) { return region.contains({c.col, c.row}); });
  return set;
}

}  // namespace

bool is_tree_like_tableau(const LatticePath& nu, std::span<const Cell> pointed) {
  const Region region(nu);
  bool inside = false;
  const auto set = cell_set(region, pointed, inside);
  if (!inside) return false;
  const int n = region.height();
  if (!set.count({0, n})) return false;
  for (const Cell& c : set) {
    if (c.col == 0 && c.row == n) continue;
    bool above = false, left = false;
    for (int r = c.row + 1; r <= n; ++r) above = above || set.count({c.col, r});
    for (int k = 0; k < c.col; ++k) left = left || set.count({k, c.row});
    if (above == left) return false;
  }
  for (int x = 0; x <= region.width(); ++x) {
    bool any = false;
    for (int y = 0; y <= n; ++y) any = any || set.count({x, y});
    if (!any) return false;
  }
  for (int y = 0; y <= n; ++y) {
    bool any = false;
    for (int x = 0; x <= region.row_end(y); ++x) any = any || set.count({x, y});
    if (!any) return false;
  }
  return true;
}

bool has_crossing(const LatticePath& nu, std::span<const Cell> pointed) {
  const Region region(nu);
  bool inside = false;
  const auto set = cell_set(region, pointed, inside);
  for (const Point& p : region.points()) {
    if (set.count({p.x, p.y})) continue;
    bool above = false, left = false;
    for (int r = p.y + 1; r <= region.height(); ++r) above = above || set.count({p.x, r});
    for (int k = 0; k < p.x; ++k) left = left || set.count({k, p.y});
    if (above && left) return true;
  }
  return false;
}

}  // namespace nutamari
