#include "nutamari/bijections.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nutamari {

FlushResult right_flush_with_order(const LatticePath& nu, const LatticePath& mu) {
  if (!is_nu_path(nu, mu)) {
    throw std::invalid_argument(mu.word() + " is not a " + nu.word() + "-path");
  }
  const Region region(nu);
  const auto pts = mu.lattice_points();
  std::vector<Point> placed;
  placed.reserve(pts.size());
  std::set<int> forbidden;
  std::size_t k = 0;
  for (int y = 0; y <= region.height(); ++y) {
    std::vector<int> row;
    for (; k < pts.size() && pts[k].y == y; ++k) {
      int x = row.empty() ? region.row_end(y) : row.back() - 1;
      while (x >= 0 && forbidden.count(x)) --x;
      if (x < 0) throw std::logic_error("right flushing ran out of columns in row " + std::to_string(y));
      row.push_back(x);
      placed.push_back({x, y});
    }
    // Every placed column except the leftmost one is closed for rows above.
    for (std::size_t i = 0; i + 1 < row.size(); ++i) forbidden.insert(row[i]);
  }
  std::vector<Point> nodes = placed;
  return FlushResult{NuTree(nu, std::move(nodes)), std::move(placed)};
}

NuTree right_flush(const LatticePath& nu, const LatticePath& mu) {
  return right_flush_with_order(nu, mu).tree;
}

std::vector<Point> flushing_order(const NuTree& tree) {
  std::vector<Point> order = tree.nodes();
  std::sort(order.begin(), order.end(), [](const Point& a, const Point& b) {
    return a.y != b.y ? a.y < b.y : a.x > b.x;
  });
  return order;
}

LatticePath left_flush(const NuTree& tree) {
  const Region& region = tree.region();
  const auto order = flushing_order(tree);
  std::set<int> forbidden;
  std::vector<int> ends;
  std::size_t k = 0;
  for (int y = 0; y <= region.height(); ++y) {
    std::vector<int> row;
    for (; k < order.size() && order[k].y == y; ++k) {
      int x = row.empty() ? 0 : row.back() + 1;
      while (forbidden.count(x)) ++x;
      if (x > region.row_end(y)) {
        throw std::logic_error("left flushing ran out of columns in row " + std::to_string(y));
      }
      row.push_back(x);
    }
    if (row.empty()) throw std::logic_error("nu-tree with an empty row");
    // The placed points must be consecutive and continue the previous row.
    const int start = ends.empty() ? 0 : ends.back();
    if (row.front() != start || row.back() - row.front() + 1 != static_cast<int>(row.size())) {
      throw std::logic_error("left flushing did not produce a lattice path");
    }
    ends.push_back(row.back());
    for (std::size_t i = 1; i < row.size(); ++i) forbidden.insert(row[i - 1]);
  }
  LatticePath mu = path_from_row_ends(ends);
  if (!is_nu_path(tree.nu(), mu)) throw std::logic_error("left flushing left the region");
  return mu;
}

Point reflect_point(const LatticePath& nu, Point p) {
  return {nu.north_count() - p.y, nu.east_count() - p.x};
}

NuTree reflect_tree(const NuTree& tree) {
  std::vector<Point> nodes;
  nodes.reserve(tree.size());
  for (const Point& p : tree.nodes()) nodes.push_back(reflect_point(tree.nu(), p));
  return NuTree(reverse_path(tree.nu()), std::move(nodes));
}

LatticePath duality_map(const LatticePath& nu, const LatticePath& mu) {
  return left_flush(reflect_tree(right_flush(nu, mu)));
}

}  // namespace nutamari
