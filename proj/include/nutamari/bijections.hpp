#ifndef NUTAMARI_BIJECTIONS_HPP_
#define NUTAMARI_BIJECTIONS_HPP_

// Right and left flushing between nu-paths and nu-trees, the reflection of
// nu-trees onto the reversed path, and the resulting duality of Tam(nu).
//
// Both flushings process rows bottom to top. The k-th lattice point of mu
// (in path order) corresponds to the k-th node of the tree when nodes are
// listed row by row from the bottom, right to left inside a row.

#include <vector>

#include "nutamari/lattice_path.hpp"
#include "nutamari/nu_tree.hpp"

namespace nutamari {

struct FlushResult {
  NuTree tree;
  // placed[k] is the node matched with the k-th lattice point of mu.
  std::vector<Point> placed;
};

// Throws std::invalid_argument if mu is not a nu-path. Running out of room
// in a row is impossible for a nu-path and raises std::logic_error.
FlushResult right_flush_with_order(const LatticePath& nu, const LatticePath& mu);
NuTree right_flush(const LatticePath& nu, const LatticePath& mu);

LatticePath left_flush(const NuTree& tree);

// Nodes listed bottom row first, right to left inside a row: the order in
// which left_flush matches them with the points of the resulting path.
std::vector<Point> flushing_order(const NuTree& tree);

// (x, y) -> (n - y, m - x): the mirror image in the line of slope -1
// through the root, a tree over reverse_path(nu).
Point reflect_point(const LatticePath& nu, Point p);
NuTree reflect_tree(const NuTree& tree);

// left_flush(reflect_tree(right_flush(nu, mu))), a reverse_path(nu)-path.
LatticePath duality_map(const LatticePath& nu, const LatticePath& mu);

}  // namespace nutamari

#endif  // NUTAMARI_BIJECTIONS_HPP_
