#ifndef NUTAMARI_NU_TREE_HPP_
#define NUTAMARI_NU_TREE_HPP_

// nu-trees: maximal sets of pairwise nu-compatible points of A_nu, their
// rotations, and the rooted binary tree and tree-like tableau they encode.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nutamari/lattice_path.hpp"

namespace nutamari {

class FinitePoset;

// p and q are nu-incompatible when one is strictly southwest of the other and
// the rectangle they span lies inside the Ferrers diagram of nu. Both points
// must lie in A_nu.
bool incompatible(const Region& region, Point p, Point q);
bool incompatible(const LatticePath& nu, Point p, Point q);

bool is_compatible_set(const Region& region, std::span<const Point> points);
// Pairwise compatible and maximal in A_nu.
bool is_nu_tree(const LatticePath& nu, std::span<const Point> points);

enum class ChildSide {
  kLeft,   // child lies below its parent in the same column
  kRight,  // child lies east of its parent in the same row
};

struct ParentLink {
  std::size_t parent = 0;
  ChildSide side = ChildSide::kLeft;
};

class NuTree {
 public:
  // Throws std::invalid_argument unless `nodes` is a nu-tree.
  NuTree(LatticePath nu, std::vector<Point> nodes);

  const LatticePath& nu() const { return nu_; }
  const Region& region() const { return region_; }
  // Sorted top row first, left to right (see RowMajorTopDown); the root
  // (0, n) comes first.
  const std::vector<Point>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  static constexpr std::size_t root() { return 0; }

  bool contains(Point p) const { return index_of(p).has_value(); }
  std::optional<std::size_t> index_of(Point p) const;

  // The next node north, or failing that the next node west. Empty for the root.
  std::optional<ParentLink> parent(std::size_t i) const { return parent_.at(i); }
  std::optional<std::size_t> left_child(std::size_t i) const { return left_.at(i); }
  std::optional<std::size_t> right_child(std::size_t i) const { return right_.at(i); }

  friend bool operator==(const NuTree& a, const NuTree& b) {
    return a.nu_ == b.nu_ && a.nodes_ == b.nodes_;
  }
  friend bool operator<(const NuTree& a, const NuTree& b) {
    return a.nu_ != b.nu_ ? a.nu_ < b.nu_ : a.nodes_ < b.nodes_;
  }

 private:
  LatticePath nu_;
  Region region_;
  std::vector<Point> nodes_;
  std::vector<std::optional<ParentLink>> parent_;
  std::vector<std::optional<std::size_t>> left_;
  std::vector<std::optional<std::size_t>> right_;
};

// All nu-trees, found as maximal cliques of the compatibility graph on A_nu.
// Uses only the compatibility predicate. Sorted.
std::vector<NuTree> enumerate_nu_trees_bruteforce(const LatticePath& nu);

// (T_min, T_max): the leftmost column plus the ends of the east steps of nu,
// and the top row plus the starts of the north steps of nu.
std::pair<NuTree, NuTree> extreme_trees(const LatticePath& nu);

// A rotation exchanges q for q'. p and r are the northwest and southeast
// corners of the rectangle spanned by q and q'. For a right rotation q' lies
// northeast of q.
struct Rotation {
  NuTree result;
  Point p;
  Point q;
  Point r;
  Point q_prime;
};

// Right rotations found as single-element exchanges: for each node q, the
// unique q' != q (if any) such that T - q + q' is a nu-tree, kept when q' is
// northeast of q. Sorted by the position of q in tree.nodes().
std::vector<Rotation> right_rotation_covers(const NuTree& tree);
std::vector<Rotation> left_rotation_covers(const NuTree& tree);

// Right rotations from the rectangle picture: q has a node p directly above it
// and a nearest node r to its east in the same row; q' = (x_r, y_p).
std::vector<Rotation> right_rotations_by_rectangle(const NuTree& tree);

// Every tree reachable from T_min by right rotations. Sorted.
std::vector<NuTree> enumerate_nu_trees_by_rotation(const LatticePath& nu);

// Rotation poset on the nu-trees reachable from T_min, labelled by
// tree_label().
FinitePoset rotation_poset(const LatticePath& nu);

// JSON point list of the nodes in stored order, e.g. [[0,2],[2,2]].
std::string tree_label(const NuTree& tree);

// Number of horizontal edges on the path from the node at p to the root.
// Throws std::invalid_argument if p is not a node.
int hroot(const NuTree& tree, Point p);

// Checks the forced nodes (root, valleys, initial north starts, final east
// ends), non-empty rows and columns, the node count and the "above or left,
// never both" rule.
bool structural_properties_hold(const NuTree& tree);

// Plain rooted binary tree stored as an arena; node 0 is the root.
struct BinaryTree {
  struct Node {
    std::optional<std::size_t> left;
    std::optional<std::size_t> right;
  };
  std::vector<Node> nodes;

  std::size_t size() const { return nodes.size(); }
  // "(left right)" nesting with "-" for a missing child, e.g. a root whose
  // only child is a left leaf is "((- -) -)".
  std::string to_string() const;
  static BinaryTree parse(std::string_view text);
};

// Node i of the result corresponds to tree.nodes()[i].
BinaryTree to_binary_tree(const NuTree& tree);
// Boundary traversal: the canopy path and the nu-tree whose binary tree is t.
std::pair<LatticePath, NuTree> from_binary_tree(const BinaryTree& t);

// A cell of the Ferrers diagram bounded by E nu N, named by the lattice point
// of A_nu at its southeast corner (equivalently: the unit square whose
// lower-left corner is (col, row)).
struct Cell {
  int col = 0;
  int row = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::vector<Cell> tableau_of_tree(const NuTree& tree);
// Root cell pointed, each other pointed cell has a pointed cell above or to
// its left but not both, every row and column pointed.
bool is_tree_like_tableau(const LatticePath& nu, std::span<const Cell> pointed);
// An empty cell with a pointed cell above it and one to its left.
bool has_crossing(const LatticePath& nu, std::span<const Cell> pointed);

}  // namespace nutamari

#endif  // NUTAMARI_NU_TREE_HPP_
