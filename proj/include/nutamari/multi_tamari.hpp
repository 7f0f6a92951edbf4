#ifndef NUTAMARI_MULTI_TAMARI_HPP_
#define NUTAMARI_MULTI_TAMARI_HPP_

// (k, nu)-trees: maximal subsets of A_nu without k+1 pairwise incompatible
// points. Only the undirected flip graph is modelled; no order is imposed
// for k >= 2.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nutamari/lattice_path.hpp"

namespace nutamari {

using PointSet = std::vector<Point>;  // sorted by RowMajorTopDown

// S has no k+1 pairwise incompatible points.
bool is_face(const LatticePath& nu, int k, const PointSet& s);

// All (k, nu)-trees, sorted. Throws std::invalid_argument if k < 1.
std::vector<PointSet> enumerate_k_trees(const LatticePath& nu, int k);

// Points that lie in some set of k+1 pairwise incompatible points. All other
// points belong to every (k, nu)-tree.
PointSet clique_points(const LatticePath& nu, int k);

// The intersection of all (k, nu)-trees.
PointSet irrelevant_nodes(const LatticePath& nu, int k);

// Size of the largest set of pairwise incompatible points of A_nu.
int max_incompatible_clique(const LatticePath& nu);

struct UndirectedGraph {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // a < b, sorted

  std::size_t vertex_count() const { return labels.size(); }
  std::vector<std::vector<bool>> adjacency() const;
};

// Vertices are (k, nu)-trees; edges join trees differing in one point.
UndirectedGraph flip_graph(const LatticePath& nu, int k);

// Facet adjacency graph of SC(Q, pi) with Q = (s_{k+1} ... s_{m+1})^{k+1}
// and pi = s_{k+1} ... s_{m+1} in S_{m+2}. Requires 1 <= k <= m.
UndirectedGraph fuss_subword_graph(int m, int k);

// Exact test by backtracking over colour-refined vertex classes.
bool graphs_isomorphic(const UndirectedGraph& g, const UndirectedGraph& h);

}  // namespace nutamari

#endif  // NUTAMARI_MULTI_TAMARI_HPP_
