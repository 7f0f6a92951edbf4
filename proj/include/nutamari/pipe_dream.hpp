#ifndef NUTAMARI_PIPE_DREAM_HPP_
#define NUTAMARI_PIPE_DREAM_HPP_

// Pipe dreams of nu-trees, permutations in one-line notation, the word Q_nu
// and subword complexes with increasing flips.
//
// Matrix coordinates: cell (i, j) is row i from the top and column j from
// the left, both starting at 1. The lattice point (x, y) of A_nu sits in
// cell (n - y + 1, x + 1) and carries the simple transposition s_{i+j-1}.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nutamari/lattice_path.hpp"
#include "nutamari/nu_tree.hpp"

namespace nutamari {

class FinitePoset;

class Permutation {
 public:
  Permutation() = default;
  // One-line notation over 1..size. Throws std::invalid_argument otherwise.
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(std::size_t size);

  std::size_t size() const { return one_line_.size(); }
  const std::vector<int>& one_line() const { return one_line_; }
  // 1-indexed: (*this)(i) is the i-th entry of the one-line word.
  int operator()(std::size_t i) const { return one_line_.at(i - 1); }

  // Number of inversions.
  int length() const;
  Permutation inverse() const;
  // this * s_i, i.e. swap positions i and i+1. Throws std::out_of_range.
  Permutation times_simple(int i) const;
  // s_i * this, i.e. swap the values i and i+1.
  Permutation simple_times(int i) const;

  std::string to_string() const;  // "[1,4,3,5,2,6]"
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> one_line_;
};

// Simple transposition indices: 3 stands for s_3.
using TranspositionWord = std::vector<int>;

// Product s_{w1} s_{w2} ... in S_size.
Permutation product(const TranspositionWord& word, std::size_t size);

struct MatrixCell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const MatrixCell&, const MatrixCell&) = default;
};

// The one place where lattice coordinates meet matrix coordinates.
MatrixCell to_matrix_cell(const LatticePath& nu, Point p);
Point from_matrix_cell(const LatticePath& nu, MatrixCell c);

class PipeDream {
 public:
  // Staircase of size N: cells (i, j) with i + j <= N. Throws
  // std::invalid_argument if a cross lies outside the staircase.
  PipeDream(std::size_t size, const std::vector<MatrixCell>& crosses);

  std::size_t size() const { return size_; }
  bool is_cross(int row, int col) const;
  const std::vector<MatrixCell>& crosses() const { return crosses_; }

  // Rows 1..N-1 top to bottom, '+' for a cross and '%' for an elbow.
  std::string render_ascii() const;

 private:
  std::size_t size_;
  std::vector<MatrixCell> crosses_;  // sorted
  std::vector<std::vector<bool>> grid_;
};

// Staircase size d_max + 2, where d_max is the largest x + n - y over A_nu.
std::size_t pipe_dream_size(const LatticePath& nu);

// Crosses on A_nu minus T; every other cell is an elbow.
PipeDream pipedream_of_tree(const NuTree& tree);

// Pipe i enters row i from the left. An elbow joins west to north and south
// to east; a cross passes straight through. Entry j of the result is the
// pipe leaving column j at the top.
Permutation trace_permutation(const PipeDream& dream);

// No two pipes cross twice.
bool is_reduced(const PipeDream& dream);

// Labels s_{i+j-1} read row by row from the bottom, left to right.
TranspositionWord q_word(const LatticePath& nu);
// The points of A_nu in the same order as q_word.
std::vector<Point> q_word_points(const LatticePath& nu);
// The permutation of the pipe dream of T_min.
Permutation pi_nu(const LatticePath& nu);

// {(w(j), i) : i < j, w(i) > w(j)} as (row, col) cells, sorted.
std::vector<MatrixCell> rothe_diagram(const Permutation& w);
// The Rothe diagram is a partition shape anchored at (1, 1).
bool is_dominant(const Permutation& w);
bool avoids_132(const Permutation& w);
Permutation direct_sum(const Permutation& u, const Permutation& v);

// Sorted 1-indexed positions in Q.
using Facet = std::vector<int>;

// Facets of SC(Q, pi): position sets whose complement spells a reduced word
// for pi. Sorted.
std::vector<Facet> subword_facets(const TranspositionWord& q, const Permutation& pi);

// Pairs (a, b) of facet indices with |F_a xor F_b| = 2, a < b.
std::vector<std::pair<std::size_t, std::size_t>> facet_adjacency(const std::vector<Facet>& facets);

// Flip from I to J when I \ J = {i}, J \ I = {j} and i < j. Labels use
// facet_label().
FinitePoset increasing_flip_poset(const TranspositionWord& q, const Permutation& pi);

std::string facet_label(const Facet& f);  // "[1,2,5]"
Facet parse_facet(std::string_view text);

// Positions in q_word(nu) of the nodes of the tree.
Facet facet_of_tree(const NuTree& tree);
// Throws std::invalid_argument if the facet does not describe a nu-tree.
NuTree tree_of_facet(const LatticePath& nu, const Facet& facet);

}  // namespace nutamari

#endif  // NUTAMARI_PIPE_DREAM_HPP_
