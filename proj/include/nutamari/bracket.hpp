#ifndef NUTAMARI_BRACKET_HPP_
#define NUTAMARI_BRACKET_HPP_

// nu-bracket vectors. A vector has one entry per lattice point of nu and is
// addressed 1-indexed through at(), matching the fixed positions f_k.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nutamari/lattice_path.hpp"
#include "nutamari/nu_tree.hpp"

namespace nutamari {

class FinitePoset;

struct BracketVector {
  std::vector<int> entries;

  std::size_t size() const { return entries.size(); }
  // 1-indexed access; throws std::out_of_range.
  int at(std::size_t position) const { return entries.at(position - 1); }

  friend auto operator<=>(const BracketVector&, const BracketVector&) = default;
};

// Heights of the lattice points of nu, in order.
BracketVector min_bracket(const LatticePath& nu);
// f_0, ..., f_n: the last position of k in min_bracket(nu), 1-indexed.
std::vector<int> fixed_positions(const LatticePath& nu);

// In-order reading of the node heights.
BracketVector bracket_of_tree(const NuTree& tree);
// For k = 0..n, write one k per point of mu in row k, each at the rightmost
// free position not after f_k. Throws std::invalid_argument if mu is not a
// nu-path.
BracketVector bracket_of_path(const LatticePath& nu, const LatticePath& mu);

bool avoids_121(const BracketVector& b);
// b_i = k implies b_j <= k for i <= j <= f_k.
bool satisfies_bounded_descent(const LatticePath& nu, const BracketVector& b);
// Fixed positions, bounds and 121-avoidance. When the first two hold, throws
// std::logic_error if 121-avoidance and the bounded-descent form disagree.
bool is_valid_bracket(const LatticePath& nu, const BracketVector& b);

// Throws std::invalid_argument if b is not valid for nu.
LatticePath path_of_bracket(const LatticePath& nu, const BracketVector& b);
NuTree tree_of_bracket(const LatticePath& nu, const BracketVector& b);

// Componentwise minimum. Throws std::invalid_argument on a length mismatch.
BracketVector bracket_meet(const BracketVector& a, const BracketVector& b);
// The bracket vector over reverse_path(nu) of the reflected tree.
BracketVector reflect_bracket(const LatticePath& nu, const BracketVector& b);
// Reflect, take the meet over reverse_path(nu), reflect back.
BracketVector bracket_join(const LatticePath& nu, const BracketVector& a, const BracketVector& b);

// Replaces the first x by the entry at position f_x + 1. Throws
// std::invalid_argument unless 0 <= x < n and x occurs at least twice.
BracketVector bracket_rotate_first(const LatticePath& nu, const BracketVector& b, int x);

// Vectors satisfying the fixed-position and bound conditions, in
// lexicographic order.
std::vector<BracketVector> enumerate_bracket_candidates(const LatticePath& nu);
// The valid ones among them.
std::vector<BracketVector> enumerate_brackets(const LatticePath& nu);

// Valid vectors under componentwise order, labelled by bracket_label().
FinitePoset bracket_poset(const LatticePath& nu);

// Digits run together when every entry is below 10 ("002112"), otherwise
// comma separated ("0,10,10").
std::string bracket_label(const BracketVector& b);
// Accepts either label form. Throws std::invalid_argument.
BracketVector parse_bracket(std::string_view text);

}  // namespace nutamari

#endif  // NUTAMARI_BRACKET_HPP_
