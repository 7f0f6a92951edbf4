#ifndef NUTAMARI_TESTS_ORACLES_HPP_
#define NUTAMARI_TESTS_ORACLES_HPP_

// Slow, independent reference implementations. Nothing here calls into the
// library; values are plain strings, pairs and vectors so that a shared bug
// in a library type cannot hide on both sides of a comparison.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Pt = std::pair<int, int>;  // (x, y)

// Largest x visited by the word at each height.
std::vector<int> row_ends(const std::string& nu);

// Every word with the endpoints of nu that never passes below it, sorted.
std::vector<std::string> nu_paths(const std::string& nu);

// All points (x, y) with x <= row_ends(nu)[y].
std::vector<Pt> region(const std::string& nu);

// Strictly southwest/northeast and every lattice point of the spanned
// rectangle lies in the region.
bool incompatible(const std::string& nu, Pt p, Pt q);

// Maximal pairwise compatible subsets, by scanning subsets of size
// length(nu)+1 and then confirming maximality. Each set sorted.
std::vector<std::vector<Pt>> nu_trees(const std::string& nu);

std::uint64_t binomial(int n, int k);
std::uint64_t catalan(int n);
// Number of (N E^m)^n-paths.
std::uint64_t fuss_catalan(int m, int n);
// Number of intervals of the m-Tamari lattice on (N E^m)^n-paths.
std::uint64_t m_tamari_intervals(int m, int n);

// Order relation from a cover list by Floyd-Warshall.
struct Order {
  explicit Order(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& covers);
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  // -1 if there is no unique greatest lower / least upper bound.
  long meet(std::size_t a, std::size_t b) const;
  long join(std::size_t a, std::size_t b) const;
  std::size_t interval_count() const;
  std::vector<std::vector<bool>> leq_;
};

// One-line product s_{w1} s_{w2} ... computed as a composition of maps.
std::vector<int> word_product(const std::vector<int>& word, int size);
int inversions(const std::vector<int>& perm);

// Subsets of positions (1-indexed) whose complement multiplies to pi with
// exactly inversions(pi) letters. Sorted.
std::vector<std::vector<int>> subword_facets(const std::vector<int>& q, const std::vector<int>& pi);

// Exhaustive isomorphism test over all vertex permutations.
bool graphs_isomorphic(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& e1,
                       std::size_t m, const std::vector<std::pair<std::size_t, std::size_t>>& e2);

// Every word over {E, N} of length at most max_len.
std::vector<std::string> words_up_to(int max_len);

}  // namespace oracle

#endif  // NUTAMARI_TESTS_ORACLES_HPP_
