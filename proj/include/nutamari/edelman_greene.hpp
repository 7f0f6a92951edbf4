#ifndef NUTAMARI_EDELMAN_GREENE_HPP_
#define NUTAMARI_EDELMAN_GREENE_HPP_

// Column Edelman-Greene insertion on the reading biword of a nu-tree, and the
// nu-path read off the recording tableau.

#include <cstddef>
#include <utility>
#include <vector>

#include "nutamari/lattice_path.hpp"
#include "nutamari/nu_tree.hpp"

namespace nutamari {

// Stored column by column, each column top to bottom.
struct Tableau {
  std::vector<std::vector<int>> columns;

  // Row lengths, top row first.
  std::vector<int> shape() const;
  // Entries of row r (0-indexed from the top), left to right.
  std::vector<int> row(std::size_t r) const;
  bool empty() const { return columns.empty(); }
  friend bool operator==(const Tableau&, const Tableau&) = default;
};

struct InsertResult {
  Tableau tableau;
  // The cell created by the insertion, 0-indexed.
  std::size_t row = 0;
  std::size_t col = 0;
};

// A letter entering a column is appended if nothing in the column exceeds
// it; if the column holds both the letter and its successor the column is
// kept and the successor moves on; otherwise the letter replaces the
// smallest larger entry, which moves on to the next column.
InsertResult eg_insert(const Tableau& tableau, int letter);

struct BiwordLetter {
  int top = 0;     // matrix row i
  int bottom = 0;  // i + j - 1
  friend bool operator==(const BiwordLetter&, const BiwordLetter&) = default;
};

// The points of A_nu outside the tree, read row by row from the top, right
// to left within a row.
std::vector<BiwordLetter> reading_biword(const NuTree& tree);

struct EgPair {
  Tableau insertion;
  Tableau recording;
};

EgPair eg_pair(const NuTree& tree);

// Row widths of the Ferrers diagram of nu, top row first, zero rows dropped.
std::vector<int> ferrers_row_widths(const LatticePath& nu);

// lambda_k(mu) for k = 1..n: the number of boxes above mu in the k-th row
// from the top.
std::vector<int> lambda_of_path(const LatticePath& mu);
// Count of entries equal to k in row k of the recording tableau.
std::vector<int> lambda_from_recording(const LatticePath& nu, const Tableau& recording);
// sum_{i<=k} |T_i^c| - sum_{i<k} lambda_i(nu), rows i counted from the top.
std::vector<int> lambda_eg_formula(const NuTree& tree);
// sum_{i>k} (|T_i| - 1).
std::vector<int> lambda_flush_formula(const NuTree& tree);

// The nu-path whose k-th row from the top has lambda_from_recording(...)[k]
// boxes above it.
LatticePath eg_path(const NuTree& tree);

}  // namespace nutamari

#endif  // NUTAMARI_EDELMAN_GREENE_HPP_
