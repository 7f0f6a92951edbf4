#include "nutamari/edelman_greene.hpp"

#include <algorithm>
#include <stdexcept>

namespace nutamari {

std::vector<int> Tableau::shape() const {
  std::vector<int> rows;
  for (const auto& column : columns) {
    if (rows.size() < column.size()) rows.resize(column.size(), 0);
    for (std::size_t r = 0; r < column.size(); ++r) ++rows[r];
  }
  return rows;
}

std::vector<int> Tableau::row(std::size_t r) const {
  std::vector<int> out;
  for (const auto& column : columns) {
    if (r < column.size()) out.push_back(column[r]);
  }
  return out;
}

InsertResult eg_insert(const Tableau& tableau, int letter) {
  InsertResult result{tableau, 0, 0};
  auto& columns = result.tableau.columns;
  int a = letter;
  for (std::size_t c = 0;; ++c) {
    if (c == columns.size()) {
      columns.push_back({a});
      result.row = 0;
      result.col = c;
      return result;
    }
    auto& column = columns[c];
    if (*std::max_element(column.begin(), column.end()) <= a) {
      column.push_back(a);
      result.row = column.size() - 1;
      result.col = c;
      return result;
    }
    const bool has_a = std::find(column.begin(), column.end(), a) != column.end();
    const bool has_next = std::find(column.begin(), column.end(), a + 1) != column.end();
    if (has_a && has_next) {
      a = a + 1;
      continue;
    }
    auto larger = column.end();
    for (auto it = column.begin(); it != column.end(); ++it) {
      if (*it > a && (larger == column.end() || *it < *larger)) larger = it;
    }
    std::swap(*larger, a);
  }
}

std::vector<BiwordLetter> reading_biword(const NuTree& tree) {
  const Region& region = tree.region();
  const LatticePath& nu = tree.nu();
  std::vector<BiwordLetter> word;
  for (int y = region.height(); y >= 0; --y) {
    for (int x = region.row_end(y); x >= 0; --x) {
      if (tree.contains({x, y})) continue;
      const int i = nu.north_count() - y + 1;
      const int j = x + 1;
      word.push_back({i, i + j - 1});
    }
  }
  return word;
}

EgPair eg_pair(const NuTree& tree) {
  EgPair out;
  for (const BiwordLetter& letter : reading_biword(tree)) {
    InsertResult step = eg_insert(out.insertion, letter.bottom);
    out.insertion = std::move(step.tableau);
    auto& columns = out.recording.columns;
    if (step.col == columns.size()) columns.emplace_back();
    if (step.row != columns[step.col].size()) {
      throw std::logic_error("insertion created a cell that is not at the end of its column");
    }
    columns[step.col].push_back(letter.top);
  }
  return out;
}

std::vector<int> ferrers_row_widths(const LatticePath& nu) {
  const Region region(nu);
  std::vector<int> widths;
  for (int y = region.height() - 1; y >= 0; --y) {
    if (region.row_end(y) > 0) widths.push_back(region.row_end(y));
  }
  return widths;
}

std::vector<int> lambda_of_path(const LatticePath& mu) {
  const Region region(mu);
  std::vector<int> lambda;
  for (int k = 1; k <= region.height(); ++k) lambda.push_back(region.row_end(region.height() - k));
  return lambda;
}

std::vector<int> lambda_from_recording(const LatticePath& nu, const Tableau& recording) {
  std::vector<int> lambda;
  for (int k = 1; k <= nu.north_count(); ++k) {
    const auto entries = recording.row(static_cast<std::size_t>(k) - 1);
    lambda.push_back(static_cast<int>(std::count(entries.begin(), entries.end(), k)));
  }
  return lambda;
}

namespace {

// Node and non-node counts of matrix row i (1-indexed from the top).
std::pair<int, int> row_split(const NuTree& tree, int i) {
  const Region& region = tree.region();
  const int y = region.height() - i + 1;
  int inside = 0;
  for (int x = 0; x <= region.row_end(y); ++x) inside += tree.contains({x, y}) ? 1 : 0;
  return {inside, region.row_end(y) + 1 - inside};
}

}  // namespace

std::vector<int> lambda_eg_formula(const NuTree& tree) {
  const int n = tree.nu().north_count();
  const auto lambda_nu = lambda_of_path(tree.nu());
  std::vector<int> out;
  int complement = 0;
  int above_nu = 0;
  for (int k = 1; k <= n; ++k) {
    complement += row_split(tree, k).second;
    if (k > 1) above_nu += lambda_nu[static_cast<std::size_t>(k) - 2];
    out.push_back(complement - above_nu);
  }
  return out;
}

std::vector<int> lambda_flush_formula(const NuTree& tree) {
  const int n = tree.nu().north_count();
  std::vector<int> out;
  for (int k = 1; k <= n; ++k) {
    int total = 0;
    for (int i = k + 1; i <= n + 1; ++i) total += row_split(tree, i).first - 1;
    out.push_back(total);
  }
  return out;
}

LatticePath eg_path(const NuTree& tree) {
  const LatticePath& nu = tree.nu();
  const int n = nu.north_count();
  const auto lambda = lambda_from_recording(nu, eg_pair(tree).recording);
  std::vector<int> ends;
  for (int y = 0; y < n; ++y) ends.push_back(lambda[static_cast<std::size_t>(n - y) - 1]);
  ends.push_back(nu.east_count());
  return path_from_row_ends(ends);
}

}  // namespace nutamari
