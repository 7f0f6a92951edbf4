#include "nutamari/pipe_dream.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "nutamari/poset.hpp"

namespace nutamari {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  std::vector<bool> seen(one_line_.size() + 1, false);
  for (int v : one_line_) {
    if (v < 1 || static_cast<std::size_t>(v) > one_line_.size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation in one-line notation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::size_t size) {
  std::vector<int> w(size);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

int Permutation::length() const {
  int inversions = 0;
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    for (std::size_t j = i + 1; j < one_line_.size(); ++j) {
      if (one_line_[i] > one_line_[j]) ++inversions;
    }
  }
  return inversions;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(one_line_.size());
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    inv[static_cast<std::size_t>(one_line_[i]) - 1] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(inv));
}

Permutation Permutation::times_simple(int i) const {
  if (i < 1 || static_cast<std::size_t>(i) >= one_line_.size()) {
    throw std::out_of_range("s_" + std::to_string(i) + " outside S_" + std::to_string(size()));
  }
  Permutation out = *this;
  std::swap(out.one_line_[static_cast<std::size_t>(i) - 1], out.one_line_[static_cast<std::size_t>(i)]);
  return out;
}

Permutation Permutation::simple_times(int i) const {
  if (i < 1 || static_cast<std::size_t>(i) >= one_line_.size()) {
    throw std::out_of_range("s_" + std::to_string(i) + " outside S_" + std::to_string(size()));
  }
  Permutation out = *this;
  for (int& v : out.one_line_) {
    if (v == i) {
      v = i + 1;
    } else if (v == i + 1) {
      v = i;
    }
  }
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < one_line_.size(); ++i) os << (i ? "," : "") << one_line_[i];
  os << ']';
  return os.str();
}

Permutation product(const TranspositionWord& word, std::size_t size) {
  Permutation w = Permutation::identity(size);
  for (int s : word) w = w.times_simple(s);
  return w;
}

MatrixCell to_matrix_cell(const LatticePath& nu, Point p) {
  return {nu.north_count() - p.y + 1, p.x + 1};
}

Point from_matrix_cell(const LatticePath& nu, MatrixCell c) {
  return {c.col - 1, nu.north_count() - c.row + 1};
}

PipeDream::PipeDream(std::size_t size, const std::vector<MatrixCell>& crosses)
    : size_(size), crosses_(crosses), grid_(size + 2, std::vector<bool>(size + 2, false)) {
  std::sort(crosses_.begin(), crosses_.end());
  crosses_.erase(std::unique(crosses_.begin(), crosses_.end()), crosses_.end());
  for (const MatrixCell& c : crosses_) {
    if (c.row < 1 || c.col < 1 || static_cast<std::size_t>(c.row + c.col) > size_) {
      throw std::invalid_argument("cross (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                                  ") outside the staircase");
    }
    grid_[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)] = true;
  }
}

bool PipeDream::is_cross(int row, int col) const {
  if (row < 1 || col < 1 || static_cast<std::size_t>(row + col) > size_) return false;
  return grid_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
}

std::string PipeDream::render_ascii() const {
  std::string out;
  for (int i = 1; static_cast<std::size_t>(i) < size_; ++i) {
    for (int j = 1; static_cast<std::size_t>(i + j) <= size_; ++j) out.push_back(is_cross(i, j) ? '+' : '%');
    out.push_back('\n');
  }
  return out;
}

std::size_t pipe_dream_size(const LatticePath& nu) {
  const Region region(nu);
  int d_max = 0;
  for (int y = 0; y <= region.height(); ++y) d_max = std::max(d_max, region.row_end(y) + region.height() - y);
  return static_cast<std::size_t>(d_max) + 2;
}

PipeDream pipedream_of_tree(const NuTree& tree) {
  std::vector<MatrixCell> crosses;
  for (const Point& p : tree.region().points()) {
    if (!tree.contains(p)) crosses.push_back(to_matrix_cell(tree.nu(), p));
  }
  return PipeDream(pipe_dream_size(tree.nu()), crosses);
}

namespace {

struct CrossVisit {
  MatrixCell cell;
  int pipe;
  bool horizontal;
};

// Follows every pipe; returns the exit column of each pipe (1-indexed by
// pipe) and every pass through a cross.
std::vector<int> follow_pipes(const PipeDream& dream, std::vector<CrossVisit>* visits) {
  const int n = static_cast<int>(dream.size());
  std::vector<int> exit_column(static_cast<std::size_t>(n) + 1, 0);
  for (int pipe = 1; pipe <= n; ++pipe) {
    int r = pipe;
    int c = 1;
    bool from_west = true;
    while (r >= 1) {
      if (dream.is_cross(r, c)) {
        if (visits) visits->push_back({{r, c}, pipe, from_west});
        if (from_west) {
          ++c;
        } else {
          --r;
        }
      } else if (from_west) {
        --r;
        from_west = false;
      } else {
        ++c;
        from_west = true;
      }
    }
    exit_column[static_cast<std::size_t>(pipe)] = c;
  }
  return exit_column;
}

}  // namespace

Permutation trace_permutation(const PipeDream& dream) {
  const auto exit_column = follow_pipes(dream, nullptr);
  std::vector<int> top(dream.size(), 0);
  for (std::size_t pipe = 1; pipe < exit_column.size(); ++pipe) {
    const int c = exit_column[pipe];
    if (c < 1 || static_cast<std::size_t>(c) > dream.size() || top[static_cast<std::size_t>(c) - 1]) {
      throw std::logic_error("pipe tracing is not a bijection");
    }
    top[static_cast<std::size_t>(c) - 1] = static_cast<int>(pipe);
  }
  return Permutation(std::move(top));
}

bool is_reduced(const PipeDream& dream) {
  std::vector<CrossVisit> visits;
  follow_pipes(dream, &visits);
  std::map<MatrixCell, std::pair<int, int>> at_cross;  // (horizontal, vertical)
  for (const auto& v : visits) {
    auto& slot = at_cross[v.cell];
    (v.horizontal ? slot.first : slot.second) = v.pipe;
  }
  std::map<std::pair<int, int>, int> meetings;
  for (const auto& [cell, pipes] : at_cross) {
    const auto key = std::minmax(pipes.first, pipes.second);
    if (++meetings[key] > 1) return false;
  }
  return true;
}

std::vector<Point> q_word_points(const LatticePath& nu) { return Region(nu).points(); }

TranspositionWord q_word(const LatticePath& nu) {
  TranspositionWord q;
  for (const Point& p : q_word_points(nu)) {
    const MatrixCell c = to_matrix_cell(nu, p);
    q.push_back(c.row + c.col - 1);
  }
  return q;
}

Permutation pi_nu(const LatticePath& nu) {
  return trace_permutation(pipedream_of_tree(extreme_trees(nu).first));
}

std::vector<MatrixCell> rothe_diagram(const Permutation& w) {
  std::vector<MatrixCell> cells;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    for (std::size_t j = i + 1; j <= w.size(); ++j) {
      if (w(i) > w(j)) cells.push_back({w(j), static_cast<int>(i)});
    }
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

bool is_dominant(const Permutation& w) {
  const auto cells = rothe_diagram(w);
  auto has = [&](MatrixCell c) { return std::binary_search(cells.begin(), cells.end(), c); };
  return std::all_of(cells.begin(), cells.end(), [&](const MatrixCell& c) {
    return (c.row == 1 || has({c.row - 1, c.col})) && (c.col == 1 || has({c.row, c.col - 1}));
  });
}

bool avoids_132(const Permutation& w) {
  const auto& a = w.one_line();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[j] <= a[i]) continue;
      for (std::size_t k = j + 1; k < a.size(); ++k) {
        if (a[i] < a[k] && a[k] < a[j]) return false;
      }
    }
  }
  return true;
}

Permutation direct_sum(const Permutation& u, const Permutation& v) {
  std::vector<int> w = u.one_line();
  for (int x : v.one_line()) w.push_back(x + static_cast<int>(u.size()));
  return Permutation(std::move(w));
}

namespace {

void search_facets(const TranspositionWord& q, std::size_t pos, const Permutation& remaining,
                   int remaining_length, Facet& skipped, std::vector<Facet>& out) {
  if (remaining_length == 0) {
    Facet f = skipped;
    for (std::size_t p = pos; p < q.size(); ++p) f.push_back(static_cast<int>(p) + 1);
    out.push_back(std::move(f));
    return;
  }
  if (q.size() - pos < static_cast<std::size_t>(remaining_length)) return;
  const int s = q[pos];
  // Using s_s keeps the word reduced iff s_s is a left descent of what remains.
  const auto& line = remaining.one_line();
  const auto at_s = std::find(line.begin(), line.end(), s);
  const auto at_next = std::find(line.begin(), line.end(), s + 1);
  if (at_next < at_s) {
    search_facets(q, pos + 1, remaining.simple_times(s), remaining_length - 1, skipped, out);
  }
  skipped.push_back(static_cast<int>(pos) + 1);
  search_facets(q, pos + 1, remaining, remaining_length, skipped, out);
  skipped.pop_back();
}

}  // namespace

std::vector<Facet> subword_facets(const TranspositionWord& q, const Permutation& pi) {
  for (int s : q) {
    if (s < 1 || static_cast<std::size_t>(s) >= pi.size()) {
      throw std::invalid_argument("letter s_" + std::to_string(s) + " outside S_" + std::to_string(pi.size()));
    }
  }
  std::vector<Facet> out;
  Facet skipped;
  search_facets(q, 0, pi, pi.length(), skipped, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> facet_adjacency(const std::vector<Facet>& facets) {
  // Two facets of equal size are adjacent iff they share all but one element.
  std::map<Facet, std::vector<std::size_t>> by_ridge;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t drop = 0; drop < facets[i].size(); ++drop) {
      Facet ridge = facets[i];
      ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(drop));
      by_ridge[ridge].push_back(i);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [ridge, members] : by_ridge) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        edges.emplace_back(std::min(members[a], members[b]), std::max(members[a], members[b]));
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

FinitePoset increasing_flip_poset(const TranspositionWord& q, const Permutation& pi) {
  const auto facets = subword_facets(q, pi);
  std::vector<std::string> labels;
  labels.reserve(facets.size());
  for (const auto& f : facets) labels.push_back(facet_label(f));
  std::vector<Relation> relations;
  for (const auto& [a, b] : facet_adjacency(facets)) {
    std::vector<int> only_a, only_b;
    std::set_difference(facets[a].begin(), facets[a].end(), facets[b].begin(), facets[b].end(),
                        std::back_inserter(only_a));
    std::set_difference(facets[b].begin(), facets[b].end(), facets[a].begin(), facets[a].end(),
                        std::back_inserter(only_b));
    if (only_a.front() < only_b.front()) {
      relations.emplace_back(a, b);
    } else {
      relations.emplace_back(b, a);
    }
  }
  return FinitePoset(std::move(labels), relations);
}

std::string facet_label(const Facet& f) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  os << ']';
  return os.str();
}

Facet parse_facet(std::string_view text) {
  Facet f;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) return;
    f.push_back(std::stoi(token));
    token.clear();
  };
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      token.push_back(c);
    } else if (c == ',' || c == ' ' || c == '[' || c == ']' || c == '{' || c == '}') {
      flush();
    } else {
      throw std::invalid_argument("unexpected character '" + std::string(1, c) + "' in facet");
    }
  }
  flush();
  std::sort(f.begin(), f.end());
  return f;
}

Facet facet_of_tree(const NuTree& tree) {
  Facet f;
  const auto pts = q_word_points(tree.nu());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (tree.contains(pts[i])) f.push_back(static_cast<int>(i) + 1);
  }
  return f;
}

NuTree tree_of_facet(const LatticePath& nu, const Facet& facet) {
  const auto pts = q_word_points(nu);
  std::vector<Point> nodes;
  for (int pos : facet) {
    if (pos < 1 || static_cast<std::size_t>(pos) > pts.size()) {
      throw std::invalid_argument("facet position " + std::to_string(pos) + " out of range");
    }
    nodes.push_back(pts[static_cast<std::size_t>(pos) - 1]);
  }
  return NuTree(nu, std::move(nodes));
}

}  // namespace nutamari
