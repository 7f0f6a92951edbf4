#ifndef NUTAMARI_LATTICE_PATH_HPP_
#define NUTAMARI_LATTICE_PATH_HPP_

// Lattice paths over the alphabet {N, E}, the region of lattice points weakly
// above a path, and the nu-Tamari covering relation on nu-paths.
//
// Coordinates: a point (x, y) counts x east steps and y north steps from the
// start of the path. A path nu runs from (0, 0) to (m, n). Row y of the region
// A_nu is the interval [0, b_y], where b_y is the largest x such that (x, y)
// lies on nu. Since nu only moves north and east, b is non-decreasing in y.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace nutamari {

class FinitePoset;

enum class Step : char { kEast = 'E', kNorth = 'N' };

struct Point {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

// Orders points top row first, left to right within a row. This is the
// canonical order in which tree nodes are stored and printed.
struct RowMajorTopDown {
  bool operator()(const Point& a, const Point& b) const {
    return a.y != b.y ? a.y > b.y : a.x < b.x;
  }
};

class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps);

  // Throws std::invalid_argument on any character other than 'N' or 'E'.
  static LatticePath parse(std::string_view word);
  // N^n E^m, the highest path with the given endpoints.
  static LatticePath top(int east, int north);

  const std::vector<Step>& steps() const { return steps_; }
  std::string word() const;

  int east_count() const { return east_; }
  int north_count() const { return north_; }
  int length() const { return static_cast<int>(steps_.size()); }
  bool empty() const { return steps_.empty(); }

  // The length()+1 lattice points visited, in order.
  std::vector<Point> lattice_points() const;

  // Lexicographic on the word, with E < N.
  friend auto operator<=>(const LatticePath& a, const LatticePath& b) {
    return a.steps_ <=> b.steps_;
  }
  friend bool operator==(const LatticePath& a, const LatticePath& b) {
    return a.steps_ == b.steps_;
  }

 private:
  std::vector<Step> steps_;
  int east_ = 0;
  int north_ = 0;
};

LatticePath parse_path(std::string_view word);

// A_nu together with its row extents.
class Region {
 public:
  explicit Region(LatticePath nu);

  const LatticePath& nu() const { return nu_; }
  int width() const { return nu_.east_count(); }
  int height() const { return nu_.north_count(); }
  // b_y: the rightmost x of row y. Requires 0 <= y <= height().
  int row_end(int y) const { return row_end_.at(static_cast<std::size_t>(y)); }
  const std::vector<int>& row_ends() const { return row_end_; }

  bool contains(Point p) const;
  // All points, bottom row first, left to right.
  std::vector<Point> points() const;
  std::size_t size() const;

 private:
  LatticePath nu_;
  std::vector<int> row_end_;
};

Region points_weakly_above(const LatticePath& nu);

// Number of east steps that can be appended at p without leaving A_nu.
// Throws std::invalid_argument if p is not weakly above nu.
int horiz(const Region& region, Point p);
int horiz(const LatticePath& nu, Point p);

// True if mu has the endpoints of nu and never goes below it.
bool is_nu_path(const LatticePath& nu, const LatticePath& mu);

// All nu-paths, in lexicographic order (E < N).
std::vector<LatticePath> enumerate_nu_paths(const LatticePath& nu);

// Number of nu-paths, saturating at SIZE_MAX.
std::size_t count_nu_paths(const LatticePath& nu);

// The upper covers of mu in the nu-Tamari order, one per valley of mu, listed
// in the order the valleys occur along mu. Throws std::invalid_argument if mu
// is not a nu-path.
std::vector<LatticePath> tamari_upper_covers(const LatticePath& nu,
                                             const LatticePath& mu);

// Tam(nu): elements are nu-paths labelled by their words.
FinitePoset nu_tamari_poset(const LatticePath& nu);

// The path with counts[y] lattice points in row y (bottom row first). Each
// count must be at least 1. Throws std::invalid_argument otherwise.
LatticePath path_from_row_counts(const std::vector<int>& counts);
// The path whose rightmost point in row y has x = ends[y]. ends must be
// non-decreasing and non-negative; throws std::invalid_argument otherwise.
LatticePath path_from_row_ends(const std::vector<int>& ends);

// Reads nu backwards and swaps E with N. An involution.
LatticePath reverse_path(const LatticePath& nu);

// Every path of length at most max_length, shortest first, then
// lexicographically. Includes the empty path.
std::vector<LatticePath> all_paths_up_to(int max_length);

}  // namespace nutamari

#endif  // NUTAMARI_LATTICE_PATH_HPP_
