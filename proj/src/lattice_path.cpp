#include "nutamari/lattice_path.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>

#include "nutamari/poset.hpp"

namespace nutamari {

LatticePath::LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {
  for (Step s : steps_) {
    if (s == Step::kEast) {
      ++east_;
    } else {
      ++north_;
    }
  }
}

LatticePath LatticePath::parse(std::string_view word) {
  std::vector<Step> steps;
  steps.reserve(word.size());
  for (char c : word) {
    switch (c) {
      case 'E':
        steps.push_back(Step::kEast);
        break;
      case 'N':
        steps.push_back(Step::kNorth);
        break;
      default:
        throw std::invalid_argument("lattice path may only contain 'N' and 'E', got '" +
                                    std::string(1, c) + "'");
    }
  }
  return LatticePath(std::move(steps));
}

LatticePath LatticePath::top(int east, int north) {
  std::vector<Step> steps(static_cast<std::size_t>(north), Step::kNorth);
  steps.insert(steps.end(), static_cast<std::size_t>(east), Step::kEast);
  return LatticePath(std::move(steps));
}

std::string LatticePath::word() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(static_cast<char>(s));
  return out;
}

std::vector<Point> LatticePath::lattice_points() const {
  std::vector<Point> pts;
  pts.reserve(steps_.size() + 1);
  Point p;
  pts.push_back(p);
  for (Step s : steps_) {
    if (s == Step::kEast) {
      ++p.x;
    } else {
      ++p.y;
    }
    pts.push_back(p);
  }
  return pts;
}

LatticePath parse_path(std::string_view word) { return LatticePath::parse(word); }

Region::Region(LatticePath nu) : nu_(std::move(nu)) {
  row_end_.assign(static_cast<std::size_t>(nu_.north_count()) + 1, 0);
  for (const Point& p : nu_.lattice_points()) {
    auto& end = row_end_[static_cast<std::size_t>(p.y)];
    end = std::max(end, p.x);
  }
}

bool Region::contains(Point p) const {
  return p.x >= 0 && p.y >= 0 && p.y <= height() && p.x <= row_end(p.y);
}

std::vector<Point> Region::points() const {
  std::vector<Point> pts;
  pts.reserve(size());
  for (int y = 0; y <= height(); ++y) {
    for (int x = 0; x <= row_end(y); ++x) pts.push_back({x, y});
  }
  return pts;
}

std::size_t Region::size() const {
  std::size_t total = 0;
  for (int end : row_end_) total += static_cast<std::size_t>(end) + 1;
  return total;
}

Region points_weakly_above(const LatticePath& nu) { return Region(nu); }

int horiz(const Region& region, Point p) {
  if (!region.contains(p)) {
    throw std::invalid_argument("point (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                                ") is not weakly above " + region.nu().word());
  }
  return region.row_end(p.y) - p.x;
}

int horiz(const LatticePath& nu, Point p) { return horiz(Region(nu), p); }

bool is_nu_path(const LatticePath& nu, const LatticePath& mu) {
  if (mu.east_count() != nu.east_count() || mu.north_count() != nu.north_count()) {
    return false;
  }
  const Region region(nu);
  const auto pts = mu.lattice_points();
  return std::all_of(pts.begin(), pts.end(), [&](Point p) { return region.contains(p); });
}

namespace {

void extend_paths(const Region& region, std::vector<Step>& prefix, Point at,
                  std::vector<LatticePath>& out) {
  const int m = region.width();
  const int n = region.height();
  if (at.x == m && at.y == n) {
    out.emplace_back(prefix);
    return;
  }
  if (at.x < m && region.contains({at.x + 1, at.y})) {
    prefix.push_back(Step::kEast);
    extend_paths(region, prefix, {at.x + 1, at.y}, out);
    prefix.pop_back();
  }
  if (at.y < n) {
    prefix.push_back(Step::kNorth);
    extend_paths(region, prefix, {at.x, at.y + 1}, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<LatticePath> enumerate_nu_paths(const LatticePath& nu) {
  const Region region(nu);
  std::vector<LatticePath> out;
  std::vector<Step> prefix;
  prefix.reserve(static_cast<std::size_t>(nu.length()));
  extend_paths(region, prefix, {0, 0}, out);
  return out;
}

std::size_t count_nu_paths(const LatticePath& nu) {
  const Region region(nu);
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  // ways[x] for the current row
  std::vector<std::size_t> ways(static_cast<std::size_t>(region.width()) + 1, 0);
  ways[0] = 1;
  for (int y = 0; y <= region.height(); ++y) {
    for (int x = 0; x <= region.width(); ++x) {
      auto& w = ways[static_cast<std::size_t>(x)];
      if (x > region.row_end(y)) {
        w = 0;
        continue;
      }
      if (x > 0) {
        const auto left = ways[static_cast<std::size_t>(x) - 1];
        w = (w > kMax - left) ? kMax : w + left;
      }
    }
  }
  return ways.back();
}

std::vector<LatticePath> tamari_upper_covers(const LatticePath& nu, const LatticePath& mu) {
  if (!is_nu_path(nu, mu)) {
    throw std::invalid_argument(mu.word() + " is not a " +
                                (nu.empty() ? std::string("empty") : nu.word()) + "-path");
  }
  const Region region(nu);
  const auto& steps = mu.steps();
  const auto pts = mu.lattice_points();
  std::vector<LatticePath> covers;
  // Point index i is a valley when step i-1 is E and step i is N.
  for (std::size_t i = 1; i < steps.size(); ++i) {
    if (steps[i - 1] != Step::kEast || steps[i] != Step::kNorth) continue;
    const int h = horiz(region, pts[i]);
    std::size_t j = i + 1;
    while (horiz(region, pts[j]) != h) ++j;
    // Move the east step i-1 to just after the segment [i, j).
    std::vector<Step> next(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(i) - 1);
    next.insert(next.end(), steps.begin() + static_cast<std::ptrdiff_t>(i),
                steps.begin() + static_cast<std::ptrdiff_t>(j));
    next.push_back(Step::kEast);
    next.insert(next.end(), steps.begin() + static_cast<std::ptrdiff_t>(j), steps.end());
    covers.emplace_back(std::move(next));
  }
  return covers;
}

FinitePoset nu_tamari_poset(const LatticePath& nu) {
  const auto paths = enumerate_nu_paths(nu);
  std::map<LatticePath, std::size_t> index;
  std::vector<std::string> labels;
  labels.reserve(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    index.emplace(paths[i], i);
    labels.push_back(paths[i].word());
  }
  std::vector<std::pair<std::size_t, std::size_t>> relations;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (const auto& up : tamari_upper_covers(nu, paths[i])) {
      relations.emplace_back(i, index.at(up));
    }
  }
  return FinitePoset(std::move(labels), relations);
}

LatticePath path_from_row_counts(const std::vector<int>& counts) {
  std::vector<int> ends;
  ends.reserve(counts.size());
  int x = 0;
  for (int c : counts) {
    if (c < 1) throw std::invalid_argument("every row of a path holds at least one point");
    x += c - 1;
    ends.push_back(x);
  }
  return path_from_row_ends(ends);
}

LatticePath path_from_row_ends(const std::vector<int>& ends) {
  std::vector<Step> steps;
  int x = 0;
  for (std::size_t y = 0; y < ends.size(); ++y) {
    if (ends[y] < x) throw std::invalid_argument("row ends must be non-decreasing");
    steps.insert(steps.end(), static_cast<std::size_t>(ends[y] - x), Step::kEast);
    x = ends[y];
    if (y + 1 < ends.size()) steps.push_back(Step::kNorth);
  }
  return LatticePath(std::move(steps));
}

LatticePath reverse_path(const LatticePath& nu) {
  std::vector<Step> steps(nu.steps().rbegin(), nu.steps().rend());
  for (Step& s : steps) s = (s == Step::kEast) ? Step::kNorth : Step::kEast;
  return LatticePath(std::move(steps));
}

std::vector<LatticePath> all_paths_up_to(int max_length) {
  std::vector<LatticePath> out;
  for (int len = 0; len <= max_length; ++len) {
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      std::vector<Step> steps;
      for (int i = len - 1; i >= 0; --i) {
        steps.push_back(((bits >> i) & 1u) ? Step::kNorth : Step::kEast);
      }
      out.emplace_back(std::move(steps));
    }
  }
  return out;
}

}  // namespace nutamari
