#include "nutamari/multi_tamari.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "nutamari/nu_tree.hpp"
#include "nutamari/pipe_dream.hpp"

namespace nutamari {

namespace {

using Matrix = std::vector<std::vector<bool>>;

Matrix incompatibility(const Region& region, const std::vector<Point>& pts) {
  Matrix adj(pts.size(), std::vector<bool>(pts.size(), false));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) adj[i][j] = incompatible(region, pts[i], pts[j]);
  }
  return adj;
}

// Is there a clique of the given size inside `pool`?
bool has_clique(const Matrix& adj, const std::vector<std::size_t>& pool, int size) {
  if (size <= 0) return true;
  if (static_cast<int>(pool.size()) < size) return false;
  for (std::size_t a = 0; a < pool.size(); ++a) {
    std::vector<std::size_t> rest;
    for (std::size_t b = a + 1; b < pool.size(); ++b) {
      if (adj[pool[a]][pool[b]]) rest.push_back(pool[b]);
    }
    if (has_clique(adj, rest, size - 1)) return true;
  }
  return false;
}

// Would adding v to `chosen` create a (k+1)-clique?
bool closes_clique(const Matrix& adj, const std::vector<std::size_t>& chosen, std::size_t v, int k) {
  std::vector<std::size_t> neighbours;
  for (std::size_t u : chosen) {
    if (adj[v][u]) neighbours.push_back(u);
  }
  return has_clique(adj, neighbours, k);
}

void require_positive(int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
}

PointSet sorted_points(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), RowMajorTopDown{});
  return pts;
}

}  // namespace

bool is_face(const LatticePath& nu, int k, const PointSet& s) {
  require_positive(k);
  const Region region(nu);
  const Matrix adj = incompatibility(region, s);
  std::vector<std::size_t> all(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) all[i] = i;
  return !has_clique(adj, all, k + 1);
}

PointSet clique_points(const LatticePath& nu, int k) {
  require_positive(k);
  const Region region(nu);
  const auto pts = region.points();
  const Matrix adj = incompatibility(region, pts);
  PointSet out;
  for (std::size_t v = 0; v < pts.size(); ++v) {
    std::vector<std::size_t> neighbours;
    for (std::size_t u = 0; u < pts.size(); ++u) {
      if (adj[v][u]) neighbours.push_back(u);
    }
    if (has_clique(adj, neighbours, k)) out.push_back(pts[v]);
  }
  return sorted_points(std::move(out));
}

std::vector<PointSet> enumerate_k_trees(const LatticePath& nu, int k) {
  require_positive(k);
  const Region region(nu);
  const auto pts = region.points();
  const Matrix adj = incompatibility(region, pts);
  const PointSet contested = clique_points(nu, k);

  std::vector<std::size_t> forced, free;
  for (std::size_t v = 0; v < pts.size(); ++v) {
    const bool in_clique = std::binary_search(contested.begin(), contested.end(), pts[v], RowMajorTopDown{});
    (in_clique ? free : forced).push_back(v);
  }

  std::vector<PointSet> out;
  std::vector<std::size_t> chosen;  // free points taken so far
  std::vector<std::size_t> skipped;
  std::function<void(std::size_t)> branch = [&](std::size_t at) {
    if (at == free.size()) {
      for (std::size_t v : skipped) {
        if (!closes_clique(adj, chosen, v, k)) return;
      }
      std::vector<Point> facet;
      for (std::size_t v : forced) facet.push_back(pts[v]);
      for (std::size_t v : chosen) facet.push_back(pts[v]);
      out.push_back(sorted_points(std::move(facet)));
      return;
    }
    const std::size_t v = free[at];
    if (!closes_clique(adj, chosen, v, k)) {
      chosen.push_back(v);
      branch(at + 1);
      chosen.pop_back();
    }
    skipped.push_back(v);
    branch(at + 1);
    skipped.pop_back();
  };
  branch(0);
  std::sort(out.begin(), out.end(), [](const PointSet& a, const PointSet& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), RowMajorTopDown{});
  });
  return out;
}

PointSet irrelevant_nodes(const LatticePath& nu, int k) {
  const auto facets = enumerate_k_trees(nu, k);
  if (facets.empty()) return {};
  std::set<Point> common(facets.front().begin(), facets.front().end());
  for (const auto& f : facets) {
    std::set<Point> here(f.begin(), f.end());
    std::erase_if(common, [&](const Point& p) { return !here.count(p); });
  }
  return sorted_points({common.begin(), common.end()});
}

int max_incompatible_clique(const LatticePath& nu) {
  const Region region(nu);
  const auto pts = region.points();
  const Matrix adj = incompatibility(region, pts);
  std::vector<std::size_t> all(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) all[i] = i;
  int size = 1;
  while (has_clique(adj, all, size + 1)) ++size;
  return size;
}

std::vector<std::vector<bool>> UndirectedGraph::adjacency() const {
  std::vector<std::vector<bool>> adj(labels.size(), std::vector<bool>(labels.size(), false));
  for (const auto& [a, b] : edges) adj[a][b] = adj[b][a] = true;
  return adj;
}

namespace {

UndirectedGraph graph_of_facets(const std::vector<Facet>& facets, std::vector<std::string> labels) {
  UndirectedGraph g;
  g.labels = std::move(labels);
  g.edges = facet_adjacency(facets);
  return g;
}

}  // namespace

UndirectedGraph flip_graph(const LatticePath& nu, int k) {
  const auto trees = enumerate_k_trees(nu, k);
  const auto order = Region(nu).points();
  std::vector<Facet> facets;
  std::vector<std::string> labels;
  for (const auto& t : trees) {
    Facet f;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (std::binary_search(t.begin(), t.end(), order[i], RowMajorTopDown{})) f.push_back(static_cast<int>(i) + 1);
    }
    facets.push_back(std::move(f));
    std::string label = "[";
    for (std::size_t i = 0; i < t.size(); ++i) {
      label += (i ? ",[" : "[") + std::to_string(t[i].x) + "," + std::to_string(t[i].y) + "]";
    }
    labels.push_back(label + "]");
  }
  return graph_of_facets(facets, std::move(labels));
}

UndirectedGraph fuss_subword_graph(int m, int k) {
  if (k < 1 || m < k) throw std::invalid_argument("need 1 <= k <= m");
  TranspositionWord block;
  for (int s = k + 1; s <= m + 1; ++s) block.push_back(s);
  TranspositionWord q;
  for (int rep = 0; rep <= k; ++rep) q.insert(q.end(), block.begin(), block.end());
  const Permutation pi = product(block, static_cast<std::size_t>(m) + 2);
  const auto facets = subword_facets(q, pi);
  std::vector<std::string> labels;
  for (const auto& f : facets) labels.push_back(facet_label(f));
  return graph_of_facets(facets, std::move(labels));
}

bool graphs_isomorphic(const UndirectedGraph& g, const UndirectedGraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edges.size() != h.edges.size()) return false;
  const auto ag = g.adjacency();
  const auto ah = h.adjacency();
  const std::size_t n = ag.size();
  // Refine both graphs with one shared palette, in lock step, so equal
  // colours mean equal refinement histories.
  std::map<std::vector<int>, int> palette;
  std::vector<int> cg(n), ch(n);
  for (std::size_t v = 0; v < n; ++v) {
    cg[v] = static_cast<int>(std::count(ag[v].begin(), ag[v].end(), true));
    ch[v] = static_cast<int>(std::count(ah[v].begin(), ah[v].end(), true));
  }
  for (std::size_t round = 0; round <= n; ++round) {
    auto step = [&](const std::vector<std::vector<bool>>& adj, const std::vector<int>& colour) {
      std::vector<int> next(n);
      for (std::size_t v = 0; v < n; ++v) {
        std::vector<int> signature;
        for (std::size_t u = 0; u < n; ++u) {
          if (adj[v][u]) signature.push_back(colour[u]);
        }
        std::sort(signature.begin(), signature.end());
        signature.insert(signature.begin(), colour[v]);
        next[v] = palette.emplace(signature, static_cast<int>(palette.size())).first->second;
      }
      return next;
    };
    auto ng = step(ag, cg);
    auto nh = step(ah, ch);
    const bool stable = (ng == cg) && (nh == ch);
    cg = std::move(ng);
    ch = std::move(nh);
    if (stable) break;
  }
  auto sorted_g = cg, sorted_h = ch;
  std::sort(sorted_g.begin(), sorted_g.end());
  std::sort(sorted_h.begin(), sorted_h.end());
  if (sorted_g != sorted_h) return false;

  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t v) {
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || ch[w] != cg[v]) continue;
      bool consistent = true;
      for (std::size_t u = 0; u < v && consistent; ++u) {
        consistent = ag[v][u] == ah[w][static_cast<std::size_t>(map[u])];
      }
      if (!consistent) continue;
      map[v] = static_cast<int>(w);
      used[w] = true;
      if (extend(v + 1)) return true;
      used[w] = false;
    }
    map[v] = -1;
    return false;
  };
  return extend(0);
}

}  // namespace nutamari
