#include "nutamari/io.hpp"

#include <stdexcept>

namespace nutamari {

using nlohmann::json;

json to_json(const LatticePath& path) { return path.word(); }

json to_json(Point p) { return json::array({p.x, p.y}); }

json to_json(const NuTree& tree) {
  json out = json::array();
  for (const Point& p : tree.nodes()) out.push_back(to_json(p));
  return out;
}

json to_json(const BracketVector& b) { return b.entries; }

json facet_to_json(const Facet& f) { return f; }

json to_json(const Permutation& w) { return w.one_line(); }

json to_json(const FinitePoset& poset) {
  json covers = json::array();
  for (const auto& [lo, hi] : poset.covers()) covers.push_back(json::array({lo, hi}));
  return {{"nodes", poset.labels()}, {"covers", covers}};
}

json to_json(const UndirectedGraph& graph) {
  json edges = json::array();
  for (const auto& [a, b] : graph.edges) edges.push_back(json::array({a, b}));
  return {{"nodes", graph.labels}, {"edges", edges}};
}

namespace {

json parse_or_throw(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::vector<Point> points_from_json(std::string_view text) {
  const json doc = parse_or_throw(text);
  if (!doc.is_array()) throw std::invalid_argument("expected a JSON array of points");
  std::vector<Point> pts;
  for (const auto& item : doc) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer()) {
      throw std::invalid_argument("a point is a pair of integers [x,y]");
    }
    pts.push_back({item[0].get<int>(), item[1].get<int>()});
  }
  return pts;
}

NuTree tree_from_json(const LatticePath& nu, std::string_view text) {
  return NuTree(nu, points_from_json(text));
}

FinitePoset poset_from_json(std::string_view text) {
  const json doc = parse_or_throw(text);
  try {
    auto labels = doc.at("nodes").get<std::vector<std::string>>();
    std::vector<Relation> covers;
    for (const auto& c : doc.at("covers")) covers.emplace_back(c.at(0).get<std::size_t>(), c.at(1).get<std::size_t>());
    return FinitePoset(std::move(labels), covers);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed poset: ") + e.what());
  }
}

}  // namespace nutamari
