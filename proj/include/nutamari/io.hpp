#ifndef NUTAMARI_IO_HPP_
#define NUTAMARI_IO_HPP_

// JSON forms: path = "ENEEN", point = [x,y], tree = point list in stored
// order, bracket = integer array, facet = sorted position array,
// poset = {"nodes": [...], "covers": [[i,j], ...]}.

#include <string_view>

#include <json.hpp>

#include "nutamari/bracket.hpp"
#include "nutamari/lattice_path.hpp"
#include "nutamari/multi_tamari.hpp"
#include "nutamari/nu_tree.hpp"
#include "nutamari/pipe_dream.hpp"
#include "nutamari/poset.hpp"

namespace nutamari {

nlohmann::json to_json(const LatticePath& path);
nlohmann::json to_json(Point p);
nlohmann::json to_json(const NuTree& tree);
nlohmann::json to_json(const BracketVector& b);
nlohmann::json facet_to_json(const Facet& f);
nlohmann::json to_json(const Permutation& w);
nlohmann::json to_json(const FinitePoset& poset);
nlohmann::json to_json(const UndirectedGraph& graph);

// The parsers throw std::invalid_argument on malformed input or values that
// are not objects of the given nu.
std::vector<Point> points_from_json(std::string_view text);
NuTree tree_from_json(const LatticePath& nu, std::string_view text);
FinitePoset poset_from_json(std::string_view text);

}  // namespace nutamari

#endif  // NUTAMARI_IO_HPP_
