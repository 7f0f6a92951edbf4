#include <doctest.h>

#include "nutamari/bijections.hpp"
#include "nutamari/bracket.hpp"
#include "nutamari/io.hpp"
#include "nutamari/lattice_path.hpp"
#include "nutamari/nu_tree.hpp"
#include "nutamari/pipe_dream.hpp"
#include "nutamari/poset.hpp"

using namespace nutamari;

namespace {
const LatticePath kNu0 = parse_path("ENEEN");
const std::vector<Point> kT1{{0, 0}, {1, 0}, {2, 1}, {3, 1}, {0, 2}, {2, 2}};
}  // namespace

TEST_CASE("scalar encodings") {
  CHECK(to_json(kNu0) == "ENEEN");
  CHECK(to_json(Point{2, 1}).dump() == "[2,1]");
  CHECK(to_json(BracketVector{{0, 0, 2, 1, 1, 2}}).dump() == "[0,0,2,1,1,2]");
  CHECK(to_json(Permutation({2, 1})).dump() == "[2,1]");
  CHECK(facet_to_json({1, 2, 5}).dump() == "[1,2,5]");
}

TEST_CASE("trees round trip") {
  const NuTree t(kNu0, kT1);
  CHECK(to_json(t).dump() == tree_label(t));
  CHECK(tree_from_json(kNu0, to_json(t).dump()) == t);
  CHECK(points_from_json("[[0,0],[1,0]]") == std::vector<Point>{{0, 0}, {1, 0}});
  CHECK_THROWS_AS(points_from_json("[[0,0],[1]]"), std::invalid_argument);
  CHECK_THROWS_AS(points_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(tree_from_json(kNu0, "[[0,0]]"), std::invalid_argument);
}

TEST_CASE("posets round trip") {
  const auto p = rotation_poset(kNu0);
  const auto back = poset_from_json(to_json(p).dump());
  CHECK(back.labels() == p.labels());
  CHECK(back.covers() == p.covers());
  CHECK_THROWS_AS(poset_from_json("{\"nodes\":[\"a\"]}"), std::invalid_argument);
  CHECK_THROWS_AS(poset_from_json("[1,2]"), std::invalid_argument);
}
