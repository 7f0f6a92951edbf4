#include <doctest.h>

#include <set>
#include <stdexcept>

#include "nutamari/bijections.hpp"
#include "nutamari/bracket.hpp"
#include "nutamari/lattice_path.hpp"
#include "nutamari/poset.hpp"
#include "oracles.hpp"

using namespace nutamari;

namespace {

const LatticePath kNu0 = parse_path("ENEEN");
const LatticePath kNu9 = parse_path("EENNEENNE");
const std::vector<Point> kT1{{0, 0}, {1, 0}, {2, 1}, {3, 1}, {0, 2}, {2, 2}};

BracketVector bv(std::vector<int> e) { return BracketVector{std::move(e)}; }

// 121-avoidance by scanning all triples.
bool oracle_avoids_121(const std::vector<int>& e) {
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      for (std::size_t k = j + 1; k < e.size(); ++k)
        if (e[i] == e[k] && e[j] > e[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("fixed positions") {
  CHECK(fixed_positions(kNu0) == std::vector<int>{2, 5, 6});
  CHECK(fixed_positions(kNu9) == std::vector<int>{3, 4, 7, 8, 10});
  CHECK(fixed_positions(parse_path("NNN")) == std::vector<int>{1, 2, 3, 4});
  CHECK(min_bracket(kNu0) == bv({0, 0, 1, 1, 1, 2}));
}

TEST_CASE("brackets of trees") {
  const auto [tmin, tmax] = extreme_trees(kNu0);
  CHECK(bracket_of_tree(tmin) == bv({0, 0, 1, 1, 1, 2}));
  CHECK(bracket_of_tree(NuTree(kNu0, kT1)) == bv({0, 0, 2, 1, 1, 2}));
  CHECK(bracket_of_tree(tmax) == bv({2, 0, 2, 2, 1, 2}));
}

TEST_CASE("brackets of paths") {
  CHECK(bracket_of_path(kNu9, parse_path("ENNENEENE")) == bv({3, 0, 0, 1, 3, 2, 2, 3, 4, 4}));
  CHECK(bracket_of_path(kNu0, parse_path("ENENE")) == bv({0, 0, 2, 1, 1, 2}));
  CHECK(bracket_of_path(kNu0, kNu0) == min_bracket(kNu0));
}

TEST_CASE("validity") {
  CHECK(is_valid_bracket(kNu0, bv({0, 0, 2, 1, 1, 2})));
  CHECK(is_valid_bracket(kNu0, bv({1, 0, 1, 1, 1, 2})));
  CHECK_FALSE(is_valid_bracket(kNu0, bv({0, 0, 1, 2, 1, 2})));
  CHECK_FALSE(is_valid_bracket(kNu0, bv({0, 0, 1, 1, 2})));
  CHECK_FALSE(avoids_121(bv({0, 0, 1, 2, 1, 2})));
}

TEST_CASE("the two forms of the pattern condition agree on every candidate") {
  for (const auto& w : oracle::words_up_to(7)) {
    const auto nu = parse_path(w);
    for (const auto& b : enumerate_bracket_candidates(nu)) {
      CHECK(avoids_121(b) == oracle_avoids_121(b.entries));
      CHECK(avoids_121(b) == satisfies_bounded_descent(nu, b));
      CHECK_NOTHROW(is_valid_bracket(nu, b));
    }
  }
}

TEST_CASE("valid vectors are exactly the tree brackets") {
  for (const auto& w : oracle::words_up_to(7)) {
    const auto nu = parse_path(w);
    std::set<BracketVector> from_trees;
    for (const auto& t : enumerate_nu_trees_bruteforce(nu)) from_trees.insert(bracket_of_tree(t));
    const auto valid = enumerate_brackets(nu);
    CHECK(std::set<BracketVector>(valid.begin(), valid.end()) == from_trees);
    for (const auto& mu : enumerate_nu_paths(nu)) {
      const auto b = bracket_of_path(nu, mu);
      CHECK(b == bracket_of_tree(right_flush(nu, mu)));
      CHECK(path_of_bracket(nu, b) == mu);
    }
  }
}

TEST_CASE("path of bracket") {
  CHECK(path_of_bracket(kNu0, bv({0, 0, 2, 1, 1, 2})).word() == "ENENE");
  CHECK(path_of_bracket(kNu0, min_bracket(kNu0)) == kNu0);
  CHECK(path_of_bracket(kNu0, bv({2, 0, 2, 2, 1, 2})).word() == "NNEEE");
  CHECK_THROWS_AS(path_of_bracket(kNu0, bv({0, 0, 1, 2, 1, 2})), std::invalid_argument);
}

TEST_CASE("meet and join examples") {
  const auto b = bv({3, 0, 0, 1, 3, 2, 2, 3, 4, 4});
  const auto b2 = bv({1, 1, 0, 1, 4, 3, 2, 3, 4, 4});
  REQUIRE(is_valid_bracket(kNu9, b));
  REQUIRE(is_valid_bracket(kNu9, b2));
  CHECK(bracket_meet(b, b2) == bv({1, 0, 0, 1, 3, 2, 2, 3, 4, 4}));
  CHECK(bracket_meet(reflect_bracket(kNu9, b), reflect_bracket(kNu9, b2)) == bv({0, 2, 1, 1, 2, 4, 3, 3, 4, 5}));
  const auto j = bracket_join(kNu9, b, b2);
  CHECK(j == reflect_bracket(reverse_path(kNu9), bv({0, 2, 1, 1, 2, 4, 3, 3, 4, 5})));
  CHECK(is_valid_bracket(kNu9, j));

  CHECK(bracket_meet(b, b) == b);
  CHECK(bracket_meet(b, min_bracket(kNu9)) == min_bracket(kNu9));
  CHECK(bracket_join(kNu9, b, b) == b);
  const auto top = bracket_of_tree(extreme_trees(kNu9).second);
  CHECK(bracket_join(kNu9, b, top) == top);
  CHECK_THROWS_AS(bracket_meet(b, bv({0})), std::invalid_argument);
}

TEST_CASE("meet and join agree with the Hasse diagram") {
  for (const auto& w : oracle::words_up_to(6)) {
    const auto nu = parse_path(w);
    const auto poset = bracket_poset(nu);
    const oracle::Order order(poset.size(), poset.covers());
    std::vector<BracketVector> elems;
    for (const auto& l : poset.labels()) elems.push_back(parse_bracket(l));
    for (std::size_t a = 0; a < poset.size(); ++a) {
      for (std::size_t c = 0; c < poset.size(); ++c) {
        CHECK(bracket_label(bracket_meet(elems[a], elems[c])) == poset.label(static_cast<std::size_t>(order.meet(a, c))));
        CHECK(bracket_label(bracket_join(nu, elems[a], elems[c])) ==
              poset.label(static_cast<std::size_t>(order.join(a, c))));
      }
    }
  }
}

TEST_CASE("rotation by first occurrence") {
  const auto bmin = min_bracket(kNu0);
  CHECK(bracket_rotate_first(kNu0, bmin, 0) == bv({1, 0, 1, 1, 1, 2}));
  CHECK(bracket_rotate_first(kNu0, bmin, 1) == bv({0, 0, 2, 1, 1, 2}));
  CHECK_THROWS_AS(bracket_rotate_first(kNu0, bv({2, 0, 2, 2, 1, 2}), 2), std::invalid_argument);
}

TEST_CASE("classical case counts") {
  for (int n = 1; n <= 5; ++n) {
    std::string w;
    for (int i = 0; i < n; ++i) w += "NE";
    CHECK(enumerate_brackets(parse_path(w)).size() == oracle::catalan(n));
  }
}

TEST_CASE("labels") {
  CHECK(bracket_label(bv({0, 0, 2, 1, 1, 2})) == "002112");
  CHECK(bracket_label(bv({0, 10, 10})) == "0,10,10");
  CHECK(parse_bracket("002112") == bv({0, 0, 2, 1, 1, 2}));
  CHECK(parse_bracket("[0, 10, 10]") == bv({0, 10, 10}));
  CHECK_THROWS_AS(parse_bracket("0a"), std::invalid_argument);
  CHECK(bracket_poset(kNu0).size() == 7);
}
