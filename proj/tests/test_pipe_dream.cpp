#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nutamari/bijections.hpp"
#include "nutamari/io.hpp"
#include "nutamari/lattice_path.hpp"
#include "nutamari/nu_tree.hpp"
#include "nutamari/pipe_dream.hpp"
#include "nutamari/poset.hpp"
#include "oracles.hpp"

using namespace nutamari;

namespace {

const LatticePath kNu0 = parse_path("ENEEN");

std::vector<int> facet_of_tree_oracle(const LatticePath& nu, const NuTree& tree) {
  std::vector<int> out;
  const auto pts = q_word_points(nu);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (tree.contains(pts[i])) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

}  // namespace

TEST_CASE("permutations") {
  const Permutation w({3, 1, 2});
  CHECK(w.length() == 2);
  CHECK(w.inverse() == Permutation({2, 3, 1}));
  CHECK(w.times_simple(1) == Permutation({1, 3, 2}));
  CHECK(w.simple_times(1) == Permutation({3, 2, 1}));
  CHECK(w.to_string() == "[3,1,2]");
  CHECK(Permutation::identity(3).length() == 0);
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
}

TEST_CASE("word products agree with composition of maps") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int size = 2 + static_cast<int>(rng() % 5);
    std::vector<int> word(rng() % 9);
    for (int& s : word) s = 1 + static_cast<int>(rng() % static_cast<unsigned>(size - 1));
    CHECK(product(word, static_cast<std::size_t>(size)).one_line() == oracle::word_product(word, size));
  }
}

TEST_CASE("the permutation and word of nu") {
  CHECK(pi_nu(kNu0) == Permutation({1, 4, 3, 5, 2, 6}));
  CHECK(q_word(kNu0) == TranspositionWord{3, 4, 2, 3, 4, 5, 1, 2, 3, 4});
  CHECK(pi_nu(kNu0).length() == 4);
  CHECK(pipe_dream_size(kNu0) == 6);
}

TEST_CASE("Rothe diagrams") {
  CHECK(rothe_diagram(Permutation({1, 2, 3})).empty());
  CHECK(rothe_diagram(Permutation({2, 1})) == std::vector<MatrixCell>{{1, 1}});
  // Transposed convention: rows and columns swapped relative to the usual one.
  CHECK(rothe_diagram(Permutation({3, 1, 2})) == std::vector<MatrixCell>{{1, 1}, {2, 1}});
  CHECK(rothe_diagram(pi_nu(kNu0)) == std::vector<MatrixCell>{{2, 2}, {2, 3}, {2, 4}, {3, 2}});
  CHECK(is_dominant(Permutation({3, 1, 2})));
  CHECK_FALSE(is_dominant(Permutation({1, 3, 2})));
  CHECK(avoids_132(Permutation({3, 1, 2})));
  CHECK_FALSE(avoids_132(Permutation({1, 3, 2})));
  CHECK(direct_sum(Permutation({1}), Permutation({3, 2, 4, 1, 5})) == Permutation({1, 4, 3, 5, 2, 6}));
}

TEST_CASE("pi_nu is 1 plus a dominant permutation") {
  for (const auto& w : oracle::words_up_to(7)) {
    const auto nu = parse_path(w);
    const auto pi = pi_nu(nu);
    CHECK(pi(1) == 1);
    std::vector<int> rest;
    for (std::size_t i = 2; i <= pi.size(); ++i) rest.push_back(pi(i) - 1);
    CHECK(is_dominant(Permutation(rest)));
    CHECK(avoids_132(Permutation(rest)));
    CHECK(static_cast<std::size_t>(pi.length()) ==
          points_weakly_above(nu).size() - static_cast<std::size_t>(nu.length()) - 1);
  }
}

TEST_CASE("pipe dreams of trees") {
  CHECK(trace_permutation(PipeDream(2, {{1, 1}})) == Permutation({2, 1}));
  const PipeDream doubled(3, {{1, 2}, {2, 1}});
  CHECK_FALSE(is_reduced(doubled));

  const auto tmin = extreme_trees(kNu0).first;
  CHECK(pipedream_of_tree(tmin).render_ascii() == "%+++%\n%+%%\n%%%\n%%\n%\n");

  for (const auto& w : oracle::words_up_to(7)) {
    const auto nu = parse_path(w);
    for (const auto& t : enumerate_nu_trees_bruteforce(nu)) {
      const auto dream = pipedream_of_tree(t);
      CHECK(is_reduced(dream));
      CHECK(trace_permutation(dream) == pi_nu(nu));
    }
  }
}

TEST_CASE("subword facets match the exhaustive oracle") {
  for (const auto& w : oracle::words_up_to(6)) {
    const auto nu = parse_path(w);
    const auto q = q_word(nu);
    const auto facets = subword_facets(q, pi_nu(nu));
    std::vector<std::vector<int>> ours(facets.begin(), facets.end());
    std::sort(ours.begin(), ours.end());
    CHECK(ours == oracle::subword_facets(q, pi_nu(nu).one_line()));
    CHECK(facets.size() == count_nu_paths(nu));
  }
  // A word that is not of the form Q_nu.
  const TranspositionWord q{1, 2, 1, 2, 1};
  const Permutation pi({3, 2, 1});
  const auto facets = subword_facets(q, pi);
  std::vector<std::vector<int>> ours(facets.begin(), facets.end());
  std::sort(ours.begin(), ours.end());
  CHECK(ours == oracle::subword_facets(q, pi.one_line()));
  CHECK(ours.size() == 5);
}

TEST_CASE("facets of trees") {
  for (const auto& w : oracle::words_up_to(7)) {
    const auto nu = parse_path(w);
    std::set<Facet> seen;
    for (const auto& t : enumerate_nu_trees_bruteforce(nu)) {
      const auto f = facet_of_tree(t);
      const auto expected = facet_of_tree_oracle(nu, t);
      CHECK(f == expected);
      CHECK(tree_of_facet(nu, f) == t);
      seen.insert(f);
    }
    const auto facets = subword_facets(q_word(nu), pi_nu(nu));
    CHECK(seen == std::set<Facet>(facets.begin(), facets.end()));
  }
}

TEST_CASE("increasing flips match rotations") {
  for (const auto& w : oracle::words_up_to(6)) {
    const auto nu = parse_path(w);
    const auto flips = increasing_flip_poset(q_word(nu), pi_nu(nu));
    const auto rot = rotation_poset(nu);
    std::vector<std::string> image;
    for (const auto& label : rot.labels()) {
      const auto tree = tree_from_json(nu, label);
      image.push_back(facet_label(facet_of_tree(tree)));
    }
    CHECK(isomorphic_via_labels(rot, flips, image));
  }
}

TEST_CASE("facet labels") {
  CHECK(facet_label({1, 2, 5}) == "[1,2,5]");
  CHECK(parse_facet("[1,2,5]") == Facet{1, 2, 5});
  CHECK(parse_facet("[]").empty());
  CHECK_THROWS_AS(parse_facet("[1,x]"), std::invalid_argument);
}
