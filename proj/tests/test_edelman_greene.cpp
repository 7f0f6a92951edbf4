#include <doctest.h>

#include "nutamari/bijections.hpp"
#include "nutamari/edelman_greene.hpp"
#include "nutamari/lattice_path.hpp"
#include "nutamari/nu_tree.hpp"
#include "oracles.hpp"

using namespace nutamari;

namespace {

const LatticePath kNu0 = parse_path("ENEEN");
const std::vector<Point> kT1{{0, 0}, {1, 0}, {2, 1}, {3, 1}, {0, 2}, {2, 2}};

Tableau insert_all(const std::vector<int>& letters) {
  Tableau t;
  for (int a : letters) t = eg_insert(t, a).tableau;
  return t;
}

}  // namespace

TEST_CASE("insertion") {
  CHECK(insert_all({2}).columns == std::vector<std::vector<int>>{{2}});
  CHECK(insert_all({2, 1}).columns == std::vector<std::vector<int>>{{1}, {2}});
  CHECK(insert_all({1, 2}).columns == std::vector<std::vector<int>>{{1, 2}});
  // 1 meets a column holding 1 and 2: the column is left alone and 2 moves on.
  CHECK(insert_all({1, 2, 1}).columns == std::vector<std::vector<int>>{{1, 2}, {2}});
  CHECK(insert_all({3, 1, 2}).columns == std::vector<std::vector<int>>{{1, 2}, {3}});

  const auto step = eg_insert(insert_all({1, 2}), 1);
  CHECK(step.col == 1);
  CHECK(step.row == 0);
  CHECK(insert_all({1, 2, 1}).shape() == std::vector<int>{2, 1});
  CHECK(insert_all({1, 2, 1}).row(1) == std::vector<int>{2});
}

TEST_CASE("insertion keeps the reduced word's product") {
  // Reading the columns of the insertion tableau from right to left, each
  // top to bottom, gives a word for the same permutation as the input.
  for (const auto& letters : std::vector<std::vector<int>>{{2, 1, 2}, {1, 3, 2}, {3, 2, 1, 3}, {2, 3, 1, 2}}) {
    const auto t = insert_all(letters);
    std::vector<int> reading;
    for (auto c = t.columns.rbegin(); c != t.columns.rend(); ++c) reading.insert(reading.end(), c->begin(), c->end());
    CHECK(reading.size() == letters.size());
    CHECK(oracle::word_product(reading, 5) == oracle::word_product(letters, 5));
  }
}

TEST_CASE("shape parameters") {
  CHECK(lambda_of_path(kNu0) == std::vector<int>{3, 1});
  CHECK(lambda_of_path(parse_path("NNEEE")) == std::vector<int>{0, 0});
  CHECK(ferrers_row_widths(kNu0).size() == 2);
}

TEST_CASE("EG path of a tree") {
  CHECK(eg_path(NuTree(kNu0, kT1)).word() == "ENENE");
  const auto [tmin, tmax] = extreme_trees(kNu0);
  CHECK(eg_path(tmin) == kNu0);
  CHECK(eg_path(tmax).word() == "NNEEE");
}

TEST_CASE("EG path equals left flushing") {
  for (const auto& w : oracle::words_up_to(7)) {
    const auto nu = parse_path(w);
    for (const auto& t : enumerate_nu_trees_bruteforce(nu)) {
      const auto mu = left_flush(t);
      CHECK(eg_path(t) == mu);
      CHECK(lambda_eg_formula(t) == lambda_of_path(mu));
      CHECK(lambda_flush_formula(t) == lambda_of_path(mu));
      CHECK(lambda_from_recording(nu, eg_pair(t).recording) == lambda_of_path(mu));
    }
  }
}
