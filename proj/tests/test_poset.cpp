#include <doctest.h>

#include <vector>

#include "nutamari/lattice_path.hpp"
#include "nutamari/poset.hpp"
#include "oracles.hpp"

using namespace nutamari;

namespace {

FinitePoset chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Relation> rel;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("c" + std::to_string(i));
    if (i) rel.emplace_back(i - 1, i);
  }
  return FinitePoset(labels, rel);
}

}  // namespace

TEST_CASE("transitive reduction drops implied relations") {
  const std::vector<Relation> rel{{0, 1}, {1, 2}, {0, 2}};
  const FinitePoset p({"a", "b", "c"}, rel);
  CHECK(p.covers() == std::vector<Relation>{{0, 1}, {1, 2}});
  CHECK(p.less_equal(0, 2));
  CHECK_FALSE(p.less_equal(2, 0));
  CHECK(p.upper_covers(0) == std::vector<std::size_t>{1});
  CHECK(p.lower_covers(2) == std::vector<std::size_t>{1});
}

TEST_CASE("cycles and duplicates are rejected") {
  const std::vector<Relation> cyc{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(FinitePoset({"a", "b"}, cyc), std::invalid_argument);
  CHECK_THROWS_AS(FinitePoset({"a", "a"}, {}), std::invalid_argument);
  const std::vector<Relation> bad{{0, 5}};
  CHECK_THROWS_AS(FinitePoset({"a", "b"}, bad), std::invalid_argument);
}

TEST_CASE("lattice test") {
  const FinitePoset antichain({"a", "b"}, {});
  CHECK_FALSE(is_lattice(antichain));
  CHECK(meet(antichain, 0, 1).status == BoundStatus::kNone);

  const auto c = chain(4);
  CHECK(is_lattice(c));
  CHECK(meet(c, 1, 3).element == 1);
  CHECK(join(c, 1, 3).element == 3);

  // Two minimal elements below two maximal ones: bounds exist but are ambiguous.
  const std::vector<Relation> bowtie{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  const FinitePoset b({"a", "b", "c", "d"}, bowtie);
  CHECK(meet(b, 2, 3).status == BoundStatus::kAmbiguous);
  CHECK(join(b, 0, 1).status == BoundStatus::kAmbiguous);
  CHECK_FALSE(is_lattice(b));

  CHECK_FALSE(is_lattice(FinitePoset({}, {})));
}

TEST_CASE("meet and join agree with the Floyd-Warshall oracle") {
  for (const auto& w : oracle::words_up_to(6)) {
    const auto p = nu_tamari_poset(parse_path(w));
    const oracle::Order order(p.size(), p.covers());
    for (std::size_t a = 0; a < p.size(); ++a) {
      for (std::size_t b = 0; b < p.size(); ++b) {
        CHECK(p.less_equal(a, b) == order.leq(a, b));
        const Bound m = meet(p, a, b);
        const Bound j = join(p, a, b);
        REQUIRE(m);
        REQUIRE(j);
        CHECK(static_cast<long>(m.element) == order.meet(a, b));
        CHECK(static_cast<long>(j.element) == order.join(a, b));
        // commutative, idempotent
        CHECK(meet(p, b, a).element == m.element);
        CHECK(meet(p, a, a).element == a);
      }
    }
  }
}

TEST_CASE("meet is associative on a lattice") {
  const auto p = nu_tamari_poset(parse_path("ENENEN"));
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      for (std::size_t c = 0; c < p.size(); ++c) {
        CHECK(meet(p, meet(p, a, b).element, c).element == meet(p, a, meet(p, b, c).element).element);
        CHECK(join(p, join(p, a, b).element, c).element == join(p, a, join(p, b, c).element).element);
      }
    }
  }
}

TEST_CASE("dual and isomorphism maps") {
  const auto c = chain(3);
  const auto d = dual(c);
  CHECK(d.covers() == std::vector<Relation>{{1, 0}, {2, 1}});
  CHECK(isomorphic_via(c, d, std::vector<std::size_t>{0, 1, 2}) == false);
  CHECK(isomorphic_via(dual(d), c, std::vector<std::size_t>{0, 1, 2}));
  const std::vector<std::size_t> identity{0, 1, 2};
  CHECK(isomorphic_via(c, c, identity));
  const std::vector<std::size_t> not_bijective{0, 0, 2};
  CHECK_FALSE(isomorphic_via(c, c, not_bijective));
  CHECK(isomorphic_via_labels(c, c, {"c0", "c1", "c2"}));
  CHECK_FALSE(isomorphic_via_labels(c, c, {"c0", "c1", "zz"}));
}

TEST_CASE("DOT output") {
  const FinitePoset one({"x"}, {});
  CHECK(hasse_dot(one) == "digraph poset {\n  rankdir=BT;\n  n0 [label=\"x\"];\n}\n");
  const auto two = chain(2);
  CHECK(hasse_dot(two) ==
        "digraph poset {\n  rankdir=BT;\n  n0 [label=\"c0\"];\n  n1 [label=\"c1\"];\n  n0 -> n1;\n}\n");
  const auto tam = nu_tamari_poset(parse_path("ENEEN"));
  const auto dot = hasse_dot(tam);
  CHECK(std::count(dot.begin(), dot.end(), '[') == 7);
}
