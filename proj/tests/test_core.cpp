#include <doctest.h>

#include "oracles.hpp"
#include "upalg/core.hpp"
#include "upalg/modelgen.hpp"

using namespace upalg;

namespace {

CayleyTable paper4_table() {
  return CayleyTable::from_rows({"0", "a", "b", "c"}, 0,
                                {{0, 1, 2, 3},
                                 {0, 0, 0, 0},
                                 {0, 1, 0, 3},
                                 {0, 1, 2, 0}});
}

}  // namespace

TEST_CASE("default labels") {
  auto const l = default_labels(30);
  CHECK(l[0] == "0");
  CHECK(l[1] == "a");
  CHECK(l[26] == "z");
  CHECK(l[27] == "e27");
}

TEST_CASE("built-in tables satisfy every axiom and law") {
  for (auto const& name : builtin_names()) {
    auto const alg = builtin(name);
    CHECK(validate(alg.table()).ok());
    CHECK_FALSE(check_alt_axiomatization(alg.table()));
    CHECK(derived_laws(alg).all_hold());
  }
}

TEST_CASE("axiom witnesses are the first violating tuple") {
  auto t = paper4_table();
  t.at(1, 0) = 1;  // a·0 = a breaks UP-3 at x = a
  auto const w = check_axiom(t, Axiom::Up3);
  REQUIRE(w);
  CHECK(*w == Witness::of(1));
  CHECK(format_witness(t.names, *w) == "(a)");

  auto r = validate(t);
  CHECK_FALSE(r.ok());
  CHECK_THROWS_AS(make_algebra(t), AxiomViolation);

  // all zeros: UP-2 fails at x = a, UP-4 at (0,a)
  CayleyTable z;
  z.names = default_labels(2);
  z.cells.assign(4, 0);
  CHECK(*check_axiom(z, Axiom::Up2) == Witness::of(1));
  CHECK(*check_axiom(z, Axiom::Up4) == Witness::of(0, 1));
  CHECK_FALSE(check_axiom(z, Axiom::Up1));
}

TEST_CASE("malformed tables are rejected") {
  CayleyTable t = paper4_table();
  t.names[2] = "a";
  CHECK_THROWS_AS(check_well_formed(t), MalformedTable);
  t = paper4_table();
  t.cells[5] = 9;
  CHECK_THROWS_AS(check_well_formed(t), MalformedTable);
  t = paper4_table();
  t.names[1] = "x,y";
  CHECK_THROWS_AS(check_well_formed(t), MalformedTable);
  t = paper4_table();
  t.cells.pop_back();
  CHECK_THROWS_AS(make_algebra(t), MalformedTable);
}

TEST_CASE("element cap") {
  CHECK(max_order() == kDefaultMaxOrder);
  CHECK_THROWS_AS(set_max_order(0), OrderOutOfRange);
  CHECK_THROWS_AS(set_max_order(256), OrderOutOfRange);
  set_max_order(3);
  CHECK_THROWS_AS(builtin("paper4"), OrderCapExceeded);
  set_max_order(kDefaultMaxOrder);
  CHECK_NOTHROW(builtin("paper4"));
}

TEST_CASE("normalization moves the constant to index 0") {
  // paper4 with the constant stored last
  auto const t = CayleyTable::from_rows({"a", "b", "c", "0"}, 3,
                                        {{3, 3, 3, 3},
                                         {0, 3, 2, 3},
                                         {0, 1, 3, 3},
                                         {0, 1, 2, 3}});
  auto const alg = make_algebra(t);
  CHECK(alg.table() == paper4_table());
  CHECK(alg.name(0) == "0");
}

TEST_CASE("trivial algebra") {
  auto const t = trivial_algebra();
  CHECK(t.order() == 1);
  CHECK(t.mul(0, 0) == 0);
  CHECK(derived_laws(t).all_hold());
}

TEST_CASE("UP-ordering is a partial order with 0 greatest") {
  auto const alg = make_algebra(paper4_table());
  auto const p = up_ordering(alg);
  CHECK(p.is_partial_order());
  CHECK(p.greatest() == Element{0});
  for (Element x = 0; x < 4; ++x) {
    CHECK(p.leq(1, x));  // a is least
  }
  auto const covers = p.covers();
  std::vector<std::pair<Element, Element>> const expected = {
      {1, 2}, {1, 3}, {2, 0}, {3, 0}};
  CHECK(covers == expected);
}

TEST_CASE("derived laws hold on every census algebra") {
  for (auto const& alg : oracle::census_up_to(5)) {
    auto const r = derived_laws(alg);
    CHECK(r.all_hold());
    CHECK(up_ordering(alg).is_partial_order());
  }
}

TEST_CASE("set parsing and formatting") {
  auto const alg = builtin("paper5");
  auto const s = parse_set(alg, "0,a,c");
  CHECK(format_set(alg, s) == "{0, a, c}");
  CHECK(parse_set(alg, "{0, a, c}") == s);
  CHECK(parse_set(alg, "").empty());
  CHECK_THROWS_AS(parse_set(alg, "0,q"), UnknownName);
  CHECK_THROWS_AS(parse_set(alg, "0,"), UnknownName);
}

TEST_CASE("element sets above 64 elements") {
  ElementSet s(200);
  s.insert(3);
  s.insert(150);
  CHECK(s.size() == 2);
  CHECK(s.contains(150));
  CHECK_FALSE(s.contains(149));
  auto const v = s.to_vector();
  CHECK(v == std::vector<Element>{3, 150});
  auto t = ElementSet::full(200);
  CHECK(s.is_subset_of(t));
  t &= s;
  CHECK(t == s);
}

TEST_CASE("UP-3 independence data on small magmas") {
  // records how many magmas satisfy UP-1, UP-2 and UP-4 but not UP-3
  for (std::size_t n = 1; n <= 3; ++n) {
    CayleyTable m;
    m.names = default_labels(n);
    m.cells.assign(n * n, 0);
    std::size_t without_up3 = 0;
    std::size_t all_four = 0;
    while (true) {
      bool const rest = !check_axiom(m, Axiom::Up1) && !check_axiom(m, Axiom::Up2) &&
                        !check_axiom(m, Axiom::Up4);
      bool const up3 = !check_axiom(m, Axiom::Up3);
      without_up3 += rest && !up3;
      all_four += rest && up3;
      std::size_t i = 0;
      while (i < m.cells.size() && ++m.cells[i] == n) {
        m.cells[i++] = 0;
      }
      if (i == m.cells.size()) {
        break;
      }
    }
    MESSAGE("order " << n << ": " << all_four << " satisfy all four axioms, "
                     << without_up3 << " satisfy UP-1, UP-2, UP-4 but not UP-3");
    CHECK(all_four > 0);
  }
}
