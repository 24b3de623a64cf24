#include <doctest.h>

#include <filesystem>
#include <random>

#include "oracles.hpp"
#include "upalg/modelgen.hpp"
#include "upalg/morphism.hpp"
#include "upalg/table_io.hpp"

using namespace upalg;

namespace {

std::set<std::vector<Element>> census_forms(Census const& c) {
  std::set<std::vector<Element>> out;
  for (auto const& r : c.representatives) {
    out.insert(r.table().cells);
  }
  return out;
}

}  // namespace

TEST_CASE("small orders") {
  CHECK(enumerate(1).iso_count() == 1);
  CHECK(enumerate(2).iso_count() == 1);
  CHECK(enumerate(2).raw_count == 1);
  CHECK_THROWS_AS(enumerate(0), OrderOutOfRange);
  CHECK_THROWS_AS(enumerate(7), OrderOutOfRange);
  CHECK_THROWS_AS(enumerate(6), OrderOutOfRange);
}

TEST_CASE("pruned census matches the unpruned scan at orders 2 and 3") {
  for (std::size_t n : {2U, 3U}) {
    auto const tables = oracle::all_tables(n);
    std::set<std::vector<Element>> forms;
    for (auto const& t : tables) {
      forms.insert(oracle::canonical_cells(t));
    }
    auto const census = enumerate(n);
    CHECK(census.raw_count == tables.size());
    CHECK(census_forms(census) == forms);
  }
}

TEST_CASE("census representatives are valid, canonical and sorted") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const census = enumerate(n);
    std::vector<Element> previous;
    for (auto const& r : census.representatives) {
      CHECK(validate(r.table()).ok());
      CHECK(derived_laws(r).all_hold());
      CHECK(canonicalize(r).form.cells == r.table().cells);
      CHECK(r.names() == default_labels(n));
      CHECK(previous < r.table().cells);
      previous = r.table().cells;
    }
  }
}

TEST_CASE("frozen census counts") {
  // workbench-derived, recorded from the first verified run
  CHECK(enumerate(3).raw_count == 5);
  CHECK(enumerate(3).iso_count() == 3);
  CHECK(enumerate(4).raw_count == 112);
  CHECK(enumerate(4).iso_count() == 22);
}

TEST_CASE("threaded and sequential runs agree") {
  EnumerateOptions one;
  one.threads = 1;
  EnumerateOptions four;
  four.threads = 4;
  auto const a = enumerate(4, one);
  auto const b = enumerate(4, four);
  CHECK(a.raw_count == b.raw_count);
  CHECK(census_forms(a) == census_forms(b));
}

TEST_CASE("relabeled representatives canonize back") {
  std::mt19937 rng(5);
  auto const census = enumerate(4);
  auto const reference = census_forms(census);
  std::set<std::vector<Element>> again;
  for (auto const& r : census.representatives) {
    std::vector<Element> perm(4);
    std::iota(perm.begin(), perm.end(), Element{0});
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    again.insert(canonicalize(relabel(r, perm)).form.cells);
  }
  CHECK(again == reference);
}

TEST_CASE("census files") {
  auto const dir = std::filesystem::temp_directory_path() / "upalg_census_test";
  std::filesystem::remove_all(dir);
  write_census(dir, enumerate(3));
  write_census(dir, enumerate(4));
  CHECK(std::filesystem::exists(dir / "up_n3_001.tbl"));
  CHECK(std::filesystem::exists(dir / "up_n4_022.tbl"));
  CHECK_FALSE(std::filesystem::exists(dir / "up_n4_023.tbl"));
  auto const index = read_census_index(dir);
  REQUIRE(index.size() == 2);
  CHECK(index.at(3) == CensusIndexEntry{5, 3});
  CHECK(index.at(4) == CensusIndexEntry{112, 22});
  CHECK(read_algebra(dir / "up_n4_001.tbl") == enumerate(4).representatives[0]);
  std::filesystem::remove_all(dir);
}

TEST_CASE("power algebras") {
  for (std::size_t m = 0; m <= 3; ++m) {
    auto const t1 = power_type1(m);
    auto const t2 = power_type2(m);
    CHECK(t1.order() == (std::size_t{1} << m));
    CHECK(t2.order() == (std::size_t{1} << m));
    CHECK(derived_laws(t1).all_hold());
    CHECK(derived_laws(t2).all_hold());
    // complementation is an isomorphism between the two types
    CHECK(is_isomorphic(t1, t2));
  }
  CHECK(power_type1(0).order() == 1);
  auto const p = power_type1(2);
  auto const one = *p.find("{1}");
  auto const both = *p.find("{12}");
  CHECK(p.name(p.mul(one, both)) == "{2}");
  auto const q = power_type2(1);
  CHECK(q.name(0) == "{1}");
  auto const empty = *q.find("{}");
  CHECK(q.mul(empty, empty) == 0);
  CHECK_THROWS_AS(power_type1(5), OrderOutOfRange);
}

TEST_CASE("built-ins") {
  auto const p4 = builtin("paper4");
  auto const p5 = builtin("paper5");
  for (Element x = 0; x < 4; ++x) {
    CHECK(p4.mul(*p4.find("a"), x) == 0);
  }
  for (Element x = 0; x < 5; ++x) {
    CHECK(p5.mul(*p5.find("d"), x) == 0);
  }
  CHECK_THROWS_AS(builtin("paper6"), UnknownName);
}
