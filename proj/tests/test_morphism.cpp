#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "upalg/congruence.hpp"
#include "upalg/modelgen.hpp"
#include "upalg/morphism.hpp"

using namespace upalg;

namespace {

std::vector<Element> random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  return perm;
}

std::set<std::vector<Element>> maps_of(std::vector<Morphism> const& homs) {
  std::set<std::vector<Element>> out;
  for (auto const& f : homs) {
    out.emplace(f.map().begin(), f.map().end());
  }
  return out;
}

}  // namespace

TEST_CASE("identity and zero maps") {
  auto const a = builtin("paper4");
  auto const b = builtin("paper5");
  auto const id = identity(a);
  CHECK(id.kernel() == parse_set(a, "0"));
  CHECK(id.bijective());
  CHECK(hom_properties(id).all_passed());
  auto const z = zero_map(a, b);
  CHECK(z.kernel() == a.carrier());
  CHECK(hom_properties(z).all_passed());
}

TEST_CASE("invalid maps") {
  auto const a = builtin("paper4");
  CHECK_THROWS_AS(make_morphism(a, a, {0, 1, 2}), PreconditionViolation);
  CHECK_THROWS_AS(make_morphism(a, a, {0, 1, 2, 7}), PreconditionViolation);
  // c -> a is not a homomorphism; the witness must be a failing pair
  auto const good = oracle::homs(a, a);
  std::vector<Element> bad = {0, 0, 0, 1};
  REQUIRE(!good.count(bad));
  auto const w = find_hom_violation(a, a, bad);
  REQUIRE(w);
  auto const [x, y, unused] = w->at;
  CHECK(bad[a.mul(x, y)] != a.mul(bad[x], bad[y]));
  CHECK_THROWS_AS(make_morphism(a, a, bad), HomViolation);
}

TEST_CASE("homomorphism properties over the order-4 sweep") {
  auto const& algs = oracle::census_up_to(4);
  for (auto const& a : algs) {
    for (auto const& b : algs) {
      for (auto const& f : enumerate_homs(a, b)) {
        auto const checks = hom_properties(f);
        CHECK_MESSAGE(checks.all_passed(),
                      (checks.first_failure() ? checks.first_failure()->id : ""));
      }
    }
  }
}

TEST_CASE("natural projection properties") {
  auto const alg = builtin("paper5");
  auto const pi = natural_projection(IdealSet(alg, parse_set(alg, "0,a,b")));
  CHECK(hom_properties(pi).all_passed());
  CHECK_FALSE(pi.injective());
}

TEST_CASE("pruned hom enumeration matches the brute-force oracle") {
  auto const& algs = oracle::census_up_to(3);
  for (auto const& a : algs) {
    for (auto const& b : algs) {
      CHECK(maps_of(enumerate_homs(a, b)) == oracle::homs(a, b));
    }
  }
  auto const p4 = builtin("paper4");
  CHECK(maps_of(enumerate_homs(p4, p4)) == oracle::homs(p4, p4));
  auto const t = trivial_algebra();
  CHECK(enumerate_homs(p4, t).size() == 1);
  CHECK(enumerate_homs(t, p4).size() == 1);
}

TEST_CASE("compose and inverse") {
  auto const alg = builtin("paper5");
  auto const pi = natural_projection(IdealSet(alg, parse_set(alg, "0,a")));
  auto const id = identity(alg);
  CHECK(compose(id, pi) == pi);
  CHECK(compose(pi, identity(pi.target())) == pi);
  CHECK_THROWS_AS(compose(pi, pi), NotComposable);
  CHECK_THROWS_AS(inverse(pi), NotBijective);
  std::mt19937 rng(11);
  auto const perm = random_perm(5, rng);
  auto const other = relabel(alg, perm);
  auto const iso = is_isomorphic(alg, other);
  REQUIRE(iso);
  auto const inv = inverse(*iso);
  CHECK(compose(*iso, inv) == identity(alg));
  CHECK(compose(inv, *iso) == identity(other));
}

TEST_CASE("isomorphism on the 4-element example with b and c swapped") {
  auto const a = builtin("paper4");
  std::vector<Element> const swap = {0, 1, 3, 2};
  auto const b = relabel(a, swap);
  auto const f = is_isomorphic(a, b);
  REQUIRE(f);
  CHECK(find_hom_violation(a, b, f->map()) == std::nullopt);
  CHECK(find_hom_violation(b, a, inverse(*f).map()) == std::nullopt);
  CHECK(!is_isomorphic(a, builtin("paper5")));
}

TEST_CASE("canonical form is invariant under relabeling and matches brute force") {
  std::mt19937 rng(3);
  for (auto const& alg : oracle::census_up_to(5)) {
    auto const c = canonicalize(alg);
    if (alg.order() <= 5) {
      CHECK(c.form.cells == oracle::canonical_cells(alg.table()));
    }
    for (int trial = 0; trial < 3; ++trial) {
      auto const other = relabel(alg, random_perm(alg.order(), rng));
      CHECK(canonicalize(other).form == c.form);
      CHECK(fingerprint(other) == fingerprint(alg));
      CHECK(is_isomorphic(alg, other));
    }
    // relabel sends each element to its canonical index
    auto const canon = relabel(alg, c.relabel);
    CHECK(canon.table().cells == c.form.cells);
  }
}

TEST_CASE("distinct census representatives are pairwise non-isomorphic") {
  auto const& algs = oracle::census_up_to(4);
  for (std::size_t i = 0; i < algs.size(); ++i) {
    for (std::size_t j = i + 1; j < algs.size(); ++j) {
      CHECK_FALSE(is_isomorphic(algs[i], algs[j]));
    }
  }
}

TEST_CASE("morphism formatting") {
  auto const alg = builtin("paper5");
  auto const pi = natural_projection(IdealSet(alg, parse_set(alg, "0,a,b")));
  CHECK(format_morphism(pi) == "0↦0 a↦0 b↦0 c↦c d↦d");
}
