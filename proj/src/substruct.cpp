#include "upalg/substruct.hpp"

namespace upalg {

namespace {

void require_nonempty(ElementSet const& s) {
  if (s.empty()) {
    throw EmptySet("subset must be nonempty");
  }
}

void require_universe(UpAlgebra const& alg, ElementSet const& s) {
  if (s.universe() != alg.order()) {
    throw NotSubset("subset is over " + std::to_string(s.universe()) +
                    " elements, algebra has " + std::to_string(alg.order()));
  }
}

void require_scannable(UpAlgebra const& alg) {
  if (alg.order() > kMaxScanOrder) {
    throw OrderCapExceeded("subset scan limited to " +
                           std::to_string(kMaxScanOrder) + " elements");
  }
}

// Ideal rule check without the emptiness/zero preamble.
std::optional<Witness> ideal_rule_failure(UpAlgebra const& alg,
                                          ElementSet const& s) {
  auto const n = alg.order();
  for (std::size_t x = 0; x < n; ++x) {
    auto const ex = static_cast<Element>(x);
    for (std::size_t y = 0; y < n; ++y) {
      if (!s.contains(y)) {
        continue;
      }
      auto const ey = static_cast<Element>(y);
      for (std::size_t z = 0; z < n; ++z) {
        auto const ez = static_cast<Element>(z);
        if (s.contains(alg.mul(ex, alg.mul(ey, ez))) &&
            !s.contains(alg.mul(ex, ez))) {
          return Witness::of(ex, ey, ez);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

IdealSet::IdealSet(UpAlgebra parent, ElementSet members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  require_universe(parent_, members_);
  if (auto w = find_ideal_violation(parent_, members_)) {
    throw NotAnIdeal(format_set(parent_, members_) +
                     " is not an ideal; witness " +
                     format_witness(parent_.names(), *w));
  }
}

SubalgebraSet::SubalgebraSet(UpAlgebra parent, ElementSet members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  require_universe(parent_, members_);
  if (auto w = find_subalgebra_violation(parent_, members_)) {
    throw NotASubalgebra(format_set(parent_, members_) +
                         " is not a subalgebra; witness " +
                         format_witness(parent_.names(), *w));
  }
}

SubalgebraSet::SubalgebraSet(IdealSet const& ideal)
    : SubalgebraSet(ideal.parent(), ideal.members()) {}

std::optional<Witness> find_ideal_violation(UpAlgebra const& alg,
                                            ElementSet const& s) {
  require_universe(alg, s);
  require_nonempty(s);
  if (!s.contains(0)) {
    return Witness::of(0);
  }
  return ideal_rule_failure(alg, s);
}

bool is_ideal(UpAlgebra const& alg, ElementSet const& s) {
  return !find_ideal_violation(alg, s);
}

std::optional<Witness> find_subalgebra_violation(UpAlgebra const& alg,
                                                 ElementSet const& s) {
  require_universe(alg, s);
  require_nonempty(s);
  for (auto x : s) {
    for (auto y : s) {
      if (!s.contains(alg.mul(x, y))) {
        return Witness::of(x, y);
      }
    }
  }
  // closure forces x·x = 0 into s
  if (!s.contains(0)) {
    return Witness::of(0);
  }
  return std::nullopt;
}

bool is_subalgebra(UpAlgebra const& alg, ElementSet const& s) {
  return !find_subalgebra_violation(alg, s);
}

std::vector<IdealSet> all_ideals(UpAlgebra const& alg) {
  require_scannable(alg);
  auto const n = alg.order();
  std::vector<IdealSet> out;
  // bit 0 must be set; masks ascend
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
    auto s = ElementSet::from_mask(n, mask);
    if (!ideal_rule_failure(alg, s)) {
      out.emplace_back(alg, std::move(s));
    }
  }
  return out;
}

std::vector<SubalgebraSet> all_subalgebras(UpAlgebra const& alg) {
  require_scannable(alg);
  auto const n = alg.order();
  std::vector<SubalgebraSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
    auto s = ElementSet::from_mask(n, mask);
    if (is_subalgebra(alg, s)) {
      out.emplace_back(alg, std::move(s));
    }
  }
  return out;
}

IdealSet generated_ideal(UpAlgebra const& alg, ElementSet const& seed) {
  require_universe(alg, seed);
  auto const n = alg.order();
  auto s = seed;
  s.insert(0);
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t y = 0; y < n; ++y) {
      if (!s.contains(y)) {
        continue;
      }
      for (std::size_t x = 0; x < n; ++x) {
        auto const ex = static_cast<Element>(x);
        for (std::size_t z = 0; z < n; ++z) {
          auto const ez = static_cast<Element>(z);
          auto const xz = alg.mul(ex, ez);
          if (!s.contains(xz) &&
              s.contains(alg.mul(ex, alg.mul(static_cast<Element>(y), ez)))) {
            s.insert(xz);
            grew = true;
          }
        }
      }
    }
  }
  return IdealSet(alg, std::move(s));
}

SubalgebraSet generated_subalgebra(UpAlgebra const& alg,
                                   ElementSet const& seed) {
  require_universe(alg, seed);
  auto s = seed;
  s.insert(0);
  for (bool grew = true; grew;) {
    grew = false;
    auto const members = s.to_vector();
    for (auto x : members) {
      for (auto y : members) {
        auto const xy = alg.mul(x, y);
        if (!s.contains(xy)) {
          s.insert(xy);
          grew = true;
        }
      }
    }
  }
  return SubalgebraSet(alg, std::move(s));
}

std::optional<Witness> ideal_criterion_in_subalgebra(SubalgebraSet const& b,
                                                     ElementSet const& s) {
  auto const& alg = b.parent();
  require_universe(alg, s);
  if (!s.is_subset_of(b.members())) {
    throw NotSubset(format_set(alg, s) + " is not a subset of " +
                    format_set(alg, b.members()));
  }
  if (!s.contains(0)) {
    return Witness::of(0);
  }
  for (auto x : b.members()) {
    for (auto p : s) {
      for (auto q : s) {
        if (!s.contains(alg.mul(alg.mul(q, alg.mul(p, x)), x))) {
          return Witness::of(x, p, q);
        }
      }
    }
  }
  auto const r = restrict_to(b);
  auto const inner = r.lower(s);
  if (auto w = find_ideal_violation(r.algebra, inner)) {
    throw Error("ideal criterion held but " + format_set(alg, s) +
                " is not an ideal of the subalgebra; witness " +
                format_witness(r.algebra.names(), *w));
  }
  return std::nullopt;
}

ElementSet Restriction::lift(ElementSet const& sub_set,
                             std::size_t parent_order) const {
  ElementSet out(parent_order);
  for (auto e : sub_set) {
    out.insert(to_parent[e]);
  }
  return out;
}

ElementSet Restriction::lower(ElementSet const& parent_set) const {
  ElementSet out(to_parent.size());
  for (auto e : parent_set) {
    if (!from_parent[e]) {
      throw NotSubset("element outside the subalgebra");
    }
    out.insert(*from_parent[e]);
  }
  return out;
}

Restriction restrict_to(SubalgebraSet const& s) {
  auto const& alg = s.parent();
  auto const members = s.members().to_vector();
  auto const m = members.size();
  std::vector<std::optional<Element>> from_parent(alg.order());
  for (std::size_t i = 0; i < m; ++i) {
    from_parent[members[i]] = static_cast<Element>(i);
  }
  CayleyTable t;
  t.zero = 0;
  t.names.reserve(m);
  t.cells.reserve(m * m);
  for (auto x : members) {
    t.names.push_back(alg.name(x));
  }
  for (auto x : members) {
    for (auto y : members) {
      t.cells.push_back(*from_parent[alg.mul(x, y)]);
    }
  }
  return {make_algebra(std::move(t)), members, std::move(from_parent)};
}

}  // namespace upalg
