#include "upalg/congruence.hpp"

#include <map>

namespace upalg {

Partition Partition::from_labels(std::span<const std::size_t> labels) {
  Partition p;
  auto const n = labels.size();
  std::map<std::size_t, Element> id_of_label;
  p.class_of_.resize(n);
  // elements are visited in index order, so ids follow smallest members
  for (std::size_t x = 0; x < n; ++x) {
    auto [it, fresh] =
        id_of_label.emplace(labels[x], static_cast<Element>(p.classes_.size()));
    if (fresh) {
      p.classes_.emplace_back(n);
    }
    p.class_of_[x] = it->second;
    p.classes_[it->second].insert(x);
  }
  return p;
}

Partition Partition::from_classes(std::size_t n,
                                  std::vector<ElementSet> const& classes) {
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> labels(n, kUnassigned);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].universe() != n || classes[c].empty()) {
      throw PreconditionViolation("partition classes must be nonempty subsets");
    }
    for (auto x : classes[c]) {
      if (labels[x] != kUnassigned) {
        throw PreconditionViolation("partition classes overlap");
      }
      labels[x] = c;
    }
  }
  for (auto l : labels) {
    if (l == kUnassigned) {
      throw PreconditionViolation("partition classes do not cover the carrier");
    }
  }
  return from_labels(labels);
}

Partition Partition::identity(std::size_t n) {
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = i;
  }
  return from_labels(labels);
}

Partition Partition::single_class(std::size_t n) {
  std::vector<std::size_t> labels(n, 0);
  return from_labels(labels);
}

std::string format_partition(UpAlgebra const& alg, Partition const& p) {
  std::string out = "{";
  for (std::size_t c = 0; c < p.class_count(); ++c) {
    out += c ? ",{" : "{";
    bool first = true;
    for (auto e : p.members(static_cast<Element>(c))) {
      out += first ? "" : ",";
      out += alg.name(e);
      first = false;
    }
    out += "}";
  }
  return out + "}";
}

Partition relation_mod_ideal(IdealSet const& ideal) {
  auto const& alg = ideal.parent();
  auto const n = alg.order();
  std::vector<ElementSet> related(n, ElementSet(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto const ex = static_cast<Element>(x);
      auto const ey = static_cast<Element>(y);
      if (ideal.contains(alg.mul(ex, ey)) && ideal.contains(alg.mul(ey, ex))) {
        related[x].insert(y);
      }
    }
  }
  // equivalence: reflexive, symmetric, and each row equals the rows of its
  // members (which gives transitivity)
  for (std::size_t x = 0; x < n; ++x) {
    if (!related[x].contains(x)) {
      throw Error("relation ~B is not reflexive at " +
                  alg.name(static_cast<Element>(x)));
    }
    for (auto y : related[x]) {
      if (!(related[y] == related[x])) {
        throw Error("relation ~B is not an equivalence at (" +
                    alg.name(static_cast<Element>(x)) + "," + alg.name(y) +
                    ")");
      }
    }
  }
  std::vector<std::size_t> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = *related[x].begin();
  }
  return Partition::from_labels(labels);
}

std::optional<Witness> find_congruence_violation(UpAlgebra const& alg,
                                                 Partition const& p) {
  auto const n = alg.order();
  if (p.order() != n) {
    throw PreconditionViolation("partition and algebra differ in size");
  }
  for (std::size_t x = 0; x < n; ++x) {
    auto const ex = static_cast<Element>(x);
    for (std::size_t y = 0; y < n; ++y) {
      auto const ey = static_cast<Element>(y);
      if (!p.related(ex, ey)) {
        continue;
      }
      for (std::size_t z = 0; z < n; ++z) {
        auto const ez = static_cast<Element>(z);
        if (!p.related(alg.mul(ex, ez), alg.mul(ey, ez)) ||
            !p.related(alg.mul(ez, ex), alg.mul(ez, ey))) {
          return Witness::of(ex, ey, ez);
        }
      }
    }
  }
  return std::nullopt;
}

bool is_congruence(UpAlgebra const& alg, Partition const& p) {
  return !find_congruence_violation(alg, p);
}

namespace {

void require_congruence(UpAlgebra const& alg, Partition const& p) {
  if (auto w = find_congruence_violation(alg, p)) {
    throw NotACongruence(format_partition(alg, p) +
                         " is not a congruence; witness " +
                         format_witness(alg.names(), *w));
  }
}

}  // namespace

Checklist class_of_zero_checks(UpAlgebra const& alg, Partition const& p,
                               std::optional<IdealSet> const& inducing) {
  require_congruence(alg, p);
  Checklist out;
  auto const& zero_class = p.members(0);
  out.add("zero-class-ideal", is_ideal(alg, zero_class),
          format_set(alg, zero_class));
  out.add("zero-class-subalgebra", is_subalgebra(alg, zero_class),
          format_set(alg, zero_class));
  for (std::size_t c = 0; c < p.class_count(); ++c) {
    auto const& cls = p.members(static_cast<Element>(c));
    auto const rep = *cls.begin();
    bool const rel_zero = p.related(rep, 0);
    auto const tag = "[" + alg.name(rep) + "]";
    bool const ideal = is_ideal(alg, cls);
    bool const sub = is_subalgebra(alg, cls);
    out.add("class-ideal-iff-related-to-zero" + tag, ideal == rel_zero,
            format_set(alg, cls) + (ideal ? " is" : " is not") + " an ideal");
    out.add("class-subalgebra-iff-related-to-zero" + tag, sub == rel_zero,
            format_set(alg, cls) + (sub ? " is" : " is not") + " a subalgebra");
    if (inducing) {
      bool const in_b = inducing->contains(rep);
      out.add("class-ideal-iff-in-ideal" + tag, ideal == in_b,
              alg.name(rep) + (in_b ? " in B" : " not in B"));
      out.add("class-subalgebra-iff-in-ideal" + tag, sub == in_b,
              alg.name(rep) + (in_b ? " in B" : " not in B"));
    }
  }
  if (inducing) {
    out.add("zero-class-equals-ideal", zero_class == inducing->members(),
            format_set(alg, zero_class) + " vs " +
                format_set(alg, inducing->members()));
  }
  return out;
}

std::optional<IdealSet> inducing_ideal(UpAlgebra const& alg,
                                       Partition const& p) {
  require_congruence(alg, p);
  IdealSet b(alg, p.members(0));
  if (relation_mod_ideal(b) == p) {
    return b;
  }
  return std::nullopt;
}

QuotientAlgebra quotient_by(UpAlgebra const& alg, Partition const& p) {
  require_congruence(alg, p);
  auto const n = alg.order();
  auto const k = p.class_count();
  std::vector<Element> section(k);
  CayleyTable t;
  t.zero = 0;
  t.names.resize(k);
  t.cells.resize(k * k);
  for (std::size_t c = 0; c < k; ++c) {
    section[c] = *p.members(static_cast<Element>(c)).begin();
    t.names[c] = alg.name(section[c]);
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = 0; d < k; ++d) {
      t.at(c, d) = p.class_of(alg.mul(section[c], section[d]));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto const ex = static_cast<Element>(x);
      auto const ey = static_cast<Element>(y);
      if (p.class_of(alg.mul(ex, ey)) !=
          t.at(p.class_of(ex), p.class_of(ey))) {
        throw WellDefinednessViolation(
            "quotient product depends on representatives at (" +
            alg.name(ex) + "," + alg.name(ey) + ")");
      }
    }
  }
  return {alg, p, make_algebra(std::move(t)), std::move(section)};
}

QuotientAlgebra quotient(IdealSet const& ideal) {
  return quotient_by(ideal.parent(), relation_mod_ideal(ideal));
}

Morphism natural_projection(QuotientAlgebra const& q) {
  std::vector<Element> map(q.base.order());
  for (std::size_t x = 0; x < map.size(); ++x) {
    map[x] = q.project(static_cast<Element>(x));
  }
  auto f = make_morphism(q.base, q.quotient, std::move(map));
  if (!f.surjective()) {
    throw Error("natural projection is not surjective");
  }
  return f;
}

Morphism natural_projection(IdealSet const& ideal) {
  return natural_projection(quotient(ideal));
}

}  // namespace upalg
