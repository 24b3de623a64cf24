#pragma once

#include <optional>
#include <string>
#include <vector>

#include "upalg/checklist.hpp"
#include "upalg/core.hpp"
#include "upalg/morphism.hpp"
#include "upalg/substruct.hpp"

namespace upalg {

/// A partition of {0, ..., n-1}.  Class ids follow the smallest member, so
/// the class of 0 is always id 0.
class Partition {
 public:
  /// Any labelling of the elements; equal labels mean the same class.
  static Partition from_labels(std::span<const std::size_t> labels);
  static Partition from_classes(std::size_t n,
                                std::vector<ElementSet> const& classes);
  static Partition identity(std::size_t n);
  static Partition single_class(std::size_t n);

  std::size_t order() const noexcept { return class_of_.size(); }
  std::size_t class_count() const noexcept { return classes_.size(); }
  Element class_of(Element x) const noexcept { return class_of_[x]; }
  ElementSet const& members(Element cls) const noexcept {
    return classes_[cls];
  }
  std::vector<ElementSet> const& classes() const noexcept { return classes_; }
  bool related(Element x, Element y) const noexcept {
    return class_of_[x] == class_of_[y];
  }

  friend bool operator==(Partition const&, Partition const&) = default;

 private:
  std::vector<Element> class_of_;
  std::vector<ElementSet> classes_;
};

/// "{{0,a,b},{c},{d}}"
std::string format_partition(UpAlgebra const& alg, Partition const& p);

/// x ~ y iff x·y ∈ B and y·x ∈ B.  The relation is re-checked to be an
/// equivalence before it is turned into a partition.
Partition relation_mod_ideal(IdealSet const& ideal);

/// First (x, y, z) with x ρ y but x·z, y·z or z·x, z·y in different classes.
std::optional<Witness> find_congruence_violation(UpAlgebra const& alg,
                                                 Partition const& p);
bool is_congruence(UpAlgebra const& alg, Partition const& p);

/// Class-of-zero facts for a congruence: (0) is an ideal and a subalgebra,
/// and a class is an ideal (resp. subalgebra) iff it is the class of 0.
/// With `inducing` set, also checks (0) = B and that (x) is an ideal iff
/// x ∈ B.  Throws NotACongruence.
Checklist class_of_zero_checks(UpAlgebra const& alg, Partition const& p,
                               std::optional<IdealSet> const& inducing = {});

/// The ideal B with p = ~B, if p is of that form.  Throws NotACongruence.
std::optional<IdealSet> inducing_ideal(UpAlgebra const& alg,
                                       Partition const& p);

struct QuotientAlgebra {
  UpAlgebra base;
  Partition partition;
  UpAlgebra quotient;
  std::vector<Element> section;  // class id -> smallest member

  Element project(Element x) const noexcept {
    return partition.class_of(x);
  }
};

/// A/ρ for a congruence ρ.  The product is computed from the section and
/// then re-verified for every pair of representatives
/// (WellDefinednessViolation otherwise).  Quotient elements carry the label
/// of their smallest member.
QuotientAlgebra quotient_by(UpAlgebra const& alg, Partition const& p);
QuotientAlgebra quotient(IdealSet const& ideal);

/// x ↦ (x), checked to be a surjective homomorphism.
Morphism natural_projection(QuotientAlgebra const& q);
Morphism natural_projection(IdealSet const& ideal);

}  // namespace upalg
