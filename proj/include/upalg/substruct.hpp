#pragma once

#include <optional>
#include <vector>

#include "upalg/core.hpp"

namespace upalg {

/// Subset scans (all_ideals, all_subalgebras) refuse carriers above this.
inline constexpr std::size_t kMaxScanOrder = 24;

/// A subset B with 0 in B that is closed under the ideal rule
/// x·(y·z) in B and y in B  =>  x·z in B.
///
/// Always validated: the constructor throws NotAnIdeal with a witness.
class IdealSet {
 public:
  IdealSet(UpAlgebra parent, ElementSet members);

  UpAlgebra const& parent() const noexcept { return parent_; }
  ElementSet const& members() const noexcept { return members_; }
  bool contains(Element e) const noexcept { return members_.contains(e); }
  std::size_t size() const noexcept { return members_.size(); }

  friend bool operator==(IdealSet const& a, IdealSet const& b) noexcept {
    return a.members_ == b.members_ && a.parent_ == b.parent_;
  }

 private:
  UpAlgebra parent_;
  ElementSet members_;
};

/// A nonempty subset closed under the product (hence containing 0).
class SubalgebraSet {
 public:
  SubalgebraSet(UpAlgebra parent, ElementSet members);
  explicit SubalgebraSet(IdealSet const& ideal);

  UpAlgebra const& parent() const noexcept { return parent_; }
  ElementSet const& members() const noexcept { return members_; }
  bool contains(Element e) const noexcept { return members_.contains(e); }
  std::size_t size() const noexcept { return members_.size(); }

  friend bool operator==(SubalgebraSet const& a,
                         SubalgebraSet const& b) noexcept {
    return a.members_ == b.members_ && a.parent_ == b.parent_;
  }

 private:
  UpAlgebra parent_;
  ElementSet members_;
};

/// First failure of the ideal conditions: Witness::of(0) when 0 is
/// missing, otherwise the least (x, y, z) breaking the ideal rule.
/// Throws EmptySet on an empty subset.
std::optional<Witness> find_ideal_violation(UpAlgebra const& alg,
                                            ElementSet const& s);
bool is_ideal(UpAlgebra const& alg, ElementSet const& s);

/// Least (x, y) in s x s with x·y outside s.  Throws EmptySet.
std::optional<Witness> find_subalgebra_violation(UpAlgebra const& alg,
                                                 ElementSet const& s);
bool is_subalgebra(UpAlgebra const& alg, ElementSet const& s);

/// Every ideal, ordered by ascending mask.
std::vector<IdealSet> all_ideals(UpAlgebra const& alg);
/// Every subalgebra, ordered by ascending mask.
std::vector<SubalgebraSet> all_subalgebras(UpAlgebra const& alg);

/// Least ideal containing `seed`, by worklist fixpoint from seed ∪ {0}.
IdealSet generated_ideal(UpAlgebra const& alg, ElementSet const& seed);
/// Least product-closed set containing seed ∪ {0}.
SubalgebraSet generated_subalgebra(UpAlgebra const& alg,
                                   ElementSet const& seed);

/// Checks the sufficient condition for `s` to be an ideal of the
/// subalgebra `b`: 0 in s and (q·(p·x))·x in s for all x in b and p, q in s.
/// Returns the first (x, p, q) violating it.  When the condition holds the
/// conclusion (s is an ideal of b as a standalone algebra) is verified too,
/// and an Error is thrown if it does not.  Throws NotSubset if s ⊄ b.
std::optional<Witness> ideal_criterion_in_subalgebra(SubalgebraSet const& b,
                                                     ElementSet const& s);

/// A subalgebra viewed as an algebra in its own right.  Elements keep their
/// relative order, so index 0 is still the constant.
struct Restriction {
  UpAlgebra algebra;
  std::vector<Element> to_parent;                 // sub index -> parent index
  std::vector<std::optional<Element>> from_parent;  // parent index -> sub index

  ElementSet lift(ElementSet const& sub_set, std::size_t parent_order) const;
  /// Throws NotSubset if `parent_set` leaves the subalgebra.
  ElementSet lower(ElementSet const& parent_set) const;
};

Restriction restrict_to(SubalgebraSet const& s);

}  // namespace upalg
