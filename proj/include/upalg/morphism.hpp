#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "upalg/checklist.hpp"
#include "upalg/core.hpp"

namespace upalg {

/// A map between two algebras that preserves the product.  Kernel and
/// image are computed once at construction.
class Morphism {
 public:
  UpAlgebra const& source() const noexcept { return source_; }
  UpAlgebra const& target() const noexcept { return target_; }
  std::span<const Element> map() const noexcept { return map_; }
  Element operator()(Element x) const noexcept { return map_[x]; }

  ElementSet const& kernel() const noexcept { return kernel_; }
  ElementSet const& image() const noexcept { return image_; }

  bool injective() const noexcept { return image_.size() == map_.size(); }
  bool surjective() const noexcept { return image_.size() == target_.order(); }
  bool bijective() const noexcept { return injective() && surjective(); }

  /// f(S) in the target.
  ElementSet image_of(ElementSet const& s) const;
  /// f⁻¹(T) in the source.
  ElementSet preimage_of(ElementSet const& t) const;

  friend bool operator==(Morphism const& a, Morphism const& b) noexcept {
    return a.map_ == b.map_ && a.source_ == b.source_ &&
           a.target_ == b.target_;
  }

 private:
  Morphism(UpAlgebra source, UpAlgebra target, std::vector<Element> map);
  friend Morphism make_morphism(UpAlgebra const&, UpAlgebra const&,
                                std::vector<Element>);

  UpAlgebra source_;
  UpAlgebra target_;
  std::vector<Element> map_;
  ElementSet kernel_;
  ElementSet image_;
};

class HomViolation : public Error {
 public:
  HomViolation(std::string const& what, Witness w) : Error(what), witness_(w) {}
  Witness const& witness() const noexcept { return witness_; }

 private:
  Witness witness_;
};

/// First (x, y) in lexicographic order with f(x·y) != f(x)·f(y).  Throws
/// PreconditionViolation if `map` is not a total map into the target.
std::optional<Witness> find_hom_violation(UpAlgebra const& src,
                                          UpAlgebra const& dst,
                                          std::span<const Element> map);

/// Throws HomViolation (or PreconditionViolation for a malformed map).
Morphism make_morphism(UpAlgebra const& src, UpAlgebra const& dst,
                       std::vector<Element> map);

Morphism identity(UpAlgebra const& alg);
/// x ↦ 0 for every x.
Morphism zero_map(UpAlgebra const& src, UpAlgebra const& dst);

/// g ∘ f.  Throws NotComposable unless f.target() == g.source().
Morphism compose(Morphism const& f, Morphism const& g);
/// Throws NotBijective.
Morphism inverse(Morphism const& f);

/// Instance-wise check of the seven standard homomorphism properties:
/// constant, order, images/preimages of subalgebras and ideals, and
/// trivial kernel iff injective.
Checklist hom_properties(Morphism const& f);

/// Every homomorphism src -> dst, sorted by map.  The search fixes
/// f(0) = 0 and extends the map in ascending element order, rejecting a
/// partial map as soon as a product among assigned elements disagrees.
std::vector<Morphism> enumerate_homs(UpAlgebra const& src,
                                     UpAlgebra const& dst);

/// "0↦0 a↦b ..." in source index order.
std::string format_morphism(Morphism const& f);

/// Lexicographically least row-major Cayley table over all relabelings
/// that fix the constant.
struct CanonicalForm {
  std::size_t order = 0;
  std::vector<Element> cells;

  friend bool operator==(CanonicalForm const&, CanonicalForm const&) = default;
  friend auto operator<=>(CanonicalForm const&, CanonicalForm const&) = default;
};

struct Canonization {
  CanonicalForm form;
  std::vector<Element> relabel;  // element -> index in the canonical table
};

/// Branch-and-bound over the (n-1)! relabelings fixing 0: a partial
/// relabeling is abandoned as soon as the determined prefix of row 1 is
/// provably larger than the best table found.
Canonization canonicalize(UpAlgebra const& alg);

/// The canonical table as an algebra with default labels.
UpAlgebra canonical_algebra(UpAlgebra const& alg);

/// Relabeling invariant used to reject most non-isomorphic pairs before
/// canonicalization.
struct Fingerprint {
  std::size_t order = 0;
  std::vector<std::array<std::size_t, 4>> element_profiles;  // sorted
  std::size_t ideal_count = 0;
  std::size_t subalgebra_count = 0;

  friend bool operator==(Fingerprint const&, Fingerprint const&) = default;
};

Fingerprint fingerprint(UpAlgebra const& alg);

/// An explicit isomorphism a -> b, checked in both directions, or nullopt.
std::optional<Morphism> is_isomorphic(UpAlgebra const& a, UpAlgebra const& b);

/// Applies a permutation (old index -> new index) that fixes 0.  Labels
/// travel with their elements.
UpAlgebra relabel(UpAlgebra const& alg, std::span<const Element> perm);

}  // namespace upalg
