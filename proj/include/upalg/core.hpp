#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "upalg/element_set.hpp"
#include "upalg/errors.hpp"

namespace upalg {

/// Default element cap: every ElementSet of a capped carrier fits one word.
inline constexpr std::size_t kDefaultMaxOrder = 16;

/// Current cap on carrier size.  Raising it above 64 switches ElementSet to
/// its multi-word representation.
std::size_t max_order() noexcept;
void set_max_order(std::size_t n);

/// Raw, unvalidated Cayley table.  `cells` is row-major: cells[x*n + y]
/// holds x·y.
struct CayleyTable {
  std::vector<std::string> names;
  Element zero = 0;
  std::vector<Element> cells;

  std::size_t order() const noexcept { return names.size(); }
  Element at(std::size_t x, std::size_t y) const noexcept {
    return cells[x * names.size() + y];
  }
  Element& at(std::size_t x, std::size_t y) noexcept {
    return cells[x * names.size() + y];
  }

  static CayleyTable from_rows(std::vector<std::string> names, Element zero,
                               std::vector<std::vector<Element>> const& rows);

  friend bool operator==(CayleyTable const&, CayleyTable const&) = default;
};

/// "0", "a", "b", ... used whenever a table is generated rather than read.
std::vector<std::string> default_labels(std::size_t n);

/// Throws MalformedTable unless the table is n x n over [0, n) with n >= 1,
/// labels are usable in the text format, and n is within the cap.
void check_well_formed(CayleyTable const& t);

/// Relabels so the constant sits at index 0; other elements keep their
/// relative order.
CayleyTable normalize(CayleyTable t);

/// Concrete counterexample to a universally quantified law.  Only the first
/// `arity` entries are meaningful; they are listed in quantifier order.
struct Witness {
  std::array<Element, 3> at{};
  std::size_t arity = 0;

  static Witness of(Element x) { return {{x, 0, 0}, 1}; }
  static Witness of(Element x, Element y) { return {{x, y, 0}, 2}; }
  static Witness of(Element x, Element y, Element z) { return {{x, y, z}, 3}; }

  friend bool operator==(Witness const&, Witness const&) = default;
};

/// "(a,b,c)" using the supplied labels.
std::string format_witness(std::span<const std::string> names,
                           Witness const& w);

enum class Axiom {
  Up1,       // (y·z)·((x·y)·(x·z)) = 0
  Up2,       // 0·x = x
  Up3,       // x·0 = 0
  Up4,       // x·y = y·x = 0 implies x = y
  ZeroUnit,  // (y·0)·x = x, the replacement for Up2/Up3
};

std::string_view axiom_name(Axiom a) noexcept;
std::string_view axiom_statement(Axiom a) noexcept;

struct AxiomFailure {
  Axiom axiom;
  Witness witness;
  friend bool operator==(AxiomFailure const&, AxiomFailure const&) = default;
};

struct ValidationReport {
  std::optional<std::string> malformed;
  std::vector<AxiomFailure> failures;

  bool ok() const noexcept { return !malformed && failures.empty(); }
};

/// Exhaustive check of one axiom; returns the lexicographically first
/// witness on failure.  Variables are enumerated as (x, y, z) with z
/// fastest.  The table must be total.
std::optional<Witness> check_axiom(CayleyTable const& t, Axiom which);

/// Every violated axiom of UP-1 .. UP-4, in axiom order.
ValidationReport validate(CayleyTable const& t);

/// Checks {UP-1, (y·0)·x = x, UP-4}; returns the first failing condition.
std::optional<AxiomFailure> check_alt_axiomatization(CayleyTable const& t);

class UpAlgebra;

class AxiomViolation : public Error {
 public:
  AxiomViolation(CayleyTable table, ValidationReport report);
  CayleyTable const& table() const noexcept { return table_; }
  ValidationReport const& report() const noexcept { return report_; }

 private:
  CayleyTable table_;
  ValidationReport report_;
};

/// Immutable validated UP-algebra with the constant at index 0.
///
/// Copies share the underlying table, so values are cheap to pass around
/// and safe to read from several threads.
class UpAlgebra {
 public:
  std::size_t order() const noexcept { return data_->order(); }
  Element mul(Element x, Element y) const noexcept {
    return data_->cells[static_cast<std::size_t>(x) * data_->order() + y];
  }
  std::span<const Element> row(Element x) const noexcept {
    return {data_->cells.data() + static_cast<std::size_t>(x) * order(),
            order()};
  }
  CayleyTable const& table() const noexcept { return *data_; }
  std::vector<std::string> const& names() const noexcept {
    return data_->names;
  }
  std::string const& name(Element e) const noexcept { return data_->names[e]; }
  std::optional<Element> find(std::string_view label) const noexcept;

  ElementSet carrier() const { return ElementSet::full(order()); }
  ElementSet empty_set() const { return ElementSet(order()); }

  /// True when both are the same table (labels included).
  friend bool operator==(UpAlgebra const& a, UpAlgebra const& b) noexcept {
    return a.data_ == b.data_ || *a.data_ == *b.data_;
  }

 private:
  explicit UpAlgebra(CayleyTable t)
      : data_(std::make_shared<const CayleyTable>(std::move(t))) {}
  friend UpAlgebra make_algebra(CayleyTable t);

  std::shared_ptr<const CayleyTable> data_;
};

/// Validates and normalizes.  Throws MalformedTable or AxiomViolation.
UpAlgebra make_algebra(CayleyTable t);
UpAlgebra make_algebra(std::vector<std::string> names, Element zero,
                       std::vector<std::vector<Element>> const& rows);

UpAlgebra trivial_algebra();

/// Results of the seven laws every UP-algebra satisfies.
struct DerivedLawReport {
  static constexpr std::size_t kLawCount = 7;
  std::array<std::optional<Witness>, kLawCount> failures;

  bool all_hold() const noexcept;
  static std::string_view statement(std::size_t law) noexcept;
};

DerivedLawReport derived_laws(UpAlgebra const& alg);

/// x <= y iff x·y = 0.  Row x lists every y above x.
class PosetView {
 public:
  explicit PosetView(std::vector<ElementSet> above)
      : above_(std::move(above)) {}

  std::size_t order() const noexcept { return above_.size(); }
  bool leq(Element x, Element y) const noexcept {
    return above_[x].contains(y);
  }
  ElementSet const& above(Element x) const noexcept { return above_[x]; }

  bool is_partial_order() const;
  /// The unique element above everything, if any.
  std::optional<Element> greatest() const;
  /// Pairs (x, y) with x < y and nothing strictly between.
  std::vector<std::pair<Element, Element>> covers() const;

 private:
  std::vector<ElementSet> above_;
};

PosetView up_ordering(UpAlgebra const& alg);

/// "{a, b}" in element index order.
std::string format_set(UpAlgebra const& alg, ElementSet const& s);

/// Label list "a,b,c" -> set.  Throws UnknownName on an unknown label.
ElementSet parse_set(UpAlgebra const& alg, std::string_view labels);

}  // namespace upalg
