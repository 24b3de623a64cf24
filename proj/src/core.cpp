#include "upalg/core.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>
#include <unordered_set>

namespace upalg {

namespace {

std::atomic<std::size_t> g_max_order{kDefaultMaxOrder};

bool is_valid_label(std::string_view s) {
  if (s.empty() || s.front() == '#') {
    return false;
  }
  return std::none_of(s.begin(), s.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == ',';
  });
}

// Raw loops over a table view; kept as templates on the lookup so the
// validated and unvalidated paths share one implementation.
template <typename Mul>
std::optional<Witness> first_up1_failure(std::size_t n, Element zero, Mul mul) {
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto const xy = mul(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        if (mul(mul(y, z), mul(xy, mul(x, z))) != zero) {
          return Witness::of(static_cast<Element>(x), static_cast<Element>(y),
                             static_cast<Element>(z));
        }
      }
    }
  }
  return std::nullopt;
}

template <typename Mul>
std::optional<Witness> first_up4_failure(std::size_t n, Element zero, Mul mul) {
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && mul(x, y) == zero && mul(y, x) == zero) {
        return Witness::of(static_cast<Element>(x), static_cast<Element>(y));
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::size_t max_order() noexcept { return g_max_order.load(); }

void set_max_order(std::size_t n) {
  if (n < 1 || n > kAbsoluteMaxOrder) {
    throw OrderOutOfRange("element cap must lie in [1, " +
                          std::to_string(kAbsoluteMaxOrder) + "], got " +
                          std::to_string(n));
  }
  g_max_order.store(n);
}

CayleyTable CayleyTable::from_rows(
    std::vector<std::string> names, Element zero,
    std::vector<std::vector<Element>> const& rows) {
  CayleyTable t;
  auto const n = names.size();
  if (rows.size() != n) {
    throw MalformedTable("table has " + std::to_string(rows.size()) +
                         " rows for " + std::to_string(n) + " elements");
  }
  t.names = std::move(names);
  t.zero = zero;
  t.cells.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) {
      throw MalformedTable("row " + std::to_string(r) + " has " +
                           std::to_string(rows[r].size()) + " entries, expected " +
                           std::to_string(n));
    }
    t.cells.insert(t.cells.end(), rows[r].begin(), rows[r].end());
  }
  return t;
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) {
      out.emplace_back("0");
    } else if (i <= 26) {
      out.emplace_back(1, static_cast<char>('a' + i - 1));
    } else {
      out.push_back("e" + std::to_string(i));
    }
  }
  return out;
}

void check_well_formed(CayleyTable const& t) {
  auto const n = t.order();
  if (n == 0) {
    throw MalformedTable("carrier must be nonempty");
  }
  if (n > max_order()) {
    throw OrderCapExceeded("order " + std::to_string(n) +
                           " exceeds the element cap " +
                           std::to_string(max_order()));
  }
  if (t.cells.size() != n * n) {
    throw MalformedTable("table has " + std::to_string(t.cells.size()) +
                         " cells, expected " + std::to_string(n * n));
  }
  if (t.zero >= n) {
    throw MalformedTable("constant index " + std::to_string(t.zero) +
                         " out of range");
  }
  std::unordered_set<std::string_view> seen;
  for (auto const& name : t.names) {
    if (!is_valid_label(name)) {
      throw MalformedTable("invalid element label '" + name + "'");
    }
    if (!seen.insert(name).second) {
      throw MalformedTable("duplicate element label '" + name + "'");
    }
  }
  for (std::size_t i = 0; i < t.cells.size(); ++i) {
    if (t.cells[i] >= n) {
      throw MalformedTable("entry (" + std::to_string(i / n) + "," +
                           std::to_string(i % n) + ") = " +
                           std::to_string(t.cells[i]) + " is not an element");
    }
  }
}

CayleyTable normalize(CayleyTable t) {
  if (t.zero == 0) {
    return t;
  }
  auto const n = t.order();
  // new index -> old index: the constant first, everything else in order
  std::vector<Element> old_of(n);
  std::vector<Element> new_of(n);
  old_of[0] = t.zero;
  for (std::size_t old = 0, next = 1; old < n; ++old) {
    if (old != t.zero) {
      old_of[next++] = static_cast<Element>(old);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    new_of[old_of[i]] = static_cast<Element>(i);
  }
  CayleyTable out;
  out.zero = 0;
  out.names.resize(n);
  out.cells.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    out.names[i] = t.names[old_of[i]];
    for (std::size_t j = 0; j < n; ++j) {
      out.at(i, j) = new_of[t.at(old_of[i], old_of[j])];
    }
  }
  return out;
}

std::string format_witness(std::span<const std::string> names,
                           Witness const& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.arity; ++i) {
    if (i > 0) {
      out += ',';
    }
    out += w.at[i] < names.size() ? names[w.at[i]] : std::to_string(w.at[i]);
  }
  return out + ")";
}

std::string_view axiom_name(Axiom a) noexcept {
  switch (a) {
    case Axiom::Up1: return "UP-1";
    case Axiom::Up2: return "UP-2";
    case Axiom::Up3: return "UP-3";
    case Axiom::Up4: return "UP-4";
    case Axiom::ZeroUnit: return "ZERO-UNIT";
  }
  return "?";
}

std::string_view axiom_statement(Axiom a) noexcept {
  switch (a) {
    case Axiom::Up1: return "(y*z)*((x*y)*(x*z)) = 0";
    case Axiom::Up2: return "0*x = x";
    case Axiom::Up3: return "x*0 = 0";
    case Axiom::Up4: return "x*y = y*x = 0 implies x = y";
    case Axiom::ZeroUnit: return "(y*0)*x = x";
  }
  return "?";
}

std::optional<Witness> check_axiom(CayleyTable const& t, Axiom which) {
  auto const n = t.order();
  auto const zero = t.zero;
  auto mul = [&t](std::size_t x, std::size_t y) { return t.at(x, y); };
  switch (which) {
    case Axiom::Up1:
      return first_up1_failure(n, zero, mul);
    case Axiom::Up2:
      for (std::size_t x = 0; x < n; ++x) {
        if (t.at(zero, x) != x) {
          return Witness::of(static_cast<Element>(x));
        }
      }
      return std::nullopt;
    case Axiom::Up3:
      for (std::size_t x = 0; x < n; ++x) {
        if (t.at(x, zero) != zero) {
          return Witness::of(static_cast<Element>(x));
        }
      }
      return std::nullopt;
    case Axiom::Up4:
      return first_up4_failure(n, zero, mul);
    case Axiom::ZeroUnit:
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (t.at(t.at(y, zero), x) != x) {
            return Witness::of(static_cast<Element>(x),
                               static_cast<Element>(y));
          }
        }
      }
      return std::nullopt;
  }
  return std::nullopt;
}

ValidationReport validate(CayleyTable const& t) {
  ValidationReport report;
  try {
    check_well_formed(t);
  } catch (Error const& e) {
    report.malformed = e.what();
    return report;
  }
  for (auto a : {Axiom::Up1, Axiom::Up2, Axiom::Up3, Axiom::Up4}) {
    if (auto w = check_axiom(t, a)) {
      report.failures.push_back({a, *w});
    }
  }
  return report;
}

std::optional<AxiomFailure> check_alt_axiomatization(CayleyTable const& t) {
  for (auto a : {Axiom::Up1, Axiom::ZeroUnit, Axiom::Up4}) {
    if (auto w = check_axiom(t, a)) {
      return AxiomFailure{a, *w};
    }
  }
  return std::nullopt;
}

namespace {

std::string describe(CayleyTable const& t, ValidationReport const& r) {
  std::ostringstream os;
  os << "not a UP-algebra:";
  for (auto const& f : r.failures) {
    os << ' ' << axiom_name(f.axiom) << " fails at "
       << format_witness(t.names, f.witness) << ';';
  }
  return os.str();
}

}  // namespace

AxiomViolation::AxiomViolation(CayleyTable table, ValidationReport report)
    : Error(describe(table, report)),
      table_(std::move(table)),
      report_(std::move(report)) {}

std::optional<Element> UpAlgebra::find(std::string_view label) const noexcept {
  auto const& names = data_->names;
  auto it = std::find(names.begin(), names.end(), label);
  if (it == names.end()) {
    return std::nullopt;
  }
  return static_cast<Element>(it - names.begin());
}

UpAlgebra make_algebra(CayleyTable t) {
  check_well_formed(t);
  auto report = validate(t);
  if (!report.ok()) {
    throw AxiomViolation(std::move(t), std::move(report));
  }
  return UpAlgebra(normalize(std::move(t)));
}

UpAlgebra make_algebra(std::vector<std::string> names, Element zero,
                       std::vector<std::vector<Element>> const& rows) {
  return make_algebra(CayleyTable::from_rows(std::move(names), zero, rows));
}

UpAlgebra trivial_algebra() { return make_algebra({"0"}, 0, {{0}}); }

bool DerivedLawReport::all_hold() const noexcept {
  return std::all_of(failures.begin(), failures.end(),
                     [](auto const& f) { return !f.has_value(); });
}

std::string_view DerivedLawReport::statement(std::size_t law) noexcept {
  static constexpr std::array<std::string_view, kLawCount> kStatements = {
      "x*x = 0",
      "x*y = 0 and y*z = 0 imply x*z = 0",
      "x*y = 0 implies (z*x)*(z*y) = 0",
      "x*y = 0 implies (y*z)*(x*z) = 0",
      "x*(y*x) = 0",
      "(y*x)*x = 0 iff x = y*x",
      "x*(y*y) = 0",
  };
  return law < kLawCount ? kStatements[law] : "?";
}

DerivedLawReport derived_laws(UpAlgebra const& alg) {
  DerivedLawReport r;
  auto const n = alg.order();
  auto m = [&alg](std::size_t x, std::size_t y) {
    return alg.mul(static_cast<Element>(x), static_cast<Element>(y));
  };
  auto record = [&r](std::size_t law, Witness w) {
    if (!r.failures[law]) {
      r.failures[law] = w;
    }
  };
  for (std::size_t x = 0; x < n; ++x) {
    auto const ex = static_cast<Element>(x);
    if (m(x, x) != 0) {
      record(0, Witness::of(ex));
    }
    for (std::size_t y = 0; y < n; ++y) {
      auto const ey = static_cast<Element>(y);
      if (m(x, m(y, x)) != 0) {
        record(4, Witness::of(ex, ey));
      }
      if ((m(m(y, x), x) == 0) != (x == m(y, x))) {
        record(5, Witness::of(ex, ey));
      }
      if (m(x, m(y, y)) != 0) {
        record(6, Witness::of(ex, ey));
      }
      for (std::size_t z = 0; z < n; ++z) {
        auto const w = Witness::of(ex, ey, static_cast<Element>(z));
        if (m(x, y) == 0 && m(y, z) == 0 && m(x, z) != 0) {
          record(1, w);
        }
        if (m(x, y) == 0 && m(m(z, x), m(z, y)) != 0) {
          record(2, w);
        }
        if (m(x, y) == 0 && m(m(y, z), m(x, z)) != 0) {
          record(3, w);
        }
      }
    }
  }
  return r;
}

bool PosetView::is_partial_order() const {
  auto const n = order();
  for (std::size_t x = 0; x < n; ++x) {
    auto const ex = static_cast<Element>(x);
    if (!leq(ex, ex)) {
      return false;
    }
    for (auto y : above_[x]) {
      if (y != x && leq(y, ex)) {
        return false;
      }
      if (!above_[y].is_subset_of(above_[x])) {
        return false;
      }
    }
  }
  return true;
}

std::optional<Element> PosetView::greatest() const {
  auto const n = order();
  for (std::size_t g = 0; g < n; ++g) {
    bool top = true;
    for (std::size_t x = 0; x < n && top; ++x) {
      top = leq(static_cast<Element>(x), static_cast<Element>(g));
    }
    if (top) {
      return static_cast<Element>(g);
    }
  }
  return std::nullopt;
}

std::vector<std::pair<Element, Element>> PosetView::covers() const {
  std::vector<std::pair<Element, Element>> out;
  auto const n = order();
  for (std::size_t x = 0; x < n; ++x) {
    for (auto y : above_[x]) {
      if (y == x) {
        continue;
      }
      bool between = false;
      for (auto z : above_[x]) {
        if (z != x && z != y && leq(z, y)) {
          between = true;
          break;
        }
      }
      if (!between) {
        out.emplace_back(static_cast<Element>(x), y);
      }
    }
  }
  return out;
}

PosetView up_ordering(UpAlgebra const& alg) {
  auto const n = alg.order();
  std::vector<ElementSet> above(n, ElementSet(n));
  for (std::size_t x = 0; x < n; ++x) {
    auto const row = alg.row(static_cast<Element>(x));
    for (std::size_t y = 0; y < n; ++y) {
      if (row[y] == 0) {
        above[x].insert(y);
      }
    }
  }
  return PosetView(std::move(above));
}

std::string format_set(UpAlgebra const& alg, ElementSet const& s) {
  std::string out = "{";
  bool first = true;
  for (auto e : s) {
    if (!first) {
      out += ", ";
    }
    first = false;
    out += alg.name(e);
  }
  return out + "}";
}

ElementSet parse_set(UpAlgebra const& alg, std::string_view labels) {
  ElementSet s = alg.empty_set();
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) {
      v.remove_prefix(1);
    }
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) {
      v.remove_suffix(1);
    }
    return v;
  };
  labels = trim(labels);
  if (labels.size() >= 2 && labels.front() == '{' && labels.back() == '}') {
    labels = trim(labels.substr(1, labels.size() - 2));
  }
  while (!labels.empty()) {
    auto const comma = labels.find(',');
    auto const token = trim(labels.substr(0, comma));
    if (token.empty()) {
      throw UnknownName("empty element label in list");
    }
    auto e = alg.find(token);
    if (!e) {
      throw UnknownName("unknown element label '" + std::string(token) + "'");
    }
    s.insert(*e);
    if (comma == std::string_view::npos) {
      break;
    }
    labels.remove_prefix(comma + 1);
    if (trim(labels).empty()) {
      throw UnknownName("trailing comma in element list");
    }
  }
  return s;
}

}  // namespace upalg
