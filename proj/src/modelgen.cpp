#include "upalg/modelgen.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <future>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include "upalg/morphism.hpp"
#include "upalg/table_io.hpp"

namespace upalg {

namespace {

constexpr Element kUnset = 0xff;
constexpr std::size_t kMaxCensusOrder = 6;

struct PartialTable {
  std::size_t n;
  std::vector<Element> cells;

  Element get(Element x, Element y) const noexcept {
    if (x == kUnset || y == kUnset) {
      return kUnset;
    }
    return cells[static_cast<std::size_t>(x) * n + y];
  }
};

// UP-1 over every triple whose five lookups are all assigned.
bool up1_consistent(PartialTable const& t) {
  auto const n = t.n;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto const xy = t.get(static_cast<Element>(x), static_cast<Element>(y));
      if (xy == kUnset) {
        continue;
      }
      for (std::size_t z = 0; z < n; ++z) {
        auto const yz = t.get(static_cast<Element>(y), static_cast<Element>(z));
        auto const xz = t.get(static_cast<Element>(x), static_cast<Element>(z));
        auto const inner = t.get(xy, xz);
        auto const outer = t.get(yz, inner);
        if (outer != kUnset && outer != 0) {
          return false;
        }
      }
    }
  }
  return true;
}

struct Branch {
  std::uint64_t raw = 0;
  std::set<CanonicalForm> forms;
};

class Search {
 public:
  explicit Search(std::size_t n) : table_{n, std::vector<Element>(n * n, kUnset)} {
    for (std::size_t x = 0; x < n; ++x) {
      table_.cells[x] = static_cast<Element>(x);  // 0·x = x
      table_.cells[x * n] = 0;                    // x·0 = 0
      table_.cells[x * n + x] = 0;                // x·x = 0
    }
    for (std::size_t x = 1; x < n; ++x) {
      for (std::size_t y = 1; y < n; ++y) {
        if (x != y) {
          free_.emplace_back(static_cast<Element>(x), static_cast<Element>(y));
        }
      }
    }
  }

  std::size_t free_cells() const noexcept { return free_.size(); }

  /// Explores the subtree with the first free cell fixed to `first`
  /// (ignored when there are no free cells).
  Branch run(Element first) {
    Branch out;
    if (free_.empty()) {
      accept(out);
      return out;
    }
    if (assign(0, first)) {
      extend(1, out);
    }
    return out;
  }

 private:
  bool assign(std::size_t idx, Element v) {
    auto const [x, y] = free_[idx];
    auto const n = table_.n;
    table_.cells[x * n + y] = v;
    if (v == 0 && table_.cells[y * n + x] == 0) {
      return false;  // UP-4
    }
    return up1_consistent(table_);
  }

  void extend(std::size_t idx, Branch& out) {
    if (idx == free_.size()) {
      accept(out);
      return;
    }
    auto const [x, y] = free_[idx];
    for (std::size_t v = 0; v < table_.n; ++v) {
      if (assign(idx, static_cast<Element>(v))) {
        extend(idx + 1, out);
      }
    }
    table_.cells[x * table_.n + y] = kUnset;
  }

  void accept(Branch& out) {
    CayleyTable t;
    t.names = default_labels(table_.n);
    t.zero = 0;
    t.cells = table_.cells;
    // forced cells and pruning are re-checked by the full validator
    auto const alg = make_algebra(std::move(t));
    ++out.raw;
    out.forms.insert(canonicalize(alg).form);
  }

  PartialTable table_;
  std::vector<std::pair<Element, Element>> free_;
};

}  // namespace

Census enumerate(std::size_t n, EnumerateOptions const& options) {
  if (n == 0 || n > kMaxCensusOrder) {
    throw OrderOutOfRange("census order must lie in [1, 6], got " +
                          std::to_string(n));
  }
  if (n == kMaxCensusOrder && !options.allow_order_six) {
    throw OrderOutOfRange("order 6 requires an explicit opt-in");
  }
  if (n > max_order()) {
    throw OrderCapExceeded("census order exceeds the element cap");
  }
  Census census;
  census.order = n;
  std::vector<Branch> branches;
  if (Search(n).free_cells() == 0) {
    branches.push_back(Search(n).run(0));
  } else {
    // one independent subtree per value of the first free cell
    unsigned const threads = options.threads
                                 ? options.threads
                                 : std::max(1U, std::thread::hardware_concurrency());
    if (threads == 1) {
      for (std::size_t v = 0; v < n; ++v) {
        branches.push_back(Search(n).run(static_cast<Element>(v)));
      }
    } else {
      std::vector<std::future<Branch>> pending;
      for (std::size_t v = 0; v < n; ++v) {
        pending.push_back(std::async(std::launch::async, [n, v] {
          return Search(n).run(static_cast<Element>(v));
        }));
      }
      for (auto& p : pending) {
        branches.push_back(p.get());
      }
    }
  }
  std::set<CanonicalForm> forms;
  for (auto& b : branches) {
    census.raw_count += b.raw;
    forms.merge(b.forms);
  }
  for (auto const& form : forms) {
    CayleyTable t;
    t.names = default_labels(n);
    t.zero = 0;
    t.cells = form.cells;
    census.representatives.push_back(make_algebra(std::move(t)));
  }
  return census;
}

void write_census(std::filesystem::path const& dir, Census const& census) {
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < census.representatives.size(); ++i) {
    std::ostringstream name;
    name << "up_n" << census.order << '_' << std::setw(3) << std::setfill('0')
         << (i + 1) << ".tbl";
    write_algebra(dir / name.str(), census.representatives[i]);
  }
  auto index = read_census_index(dir);
  index[census.order] = {census.raw_count, census.iso_count()};
  std::ofstream out(dir / "census-index.txt");
  if (!out) {
    throw Error("cannot write " + (dir / "census-index.txt").string());
  }
  out << "# counts computed by exhaustive search; no published reference\n";
  for (auto const& [order, entry] : index) {
    out << "n=" << order << " raw=" << entry.raw << " iso=" << entry.iso << '\n';
  }
}

std::map<std::size_t, CensusIndexEntry> read_census_index(
    std::filesystem::path const& dir) {
  std::map<std::size_t, CensusIndexEntry> index;
  auto const path = dir / "census-index.txt";
  std::ifstream in(path);
  if (!in) {
    return index;
  }
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line.front() == '#') {
      continue;
    }
    std::size_t order = 0;
    CensusIndexEntry entry;
    char trailing = 0;
    if (std::sscanf(line.c_str(), "n=%zu raw=%" SCNu64 " iso=%zu %c", &order,
                    &entry.raw, &entry.iso, &trailing) != 3) {
      throw ParseError(path.string(), number, "malformed census index line");
    }
    index[order] = entry;
  }
  return index;
}

namespace {

constexpr std::size_t kMaxUniverse = 4;

std::string subset_label(std::size_t mask, std::size_t m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m; ++i) {
    if (mask & (std::size_t{1} << i)) {
      out += static_cast<char>('1' + i);
    }
  }
  return out + "}";
}

template <typename Op>
UpAlgebra power_algebra(std::size_t m, std::size_t zero_mask, Op op) {
  if (m > kMaxUniverse) {
    throw OrderOutOfRange("universe size must be at most 4, got " +
                          std::to_string(m));
  }
  auto const size = std::size_t{1} << m;
  CayleyTable t;
  t.zero = static_cast<Element>(zero_mask);
  for (std::size_t a = 0; a < size; ++a) {
    t.names.push_back(subset_label(a, m));
  }
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      t.cells.push_back(static_cast<Element>(op(a, b) & (size - 1)));
    }
  }
  return make_algebra(std::move(t));
}

}  // namespace

UpAlgebra power_type1(std::size_t m) {
  return power_algebra(m, 0, [](std::size_t a, std::size_t b) { return b & ~a; });
}

UpAlgebra power_type2(std::size_t m) {
  auto const full = (std::size_t{1} << std::min(m, kMaxUniverse)) - 1;
  return power_algebra(m, full, [](std::size_t a, std::size_t b) { return b | ~a; });
}

UpAlgebra builtin(std::string_view name) {
  if (name == "paper4") {
    return make_algebra({"0", "a", "b", "c"}, 0,
                        {{0, 1, 2, 3},
                         {0, 0, 0, 0},
                         {0, 1, 0, 3},
                         {0, 1, 2, 0}});
  }
  if (name == "paper5") {
    return make_algebra({"0", "a", "b", "c", "d"}, 0,
                        {{0, 1, 2, 3, 4},
                         {0, 0, 2, 3, 4},
                         {0, 0, 0, 3, 4},
                         {0, 0, 2, 0, 4},
                         {0, 0, 0, 0, 0}});
  }
  throw UnknownName("unknown built-in algebra '" + std::string(name) +
                    "'; known: paper4, paper5");
}

std::vector<std::string> builtin_names() { return {"paper4", "paper5"}; }

}  // namespace upalg
