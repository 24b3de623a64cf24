#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "upalg/core.hpp"

namespace upalg {

/// UP-algebras of one order, up to isomorphism.
struct Census {
  std::size_t order = 0;
  /// Canonical tables with default labels, in ascending table order.
  std::vector<UpAlgebra> representatives;
  /// Accepted labelled tables with the constant at index 0.
  std::uint64_t raw_count = 0;

  std::size_t iso_count() const noexcept { return representatives.size(); }
};

struct EnumerateOptions {
  bool allow_order_six = false;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Fixes row 0, column 0 and the diagonal, then fills the remaining
/// (n-1)(n-2) cells in row-major order, rejecting a partial table as soon
/// as UP-1 or UP-4 fails on its assigned cells.  Accepted tables are
/// re-validated and deduplicated by canonical form.  Throws
/// OrderOutOfRange for n = 0, n > 6, or n = 6 without the opt-in.
Census enumerate(std::size_t n, EnumerateOptions const& options = {});

/// Writes up_n<order>_<seq>.tbl per representative and updates the
/// census-index.txt line for this order.
void write_census(std::filesystem::path const& dir, Census const& census);

struct CensusIndexEntry {
  std::uint64_t raw = 0;
  std::size_t iso = 0;
  friend bool operator==(CensusIndexEntry const&, CensusIndexEntry const&) = default;
};

/// Lines "n=<order> raw=<count> iso=<count>" after '#' comments; a missing
/// file is empty.
std::map<std::size_t, CensusIndexEntry> read_census_index(
    std::filesystem::path const& dir);

/// Power set of an m-set under B - A, constant ∅.  m <= 4.
UpAlgebra power_type1(std::size_t m);
/// Power set of an m-set under B ∪ A', constant the full set.  m <= 4.
UpAlgebra power_type2(std::size_t m);

/// "paper4" and "paper5": the 4- and 5-element example tables.
UpAlgebra builtin(std::string_view name);
std::vector<std::string> builtin_names();

}  // namespace upalg
