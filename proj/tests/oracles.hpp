// Brute-force reference implementations shared by the unit and acceptance
// tests.  Each one is written directly from the definitions and avoids the
// library's pruning, closure and canonization code.
#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "upalg/core.hpp"
#include "upalg/modelgen.hpp"

namespace oracle {

using upalg::Element;
using upalg::ElementSet;
using upalg::UpAlgebra;

inline ElementSet set_of(UpAlgebra const& alg, std::uint64_t mask) {
  return ElementSet::from_mask(alg.order(), mask);
}

/// Definition of an ideal, scanned over every triple.
inline bool is_ideal(UpAlgebra const& alg, std::uint64_t mask) {
  auto in = [mask](Element e) { return (mask >> e) & 1U; };
  auto const n = alg.order();
  if (!in(0)) {
    return false;
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (in(alg.mul(x, alg.mul(y, z))) && in(y) && !in(alg.mul(x, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool is_subalgebra(UpAlgebra const& alg, std::uint64_t mask) {
  auto in = [mask](Element e) { return (mask >> e) & 1U; };
  if (!in(0)) {
    return false;
  }
  for (Element x = 0; x < alg.order(); ++x) {
    for (Element y = 0; y < alg.order(); ++y) {
      if (in(x) && in(y) && !in(alg.mul(x, y))) {
        return false;
      }
    }
  }
  return true;
}

/// Intersection of every ideal containing the seed.
inline std::uint64_t generated_ideal(UpAlgebra const& alg, std::uint64_t seed) {
  auto const full = (std::uint64_t{1} << alg.order()) - 1;
  std::uint64_t meet = full;
  for (std::uint64_t m = 0; m <= full; ++m) {
    if ((m & seed) == seed && is_ideal(alg, m)) {
      meet &= m;
    }
  }
  return meet;
}

/// Every map src -> dst preserving the product, found by trying all maps.
inline std::set<std::vector<Element>> homs(UpAlgebra const& src,
                                           UpAlgebra const& dst) {
  std::set<std::vector<Element>> out;
  auto const m = src.order();
  auto const k = dst.order();
  std::vector<Element> f(m, 0);
  while (true) {
    bool ok = true;
    for (Element x = 0; x < m && ok; ++x) {
      for (Element y = 0; y < m && ok; ++y) {
        ok = f[src.mul(x, y)] == dst.mul(f[x], f[y]);
      }
    }
    if (ok) {
      out.insert(f);
    }
    std::size_t i = 0;
    while (i < m && ++f[i] == k) {
      f[i++] = 0;
    }
    if (i == m) {
      return out;
    }
  }
}

/// Least relabeled table over all permutations fixing 0.
inline std::vector<Element> canonical_cells(upalg::CayleyTable const& t) {
  auto const n = t.order();
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::vector<Element> best;
  do {
    // perm maps old -> new
    std::vector<Element> cells(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        cells[perm[x] * n + perm[y]] = perm[t.at(x, y)];
      }
    }
    if (best.empty() || cells < best) {
      best = std::move(cells);
    }
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

/// Every table over {0..n-1} with constant 0 that passes the axioms, by a
/// plain odometer over all n^(n*n) tables.  Practical for n <= 3.
inline std::vector<upalg::CayleyTable> all_tables(std::size_t n) {
  std::vector<upalg::CayleyTable> out;
  upalg::CayleyTable t;
  t.names = upalg::default_labels(n);
  t.zero = 0;
  t.cells.assign(n * n, 0);
  while (true) {
    if (upalg::validate(t).ok()) {
      out.push_back(t);
    }
    std::size_t i = 0;
    while (i < t.cells.size() && ++t.cells[i] == n) {
      t.cells[i++] = 0;
    }
    if (i == t.cells.size()) {
      return out;
    }
  }
}

/// Census representatives for orders 1..max_n, computed once.
inline std::vector<UpAlgebra> const& census_up_to(std::size_t max_n) {
  static std::map<std::size_t, std::vector<UpAlgebra>> cache;
  auto& slot = cache[max_n];
  if (slot.empty()) {
    for (std::size_t n = 1; n <= max_n; ++n) {
      auto const c = upalg::enumerate(n);
      slot.insert(slot.end(), c.representatives.begin(),
                  c.representatives.end());
    }
  }
  return slot;
}

/// Checks the DOT subset we emit against the grammar
///   graph  := 'digraph' ID '{' stmt* '}'
///   stmt   := ID '=' ID ';' | 'node' '[' ID '=' ID ']' ';'
///           | ID ';' | ID '->' ID ';'
/// with ID an identifier, a number, or a double-quoted string.
/// Returns the edges found, or nothing if the text does not parse.
struct DotGraph {
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
};

inline std::optional<DotGraph> parse_dot(std::string const& text) {
  std::vector<std::string> tok;
  std::vector<bool> is_id;
  for (std::size_t i = 0; i < text.size();) {
    char const c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '"') {
      std::string s;
      ++i;
      while (i < text.size() && text[i] != '"') {
        if (text[i] == '\\' && i + 1 < text.size()) {
          ++i;
        }
        s += text[i++];
      }
      if (i == text.size()) {
        return std::nullopt;
      }
      ++i;
      tok.push_back(s);
      is_id.push_back(true);
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::string s;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_' ||
              text[i] == '.')) {
        s += text[i++];
      }
      tok.push_back(s);
      is_id.push_back(true);
    } else if (text.compare(i, 2, "->") == 0) {
      tok.emplace_back("->");
      is_id.push_back(false);
      i += 2;
    } else if (std::string("{}[];=").find(c) != std::string::npos) {
      tok.emplace_back(1, c);
      is_id.push_back(false);
      ++i;
    } else {
      return std::nullopt;
    }
  }
  std::size_t p = 0;
  auto id = [&]() -> std::optional<std::string> {
    if (p < tok.size() && is_id[p]) {
      return tok[p++];
    }
    return std::nullopt;
  };
  auto punct = [&](std::string const& s) {
    if (p < tok.size() && !is_id[p] && tok[p] == s) {
      ++p;
      return true;
    }
    return false;
  };
  if (!(p < tok.size() && is_id[p] && tok[p] == "digraph")) {
    return std::nullopt;
  }
  ++p;
  if (!id() || !punct("{")) {
    return std::nullopt;
  }
  DotGraph g;
  while (!punct("}")) {
    if (p < tok.size() && is_id[p] && tok[p] == "node") {
      ++p;
      if (!punct("[") || !id() || !punct("=") || !id() || !punct("]") ||
          !punct(";")) {
        return std::nullopt;
      }
      continue;
    }
    auto const a = id();
    if (!a) {
      return std::nullopt;
    }
    if (punct("=")) {
      if (!id() || !punct(";")) {
        return std::nullopt;
      }
    } else if (punct("->")) {
      auto const b = id();
      if (!b || !punct(";")) {
        return std::nullopt;
      }
      g.edges.emplace_back(*a, *b);
    } else if (punct(";")) {
      g.nodes.push_back(*a);
    } else {
      return std::nullopt;
    }
  }
  if (p != tok.size()) {
    return std::nullopt;
  }
  return g;
}

}  // namespace oracle
