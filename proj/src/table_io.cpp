#include "upalg/table_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace upalg {

namespace {

constexpr std::string_view kHeader = "upalg v1";

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ss(raw);
    Line line{number, {}};
    std::string tok;
    while (ss >> tok) {
      line.tokens.push_back(std::move(tok));
    }
    if (line.tokens.empty() || line.tokens.front().front() == '#') {
      continue;
    }
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace

CayleyTable parse_table(std::istream& in, std::string const& source) {
  auto const lines = significant_lines(in);
  auto fail = [&source](std::size_t line, std::string const& msg) -> ParseError {
    return ParseError(source, line, msg);
  };
  if (lines.empty()) {
    throw fail(0, "empty input");
  }
  std::size_t pos = 0;
  {
    auto const& l = lines[pos++];
    if (l.tokens.size() != 2 || l.tokens[0] + " " + l.tokens[1] != kHeader) {
      throw fail(l.number, "expected header 'upalg v1'");
    }
  }
  if (pos >= lines.size() || lines[pos].tokens.front() != "elements:") {
    throw fail(pos < lines.size() ? lines[pos].number : 0,
               "expected 'elements:' line");
  }
  auto const& elem_line = lines[pos++];
  std::vector<std::string> names(elem_line.tokens.begin() + 1,
                                 elem_line.tokens.end());
  if (names.empty()) {
    throw fail(elem_line.number, "no elements listed");
  }
  std::unordered_map<std::string, Element> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i >= kAbsoluteMaxOrder) {
      throw fail(elem_line.number, "too many elements");
    }
    if (names[i].find(',') != std::string::npos) {
      throw fail(elem_line.number, "label '" + names[i] + "' contains a comma");
    }
    if (!index.emplace(names[i], static_cast<Element>(i)).second) {
      throw fail(elem_line.number, "duplicate label '" + names[i] + "'");
    }
  }
  if (pos >= lines.size() || lines[pos].tokens.size() != 1 ||
      lines[pos].tokens.front() != "table:") {
    throw fail(pos < lines.size() ? lines[pos].number : elem_line.number,
               "expected 'table:' line");
  }
  auto const table_line = lines[pos++].number;
  auto const n = names.size();
  CayleyTable t;
  t.zero = 0;
  t.cells.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (pos >= lines.size()) {
      throw fail(table_line, "table has " + std::to_string(r) +
                                 " rows, expected " + std::to_string(n));
    }
    auto const& row = lines[pos++];
    if (row.tokens.size() != n) {
      throw fail(row.number, "row has " + std::to_string(row.tokens.size()) +
                                 " entries, expected " + std::to_string(n));
    }
    for (auto const& tok : row.tokens) {
      auto it = index.find(tok);
      if (it == index.end()) {
        throw fail(row.number, "unknown label '" + tok + "'");
      }
      t.cells.push_back(it->second);
    }
  }
  if (pos < lines.size()) {
    throw fail(lines[pos].number, "unexpected content after table");
  }
  t.names = std::move(names);
  try {
    check_well_formed(t);
  } catch (Error const& e) {
    throw fail(elem_line.number, e.what());
  }
  return t;
}

CayleyTable parse_table_string(std::string_view text,
                               std::string const& source) {
  std::istringstream in{std::string(text)};
  return parse_table(in, source);
}

UpAlgebra read_algebra(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path.string(), 0, "cannot open file");
  }
  return make_algebra(parse_table(in, path.string()));
}

void write_table(std::ostream& out, CayleyTable const& t) {
  auto const n = t.order();
  // the constant must be listed first
  auto const norm = normalize(t);
  out << kHeader << "\nelements:";
  for (auto const& name : norm.names) {
    out << ' ' << name;
  }
  out << "\ntable:\n";
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      out << (y ? " " : "") << norm.names[norm.at(x, y)];
    }
    out << '\n';
  }
}

std::string to_text(UpAlgebra const& alg) {
  std::ostringstream os;
  write_table(os, alg.table());
  return os.str();
}

void write_algebra(std::filesystem::path const& path, UpAlgebra const& alg) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write " + path.string());
  }
  write_table(out, alg.table());
}

}  // namespace upalg
