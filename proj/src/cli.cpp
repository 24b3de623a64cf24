#include "upalg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "upalg/congruence.hpp"
#include "upalg/modelgen.hpp"
#include "upalg/morphism.hpp"
#include "upalg/substruct.hpp"
#include "upalg/table_io.hpp"
#include "upalg/theorems.hpp"

namespace upalg {

namespace {

/// Bad command-line input that CLI11 cannot detect on its own.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A check failed; the message carries the witness.
class CheckFailed : public Error {
 public:
  using Error::Error;
};

std::string quote_dot(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out + "\"";
}

ElementSet parse_labels(UpAlgebra const& alg, std::string const& text,
                        std::string const& flag) {
  try {
    return parse_set(alg, text);
  } catch (UnknownName const& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::vector<std::string> split_map_tokens(std::string const& text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
    } else {
      current += c;
    }
  }
  if (!current.empty()) {
    tokens.push_back(std::move(current));
  }
  return tokens;
}

// Accepts either target labels listed in source order ("0,0,c") or
// explicit pairs "x↦y", "x=y" or "x:y".
std::vector<Element> parse_map(UpAlgebra const& src, UpAlgebra const& dst,
                               std::string const& text) {
  static constexpr std::array<std::string_view, 3> kSeparators = {"↦", "=", ":"};
  auto const tokens = split_map_tokens(text);
  auto label = [](UpAlgebra const& alg, std::string_view s, char const* side) {
    auto e = alg.find(s);
    if (!e) {
      throw UsageError("--map: unknown " + std::string(side) + " label '" +
                       std::string(s) + "'");
    }
    return *e;
  };
  std::vector<std::optional<Element>> map(src.order());
  std::size_t pairs = 0;
  std::size_t plain = 0;
  for (auto const& tok : tokens) {
    std::optional<std::pair<std::string_view, std::string_view>> split;
    for (auto sep : kSeparators) {
      auto const at = tok.find(sep);
      if (at != std::string::npos) {
        split.emplace(std::string_view(tok).substr(0, at),
                      std::string_view(tok).substr(at + sep.size()));
        break;
      }
    }
    if (split && dst.find(tok)) {
      throw UsageError("--map: ambiguous token '" + tok +
                       "' is both a label and a pair");
    }
    if (split) {
      ++pairs;
      auto const x = label(src, split->first, "source");
      if (map[x]) {
        throw UsageError("--map: '" + std::string(split->first) +
                         "' mapped twice");
      }
      map[x] = label(dst, split->second, "target");
    } else {
      if (plain >= map.size()) {
        throw UsageError("--map: more values than source elements");
      }
      map[plain++] = label(dst, tok, "target");
    }
  }
  if (pairs && plain) {
    throw UsageError("--map: mix of pairs and plain labels");
  }
  std::vector<Element> out;
  out.reserve(map.size());
  for (std::size_t x = 0; x < map.size(); ++x) {
    if (!map[x]) {
      throw UsageError("--map: no value for '" +
                       src.name(static_cast<Element>(x)) + "'");
    }
    out.push_back(*map[x]);
  }
  return out;
}

Morphism load_morphism(UpAlgebra const& src, UpAlgebra const& dst,
                       std::string const& text) {
  return make_morphism(src, dst, parse_map(src, dst, text));
}

struct Options {
  std::string file;
  std::string file2;
  std::string seed;
  std::string ideal;
  std::string sub;
  std::string inner;
  std::string outer;
  std::string map;
  std::string out_dir;
  std::string name;
  std::size_t order = 0;
  std::size_t size = 0;
  int type = 1;
  std::size_t max_order = kDefaultMaxOrder;
  bool dot = false;
  bool report = false;
  bool allow_six = false;
  bool tables = false;
};

int emit_certificate(std::ostream& out, Certificate const& cert, bool report) {
  if (report) {
    write_certificate_report(out, cert);
  } else {
    write_certificate_lines(out, cert);
  }
  return cert.passed() ? kExitPass : kExitFailure;
}

template <typename Build>
int run_certificate(std::ostream& out, bool report, Build&& build) {
  try {
    return emit_certificate(out, build(), report);
  } catch (CertificateFailure const& e) {
    return emit_certificate(out, e.certificate(), report);
  }
}

int cmd_check(Options const& o, std::ostream& out) {
  std::ifstream in(o.file);
  if (!in) {
    throw ParseError(o.file, 0, "cannot open file");
  }
  auto const table = parse_table(in, o.file);
  bool ok = true;
  for (auto a : {Axiom::Up1, Axiom::Up2, Axiom::Up3, Axiom::Up4}) {
    auto const w = check_axiom(table, a);
    ok = ok && !w;
    out << (w ? "FAIL " : "PASS ") << axiom_name(a) << ' '
        << axiom_statement(a);
    if (w) {
      out << " witness " << format_witness(table.names, *w);
    }
    out << '\n';
  }
  if (!ok) {
    return kExitFailure;
  }
  auto const alg = make_algebra(table);
  auto const laws = derived_laws(alg);
  for (std::size_t i = 0; i < DerivedLawReport::kLawCount; ++i) {
    auto const& w = laws.failures[i];
    out << (w ? "FAIL " : "PASS ") << "LAW-" << (i + 1) << ' '
        << DerivedLawReport::statement(i);
    if (w) {
      out << " witness " << format_witness(alg.names(), *w);
    }
    out << '\n';
  }
  auto const order = up_ordering(alg);
  bool const poset = order.is_partial_order() && order.greatest() == Element{0};
  out << (poset ? "PASS" : "FAIL")
      << " ORDER x <= y iff x*y = 0 is a partial order with 0 greatest\n";
  return laws.all_hold() && poset ? kExitPass : kExitFailure;
}

int dispatch(CLI::App const& app, Options const& o, std::ostream& out) {
  auto got = [&app](char const* name) {
    return app.get_subcommand(name)->parsed();
  };
  if (got("check")) {
    return cmd_check(o, out);
  }
  if (got("ideals")) {
    auto const alg = read_algebra(o.file);
    for (auto const& i : all_ideals(alg)) {
      out << format_set(alg, i.members()) << '\n';
    }
    return kExitPass;
  }
  if (got("subalgebras")) {
    auto const alg = read_algebra(o.file);
    for (auto const& s : all_subalgebras(alg)) {
      out << format_set(alg, s.members()) << '\n';
    }
    return kExitPass;
  }
  if (got("gen-ideal")) {
    auto const alg = read_algebra(o.file);
    auto const ideal = generated_ideal(alg, parse_labels(alg, o.seed, "--seed"));
    out << format_set(alg, ideal.members()) << '\n';
    return kExitPass;
  }
  if (got("quotient")) {
    auto const alg = read_algebra(o.file);
    IdealSet const ideal(alg, parse_labels(alg, o.ideal, "--ideal"));
    auto const q = quotient(ideal);
    out << "# classes " << format_partition(alg, q.partition) << '\n';
    write_table(out, q.quotient.table());
    return kExitPass;
  }
  if (got("homs")) {
    auto const src = read_algebra(o.file);
    auto const dst = read_algebra(o.file2);
    auto const homs = enumerate_homs(src, dst);
    for (auto const& f : homs) {
      out << format_morphism(f) << '\n';
    }
    out << "count " << homs.size() << '\n';
    return kExitPass;
  }
  if (got("iso")) {
    auto const a = read_algebra(o.file);
    auto const b = read_algebra(o.file2);
    if (auto f = is_isomorphic(a, b)) {
      out << "isomorphic " << format_morphism(*f) << '\n';
      return kExitPass;
    }
    out << "not isomorphic\n";
    return kExitFailure;
  }
  for (char const* verb : {"fund", "iso1", "iso4"}) {
    if (!got(verb)) {
      continue;
    }
    auto const src = read_algebra(o.file);
    auto const dst = read_algebra(o.file2);
    auto const f = load_morphism(src, dst, o.map);
    std::string_view const v = verb;
    return run_certificate(out, o.report, [&] {
      return v == "fund" ? fundamental(f) : v == "iso1" ? first_iso(f)
                                                        : fourth_iso(f);
    });
  }
  if (got("iso2")) {
    auto const alg = read_algebra(o.file);
    SubalgebraSet const h(alg, parse_labels(alg, o.sub, "--sub"));
    IdealSet const k(alg, parse_labels(alg, o.ideal, "--ideal"));
    return run_certificate(out, o.report, [&] { return second_iso(h, k); });
  }
  if (got("iso3")) {
    auto const alg = read_algebra(o.file);
    IdealSet const h(alg, parse_labels(alg, o.inner, "--inner"));
    IdealSet const k(alg, parse_labels(alg, o.outer, "--outer"));
    return run_certificate(out, o.report, [&] { return third_iso(h, k); });
  }
  if (got("enumerate")) {
    EnumerateOptions eo;
    eo.allow_order_six = o.allow_six;
    auto const census = enumerate(o.order, eo);
    out << "n=" << census.order << " raw=" << census.raw_count
        << " iso=" << census.iso_count() << '\n';
    if (!o.out_dir.empty()) {
      write_census(o.out_dir, census);
    }
    if (o.tables) {
      for (auto const& alg : census.representatives) {
        out << '\n' << to_text(alg);
      }
    }
    return kExitPass;
  }
  if (got("builtin")) {
    out << to_text(builtin(o.name));
    return kExitPass;
  }
  if (got("powerset")) {
    out << to_text(o.type == 1 ? power_type1(o.size) : power_type2(o.size));
    return kExitPass;
  }
  if (got("poset")) {
    auto const alg = read_algebra(o.file);
    if (o.dot) {
      out << export_dot(alg);
      return kExitPass;
    }
    auto const order = up_ordering(alg);
    for (std::size_t x = 0; x < alg.order(); ++x) {
      for (auto y : order.above(static_cast<Element>(x))) {
        if (y != x) {
          out << alg.name(static_cast<Element>(x)) << " <= " << alg.name(y)
              << '\n';
        }
      }
    }
    return kExitPass;
  }
  throw UsageError("no command given");
}

}  // namespace

std::string export_dot(UpAlgebra const& alg) {
  std::ostringstream os;
  os << "digraph upalg {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (auto const& name : alg.names()) {
    os << "  " << quote_dot(name) << ";\n";
  }
  for (auto const& [lo, hi] : up_ordering(alg).covers()) {
    os << "  " << quote_dot(alg.name(lo)) << " -> " << quote_dot(alg.name(hi))
       << ";\n";
  }
  os << "}\n";
  return os.str();
}

int run_cli(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Workbench for finite UP-algebras", "upalg"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--max-order", o.max_order,
                 "Element cap for every structure (default 16)")
      ->check(CLI::Range(std::size_t{1}, kAbsoluteMaxOrder));

  auto file_arg = [&o](CLI::App* sub) {
    sub->add_option("file", o.file, "Cayley table in upalg v1 format")
        ->required();
  };
  auto pair_args = [&o](CLI::App* sub) {
    sub->add_option("src", o.file, "source algebra")->required();
    sub->add_option("dst", o.file2, "target algebra")->required();
  };
  auto report_flag = [&o](CLI::App* sub) {
    sub->add_flag("--report", o.report, "human-readable certificate");
  };

  file_arg(app.add_subcommand("check", "Check axioms and derived laws"));
  file_arg(app.add_subcommand("ideals", "List all ideals"));
  file_arg(app.add_subcommand("subalgebras", "List all subalgebras"));
  {
    auto* sub = app.add_subcommand("gen-ideal", "Ideal generated by a seed");
    file_arg(sub);
    sub->add_option("--seed", o.seed, "comma-separated labels (may be empty)")
        ->required();
  }
  {
    auto* sub = app.add_subcommand("quotient", "Quotient by an ideal");
    file_arg(sub);
    sub->add_option("--ideal", o.ideal, "comma-separated labels")->required();
  }
  pair_args(app.add_subcommand("homs", "Enumerate homomorphisms"));
  pair_args(app.add_subcommand("iso", "Decide isomorphism"));
  static constexpr std::array<std::pair<char const*, char const*>, 3> kMapVerbs = {{
      {"fund", "Factor a map through its kernel quotient"},
      {"iso1", "Kernel quotient isomorphic to the image"},
      {"iso4", "Ideals over the kernel match ideals of the target"},
  }};
  for (auto const& [verb, help] : kMapVerbs) {
    auto* sub = app.add_subcommand(verb, help);
    pair_args(sub);
    sub->add_option("--map", o.map,
                    "target labels in source order, or pairs x:y / x=y / x↦y")
        ->required();
    report_flag(sub);
  }
  {
    auto* sub = app.add_subcommand("iso2", "Subalgebra/ideal certificate");
    file_arg(sub);
    sub->add_option("--sub", o.sub, "subalgebra H")->required();
    sub->add_option("--ideal", o.ideal, "ideal K")->required();
    report_flag(sub);
  }
  {
    auto* sub = app.add_subcommand("iso3", "Nested ideals certificate");
    file_arg(sub);
    sub->add_option("--inner", o.inner, "ideal H")->required();
    sub->add_option("--outer", o.outer, "ideal K containing H")->required();
    report_flag(sub);
  }
  {
    auto* sub = app.add_subcommand("enumerate", "Census up to isomorphism");
    sub->add_option("--order", o.order, "order n (1..6)")->required();
    sub->add_option("--out", o.out_dir, "write representatives and index here");
    sub->add_flag("--allow-order-6", o.allow_six, "permit the slow n = 6 run");
    sub->add_flag("--tables", o.tables, "print every representative");
  }
  {
    auto* sub = app.add_subcommand("builtin", "Print a built-in table");
    sub->add_option("name", o.name, "paper4 or paper5")->required();
  }
  {
    auto* sub = app.add_subcommand("powerset", "Print a power UP-algebra");
    sub->add_option("--type", o.type, "1 (B-A) or 2 (B∪A')")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    sub->add_option("--size", o.size, "universe size m (0..4)")->required();
  }
  {
    auto* sub = app.add_subcommand("poset", "The UP-ordering");
    file_arg(sub);
    sub->add_flag("--dot", o.dot, "emit the Hasse diagram as DOT");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kExitPass;
  } catch (CLI::ParseError const& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  auto const previous_cap = max_order();
  try {
    set_max_order(o.max_order);
    int const code = dispatch(app, o, out);
    set_max_order(previous_cap);
    return code;
  } catch (AxiomViolation const& e) {
    err << e.what() << '\n';
    set_max_order(previous_cap);
    return kExitFailure;
  } catch (HomViolation const& e) {
    err << e.what() << '\n';
    set_max_order(previous_cap);
    return kExitFailure;
  } catch (NotAnIdeal const& e) {
    err << e.what() << '\n';
    set_max_order(previous_cap);
    return kExitFailure;
  } catch (NotASubalgebra const& e) {
    err << e.what() << '\n';
    set_max_order(previous_cap);
    return kExitFailure;
  } catch (NotSurjective const& e) {
    err << e.what() << '\n';
    set_max_order(previous_cap);
    return kExitFailure;
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    set_max_order(previous_cap);
    return kExitUsage;
  }
}

}  // namespace upalg
