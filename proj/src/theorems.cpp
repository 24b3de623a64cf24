#include "upalg/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>

namespace upalg {

namespace {

std::string compact(UpAlgebra const& alg) {
  std::string out = "[";
  for (std::size_t x = 0; x < alg.order(); ++x) {
    out += x ? " | " : "";
    for (std::size_t y = 0; y < alg.order(); ++y) {
      out += y ? " " : "";
      out += alg.name(alg.mul(static_cast<Element>(x), static_cast<Element>(y)));
    }
  }
  return out + "]";
}

std::string yes_no(bool b, std::string_view yes, std::string_view no) {
  return std::string(b ? yes : no);
}

[[noreturn]] void fail(Certificate cert) {
  throw CertificateFailure(std::move(cert));
}

void finish(Certificate const& cert) {
  if (!cert.passed()) {
    fail(cert);
  }
}

// Nested certificates are folded into the parent's checklist; a nested
// failure is recorded rather than rethrown so the parent shows context.
template <typename Build>
void nest(Certificate& parent, std::string const& prefix, Build&& build) {
  try {
    parent.checklist.append(prefix, build().checklist);
  } catch (CertificateFailure const& e) {
    parent.checklist.append(prefix, e.certificate().checklist);
  } catch (Error const& e) {
    parent.checklist.add(prefix, false, e.what());
  }
}

struct FundamentalBuild {
  Certificate cert;
  std::optional<Factorization> parts;
};

FundamentalBuild build_fundamental(Morphism const& f) {
  FundamentalBuild out;
  auto& cert = out.cert;
  auto& list = cert.checklist;
  cert.theorem = Theorem::Fundamental;
  auto const& a = f.source();
  auto const& b = f.target();
  cert.inputs = {{"A", compact(a)}, {"B", compact(b)}, {"f", format_morphism(f)}};

  auto const& kernel = f.kernel();
  bool const kernel_ideal = is_ideal(a, kernel);
  list.add("kernel-is-ideal", kernel_ideal, "Ker(f) = " + format_set(a, kernel));
  if (!kernel_ideal) {
    return out;
  }

  std::optional<QuotientAlgebra> q;
  try {
    q = quotient(IdealSet(a, kernel));
    list.add("quotient-is-up-algebra", true,
             "A/~K has " + std::to_string(q->quotient.order()) + " classes");
  } catch (Error const& e) {
    list.add("quotient-is-up-algebra", false, e.what());
    return out;
  }
  cert.constructed.emplace_back("K", format_set(a, kernel));
  cert.constructed.emplace_back("A/~K", format_partition(a, q->partition));

  auto const projection = natural_projection(*q);
  cert.constructed.emplace_back("pi", format_morphism(projection));
  list.add("projection-epi", projection.surjective(),
           "pi_K is onto " + std::to_string(q->quotient.order()) + " classes");

  // φ((x)) = f(x), read off the section and checked on every representative
  std::vector<Element> phi_map(q->quotient.order());
  for (std::size_t c = 0; c < phi_map.size(); ++c) {
    phi_map[c] = f(q->section[c]);
  }
  {
    std::string bad;
    for (std::size_t x = 0; x < a.order() && bad.empty(); ++x) {
      for (std::size_t y = x + 1; y < a.order() && bad.empty(); ++y) {
        auto const ex = static_cast<Element>(x);
        auto const ey = static_cast<Element>(y);
        if (q->partition.related(ex, ey) && f(ex) != f(ey)) {
          bad = a.name(ex) + " ~K " + a.name(ey) + " but f differs";
        }
      }
    }
    list.add("phi-well-defined", bad.empty(),
             bad.empty() ? "f is constant on every ~K-class" : bad);
  }
  if (auto w = find_hom_violation(q->quotient, b, phi_map)) {
    list.add("phi-hom", false,
             "at " + format_witness(q->quotient.names(), *w));
    return out;
  }
  auto phi = make_morphism(q->quotient, b, phi_map);
  list.add("phi-hom", true, format_morphism(phi));
  cert.constructed.emplace_back("phi", format_morphism(phi));

  {
    std::string bad;
    for (std::size_t x = 0; x < a.order() && bad.empty(); ++x) {
      auto const ex = static_cast<Element>(x);
      if (phi(projection(ex)) != f(ex)) {
        bad = "differs at " + a.name(ex);
      }
    }
    list.add("factorization", bad.empty(),
             bad.empty() ? "f = phi o pi_K pointwise" : bad);
  }
  list.add("phi-mono", phi.injective(),
           yes_no(phi.injective(), "phi is injective", "phi is not injective"));
  list.add("epi-iff-iso", f.surjective() == phi.bijective(),
           yes_no(f.surjective(), "f onto", "f not onto") + ", " +
               yes_no(phi.bijective(), "phi bijective", "phi not bijective"));

  double const candidates = std::pow(static_cast<double>(b.order()),
                                     static_cast<double>(q->quotient.order() - 1));
  if (candidates <= kUniquenessEnumerationLimit) {
    std::size_t factoring = 0;
    bool only_phi = true;
    auto const homs = enumerate_homs(q->quotient, b);
    for (auto const& other : homs) {
      bool factors = true;
      for (std::size_t x = 0; x < a.order() && factors; ++x) {
        auto const ex = static_cast<Element>(x);
        factors = other(projection(ex)) == f(ex);
      }
      if (factors) {
        ++factoring;
        only_phi = only_phi && other == phi;
      }
    }
    list.add("uniqueness-enumerated", factoring == 1 && only_phi,
             std::to_string(factoring) + " of " + std::to_string(homs.size()) +
                 " homs A/~K -> B factor f");
  } else {
    // π is onto, so any φ' with φ'∘π = f is fixed on every class
    list.add("uniqueness-forced", projection.surjective(),
             "every class is hit by pi_K, so phi is determined by f");
  }
  out.parts.emplace(Factorization{*q, projection, phi});
  return out;
}

}  // namespace

std::string_view theorem_tag(Theorem t) noexcept {
  switch (t) {
    case Theorem::Fundamental: return "FUND";
    case Theorem::First: return "ISO1";
    case Theorem::Second: return "ISO2";
    case Theorem::Third: return "ISO3";
    case Theorem::Fourth: return "ISO4";
  }
  return "?";
}

CertificateFailure::CertificateFailure(Certificate cert)
    : Error(std::string(theorem_tag(cert.theorem)) + " claim '" +
            (cert.checklist.first_failure() ? cert.checklist.first_failure()->id
                                            : std::string("?")) +
            "' failed: " +
            (cert.checklist.first_failure()
                 ? cert.checklist.first_failure()->detail
                 : std::string())),
      cert_(std::move(cert)) {}

void write_certificate_lines(std::ostream& out, Certificate const& cert) {
  auto const tag = theorem_tag(cert.theorem);
  for (auto const& c : cert.checklist.claims()) {
    out << (c.passed ? "PASS " : "FAIL ") << tag << ' ' << c.id;
    if (!c.detail.empty()) {
      out << ' ' << c.detail;
    }
    out << '\n';
  }
}

void write_certificate_report(std::ostream& out, Certificate const& cert) {
  out << "certificate " << theorem_tag(cert.theorem) << '\n';
  for (auto const& [k, v] : cert.inputs) {
    out << "  input " << k << " = " << v << '\n';
  }
  for (auto const& [k, v] : cert.constructed) {
    out << "  built " << k << " = " << v << '\n';
  }
  write_certificate_lines(out, cert);
  out << "result " << (cert.passed() ? "PASS" : "FAIL") << " ("
      << cert.checklist.size() << " claims)\n";
}

Factorization factor_through_kernel(Morphism const& f) {
  auto build = build_fundamental(f);
  if (!build.parts) {
    fail(std::move(build.cert));
  }
  return std::move(*build.parts);
}

Certificate fundamental(Morphism const& f) {
  auto build = build_fundamental(f);
  finish(build.cert);
  return std::move(build.cert);
}

Certificate first_iso(Morphism const& f) {
  Certificate cert;
  cert.theorem = Theorem::First;
  auto& list = cert.checklist;
  auto const& a = f.source();
  auto const& b = f.target();
  cert.inputs = {{"A", compact(a)}, {"B", compact(b)}, {"f", format_morphism(f)}};

  bool const image_sub = is_subalgebra(b, f.image());
  list.add("image-subalgebra", image_sub, "Im(f) = " + format_set(b, f.image()));
  if (!image_sub) {
    fail(std::move(cert));
  }
  auto const im = restrict_to(SubalgebraSet(b, f.image()));
  std::vector<Element> onto(a.order());
  for (std::size_t x = 0; x < onto.size(); ++x) {
    onto[x] = *im.from_parent[f(static_cast<Element>(x))];
  }
  auto const corestricted = make_morphism(a, im.algebra, std::move(onto));
  list.add("corestriction-epi", corestricted.surjective(),
           "f: A -> Im(f) is onto");
  cert.constructed.emplace_back("Im(f)", compact(im.algebra));

  auto build = build_fundamental(corestricted);
  list.append("fund", build.cert.checklist);
  if (!build.parts) {
    fail(std::move(cert));
  }
  auto const& phi = build.parts->induced;
  cert.constructed.emplace_back("phi", format_morphism(phi));
  list.add("phi-iso", phi.bijective(),
           yes_no(phi.bijective(), "phi is a bijection", "phi is not a bijection"));
  if (phi.bijective()) {
    try {
      auto const back = inverse(phi);
      list.add("phi-inverse-hom", compose(phi, back) == identity(phi.source()),
               format_morphism(back));
    } catch (Error const& e) {
      list.add("phi-inverse-hom", false, e.what());
    }
  }
  auto const iso = is_isomorphic(build.parts->quotient.quotient, im.algebra);
  list.add("isomorphic", iso.has_value(),
           iso ? "A/~Ker(f) ~= Im(f) via " + format_morphism(*iso)
               : "canonical forms differ");
  finish(cert);
  return cert;
}

SubalgebraSet hk_set(SubalgebraSet const& h, IdealSet const& k) {
  auto const& alg = h.parent();
  if (!(k.parent() == alg)) {
    throw PreconditionViolation("H and K belong to different algebras");
  }
  auto const p = relation_mod_ideal(k);
  ElementSet hk(alg.order());
  for (auto x : h.members()) {
    hk |= p.members(p.class_of(x));
  }
  return SubalgebraSet(alg, std::move(hk));
}

Certificate second_iso(SubalgebraSet const& h, IdealSet const& k) {
  Certificate cert;
  cert.theorem = Theorem::Second;
  auto& list = cert.checklist;
  auto const& a = h.parent();
  if (!(k.parent() == a)) {
    throw PreconditionViolation("H and K belong to different algebras");
  }
  cert.inputs = {{"A", compact(a)},
                 {"H", format_set(a, h.members())},
                 {"K", format_set(a, k.members())}};

  std::optional<SubalgebraSet> hk;
  try {
    hk = hk_set(h, k);
    list.add("hk-subalgebra", true, "HK = " + format_set(a, hk->members()));
  } catch (Error const& e) {
    list.add("hk-subalgebra", false, e.what());
    fail(std::move(cert));
  }
  list.add("hk-contains-h-and-k",
           h.members().is_subset_of(hk->members()) &&
               k.members().is_subset_of(hk->members()),
           "H, K ⊆ HK");
  cert.constructed.emplace_back("HK", format_set(a, hk->members()));

  auto const qk = quotient(k);
  ElementSet hk_mod_k(qk.quotient.order());
  for (auto x : hk->members()) {
    hk_mod_k.insert(qk.project(x));
  }
  bool const sub = is_subalgebra(qk.quotient, hk_mod_k);
  list.add("hk-mod-k-subalgebra", sub,
           "HK/~K = " + format_set(qk.quotient, hk_mod_k) + " in A/~K");
  if (!sub) {
    fail(std::move(cert));
  }
  auto const rhs = restrict_to(SubalgebraSet(qk.quotient, hk_mod_k));
  auto const h_alg = restrict_to(h);
  cert.constructed.emplace_back("H", compact(h_alg.algebra));
  cert.constructed.emplace_back("HK/~K", compact(rhs.algebra));

  std::vector<Element> map(h_alg.algebra.order());
  for (std::size_t i = 0; i < map.size(); ++i) {
    map[i] = *rhs.from_parent[qk.project(h_alg.to_parent[i])];
  }
  if (auto w = find_hom_violation(h_alg.algebra, rhs.algebra, map)) {
    list.add("map-hom", false,
             "at " + format_witness(h_alg.algebra.names(), *w));
    fail(std::move(cert));
  }
  auto const f = make_morphism(h_alg.algebra, rhs.algebra, std::move(map));
  list.add("map-hom", true, format_morphism(f));
  list.add("map-epi", f.surjective(), "x -> (x)_K maps H onto HK/~K");
  cert.constructed.emplace_back("f", format_morphism(f));

  auto const cap = h_alg.lower(h.members() & k.members());
  bool const cap_ideal = is_ideal(h_alg.algebra, cap);
  list.add("h-cap-k-ideal-of-h", cap_ideal,
           "H∩K = " + format_set(h_alg.algebra, cap));
  list.add("kernel-equals-h-cap-k", f.kernel() == cap,
           "Ker(f) = " + format_set(h_alg.algebra, f.kernel()));

  nest(cert, "iso1", [&] { return first_iso(f); });

  if (cap_ideal) {
    auto const lhs = quotient(IdealSet(h_alg.algebra, cap));
    auto const iso = is_isomorphic(lhs.quotient, rhs.algebra);
    list.add("isomorphic", iso.has_value(),
             iso ? "H/~(H∩K) ~= HK/~K via " + format_morphism(*iso)
                 : "canonical forms differ");
  }
  finish(cert);
  return cert;
}

Certificate third_iso(IdealSet const& inner, IdealSet const& outer) {
  auto const& a = inner.parent();
  if (!(outer.parent() == a)) {
    throw PreconditionViolation("H and K belong to different algebras");
  }
  if (!inner.members().is_subset_of(outer.members())) {
    throw PreconditionViolation(format_set(a, inner.members()) +
                                " is not contained in " +
                                format_set(a, outer.members()));
  }
  Certificate cert;
  cert.theorem = Theorem::Third;
  auto& list = cert.checklist;
  cert.inputs = {{"A", compact(a)},
                 {"H", format_set(a, inner.members())},
                 {"K", format_set(a, outer.members())}};

  auto const qh = quotient(inner);
  auto const qk = quotient(outer);
  cert.constructed.emplace_back("A/~H", format_partition(a, qh.partition));
  cert.constructed.emplace_back("A/~K", format_partition(a, qk.partition));

  std::vector<Element> map(qh.quotient.order());
  for (std::size_t c = 0; c < map.size(); ++c) {
    map[c] = qk.project(qh.section[c]);
  }
  {
    std::string bad;
    for (std::size_t x = 0; x < a.order() && bad.empty(); ++x) {
      auto const ex = static_cast<Element>(x);
      if (map[qh.project(ex)] != qk.project(ex)) {
        bad = "class of " + a.name(ex) + " splits across ~K";
      }
    }
    list.add("map-well-defined", bad.empty(),
             bad.empty() ? "(x)_H -> (x)_K independent of representative" : bad);
  }
  if (auto w = find_hom_violation(qh.quotient, qk.quotient, map)) {
    list.add("map-hom", false, "at " + format_witness(qh.quotient.names(), *w));
    fail(std::move(cert));
  }
  auto const f = make_morphism(qh.quotient, qk.quotient, std::move(map));
  list.add("map-hom", true, format_morphism(f));
  list.add("map-epi", f.surjective(), "A/~H onto A/~K");
  cert.constructed.emplace_back("f", format_morphism(f));

  ElementSet k_mod_h(qh.quotient.order());
  for (auto x : outer.members()) {
    k_mod_h.insert(qh.project(x));
  }
  bool const kh_ideal = is_ideal(qh.quotient, k_mod_h);
  list.add("k-mod-h-ideal", kh_ideal,
           "K/~H = " + format_set(qh.quotient, k_mod_h));
  list.add("kernel-equals-k-mod-h", f.kernel() == k_mod_h,
           "Ker(f) = " + format_set(qh.quotient, f.kernel()));

  nest(cert, "iso1", [&] { return first_iso(f); });

  if (kh_ideal) {
    auto const dq = quotient(IdealSet(qh.quotient, k_mod_h));
    cert.constructed.emplace_back("(A/~H)/~(K/~H)", compact(dq.quotient));
    auto const iso = is_isomorphic(dq.quotient, qk.quotient);
    list.add("isomorphic", iso.has_value(),
             iso ? "(A/~H)/~(K/~H) ~= A/~K via " + format_morphism(*iso)
                 : "canonical forms differ");
  }
  finish(cert);
  return cert;
}

Certificate fourth_iso(Morphism const& f) {
  if (!f.surjective()) {
    throw NotSurjective("f is not onto: Im(f) = " +
                        format_set(f.target(), f.image()));
  }
  Certificate cert;
  cert.theorem = Theorem::Fourth;
  auto& list = cert.checklist;
  auto const& a = f.source();
  auto const& b = f.target();
  cert.inputs = {{"A", compact(a)}, {"B", compact(b)}, {"f", format_morphism(f)}};

  std::vector<IdealSet> above_kernel;
  for (auto& x : all_ideals(a)) {
    if (f.kernel().is_subset_of(x.members())) {
      above_kernel.push_back(std::move(x));
    }
  }
  auto const target_ideals = all_ideals(b);
  cert.constructed.emplace_back("|ideals of A over Ker(f)|",
                                std::to_string(above_kernel.size()));
  cert.constructed.emplace_back("|ideals of B|",
                                std::to_string(target_ideals.size()));

  auto index_in_b = [&](ElementSet const& y) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < target_ideals.size(); ++i) {
      if (target_ideals[i].members() == y) {
        return i;
      }
    }
    return std::nullopt;
  };

  std::vector<ElementSet> images;
  std::vector<bool> hit(target_ideals.size(), false);
  bool into_b = true;
  bool injective = true;
  for (auto const& x : above_kernel) {
    auto y = f.image_of(x.members());
    auto const idx = index_in_b(y);
    if (!idx) {
      into_b = false;
      list.add("image-is-ideal", false,
               "f" + format_set(a, x.members()) + " = " + format_set(b, y));
    } else {
      injective = injective && !hit[*idx];
      hit[*idx] = true;
    }
    images.push_back(std::move(y));
  }
  if (into_b) {
    list.add("image-is-ideal", true,
             "f(X) is an ideal of B for all " +
                 std::to_string(above_kernel.size()) + " X");
  }
  list.add("map-injective", injective, "X -> f(X) is one-to-one");
  bool const onto = std::all_of(hit.begin(), hit.end(), [](bool v) { return v; });
  list.add("map-surjective", onto, "every ideal of B is some f(X)");
  list.add("count-equal", above_kernel.size() == target_ideals.size(),
           std::to_string(above_kernel.size()) + " = " +
               std::to_string(target_ideals.size()));

  {
    std::string bad;
    for (std::size_t i = 0; i < above_kernel.size() && bad.empty(); ++i) {
      if (!(f.preimage_of(images[i]) == above_kernel[i].members())) {
        bad = "f^-1(f(X)) != X for X = " +
              format_set(a, above_kernel[i].members());
      }
    }
    for (auto const& y : target_ideals) {
      if (!bad.empty()) {
        break;
      }
      auto const back = f.preimage_of(y.members());
      bool const in_a = is_ideal(a, back) && f.kernel().is_subset_of(back);
      if (!in_a || !(f.image_of(back) == y.members())) {
        bad = "f(f^-1(Y)) != Y or f^-1(Y) not over Ker(f) for Y = " +
              format_set(b, y.members());
      }
    }
    list.add("inverse-is-preimage", bad.empty(),
             bad.empty() ? "Y -> f^-1(Y) inverts X -> f(X)" : bad);
  }
  {
    std::string bad;
    for (std::size_t i = 0; i < above_kernel.size() && bad.empty(); ++i) {
      for (std::size_t j = 0; j < above_kernel.size() && bad.empty(); ++j) {
        bool const lhs =
            above_kernel[i].members().is_subset_of(above_kernel[j].members());
        bool const rhs = images[i].is_subset_of(images[j]);
        if (lhs != rhs) {
          bad = format_set(a, above_kernel[i].members()) + " vs " +
                format_set(a, above_kernel[j].members());
        }
      }
    }
    list.add("inclusion-preserving", bad.empty(),
             bad.empty() ? "X1 ⊆ X2 iff f(X1) ⊆ f(X2)" : bad);
  }

  for (std::size_t i = 0; i < above_kernel.size(); ++i) {
    auto const& x = above_kernel[i];
    if (!is_ideal(b, images[i])) {
      continue;
    }
    auto const tag = "[" + format_set(a, x.members()) + "]";
    auto const qy = quotient(IdealSet(b, images[i]));
    auto const composite = compose(f, natural_projection(qy));
    list.add("composite-epi" + tag, composite.surjective(),
             "pi_f(X) o f is onto");
    list.add("composite-kernel" + tag, composite.kernel() == x.members(),
             "Ker = " + format_set(a, composite.kernel()));
    nest(cert, "iso1" + tag, [&] { return first_iso(composite); });
    auto const qx = quotient(x);
    auto const iso = is_isomorphic(qx.quotient, qy.quotient);
    list.add("isomorphic" + tag, iso.has_value(),
             iso ? "A/~X ~= B/~f(X) via " + format_morphism(*iso)
                 : "canonical forms differ");
  }
  finish(cert);
  return cert;
}

}  // namespace upalg
