#include "upalg/morphism.hpp"

#include <algorithm>
#include <functional>

#include "upalg/substruct.hpp"

namespace upalg {

Morphism::Morphism(UpAlgebra source, UpAlgebra target, std::vector<Element> map)
    : source_(std::move(source)),
      target_(std::move(target)),
      map_(std::move(map)),
      kernel_(source_.order()),
      image_(target_.order()) {
  for (std::size_t x = 0; x < map_.size(); ++x) {
    image_.insert(map_[x]);
    if (map_[x] == 0) {
      kernel_.insert(x);
    }
  }
}

ElementSet Morphism::image_of(ElementSet const& s) const {
  ElementSet out(target_.order());
  for (auto x : s) {
    out.insert(map_[x]);
  }
  return out;
}

ElementSet Morphism::preimage_of(ElementSet const& t) const {
  ElementSet out(source_.order());
  for (std::size_t x = 0; x < map_.size(); ++x) {
    if (t.contains(map_[x])) {
      out.insert(x);
    }
  }
  return out;
}

std::optional<Witness> find_hom_violation(UpAlgebra const& src,
                                          UpAlgebra const& dst,
                                          std::span<const Element> map) {
  auto const n = src.order();
  if (map.size() != n) {
    throw PreconditionViolation("map has " + std::to_string(map.size()) +
                                " entries, source has " + std::to_string(n) +
                                " elements");
  }
  for (auto v : map) {
    if (v >= dst.order()) {
      throw PreconditionViolation("map value " + std::to_string(v) +
                                  " outside the target");
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    auto const ex = static_cast<Element>(x);
    for (std::size_t y = 0; y < n; ++y) {
      auto const ey = static_cast<Element>(y);
      if (map[src.mul(ex, ey)] != dst.mul(map[x], map[y])) {
        return Witness::of(ex, ey);
      }
    }
  }
  return std::nullopt;
}

Morphism make_morphism(UpAlgebra const& src, UpAlgebra const& dst,
                       std::vector<Element> map) {
  if (auto w = find_hom_violation(src, dst, map)) {
    auto const x = w->at[0];
    auto const y = w->at[1];
    throw HomViolation("not a homomorphism: f(" + src.name(x) + "*" +
                           src.name(y) + ") = " +
                           dst.name(map[src.mul(x, y)]) + " but f(" +
                           src.name(x) + ")*f(" + src.name(y) + ") = " +
                           dst.name(dst.mul(map[x], map[y])),
                       *w);
  }
  return Morphism(src, dst, std::move(map));
}

Morphism identity(UpAlgebra const& alg) {
  std::vector<Element> map(alg.order());
  for (std::size_t i = 0; i < map.size(); ++i) {
    map[i] = static_cast<Element>(i);
  }
  return make_morphism(alg, alg, std::move(map));
}

Morphism zero_map(UpAlgebra const& src, UpAlgebra const& dst) {
  return make_morphism(src, dst, std::vector<Element>(src.order(), 0));
}

Morphism compose(Morphism const& f, Morphism const& g) {
  if (!(f.target() == g.source())) {
    throw NotComposable("target of the first map is not the source of the second");
  }
  std::vector<Element> map(f.source().order());
  for (std::size_t x = 0; x < map.size(); ++x) {
    map[x] = g(f(static_cast<Element>(x)));
  }
  return make_morphism(f.source(), g.target(), std::move(map));
}

Morphism inverse(Morphism const& f) {
  if (!f.bijective()) {
    throw NotBijective("map is not a bijection");
  }
  std::vector<Element> map(f.target().order());
  for (std::size_t x = 0; x < f.source().order(); ++x) {
    map[f(static_cast<Element>(x))] = static_cast<Element>(x);
  }
  return make_morphism(f.target(), f.source(), std::move(map));
}

Checklist hom_properties(Morphism const& f) {
  Checklist out;
  auto const& src = f.source();
  auto const& dst = f.target();
  auto const n = src.order();

  out.add("constant-preserved", f(0) == 0, "f(0) = " + dst.name(f(0)));

  {
    std::string bad;
    for (std::size_t x = 0; x < n && bad.empty(); ++x) {
      for (std::size_t y = 0; y < n && bad.empty(); ++y) {
        auto const ex = static_cast<Element>(x);
        auto const ey = static_cast<Element>(y);
        if (src.mul(ex, ey) == 0 && dst.mul(f(ex), f(ey)) != 0) {
          bad = src.name(ex) + " <= " + src.name(ey) + " but images are not";
        }
      }
    }
    out.add("order-preserved", bad.empty(), bad);
  }

  auto const src_subs = all_subalgebras(src);
  auto const dst_subs = all_subalgebras(dst);
  auto const src_ideals = all_ideals(src);
  auto const dst_ideals = all_ideals(dst);

  {
    std::string bad;
    for (auto const& c : src_subs) {
      if (!is_subalgebra(dst, f.image_of(c.members()))) {
        bad = "f" + format_set(src, c.members());
        break;
      }
    }
    out.add("image-of-subalgebra", bad.empty(),
            bad.empty() ? std::to_string(src_subs.size()) + " subalgebras"
                        : bad + " is not a subalgebra");
  }
  {
    std::string bad;
    for (auto const& d : dst_subs) {
      if (!is_subalgebra(src, f.preimage_of(d.members()))) {
        bad = "f^-1" + format_set(dst, d.members());
        break;
      }
    }
    out.add("preimage-of-subalgebra", bad.empty(),
            bad.empty() ? std::to_string(dst_subs.size()) + " subalgebras"
                        : bad + " is not a subalgebra");
  }
  {
    // f(C) is judged as an ideal of the image algebra f(A)
    auto const im = restrict_to(SubalgebraSet(dst, f.image()));
    std::string bad;
    std::size_t checked = 0;
    for (auto const& c : src_ideals) {
      if (!f.kernel().is_subset_of(c.members())) {
        continue;
      }
      ++checked;
      if (!is_ideal(im.algebra, im.lower(f.image_of(c.members())))) {
        bad = "f" + format_set(src, c.members());
        break;
      }
    }
    out.add("image-of-ideal", bad.empty(),
            bad.empty() ? std::to_string(checked) + " ideals above the kernel"
                        : bad + " is not an ideal of f(A)");
  }
  {
    std::string bad;
    for (auto const& d : dst_ideals) {
      if (!is_ideal(src, f.preimage_of(d.members()))) {
        bad = "f^-1" + format_set(dst, d.members());
        break;
      }
    }
    out.add("preimage-of-ideal", bad.empty(),
            bad.empty() ? std::to_string(dst_ideals.size()) + " ideals"
                        : bad + " is not an ideal");
  }
  {
    bool const trivial_kernel = f.kernel() == ElementSet::singleton(n, 0);
    out.add("kernel-trivial-iff-injective", trivial_kernel == f.injective(),
            "Ker(f) = " + format_set(src, f.kernel()) +
                (f.injective() ? ", injective" : ", not injective"));
  }
  return out;
}

std::vector<Morphism> enumerate_homs(UpAlgebra const& src,
                                     UpAlgebra const& dst) {
  auto const n = src.order();
  auto const m = dst.order();
  std::vector<Morphism> out;
  std::vector<Element> map(n, 0);

  // After assigning element k, every product x·y = p with x, y, p <= k and
  // at least one of them equal to k is checked.
  auto consistent = [&](std::size_t k) {
    for (std::size_t x = 0; x <= k; ++x) {
      auto const ex = static_cast<Element>(x);
      for (std::size_t y = 0; y <= k; ++y) {
        auto const ey = static_cast<Element>(y);
        auto const p = src.mul(ex, ey);
        if (p > k || (x != k && y != k && p != k)) {
          continue;
        }
        if (map[p] != dst.mul(map[x], map[y])) {
          return false;
        }
      }
    }
    return true;
  };

  std::function<void(std::size_t)> extend = [&](std::size_t k) {
    if (k == n) {
      out.push_back(make_morphism(src, dst, map));
      return;
    }
    for (std::size_t v = 0; v < m; ++v) {
      map[k] = static_cast<Element>(v);
      if (consistent(k)) {
        extend(k + 1);
      }
    }
  };

  map[0] = 0;
  if (consistent(0)) {
    extend(1);
  }
  return out;
}

std::string format_morphism(Morphism const& f) {
  std::string out;
  for (std::size_t x = 0; x < f.source().order(); ++x) {
    if (x > 0) {
      out += ' ';
    }
    auto const ex = static_cast<Element>(x);
    out += f.source().name(ex) + "↦" + f.target().name(f(ex));
  }
  return out;
}

Canonization canonicalize(UpAlgebra const& alg) {
  auto const n = alg.order();
  constexpr Element kUnset = 0xff;
  std::vector<Element> old_of(n, 0);      // canonical index -> element
  std::vector<Element> new_of(n, kUnset);  // element -> canonical index
  std::vector<Element> best;
  std::vector<Element> best_relabel;
  std::vector<Element> candidate(n * n);
  new_of[0] = 0;

  auto prune = [&](std::size_t k) {
    if (best.empty() || n < 2) {
      return false;
    }
    // compare cells (1, 0..k) of the partially relabeled table with best
    for (std::size_t j = 0; j <= k; ++j) {
      auto const r = alg.mul(old_of[1], old_of[j]);
      auto const b = best[n + j];
      if (new_of[r] != kUnset) {
        if (new_of[r] < b) {
          return false;
        }
        if (new_of[r] > b) {
          return true;
        }
        continue;
      }
      // r will receive a label greater than k
      return b <= k;
    }
    return false;
  };

  std::function<void(std::size_t)> search = [&](std::size_t k) {
    if (k == n) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          candidate[i * n + j] = new_of[alg.mul(old_of[i], old_of[j])];
        }
      }
      if (best.empty() || candidate < best) {
        best = candidate;
        best_relabel = new_of;
      }
      return;
    }
    for (std::size_t e = 1; e < n; ++e) {
      if (new_of[e] != kUnset) {
        continue;
      }
      old_of[k] = static_cast<Element>(e);
      new_of[e] = static_cast<Element>(k);
      if (!prune(k)) {
        search(k + 1);
      }
      new_of[e] = kUnset;
    }
  };
  search(1);
  return {{n, std::move(best)}, std::move(best_relabel)};
}

UpAlgebra canonical_algebra(UpAlgebra const& alg) {
  auto c = canonicalize(alg);
  CayleyTable t;
  t.names = default_labels(c.form.order);
  t.zero = 0;
  t.cells = std::move(c.form.cells);
  return make_algebra(std::move(t));
}

Fingerprint fingerprint(UpAlgebra const& alg) {
  auto const n = alg.order();
  Fingerprint fp;
  fp.order = n;
  fp.element_profiles.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto const ex = static_cast<Element>(x);
    auto& p = fp.element_profiles[x];
    p = {0, 0, 0, 0};
    for (std::size_t y = 0; y < n; ++y) {
      auto const ey = static_cast<Element>(y);
      p[0] += alg.mul(ex, ey) == 0;
      p[1] += alg.mul(ey, ex) == 0;
      p[2] += alg.mul(ex, ey) == ey;
      p[3] += alg.mul(ey, ex) == ex;
    }
  }
  std::sort(fp.element_profiles.begin(), fp.element_profiles.end());
  if (n <= kMaxScanOrder) {
    fp.ideal_count = all_ideals(alg).size();
    fp.subalgebra_count = all_subalgebras(alg).size();
  }
  return fp;
}

std::optional<Morphism> is_isomorphic(UpAlgebra const& a, UpAlgebra const& b) {
  if (a.order() != b.order()) {
    return std::nullopt;
  }
  if (a == b) {
    return identity(a);
  }
  if (!(fingerprint(a) == fingerprint(b))) {
    return std::nullopt;
  }
  auto const ca = canonicalize(a);
  auto const cb = canonicalize(b);
  if (ca.form != cb.form) {
    return std::nullopt;
  }
  std::vector<Element> b_of_canon(b.order());
  for (std::size_t x = 0; x < b.order(); ++x) {
    b_of_canon[cb.relabel[x]] = static_cast<Element>(x);
  }
  std::vector<Element> map(a.order());
  for (std::size_t x = 0; x < a.order(); ++x) {
    map[x] = b_of_canon[ca.relabel[x]];
  }
  auto f = make_morphism(a, b, std::move(map));
  // both directions must be homomorphisms
  inverse(f);
  return f;
}

UpAlgebra relabel(UpAlgebra const& alg, std::span<const Element> perm) {
  auto const n = alg.order();
  if (perm.size() != n || (n > 0 && perm[0] != 0)) {
    throw PreconditionViolation("relabeling must be a permutation fixing 0");
  }
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) {
      throw PreconditionViolation("relabeling must be a permutation fixing 0");
    }
    seen[p] = true;
  }
  CayleyTable t;
  t.zero = 0;
  t.names.resize(n);
  t.cells.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    t.names[perm[x]] = alg.name(static_cast<Element>(x));
    for (std::size_t y = 0; y < n; ++y) {
      t.at(perm[x], perm[y]) =
          perm[alg.mul(static_cast<Element>(x), static_cast<Element>(y))];
    }
  }
  return make_algebra(std::move(t));
}

}  // namespace upalg
