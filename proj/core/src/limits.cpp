#include "fincat/limits.hpp"

#include <algorithm>
#include <map>

#include "fincat/catalog.hpp"
#include "fincat/constructions.hpp"
#include "fincat/enumerate.hpp"

namespace fincat {

bool is_cone(const Functor& d, const Cone& cone) {
  const FinCat& J = d.dom();
  const FinCat& C = d.cod();
  if (cone.legs.size() != J.object_count()) return false;
  for (auto j : J.objects()) {
    auto leg = cone.legs[j.index];
    if (C.src(leg) != cone.apex || C.dst(leg) != d(j)) return false;
  }
  for (auto u : J.morphisms()) {
    if (C.compose(d(u), cone.legs[J.src(u).index]) != cone.legs[J.dst(u).index]) return false;
  }
  return true;
}

bool is_cocone(const Functor& d, const Cone& cocone) { return is_cone(opposite_functor(d), cocone); }

std::vector<Cone> enumerate_cones(const Functor& d) {
  const FinCat& J = d.dom();
  const FinCat& C = d.cod();
  const std::size_t n = J.object_count();
  std::vector<std::vector<MorId>> squares(n);
  for (auto u : J.morphisms()) squares[std::max(J.src(u).index, J.dst(u).index)].push_back(u);

  std::vector<Cone> out;
  Cone cur{ObjId{0}, std::vector<MorId>(n)};
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == n) {
      out.push_back(cur);
      return;
    }
    for (auto leg : C.hom(cur.apex, d(ObjId{j}))) {
      cur.legs[j] = leg;
      bool ok = true;
      for (auto u : squares[j]) {
        if (C.compose(d(u), cur.legs[J.src(u).index]) != cur.legs[J.dst(u).index]) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, j + 1);
    }
  };
  for (auto a : C.objects()) {
    cur.apex = a;
    rec(rec, 0);
  }
  return out;
}

std::vector<MorId> cone_factorizations(const Functor& d, const Cone& target, const Cone& source) {
  const FinCat& C = d.cod();
  std::vector<MorId> out;
  for (auto m : C.hom(source.apex, target.apex)) {
    bool ok = true;
    for (std::size_t j = 0; j < target.legs.size() && ok; ++j) {
      ok = C.compose(target.legs[j], m) == source.legs[j];
    }
    if (ok) out.push_back(m);
  }
  return out;
}

std::optional<Cone> limit_by_search(const Functor& d) {
  const auto cones = enumerate_cones(d);
  for (const auto& candidate : cones) {
    bool universal = true;
    for (const auto& other : cones) {
      if (cone_factorizations(d, candidate, other).size() != 1) {
        universal = false;
        break;
      }
    }
    if (universal) return candidate;
  }
  return std::nullopt;
}

std::optional<Cone> colimit_by_search(const Functor& d) { return limit_by_search(opposite_functor(d)); }

std::optional<MorId> cone_isomorphism(const Functor& d, const Cone& a, const Cone& b) {
  const FinCat& C = d.cod();
  auto ab = cone_factorizations(d, b, a);
  auto ba = cone_factorizations(d, a, b);
  if (ab.size() != 1 || ba.size() != 1) return std::nullopt;
  if (C.compose(ba[0], ab[0]) != C.identity(a.apex) || C.compose(ab[0], ba[0]) != C.identity(b.apex)) {
    return std::nullopt;
  }
  return ab[0];
}

CatRef arrow_index(const FinCat& c) { return discrete_category(c.morphism_count()); }

namespace {

// Mixed-radix enumeration of tuples in lexicographic order.
std::vector<std::vector<std::size_t>> all_tuples(const std::vector<std::size_t>& radices) {
  std::vector<std::vector<std::size_t>> out;
  for (auto r : radices) {
    if (r == 0) return out;
  }
  std::vector<std::size_t> t(radices.size(), 0);
  while (true) {
    out.push_back(t);
    std::size_t i = t.size();
    while (i > 0) {
      --i;
      if (++t[i] < radices[i]) break;
      t[i] = 0;
      if (i == 0) return out;
    }
    if (t.empty()) return out;
  }
}

std::string family_label(const Diagram& d, const std::vector<std::size_t>& t) {
  if (t.empty()) return "*";
  std::vector<std::string> parts;
  for (std::size_t c = 0; c < t.size(); ++c) parts.push_back(d.objects[c].label(t[c]));
  return tuple_label(parts);
}

}  // namespace

FinSetLimit finset_limit(const Diagram& d) {
  const FinCat& J = *d.shape;
  std::vector<std::size_t> radices;
  for (const auto& s : d.objects) radices.push_back(s.size());

  // A family x of Π_c D(c) lies in the equalizer iff its two images in
  // Π_f D(dst f) agree: x_{dst f} = D(f)(x_{src f}) for every f.
  FinSetLimit out;
  std::vector<std::string> labels;
  for (auto& x : all_tuples(radices)) {
    bool match = true;
    for (auto f : J.morphisms()) {
      if (x[J.dst(f).index] != d(f)(x[J.src(f).index])) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    labels.push_back(family_label(d, x));
    out.families.push_back(std::move(x));
  }
  out.apex = FinSetObj(std::move(labels));
  for (auto c : J.objects()) {
    std::vector<std::size_t> t;
    for (const auto& x : out.families) t.push_back(x[c.index]);
    out.legs.emplace_back(out.apex, d(c), std::move(t));
  }
  return out;
}

FinFn FinSetLimit::mediate(const FinSetObj& x_set, const std::vector<FinFn>& cone) const {
  if (cone.size() != legs.size()) throw Error(ErrorCode::InvalidInput, "one leg per shape object");
  for (const auto& leg : cone) {
    if (!(leg.dom() == x_set)) throw Error(ErrorCode::DomainMismatch, "cone legs must start at the test object");
  }
  const std::size_t x_size = x_set.size();
  std::vector<std::size_t> t(x_size);
  std::vector<std::size_t> family(cone.size());
  for (std::size_t x = 0; x < x_size; ++x) {
    for (std::size_t c = 0; c < cone.size(); ++c) family[c] = cone[c](x);
    auto it = std::lower_bound(families.begin(), families.end(), family);
    if (it == families.end() || *it != family) throw Error(ErrorCode::InvalidInput, "legs do not form a cone");
    t[x] = static_cast<std::size_t>(it - families.begin());
  }
  return FinFn(x_set, apex, std::move(t));
}

std::pair<FinFn, FinFn> finset_limit_maps(const Diagram& d) {
  const FinCat& J = *d.shape;
  std::vector<std::size_t> pr, qr;
  for (const auto& s : d.objects) pr.push_back(s.size());
  for (auto f : J.morphisms()) qr.push_back(d(J.dst(f)).size());
  auto ps = all_tuples(pr);
  auto qs = all_tuples(qr);
  std::map<std::vector<std::size_t>, std::size_t> q_index;
  std::vector<std::string> p_labels, q_labels;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    q_index[qs[i]] = i;
    q_labels.push_back(table_label(qs[i]));
  }
  for (const auto& x : ps) p_labels.push_back(table_label(x));
  FinSetObj p(std::move(p_labels)), q(std::move(q_labels));
  std::vector<std::size_t> s, t;
  for (const auto& x : ps) {
    std::vector<std::size_t> a, b;
    for (auto f : J.morphisms()) {
      a.push_back(x[J.dst(f).index]);
      b.push_back(d(f)(x[J.src(f).index]));
    }
    s.push_back(q_index.at(a));
    t.push_back(q_index.at(b));
  }
  return {FinFn(p, q, std::move(s)), FinFn(p, q, std::move(t))};
}

FinSetColimit finset_colimit(const Diagram& d) {
  const FinCat& J = *d.shape;
  // Σ_c D(c)
  std::vector<std::string> labels;
  std::vector<std::size_t> offset;
  for (auto c : J.objects()) {
    offset.push_back(labels.size());
    for (const auto& e : d(c).elements()) labels.push_back(std::to_string(c.index) + ":" + e);
  }
  FinSetObj sum(std::move(labels));
  // Σ_f D(src f)
  std::vector<std::string> rel_labels;
  std::vector<std::size_t> s, t;
  for (auto f : J.morphisms()) {
    const auto& src_set = d(J.src(f));
    for (std::size_t x = 0; x < src_set.size(); ++x) {
      rel_labels.push_back(std::to_string(f.index) + ":" + src_set.label(x));
      s.push_back(offset[J.src(f).index] + x);
      t.push_back(offset[J.dst(f).index] + d(f)(x));
    }
  }
  FinSetObj rel(std::move(rel_labels));
  CoequalizerCocone q = fs_coequalizer(FinFn(rel, sum, std::move(s)), FinFn(rel, sum, std::move(t)));
  FinSetColimit out{q.object, {}};
  for (auto c : J.objects()) {
    std::vector<std::size_t> leg;
    for (std::size_t x = 0; x < d(c).size(); ++x) leg.push_back(q.quotient(offset[c.index] + x));
    out.legs.emplace_back(d(c), q.object, std::move(leg));
  }
  return out;
}

FinFn FinSetColimit::mediate(const std::vector<FinFn>& cocone, const FinSetObj& target) const {
  if (cocone.size() != legs.size()) throw Error(ErrorCode::InvalidInput, "one leg per shape object");
  for (const auto& leg : cocone) {
    if (!(leg.cod() == target)) throw Error(ErrorCode::DomainMismatch, "cocone legs must end at the test object");
  }
  std::vector<std::size_t> t(apex.size(), npos);
  for (std::size_t c = 0; c < cocone.size(); ++c) {
    for (std::size_t x = 0; x < legs[c].dom().size(); ++x) {
      auto& slot = t[legs[c](x)];
      if (slot != npos && slot != cocone[c](x)) throw Error(ErrorCode::InvalidInput, "legs do not form a cocone");
      slot = cocone[c](x);
    }
  }
  return FinFn(apex, target, std::move(t));
}

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

CompletePreorderReport complete_preorder_check(const CatRef& c) {
  CompletePreorderReport rep;
  const FinCat& C = *c;
  rep.preorder = true;
  for (auto x : C.objects())
    for (auto y : C.objects())
      if (C.hom(x, y).size() > 1) rep.preorder = false;

  rep.complete = true;
  auto require = [&](const CatRef& shape, const std::string& what) {
    if (!rep.complete) return;
    for (const auto& d : enumerate_functors(shape, c)) {
      if (!limit_by_search(d)) {
        rep.complete = false;
        std::string args;
        for (auto o : d.omap()) args += (args.empty() ? "" : ",") + C.object_name(o);
        if (!d.mmap().empty() && shape->object_count() == 2 && shape->morphism_count() == 4) {
          args = C.morphism_name(d(MorId{1})) + "," + C.morphism_name(d(MorId{2}));
        }
        rep.missing = what + "(" + args + ")";
        return;
      }
    }
  };
  require(empty_category(), "terminal");
  require(discrete_category(2), "product");
  require(parallel_pair(), "equalizer");

  const std::size_t m = C.morphism_count();
  CatRef arrows = arrow_index(C);
  for (auto y : C.objects()) {
    Functor power = constant_functor(arrows, c, y);
    auto lim = limit_by_search(power);
    if (!lim) {
      if (rep.complete) {
        rep.complete = false;
        rep.missing = "power(" + C.object_name(y) + "^" + std::to_string(m) + ")";
      }
      continue;
    }
    for (auto x : C.objects()) {
      HomPowerCheck h{x, y};
      auto to_power = C.hom(x, lim->apex);
      h.hom_to_power = to_power.size();
      h.hom_power = ipow(C.hom(x, y).size(), m);
      // h ↦ (leg_i ∘ h)_i into Hom(x, y)^m, encoded by hom positions.
      std::map<std::vector<std::size_t>, std::size_t> images;
      for (auto arrow : to_power) {
        std::vector<std::size_t> tuple;
        for (auto leg : lim->legs) tuple.push_back(C.hom_position(C.compose(leg, arrow)));
        images[tuple]++;
      }
      h.bijective = images.size() == to_power.size() && images.size() == h.hom_power;
      if (!h.bijective) rep.hom_power_ok = false;
      rep.hom_power.push_back(h);
    }
  }
  rep.theorem_holds = !rep.complete || rep.preorder;
  return rep;
}

bool counts_admit_finite_products(const std::vector<std::size_t>& counts, std::size_t n) {
  auto at = [&](std::size_t a, std::size_t b) { return counts[a * n + b]; };
  bool terminal = false;
  for (std::size_t t = 0; t < n && !terminal; ++t) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = at(x, t) == 1;
    terminal = ok;
  }
  if (!terminal) return false;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      bool found = false;
      for (std::size_t p = 0; p < n && !found; ++p) {
        bool ok = true;
        for (std::size_t z = 0; z < n && ok; ++z) ok = at(z, p) == at(z, a) * at(z, b);
        found = ok;
      }
      if (!found) return false;
    }
  }
  return true;
}

PreorderScanReport scan_complete_preorder(std::size_t max_objects, std::size_t max_morphisms) {
  PreorderScanReport rep;
  for (std::size_t n = 0; n <= max_objects; ++n) {
    for (const auto& h : hom_count_matrices(n, max_morphisms)) {
      ++rep.hom_matrices;
      if (!counts_admit_finite_products(h.counts, n)) {
        ++rep.pruned_by_counts;
        continue;
      }
      for_each_category(h, [&](const CatRef& c) {
        ++rep.categories_checked;
        auto r = complete_preorder_check(c);
        if (r.complete) {
          ++rep.complete;
          rep.complete_categories.push_back(c);
        }
        if (!r.theorem_holds) {
          ++rep.counterexamples;
          rep.counterexample_categories.push_back(c);
        }
        return true;
      });
    }
  }
  return rep;
}

}  // namespace fincat
