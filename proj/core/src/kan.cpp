#include "fincat/kan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fincat/adjunction.hpp"
#include "fincat/catalog.hpp"
#include "fincat/constructions.hpp"
#include "fincat/limits.hpp"

namespace fincat {

namespace {

std::size_t comma_index(const CommaCategory& comma, ObjId right, MorId arrow) {
  for (std::size_t i = 0; i < comma.objects.size(); ++i) {
    if (comma.objects[i].right == right && comma.objects[i].arrow == arrow) return i;
  }
  throw Error(ErrorCode::InvalidInput, "comma object not found");
}

std::size_t comma_index_left(const CommaCategory& comma, ObjId left, MorId arrow) {
  for (std::size_t i = 0; i < comma.objects.size(); ++i) {
    if (comma.objects[i].left == left && comma.objects[i].arrow == arrow) return i;
  }
  throw Error(ErrorCode::InvalidInput, "comma object not found");
}

// Components of comparison∘(σp).
std::vector<MorId> restrict_components(const NatTrans& comparison, const NatTrans& sigma, const Functor& p) {
  const FinCat& E = comparison.source.cod();
  std::vector<MorId> out;
  for (auto c : p.dom().objects()) out.push_back(E.compose(comparison(c), sigma(p(c))));
  return out;
}

}  // namespace

std::optional<KanResult> right_kan_pointwise(const Functor& f, const Functor& p) {
  if (!same_category(f.dom_ref(), p.dom_ref())) throw Error(ErrorCode::DomainMismatch, "F and p need a common domain");
  const CatRef& D = p.cod_ref();
  std::vector<CommaCategory> commas;
  std::vector<Cone> limits;
  std::vector<ObjId> omap;
  for (auto d : D->objects()) {
    commas.push_back(comma_category(object_functor(D, d), p));
    auto lim = limit_by_search(compose_functors(f, commas.back().right_projection));
    if (!lim) return std::nullopt;
    omap.push_back(lim->apex);
    limits.push_back(std::move(*lim));
  }

  std::vector<MorId> mmap;
  for (auto g : D->morphisms()) {
    const ObjId d = D->src(g), d2 = D->dst(g);
    const CommaCategory& target = commas[d2.index];
    Functor diagram = compose_functors(f, target.right_projection);
    Cone cone{omap[d.index], {}};
    for (const auto& o : target.objects) {
      cone.legs.push_back(limits[d.index].legs[comma_index(commas[d.index], o.right, D->compose(o.arrow, g))]);
    }
    auto factors = cone_factorizations(diagram, limits[d2.index], cone);
    if (factors.size() != 1) throw Error(ErrorCode::InvalidInput, "pointwise limit is not universal");
    mmap.push_back(factors[0]);
  }
  Functor ext(D, f.cod_ref(), std::move(omap), std::move(mmap));

  std::vector<MorId> comps;
  for (auto c : f.dom().objects()) {
    const ObjId pc = p(c);
    comps.push_back(limits[pc.index].legs[comma_index(commas[pc.index], c, D->identity(pc))]);
  }
  return KanResult{ext, NatTrans{compose_functors(ext, p), f, std::move(comps)}};
}

std::optional<KanResult> left_kan(const Functor& f, const Functor& p) {
  auto ran = right_kan_pointwise(opposite_functor(f), opposite_functor(p));
  if (!ran) return std::nullopt;
  Functor ext = opposite_functor(ran->extension);
  // comparison^op: F ⇒ Lan∘p
  return KanResult{ext, NatTrans{f, compose_functors(ext, p), ran->comparison.components}};
}

FinSetKanResult right_kan_finset(const Diagram& f, const Functor& p) {
  if (!same_category(f.shape, p.dom_ref())) throw Error(ErrorCode::DomainMismatch, "F and p need a common domain");
  const CatRef& D = p.cod_ref();
  std::vector<CommaCategory> commas;
  std::vector<FinSetLimit> limits;
  FinSetKanResult out{Diagram{D, {}, {}}, {}};
  for (auto d : D->objects()) {
    commas.push_back(comma_category(object_functor(D, d), p));
    limits.push_back(finset_limit(precompose(f, commas.back().right_projection)));
    out.extension.objects.push_back(limits.back().apex);
  }
  for (auto g : D->morphisms()) {
    const ObjId d = D->src(g), d2 = D->dst(g);
    std::vector<FinFn> cone;
    for (const auto& o : commas[d2.index].objects) {
      cone.push_back(limits[d.index].legs[comma_index(commas[d.index], o.right, D->compose(o.arrow, g))]);
    }
    out.extension.morphisms.push_back(limits[d2.index].mediate(limits[d.index].apex, cone));
  }
  for (auto c : f.shape->objects()) {
    const ObjId pc = p(c);
    out.comparison.push_back(limits[pc.index].legs[comma_index(commas[pc.index], c, D->identity(pc))]);
  }
  return out;
}

FinSetKanResult left_kan_finset(const Diagram& f, const Functor& p) {
  if (!same_category(f.shape, p.dom_ref())) throw Error(ErrorCode::DomainMismatch, "F and p need a common domain");
  const CatRef& D = p.cod_ref();
  std::vector<CommaCategory> commas;
  std::vector<FinSetColimit> colimits;
  FinSetKanResult out{Diagram{D, {}, {}}, {}};
  for (auto d : D->objects()) {
    commas.push_back(comma_category(p, object_functor(D, d)));
    colimits.push_back(finset_colimit(precompose(f, commas.back().left_projection)));
    out.extension.objects.push_back(colimits.back().apex);
  }
  for (auto g : D->morphisms()) {
    const ObjId d = D->src(g), d2 = D->dst(g);
    std::vector<FinFn> cocone;
    for (const auto& o : commas[d.index].objects) {
      cocone.push_back(colimits[d2.index].legs[comma_index_left(commas[d2.index], o.left, D->compose(g, o.arrow))]);
    }
    out.extension.morphisms.push_back(colimits[d.index].mediate(cocone, colimits[d2.index].apex));
  }
  for (auto c : f.shape->objects()) {
    const ObjId pc = p(c);
    out.comparison.push_back(colimits[pc.index].legs[comma_index_left(commas[pc.index], c, D->identity(pc))]);
  }
  return out;
}

KanCheckReport kan_local_check(const KanResult& cand, const Functor& f, const Functor& p) {
  KanCheckReport rep;
  auto fail = [&](bool& flag, std::string what) {
    flag = false;
    rep.pass = false;
    if (rep.witness.empty()) rep.witness = std::move(what);
  };
  if (!validate(cand.extension) || !validate(cand.comparison) ||
      !(cand.comparison.source == compose_functors(cand.extension, p)) || !(cand.comparison.target == f)) {
    fail(rep.cone_ok, "candidate is not a functor with a comparison extension∘p ⇒ F");
    rep.hom_ok = false;
    return rep;
  }
  const CatRef& D = p.cod_ref();
  const CatRef& E = f.cod_ref();
  for (const auto& m : enumerate_functors(D, E)) {
    ++rep.functors_checked;
    const auto sigmas = enumerate_nattrans(m, cand.extension);
    const auto deltas = enumerate_nattrans(compose_functors(m, p), f);
    rep.counts.emplace_back(sigmas.size(), deltas.size());

    // hom-functor form: the restriction map is a bijection
    std::map<std::vector<MorId>, std::size_t> images;
    for (const auto& s : sigmas) images[restrict_components(cand.comparison, s, p)]++;
    bool bijective = images.size() == sigmas.size() && sigmas.size() == deltas.size();
    for (const auto& d : deltas) bijective = bijective && images.count(d.components) == 1;
    if (!bijective) fail(rep.hom_ok, "restriction is not a bijection for M = functor " + std::to_string(rep.functors_checked - 1));

    // cone form: each δ factors through exactly one σ
    for (std::size_t i = 0; i < deltas.size(); ++i) {
      std::size_t count = 0;
      for (const auto& s : sigmas) {
        if (restrict_components(cand.comparison, s, p) == deltas[i].components) ++count;
      }
      if (count != 1) {
        fail(rep.cone_ok, "transformation " + std::to_string(i) + " into F factors " + std::to_string(count) +
                              " times for M = functor " + std::to_string(rep.functors_checked - 1));
        break;
      }
    }
  }
  return rep;
}

KanCheckReport kan_local_check(const FinSetKanResult& cand, const Diagram& f, const Functor& p, std::size_t bound) {
  KanCheckReport rep;
  auto fail = [&](bool& flag, std::string what) {
    flag = false;
    rep.pass = false;
    if (rep.witness.empty()) rep.witness = std::move(what);
  };
  const CatRef& D = p.cod_ref();
  if (!validate(cand.extension) || !same_category(cand.extension.shape, D)) {
    fail(rep.cone_ok, "candidate is not a diagram on the codomain of p");
    return rep;
  }
  Diagram restricted = precompose(cand.extension, p);
  if (!is_natural(restricted, f, cand.comparison)) {
    fail(rep.cone_ok, "comparison is not natural");
    return rep;
  }
  auto restrict = [&](const DiagramMorphism& sigma) {
    DiagramMorphism out;
    for (auto c : f.shape->objects()) out.push_back(compose(cand.comparison[c.index], sigma[p(c).index]));
    return out;
  };
  for (const auto& m : enumerate_diagrams(D, bound)) {
    ++rep.functors_checked;
    const auto sigmas = enumerate_diagram_morphisms(m, cand.extension);
    const auto deltas = enumerate_diagram_morphisms(precompose(m, p), f);
    rep.counts.emplace_back(sigmas.size(), deltas.size());

    std::vector<DiagramMorphism> images;
    for (const auto& s : sigmas) images.push_back(restrict(s));
    std::vector<std::vector<std::vector<std::size_t>>> keys;
    for (const auto& im : images) {
      std::vector<std::vector<std::size_t>> k;
      for (const auto& fn : im) k.push_back(fn.table());
      keys.push_back(std::move(k));
    }
    std::set<std::vector<std::vector<std::size_t>>> distinct(keys.begin(), keys.end());
    if (distinct.size() != sigmas.size() || sigmas.size() != deltas.size()) {
      fail(rep.hom_ok, "restriction is not a bijection for diagram " + std::to_string(rep.functors_checked - 1));
    }
    for (std::size_t i = 0; i < deltas.size(); ++i) {
      std::size_t count = 0;
      for (const auto& im : images) {
        if (im == deltas[i]) ++count;
      }
      if (count != 1) {
        fail(rep.cone_ok, "transformation " + std::to_string(i) + " factors " + std::to_string(count) +
                              " times for diagram " + std::to_string(rep.functors_checked - 1));
        break;
      }
    }
  }
  return rep;
}

std::optional<NatTrans> kan_comparison_iso(const KanResult& a, const KanResult& b, const Functor& p) {
  std::optional<NatTrans> found;
  for (const auto& s : enumerate_nattrans(a.extension, b.extension)) {
    if (restrict_components(b.comparison, s, p) == a.comparison.components) {
      if (found) return std::nullopt;
      found = s;
    }
  }
  if (!found || !is_natural_isomorphism(*found)) return std::nullopt;
  return found;
}

KanGlobalReport kan_global_check(const Functor& p, const CatRef& e) {
  KanGlobalReport rep;
  FunctorCategory fc = functor_category(p.dom_ref(), e);
  FunctorCategory fd = functor_category(p.cod_ref(), e);
  rep.source_functors = fc.functors().size();
  rep.target_functors = fd.functors().size();
  const FinCat& A = *fd.category();
  const FinCat& B = *fc.category();

  // P = −∘p
  std::vector<ObjId> p_obj;
  std::vector<MorId> p_mor;
  for (const auto& m : fd.functors()) p_obj.push_back(*fc.find(compose_functors(m, p)));
  for (const auto& s : fd.transformations()) p_mor.push_back(*fc.find(whisker_right(s, p)));
  Functor P(fd.category(), fc.category(), std::move(p_obj), std::move(p_mor));

  std::vector<KanResult> rans;
  std::vector<ObjId> r_obj;
  for (const auto& f : fc.functors()) {
    auto ran = right_kan_pointwise(f, p);
    if (!ran) throw Error(ErrorCode::PointwiseKanMissing, "no pointwise right Kan extension for some functor");
    auto idx = fd.find(ran->extension);
    if (!idx) throw Error(ErrorCode::InvalidInput, "extension missing from the functor category");
    r_obj.push_back(*idx);
    rans.push_back(std::move(*ran));
  }

  // δ: F ⇒ F' ↦ unique σ: Ran F ⇒ Ran F' with comparison'∘(σp) = δ∘comparison.
  auto lift = [&](ObjId m, ObjId f, const std::vector<MorId>& delta) -> std::optional<MorId> {
    std::optional<MorId> found;
    for (auto s : A.hom(m, r_obj[f.index])) {
      if (restrict_components(rans[f.index].comparison, fd.transformation(s), p) == delta) {
        if (found) return std::nullopt;
        found = s;
      }
    }
    return found;
  };
  std::vector<MorId> r_mor;
  for (auto alpha : B.morphisms()) {
    const ObjId f = B.src(alpha), f2 = B.dst(alpha);
    NatTrans after = vertical_compose(fc.transformation(alpha), rans[f.index].comparison);
    auto s = lift(r_obj[f.index], f2, after.components);
    if (!s) {
      rep.witness = "Ran is not functorial at transformation " + B.morphism_name(alpha);
      return rep;
    }
    r_mor.push_back(*s);
  }
  Functor R(fc.category(), fd.category(), r_obj, std::move(r_mor));

  AdjHom adj{P, R, {}};
  for (auto m : A.objects()) {
    for (auto f : B.objects()) {
      const auto hom_b = B.hom(P(m), f);
      const auto hom_a = A.hom(m, R(f));
      if (hom_b.size() != hom_a.size()) {
        rep.cardinalities = false;
        if (rep.witness.empty()) rep.witness = "hom sizes differ at (" + A.object_name(m) + ", " + B.object_name(f) + ")";
      }
      std::vector<std::size_t> t;
      for (auto delta : hom_b) {
        auto s = lift(m, f, fc.transformation(delta).components);
        t.push_back(s ? A.hom_position(*s) : npos);
      }
      adj.phi.push_back(std::move(t));
    }
  }
  rep.adjunction = validate_adjunction(adj);
  if (!rep.adjunction && rep.witness.empty()) rep.witness = rep.adjunction.detail;
  rep.pass = rep.cardinalities && rep.adjunction.ok();
  return rep;
}

Diagram corepresentable_diagram(const Functor& f, ObjId e) {
  const FinCat& C = f.dom();
  const FinCat& E = f.cod();
  Diagram out{f.dom_ref(), {}, {}};
  for (auto c : C.objects()) {
    std::vector<std::string> labels;
    for (auto h : E.hom(e, f(c))) labels.push_back(E.morphism_name(h));
    out.objects.emplace_back(std::move(labels));
  }
  for (auto u : C.morphisms()) {
    std::vector<std::size_t> t;
    for (auto h : E.hom(e, f(C.src(u)))) t.push_back(E.hom_position(E.compose(f(u), h)));
    out.morphisms.emplace_back(out.objects[C.src(u).index], out.objects[C.dst(u).index], std::move(t));
  }
  return out;
}

bool representable_preservation(const KanResult& ran, const Functor& f, const Functor& p, ObjId e) {
  const CatRef& D = p.cod_ref();
  const FinCat& E = f.cod();
  FinSetKanResult set_ran = right_kan_finset(corepresentable_diagram(f, e), p);
  for (auto d : D->objects()) {
    CommaCategory comma = comma_category(object_functor(D, d), p);
    Diagram families_shape = precompose(corepresentable_diagram(f, e), comma.right_projection);
    FinSetLimit lim = finset_limit(families_shape);
    if (lim.apex.size() != set_ran.extension(d).size()) return false;
    const auto homs = E.hom(e, ran.extension(d));
    if (homs.size() != lim.apex.size()) return false;
    // k ↦ (comparison_c ∘ Ran(h) ∘ k) over comma objects (c, h: d → p c)
    std::set<std::size_t> images;
    for (auto k : homs) {
      std::vector<std::size_t> family;
      for (const auto& o : comma.objects) {
        MorId leg = E.compose(ran.comparison(o.right), ran.extension(o.arrow));
        family.push_back(E.hom_position(E.compose(leg, k)));
      }
      auto it = std::lower_bound(lim.families.begin(), lim.families.end(), family);
      if (it == lim.families.end() || *it != family) return false;
      images.insert(static_cast<std::size_t>(it - lim.families.begin()));
    }
    if (images.size() != homs.size()) return false;
  }
  return true;
}

}  // namespace fincat
