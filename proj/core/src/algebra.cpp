#include "fincat/algebra.hpp"

#include <map>
#include <tuple>

#include "fincat/adjunction.hpp"

namespace fincat {

AlgebraCategory algebra_category(const Functor& t) {
  if (!same_category(t.dom_ref(), t.cod_ref())) throw Error(ErrorCode::NotEndofunctor, "T must be an endofunctor");
  const FinCat& C = t.dom();
  std::vector<TAlgebra> objects;
  for (auto c : C.objects()) {
    for (auto s : C.hom(t(c), c)) objects.push_back({c, s});
  }

  CategoryTables tab;
  for (const auto& o : objects) tab.object_names.push_back("(" + C.object_name(o.carrier) + "," + C.morphism_name(o.structure) + ")");
  std::vector<MorId> carrier_arrow;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t a = 0; a < objects.size(); ++a) {
    for (std::size_t b = 0; b < objects.size(); ++b) {
      for (auto h : C.hom(objects[a].carrier, objects[b].carrier)) {
        if (C.compose(objects[b].structure, t(h)) != C.compose(h, objects[a].structure)) continue;
        index[{a, b, h.index}] = carrier_arrow.size();
        carrier_arrow.push_back(h);
        tab.src.push_back(ObjId{a});
        tab.dst.push_back(ObjId{b});
        tab.morphism_names.push_back(C.morphism_name(h) + "@" + std::to_string(a) + "," + std::to_string(b));
      }
    }
  }
  for (std::size_t a = 0; a < objects.size(); ++a) {
    tab.identity.push_back(MorId{index.at({a, a, C.identity(objects[a].carrier).index})});
  }
  const std::size_t m = carrier_arrow.size();
  tab.comp.assign(m * m, npos);
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t f = 0; f < m; ++f) {
      if (tab.dst[f] != tab.src[g]) continue;
      tab.comp[g * m + f] = index.at({tab.src[f].index, tab.dst[g].index, C.compose(carrier_arrow[g], carrier_arrow[f]).index});
    }
  }
  auto cat = make_category(std::move(tab));
  std::vector<ObjId> omap;
  for (const auto& o : objects) omap.push_back(o.carrier);
  Functor forget(cat, t.dom_ref(), std::move(omap), std::move(carrier_arrow));
  return AlgebraCategory{cat, forget, std::move(objects)};
}

AlgebraCategory coalgebra_category(const Functor& t) {
  if (!same_category(t.dom_ref(), t.cod_ref())) throw Error(ErrorCode::NotEndofunctor, "T must be an endofunctor");
  Functor top = opposite_functor(t);
  // Make T^op a genuine endofunctor on one shared opposite category.
  Functor endo(top.dom_ref(), top.dom_ref(), top.omap(), top.mmap());
  AlgebraCategory alg = algebra_category(endo);
  CatRef cat = opposite(alg.category);
  Functor forget(cat, t.dom_ref(), alg.forgetful.omap(), alg.forgetful.mmap());
  return AlgebraCategory{cat, forget, std::move(alg.objects)};
}

std::optional<ObjId> initial_object(const FinCat& c) {
  for (auto a : c.objects()) {
    bool ok = true;
    for (auto b : c.objects()) ok = ok && c.hom(a, b).size() == 1;
    if (ok) return a;
  }
  return std::nullopt;
}

std::optional<ObjId> terminal_object(const FinCat& c) {
  for (auto a : c.objects()) {
    bool ok = true;
    for (auto b : c.objects()) ok = ok && c.hom(b, a).size() == 1;
    if (ok) return a;
  }
  return std::nullopt;
}

LambekReport lambek_check(const AlgebraCategory& alg) {
  LambekReport rep;
  rep.initial = initial_object(*alg.category);
  if (rep.initial) {
    const auto& o = alg.objects[rep.initial->index];
    rep.structure_iso = find_inverse(alg.forgetful.cod(), o.structure).has_value();
  }
  return rep;
}

}  // namespace fincat
