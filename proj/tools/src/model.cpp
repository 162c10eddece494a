#include "fincat/cli/model.hpp"

#include <optional>
#include <set>

#include "fincat/constructions.hpp"

namespace fincat::cli {

namespace {

[[noreturn]] void unresolved(Pos pos, const std::string& what, const std::string& name) {
  throw SpecError(SpecErrorKind::UnresolvedName, pos, "unknown " + what + " '" + name + "'");
}

[[noreturn]] void ill_typed(Pos pos, const std::string& message) {
  throw SpecError(SpecErrorKind::IllTypedDeclaration, pos, message);
}

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name, const std::string& what, Pos pos) {
  auto it = m.find(name);
  if (it == m.end()) unresolved(pos, what, name);
  return it->second;
}

ObjId object_in(const FinCat& c, const std::string& name, const std::string& cat, Pos pos) {
  auto o = c.find_object(name);
  if (!o) unresolved(pos, "object of " + cat, name);
  return *o;
}

MorId morphism_in(const FinCat& c, const std::string& name, const std::string& cat, Pos pos) {
  auto m = c.find_morphism(name);
  if (!m) unresolved(pos, "morphism of " + cat, name);
  return *m;
}

std::size_t element_in(const FinSetObj& s, const std::string& label, const std::string& set, Pos pos) {
  auto e = s.find(label);
  if (!e) unresolved(pos, "element of " + set, label);
  return *e;
}

CatRef build_category(const CategoryDecl& d) {
  CategoryTables t;
  std::map<std::string, std::size_t> objects, morphisms;
  for (const auto& o : d.objects) {
    if (!objects.emplace(o, objects.size()).second) ill_typed(d.pos, "duplicate object '" + o + "' in " + d.name);
    t.object_names.push_back(o);
  }
  for (std::size_t i = 0; i < d.objects.size(); ++i) {
    const std::string id = "id_" + d.objects[i];
    if (!morphisms.emplace(id, morphisms.size()).second) ill_typed(d.pos, "duplicate morphism '" + id + "'");
    t.morphism_names.push_back(id);
    t.src.push_back(ObjId{i});
    t.dst.push_back(ObjId{i});
    t.identity.push_back(MorId{i});
  }
  for (const auto& m : d.morphisms) {
    if (!morphisms.emplace(m.name, morphisms.size()).second) {
      ill_typed(m.pos, "duplicate morphism '" + m.name + "' in " + d.name);
    }
    auto s = objects.find(m.src);
    auto e = objects.find(m.dst);
    if (s == objects.end()) unresolved(m.pos, "object of " + d.name, m.src);
    if (e == objects.end()) unresolved(m.pos, "object of " + d.name, m.dst);
    t.morphism_names.push_back(m.name);
    t.src.push_back(ObjId{s->second});
    t.dst.push_back(ObjId{e->second});
  }
  const std::size_t n = t.src.size();
  t.comp.assign(n * n, npos);
  for (std::size_t f = 0; f < n; ++f) {
    t.comp[t.identity[t.dst[f].index].index * n + f] = f;
    t.comp[f * n + t.identity[t.src[f].index].index] = f;
  }
  auto mor = [&](const std::string& name, Pos pos) {
    auto it = morphisms.find(name);
    if (it == morphisms.end()) unresolved(pos, "morphism of " + d.name, name);
    return it->second;
  };
  auto obj = [&](ObjId o) { return t.object_names[o.index]; };
  for (const auto& row : d.comps) {
    const std::size_t g = mor(row.g, row.pos), f = mor(row.f, row.pos), h = mor(row.h, row.pos);
    if (t.dst[f] != t.src[g]) {
      ill_typed(row.pos, "comp " + row.g + " " + row.f + ": " + row.f + " ends at " + obj(t.dst[f]) + " but " + row.g +
                             " starts at " + obj(t.src[g]));
    }
    if (t.src[h] != t.src[f] || t.dst[h] != t.dst[g]) {
      ill_typed(row.pos, "comp " + row.g + " " + row.f + " = " + row.h + ": " + row.h + " is " + obj(t.src[h]) + " -> " +
                             obj(t.dst[h]) + " but the composite is " + obj(t.src[f]) + " -> " + obj(t.dst[g]));
    }
    std::size_t& slot = t.comp[g * n + f];
    if (slot != npos && slot != h) {
      ill_typed(row.pos, "comp " + row.g + " " + row.f + " = " + row.h + " conflicts with " + t.morphism_names[slot]);
    }
    slot = h;
  }
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t f = 0; f < n; ++f) {
      if (t.dst[f] == t.src[g] && t.comp[g * n + f] == npos) {
        ill_typed(d.pos, "missing composition row 'comp " + t.morphism_names[g] + " " + t.morphism_names[f] + " = ?' in " +
                             d.name);
      }
    }
  }
  return make_category(std::move(t));
}

Functor build_functor(const FunctorDecl& d, const CatRef& dom, const CatRef& cod) {
  std::vector<std::optional<ObjId>> omap(dom->object_count());
  for (const auto& [a, b] : d.objects) {
    auto& slot = omap[object_in(*dom, a, d.dom, d.pos).index];
    if (slot) ill_typed(d.pos, d.name + ": object '" + a + "' mapped twice");
    slot = object_in(*cod, b, d.cod, d.pos);
  }
  std::vector<ObjId> objects;
  for (auto a : dom->objects()) {
    if (!omap[a.index]) ill_typed(d.pos, d.name + ": no image for object '" + dom->object_name(a) + "'");
    objects.push_back(*omap[a.index]);
  }
  std::vector<std::optional<MorId>> mmap(dom->morphism_count());
  for (auto a : dom->objects()) mmap[dom->identity(a).index] = cod->identity(objects[a.index]);
  for (const auto& [f, g] : d.morphisms) {
    const MorId src = morphism_in(*dom, f, d.dom, d.pos);
    const MorId img = morphism_in(*cod, g, d.cod, d.pos);
    auto& slot = mmap[src.index];
    if (slot && *slot != img) ill_typed(d.pos, d.name + ": morphism '" + f + "' mapped inconsistently");
    slot = img;
  }
  std::vector<MorId> morphisms;
  for (auto f : dom->morphisms()) {
    if (!mmap[f.index]) ill_typed(d.pos, d.name + ": no image for morphism '" + dom->morphism_name(f) + "'");
    const MorId g = *mmap[f.index];
    if (cod->src(g) != objects[dom->src(f).index] || cod->dst(g) != objects[dom->dst(f).index]) {
      ill_typed(d.pos, d.name + ": image " + cod->morphism_name(g) + " of " + dom->morphism_name(f) +
                           " does not run between the images of its endpoints");
    }
    morphisms.push_back(g);
  }
  return Functor(dom, cod, std::move(objects), std::move(morphisms));
}

std::vector<MorId> components(const std::string& name, const std::vector<Mapping>& rows, const FinCat& dom,
                              const std::string& dom_name, const FinCat& cod, const std::string& cod_name,
                              Pos pos) {
  std::vector<std::optional<MorId>> out(dom.object_count());
  for (const auto& [a, f] : rows) {
    auto& slot = out[object_in(dom, a, dom_name, pos).index];
    if (slot) ill_typed(pos, name + ": component at '" + a + "' given twice");
    slot = morphism_in(cod, f, cod_name, pos);
  }
  std::vector<MorId> result;
  for (auto a : dom.objects()) {
    if (!out[a.index]) ill_typed(pos, name + ": no component at '" + dom.object_name(a) + "'");
    result.push_back(*out[a.index]);
  }
  return result;
}

void check_components(const std::string& name, const NatTrans& n, Pos pos) {
  const FinCat& c = n.source.cod();
  for (auto a : n.source.dom().objects()) {
    const MorId f = n(a);
    if (c.src(f) != n.source(a) || c.dst(f) != n.target(a)) {
      ill_typed(pos, name + ": component " + c.morphism_name(f) + " at " + n.source.dom().object_name(a) + " is " +
                         c.object_name(c.src(f)) + " -> " + c.object_name(c.dst(f)) + ", expected " +
                         c.object_name(n.source(a)) + " -> " + c.object_name(n.target(a)));
    }
  }
}

}  // namespace

Model build_model(const SpecFile& spec) {
  Model m;
  std::set<std::string> names;
  for (const auto& decl : spec.decls) {
    const std::string& name = decl_name(decl);
    const Pos pos = std::visit([](const auto& d) { return d.pos; }, decl);
    if (!names.insert(name).second) ill_typed(pos, "duplicate declaration '" + name + "'");
    m.order_.emplace_back(std::string(decl_keyword(decl)), name);

    if (const auto* c = std::get_if<CategoryDecl>(&decl)) {
      m.categories_.emplace(name, build_category(*c));
    } else if (const auto* d = std::get_if<DerivedCategoryDecl>(&decl)) {
      const CatRef& first = lookup(m.categories_, d->args.at(0), "category", pos);
      if (d->op == "op") {
        m.categories_.emplace(name, opposite(first));
      } else {
        const CatRef& second = lookup(m.categories_, d->args.at(1), "category", pos);
        m.categories_.emplace(name, product_category(first, second).category);
      }
    } else if (const auto* f = std::get_if<FunctorDecl>(&decl)) {
      const CatRef& dom = lookup(m.categories_, f->dom, "category", pos);
      const CatRef& cod = lookup(m.categories_, f->cod, "category", pos);
      m.functors_.emplace(name, build_functor(*f, dom, cod));
    } else if (const auto* n = std::get_if<NatTransDecl>(&decl)) {
      const Functor& s = lookup(m.functors_, n->source, "functor", pos);
      const Functor& t = lookup(m.functors_, n->target, "functor", pos);
      if (!same_category(s.dom_ref(), t.dom_ref()) || !same_category(s.cod_ref(), t.cod_ref())) {
        ill_typed(pos, name + ": " + n->source + " and " + n->target + " are not parallel");
      }
      NatTrans nt{s, t, components(name, n->components, s.dom(), n->source, s.cod(), n->source, pos)};
      check_components(name, nt, pos);
      m.nattrans_.emplace(name, std::move(nt));
    } else if (const auto* s = std::get_if<SetDecl>(&decl)) {
      try {
        m.sets_.emplace(name, FinSetObj(s->elements));
      } catch (const Error& e) {
        ill_typed(pos, name + ": " + e.what());
      }
    } else if (const auto* fn = std::get_if<FnDecl>(&decl)) {
      const FinSetObj& dom = lookup(m.sets_, fn->dom, "set", pos);
      const FinSetObj& cod = lookup(m.sets_, fn->cod, "set", pos);
      std::vector<std::optional<std::size_t>> table(dom.size());
      for (const auto& [x, y] : fn->table) {
        auto& slot = table[element_in(dom, x, fn->dom, pos)];
        if (slot) ill_typed(pos, name + ": element '" + x + "' mapped twice");
        slot = element_in(cod, y, fn->cod, pos);
      }
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < dom.size(); ++i) {
        if (!table[i]) ill_typed(pos, name + ": no image for '" + dom.label(i) + "'");
        out.push_back(*table[i]);
      }
      m.fns_.emplace(name, FinFn(dom, cod, std::move(out)));
    } else if (const auto* dg = std::get_if<DiagramDecl>(&decl)) {
      const CatRef& shape = lookup(m.categories_, dg->shape, "category", pos);
      std::vector<std::optional<FinSetObj>> objects(shape->object_count());
      for (const auto& [a, s] : dg->objects) {
        auto& slot = objects[object_in(*shape, a, dg->shape, pos).index];
        if (slot) ill_typed(pos, name + ": object '" + a + "' assigned twice");
        slot = lookup(m.sets_, s, "set", pos);
      }
      Diagram out{shape, {}, {}};
      for (auto a : shape->objects()) {
        if (!objects[a.index]) ill_typed(pos, name + ": no set for object '" + shape->object_name(a) + "'");
        out.objects.push_back(*objects[a.index]);
      }
      std::vector<std::optional<FinFn>> maps(shape->morphism_count());
      for (auto a : shape->objects()) maps[shape->identity(a).index] = identity_fn(out.objects[a.index]);
      for (const auto& [f, g] : dg->morphisms) {
        const MorId id = morphism_in(*shape, f, dg->shape, pos);
        const FinFn& fn_value = lookup(m.fns_, g, "fn", pos);
        auto& slot = maps[id.index];
        if (slot && *slot != fn_value) ill_typed(pos, name + ": morphism '" + f + "' assigned inconsistently");
        slot = fn_value;
      }
      for (auto f : shape->morphisms()) {
        if (!maps[f.index]) ill_typed(pos, name + ": no function for morphism '" + shape->morphism_name(f) + "'");
        if (maps[f.index]->dom() != out.objects[shape->src(f).index] ||
            maps[f.index]->cod() != out.objects[shape->dst(f).index]) {
          ill_typed(pos, name + ": the function for " + shape->morphism_name(f) +
                             " does not run between the sets of its endpoints");
        }
        out.morphisms.push_back(*maps[f.index]);
      }
      m.diagrams_.emplace(name, std::move(out));
    } else if (const auto* a = std::get_if<AdjunctionDecl>(&decl)) {
      const Functor& left = lookup(m.functors_, a->left, "functor", pos);
      const Functor& right = lookup(m.functors_, a->right, "functor", pos);
      if (!same_category(left.cod_ref(), right.dom_ref()) || !same_category(left.dom_ref(), right.cod_ref())) {
        ill_typed(pos, name + ": " + a->left + " and " + a->right + " do not run in opposite directions");
      }
      const Functor gf = compose_functors(right, left);
      const Functor fg = compose_functors(left, right);
      NatTrans unit{identity_functor(left.dom_ref()), gf,
                    components(name + " unit", a->unit, left.dom(), a->left, left.dom(), a->left, pos)};
      NatTrans counit{fg, identity_functor(left.cod_ref()),
                      components(name + " counit", a->counit, left.cod(), a->right, left.cod(), a->right, pos)};
      check_components(name + " unit", unit, pos);
      check_components(name + " counit", counit, pos);
      m.adjoints_.emplace(name, std::make_pair(a->left, a->right));
      m.adjunctions_.emplace(name, AdjUnitCounit{left, right, std::move(unit), std::move(counit)});
    } else {
      m.scenarios_.emplace(name, std::get<ScenarioDecl>(decl));
    }
  }
  return m;
}

const CatRef& Model::category(const std::string& name) const { return lookup(categories_, name, "category", {}); }
const Functor& Model::functor(const std::string& name) const { return lookup(functors_, name, "functor", {}); }
const NatTrans& Model::nattrans(const std::string& name) const { return lookup(nattrans_, name, "nattrans", {}); }
const FinSetObj& Model::set(const std::string& name) const { return lookup(sets_, name, "set", {}); }
const FinFn& Model::fn(const std::string& name) const { return lookup(fns_, name, "fn", {}); }
const Diagram& Model::diagram(const std::string& name) const { return lookup(diagrams_, name, "diagram", {}); }
const AdjUnitCounit& Model::adjunction(const std::string& name) const {
  return lookup(adjunctions_, name, "adjunction", {});
}
const ScenarioDecl& Model::scenario(const std::string& name) const {
  return lookup(scenarios_, name, "scenario", {});
}

std::pair<std::string, std::string> Model::adjoint_names(const std::string& adjunction) const {
  return lookup(adjoints_, adjunction, "adjunction", {});
}

std::string Model::category_name(const FinCat& c) const {
  for (const auto& [name, ref] : categories_) {
    if (ref.get() == &c) return name;
  }
  for (const auto& [name, ref] : categories_) {
    if (*ref == c) return name;
  }
  return "?";
}

}  // namespace fincat::cli
