#include "fincat/cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <set>

#include "fincat/adjunction.hpp"
#include "fincat/algebra.hpp"
#include "fincat/constructions.hpp"
#include "fincat/kan.hpp"
#include "fincat/limits.hpp"
#include "fincat/universal.hpp"
#include "fincat/universes.hpp"
#include "fincat/yoneda.hpp"

namespace fincat::cli {

namespace {

template <class Body>
Check timed(std::string name, Body body) {
  Check c;
  c.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  body(c);
  const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
  c.timing_ms = std::round(took.count() * 1000.0) / 1000.0;
  return c;
}

void fail(Check& c, std::string witness) {
  c.pass = false;
  if (c.witness.empty()) c.witness = std::move(witness);
}

const std::string& need(const std::string& value, const char* flag) {
  if (value.empty()) throw Error(ErrorCode::InvalidInput, std::string(flag) + " is required");
  return value;
}

/// Diagrams may be set-valued (diagram declarations) or land in a finite
/// category (functor declarations).
void need_diagram_or_functor(const Model& m, const std::string& name) {
  if (!m.has_diagram(name) && !m.has_functor(name)) {
    throw SpecError(SpecErrorKind::UnresolvedName, {}, "unknown diagram or functor '" + name + "'");
  }
}

std::string describe(const Validation& v) {
  std::string out(to_string(v.law));
  if (!v.detail.empty()) out += ": " + v.detail;
  return out;
}

/// Rejects inputs that break the category laws before computing with them.
void require_valid(const Validation& v, const std::string& what) {
  if (!v.ok()) throw SpecError(SpecErrorKind::IllTypedDeclaration, {}, what + " is not lawful: " + describe(v));
}

void require_valid(const CatRef& c, const std::string& name) { require_valid(validate(*c), "category " + name); }
void require_valid(const Functor& f, const std::string& name) {
  require_valid(validate(f.dom()), "domain of " + name);
  require_valid(validate(f.cod()), "codomain of " + name);
  require_valid(validate(f), "functor " + name);
}
void require_valid(const Diagram& d, const std::string& name) {
  require_valid(validate(*d.shape), "shape of " + name);
  require_valid(validate(d), "diagram " + name);
}

Json object_names(const FinCat& c, const std::vector<ObjId>& xs) {
  Json out = Json::array();
  for (auto x : xs) out.push_back(c.object_name(x));
  return out;
}

Json morphism_names(const FinCat& c, const std::vector<MorId>& fs) {
  Json out = Json::array();
  for (auto f : fs) out.push_back(c.morphism_name(f));
  return out;
}

Json fn_json(const FinFn& f) {
  Json out = Json::object();
  for (std::size_t x = 0; x < f.dom().size(); ++x) out[f.dom().label(x)] = f.cod().label(f(x));
  return out;
}

Json set_json(const FinSetObj& s) { return Json(s.elements()); }

Json size_map(const Diagram& d) {
  Json out = Json::object();
  for (auto a : d.shape->objects()) out[d.shape->object_name(a)] = d(a).size();
  return out;
}

Json counts_json(const FinCat& c) {
  Json out;
  out["objects"] = c.object_count();
  out["morphisms"] = c.morphism_count();
  return out;
}

// ---------------------------------------------------------------- validate

Report cmd_validate(const Model& m, const CommandOptions&) {
  Report r{"validate", {}};
  for (const auto& [kind, name] : m.declarations()) {
    r.checks.push_back(timed(kind + " " + name, [&, kind = kind, name = name](Check& c) {
      Validation v;
      if (kind == "category") {
        const auto& cat = *m.category(name);
        c.details = counts_json(cat);
        v = validate(cat);
      } else if (kind == "functor") {
        const auto& f = m.functor(name);
        c.details["dom"] = m.category_name(f.dom());
        c.details["cod"] = m.category_name(f.cod());
        v = validate(f);
      } else if (kind == "nattrans") {
        const auto& n = m.nattrans(name);
        c.details["components"] = morphism_names(n.source.cod(), n.components);
        v = validate(n);
      } else if (kind == "set") {
        c.details["size"] = m.set(name).size();
      } else if (kind == "fn") {
        const auto& f = m.fn(name);
        c.details["injective"] = is_injective(f);
        c.details["surjective"] = is_surjective(f);
      } else if (kind == "diagram") {
        const auto& d = m.diagram(name);
        c.details["sizes"] = size_map(d);
        v = validate(d);
      } else if (kind == "adjunction") {
        const auto& a = m.adjunction(name);
        v = validate(a.unit);
        if (v.ok()) v = validate(a.counit);
        c.details["natural"] = v.ok();
      } else if (kind == "scenario") {
        c.details["steps"] = m.scenario(name).steps.size();
      }
      if (!v.ok()) fail(c, describe(v));
    }));
  }
  return r;
}

// --------------------------------------------------------------- construct

Report cmd_limit(const Model& m, const CommandOptions& o, bool co) {
  const std::string& name = need(o.of, "--of");
  need_diagram_or_functor(m, name);
  Report r{co ? "construct colimit" : "construct limit", {}};
  if (m.has_diagram(name)) {
    const Diagram& d = m.diagram(name);
    require_valid(d, name);
    r.checks.push_back(timed((co ? "colimit of " : "limit of ") + name, [&](Check& c) {
      const FinSetObj* apex = nullptr;
      std::vector<FinFn> legs;
      FinSetLimit lim;
      FinSetColimit colim;
      if (co) {
        colim = finset_colimit(d);
        apex = &colim.apex;
        legs = colim.legs;
      } else {
        lim = finset_limit(d);
        apex = &lim.apex;
        legs = lim.legs;
        c.details["matching_families"] = lim.families.size();
      }
      c.details["cardinality"] = apex->size();
      for (auto f : d.shape->morphisms()) {
        const auto s = d.shape->src(f), t = d.shape->dst(f);
        const bool commutes = co ? compose(legs[t.index], d(f)) == legs[s.index]
                                 : compose(d(f), legs[s.index]) == legs[t.index];
        if (!commutes) fail(c, "leg square fails at " + d.shape->morphism_name(f));
      }
      if (o.tables) {
        c.details["elements"] = set_json(*apex);
        Json lj = Json::object();
        for (auto a : d.shape->objects()) lj[d.shape->object_name(a)] = fn_json(legs[a.index]);
        c.details["legs"] = lj;
      }
    }));
    return r;
  }
  const Functor& f = m.functor(name);
  require_valid(f, name);
  r.checks.push_back(timed((co ? "colimit of " : "limit of ") + name, [&](Check& c) {
    const FinCat& C = f.cod();
    if (!co) c.details["cones"] = enumerate_cones(f).size();
    auto cone = co ? colimit_by_search(f) : limit_by_search(f);
    if (!cone) {
      c.details["exists"] = false;
      fail(c, std::string("no universal ") + (co ? "cocone" : "cone") + " over " + name);
      return;
    }
    c.details["exists"] = true;
    c.details["apex"] = C.object_name(cone->apex);
    c.details["legs"] = morphism_names(C, cone->legs);
  }));
  return r;
}

Report cmd_kan(const Model& m, const CommandOptions& o, bool left) {
  const std::string& name = need(o.of, "--of");
  need_diagram_or_functor(m, name);
  const Functor& p = m.functor(need(o.along, "--along"));
  require_valid(p, o.along);
  Report r{left ? "construct kan-left" : "construct kan-right", {}};
  const std::string title = std::string(left ? "Lan_" : "Ran_") + o.along + " " + name;
  if (m.has_diagram(name)) {
    const Diagram& d = m.diagram(name);
    require_valid(d, name);
    r.checks.push_back(timed(title, [&](Check& c) {
      auto k = left ? left_kan_finset(d, p) : right_kan_finset(d, p);
      c.details["sizes"] = size_map(k.extension);
      if (o.tables) {
        Json ext = Json::object();
        for (auto x : k.extension.shape->objects()) ext[k.extension.shape->object_name(x)] = set_json(k.extension(x));
        c.details["sets"] = ext;
      }
      auto v = validate(k.extension);
      if (!v.ok()) fail(c, describe(v));
    }));
    return r;
  }
  const Functor& f = m.functor(name);
  require_valid(f, name);
  r.checks.push_back(timed(title, [&](Check& c) {
    auto k = left ? left_kan(f, p) : right_kan_pointwise(f, p);
    if (!k) {
      c.details["exists"] = false;
      fail(c, "a pointwise " + std::string(left ? "colimit" : "limit") + " is missing");
      return;
    }
    c.details["exists"] = true;
    c.details["objects"] = object_names(k->extension.cod(), k->extension.omap());
    c.details["comparison"] = morphism_names(k->comparison.source.cod(), k->comparison.components);
  }));
  return r;
}

Report cmd_comma(const Model& m, const CommandOptions& o) {
  const Functor& f = m.functor(need(o.left, "--left"));
  const Functor& g = m.functor(need(o.right, "--right"));
  Report r{"construct comma", {}};
  r.checks.push_back(timed("(" + o.left + " | " + o.right + ")", [&](Check& c) {
    auto k = comma_category(f, g);
    c.details = counts_json(*k.category);
    if (o.tables) {
      Json objs = Json::array();
      for (auto x : k.category->objects()) objs.push_back(k.category->object_name(x));
      c.details["elements"] = objs;
    }
    auto v = validate(*k.category);
    if (!v.ok()) fail(c, describe(v));
  }));
  return r;
}

Report cmd_functor_cat(const Model& m, const CommandOptions& o) {
  const CatRef& a = m.category(need(o.left, "--left"));
  const CatRef& b = m.category(need(o.right, "--right"));
  require_valid(a, o.left);
  require_valid(b, o.right);
  Report r{"construct functor-cat", {}};
  r.checks.push_back(timed("[" + o.left + ", " + o.right + "]", [&](Check& c) {
    auto fc = functor_category(a, b);
    c.details = counts_json(*fc.category());
    auto v = validate(*fc.category());
    if (!v.ok()) fail(c, describe(v));
  }));
  return r;
}

Report cmd_product(const Model& m, const CommandOptions& o) {
  const CatRef& a = m.category(need(o.left, "--left"));
  const CatRef& b = m.category(need(o.right, "--right"));
  Report r{"construct product", {}};
  r.checks.push_back(timed(o.left + " x " + o.right, [&](Check& c) {
    auto p = product_category(a, b);
    c.details = counts_json(*p.category);
    auto v = validate(*p.category);
    if (v.ok()) v = validate(p.first);
    if (v.ok()) v = validate(p.second);
    if (!v.ok()) fail(c, describe(v));
  }));
  return r;
}

Report cmd_opposite(const Model& m, const CommandOptions& o) {
  const std::string& name = need(o.of, "--of");
  Report r{"construct opposite", {}};
  r.checks.push_back(timed(name + "^op", [&](Check& c) {
    if (m.has_category(name)) {
      const CatRef& cat = m.category(name);
      const FinCat op = opposite_category(*cat);
      c.details = counts_json(op);
      const bool involution = opposite_category(op).tables() == cat->tables();
      c.details["involution"] = involution;
      if (!involution) fail(c, "(" + name + "^op)^op differs from " + name);
    } else {
      const Functor& f = m.functor(name);
      const Functor op = opposite_functor(f);
      c.details["objects"] = object_names(op.cod(), op.omap());
      const bool involution = opposite_functor(op) == f;
      c.details["involution"] = involution;
      if (!involution) fail(c, "(" + name + "^op)^op differs from " + name);
    }
  }));
  return r;
}

Report cmd_compose(const Model& m, const CommandOptions& o) {
  const Functor& first = m.functor(need(o.of, "--of"));
  const Functor& second = m.functor(need(o.with, "--with"));
  Report r{"construct compose", {}};
  r.checks.push_back(timed(o.with + " . " + o.of, [&](Check& c) {
    const Functor h = compose_functors(second, first);
    c.details["objects"] = object_names(h.cod(), h.omap());
    c.details["morphisms"] = morphism_names(h.cod(), h.mmap());
    auto v = validate(h);
    if (!v.ok()) fail(c, describe(v));
  }));
  return r;
}

Report cmd_curry(const Model& m, const CommandOptions& o) {
  const Functor& f = m.functor(need(o.of, "--of"));
  Report r{"construct curry", {}};
  r.checks.push_back(timed("curry " + o.of, [&](Check& c) {
    auto cur = curry_functor(f);
    c.details["exponent"] = counts_json(*cur.exponent.category());
    c.details["objects"] = object_names(cur.functor.cod(), cur.functor.omap());
    const bool round_trip = uncurry_functor(cur.functor, cur.exponent) == f;
    c.details["round_trip"] = round_trip;
    if (!round_trip) fail(c, "uncurry(curry " + o.of + ") differs from " + o.of);
    auto v = validate(cur.functor);
    if (!v.ok()) fail(c, describe(v));
  }));
  return r;
}

Report cmd_cat_universal(const Model& m, const CommandOptions& o) {
  const CatRef& cat = m.category(need(o.of, "--of"));
  Report r{"construct cat-universal", {}};
  r.checks.push_back(timed("terminal and initial for " + o.of, [&](Check& c) {
    auto w = cat_terminal_initial_witness(cat);
    c.details["functors_from_empty"] = w.functors_from_empty;
    c.details["functors_to_unit"] = w.functors_to_unit;
    if (w.functors_from_empty != 1) fail(c, std::to_string(w.functors_from_empty) + " functors from the empty category");
    if (w.functors_to_unit != 1) fail(c, std::to_string(w.functors_to_unit) + " functors to the unit category");
  }));
  return r;
}

Report cmd_algebra(const Model& m, const CommandOptions& o, bool co) {
  const Functor& t = m.functor(need(o.of, "--of"));
  require_valid(t, o.of);
  Report r{co ? "construct coalgebra-cat" : "construct algebra-cat", {}};
  r.checks.push_back(timed((co ? "coalgebras of " : "algebras of ") + o.of, [&](Check& c) {
    auto alg = co ? coalgebra_category(t) : algebra_category(t);
    c.details = counts_json(*alg.category);
    auto init = co ? terminal_object(*alg.category) : initial_object(*alg.category);
    c.details[co ? "terminal" : "initial"] = init ? Json(alg.category->object_name(*init)) : Json(nullptr);
    if (!co) {
      auto lambek = lambek_check(alg);
      if (lambek.initial) {
        c.details["structure_iso"] = lambek.structure_iso;
        if (!lambek.structure_iso) fail(c, "the initial algebra's structure map is not invertible");
      }
    }
    auto v = validate(*alg.category);
    if (v.ok()) v = validate(alg.forgetful);
    if (!v.ok()) fail(c, describe(v));
  }));
  return r;
}

Report cmd_hom(const Model& m, const CommandOptions& o) {
  const CatRef& cat = m.category(need(o.of, "--of"));
  require_valid(cat, o.of);
  const auto x = cat->find_object(need(o.at, "--at"));
  if (!x) throw SpecError(SpecErrorKind::UnresolvedName, {}, "unknown object of " + o.of + " '" + o.at + "'");
  Report r{"construct hom", {}};
  r.checks.push_back(timed("Hom(-, " + o.at + ") on " + o.of, [&](Check& c) {
    auto h = hom_functor(cat, *x);
    c.details["sizes"] = size_map(h);
    auto v = validate(h);
    if (!v.ok()) fail(c, describe(v));
  }));
  return r;
}

// ------------------------------------------------------------------- check

Report cmd_adjunction(const Model& m, const CommandOptions& o) {
  Report r{"check adjunction", {}};
  if (!o.kind.empty()) {
    const std::size_t bound = o.bound;
    auto witness = [&](const std::string& title, auto run) {
      r.checks.push_back(timed(title, [&](Check& c) {
        FinSetAdjunctionReport rep = run();
        c.details["bound"] = rep.bound;
        c.details["instances"] = rep.instances;
        c.details["squares"] = rep.squares;
        c.details["bijective"] = rep.bijective;
        c.details["cardinality"] = rep.cardinality;
        c.details["natural"] = rep.natural;
        if (!rep.pass()) fail(c, rep.witness);
      }));
    };
    if (o.kind == "all" || o.kind == "chain") {
      for (auto k : {FinSetAdjunctionKind::SumDiag, FinSetAdjunctionKind::DiagProd, FinSetAdjunctionKind::ProdExp}) {
        if (o.kind == "all") witness(std::string(to_string(k)), [&] { return fs_adjunction_witness(k, bound); });
      }
      witness("chain", [&] { return fs_adjunction_chain(bound); });
    } else {
      const auto k = parse_finset_adjunction_kind(o.kind);
      witness(std::string(to_string(k)), [&] { return fs_adjunction_witness(k, bound); });
    }
    return r;
  }
  const std::string& name = need(o.of, "--of");
  const AdjUnitCounit& a = m.adjunction(name);
  require_valid(a.left, "left adjoint of " + name);
  require_valid(a.right, "right adjoint of " + name);
  const std::string label = name;
  Validation v;
  r.checks.push_back(timed(label + " triangles", [&](Check& c) {
    v = validate_adjunction(a);
    c.details["unit"] = morphism_names(a.left.dom(), a.unit.components);
    c.details["counit"] = morphism_names(a.left.cod(), a.counit.components);
    if (!v.ok()) {
      const auto [f, g] = m.adjoint_names(name);
      fail(c, name + " (" + f + " -| " + g + "): " + describe(v));
    }
  }));
  if (!v.ok()) return r;
  r.checks.push_back(timed(label + " conversions", [&](Check& c) {
    const Adjunction start = a;
    std::size_t paths = 0;
    for (AdjForm first : {AdjForm::Hom, AdjForm::UnitCounit, AdjForm::Universal}) {
      const Adjunction x = adj_convert(start, first);
      const auto vx = validate_adjunction(x);
      if (!vx.ok()) fail(c, std::string(to_string(first)) + " form fails " + describe(vx));
      for (AdjForm second : {AdjForm::Hom, AdjForm::UnitCounit, AdjForm::Universal}) {
        if (second == first) continue;
        ++paths;
        const Adjunction y = adj_convert(adj_convert(x, second), first);
        if (!(y == x)) {
          fail(c, std::string(to_string(first)) + " -> " + std::string(to_string(second)) + " -> " +
                      std::string(to_string(first)) + " is not the identity");
        }
      }
    }
    const bool back = adj_convert(adj_convert(start, AdjForm::Hom), AdjForm::UnitCounit) == start;
    if (!back) fail(c, "unit-counit -> hom -> unit-counit is not the identity");
    c.details["paths"] = paths;
  }));
  r.checks.push_back(timed(label + " dual", [&](Check& c) {
    const AdjUnitCounit d = adj_dual(a);
    const auto vd = validate_adjunction(d);
    c.details["dual_valid"] = vd.ok();
    const bool involution = adj_dual(d) == a;
    c.details["involution"] = involution;
    if (!vd.ok()) fail(c, "dual fails " + describe(vd));
    if (!involution) fail(c, "dual of the dual differs from " + name);
  }));
  if (!o.with.empty()) {
    const AdjUnitCounit& b = m.adjunction(o.with);
    r.checks.push_back(timed(label + " vs " + o.with, [&](Check& c) {
      const NatTrans iso = adj_unique_iso(unit_counit_to_hom(a), unit_counit_to_hom(b));
      const bool ok = is_natural_isomorphism(iso);
      c.details["components"] = morphism_names(iso.source.cod(), iso.components);
      c.details["natural_isomorphism"] = ok;
      if (!ok) fail(c, "comparison between the right adjoints is not a natural isomorphism");
    }));
  }
  return r;
}

Report cmd_yoneda(const Model& m, const CommandOptions& o) {
  const CatRef& cat = m.category(need(o.of, "--of"));
  require_valid(cat, o.of);
  Report r{"check yoneda", {}};
  r.checks.push_back(timed("embedding of " + o.of, [&](Check& c) {
    auto rep = check_embedding(yoneda_embedding(cat));
    c.details["functorial"] = rep.functorial;
    c.details["faithful"] = rep.faithful;
    c.details["full"] = rep.full;
    if (!rep.pass()) fail(c, rep.witness);
  }));
  auto bijections = [&](const std::string& title, const Presheaf& f) {
    r.checks.push_back(timed(title, [&](Check& c) {
      Json counts = Json::object();
      for (auto x : cat->objects()) {
        auto rep = yoneda_bijection(cat, f, x);
        counts[cat->object_name(x)] = rep.nat_count;
        if (!rep.pass()) {
          fail(c, "at " + cat->object_name(x) + ": |Nat| = " + std::to_string(rep.nat_count) + ", |F| = " +
                      std::to_string(rep.set_size));
        }
      }
      c.details["nat_counts"] = counts;
      const bool natural = yoneda_natural_in_object(cat, f);
      c.details["natural_in_object"] = natural;
      if (!natural) fail(c, "the bijection is not natural in the object");
    }));
  };
  auto op = opposite(cat);
  for (auto x : cat->objects()) bijections("Hom(-, " + cat->object_name(x) + ")", hom_functor(*cat, op, x));
  if (!o.with.empty()) {
    const Diagram& f = m.diagram(o.with);
    require_valid(f, o.with);
    if (!(f.shape->tables() == op->tables())) {
      throw SpecError(SpecErrorKind::IllTypedDeclaration, {}, o.with + " is not a presheaf on " + o.of);
    }
    Presheaf g{op, f.objects, f.morphisms};
    bijections(o.with, g);
  }
  return r;
}

Report cmd_topos(const Model& m, const CommandOptions& o) {
  Report r{"check topos", {}};
  const std::size_t bound = o.bound;
  const auto omega = fs_subobject_classifier();
  r.checks.push_back(timed("subobject classifier", [&](Check& c) {
    Json subs = Json::object();
    std::size_t monos = 0;
    for (std::size_t n = 0; n <= std::max<std::size_t>(bound, 1); ++n) {
      const auto a = FinSetObj::of_size(n);
      const auto chis = all_functions(a, omega.omega);
      std::set<std::vector<std::size_t>> classes;
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::string> labels;
        std::vector<std::size_t> table;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask >> i & 1) {
            labels.push_back(a.label(i));
            table.push_back(i);
          }
        }
        const FinSetObj s(labels);
        const FinFn mono(s, a, table);
        ++monos;
        std::size_t found = 0;
        for (const auto& chi : chis) found += is_pullback_square(mono, to_terminal(s), chi, omega.truth);
        const FinFn chi = omega.classify(mono);
        classes.insert(chi.table());
        if (found != 1) fail(c, std::to_string(found) + " classifying maps for a subset of size " +
                                    std::to_string(s.size()) + " of " + std::to_string(n));
        if (!is_pullback_square(mono, to_terminal(s), chi, omega.truth)) fail(c, "classify returned a non-pullback");
      }
      subs[std::to_string(n)] = classes.size();
      if (classes.size() != (std::size_t{1} << n)) fail(c, "|Sub(" + std::to_string(n) + ")| is wrong");
    }
    c.details["monos"] = monos;
    c.details["subobjects"] = subs;
  }));
  r.checks.push_back(timed("exponentials", [&](Check& c) {
    std::size_t instances = 0;
    for (std::size_t a = 0; a <= 2; ++a)
      for (std::size_t b = 0; b <= 2; ++b) {
        auto rep = fs_verify_universal(candidate(fs_exponential(FinSetObj::of_size(a), FinSetObj::of_size(b))), bound);
        instances += rep.instances;
        if (!rep.pass) fail(c, rep.witness);
      }
    c.details["bound"] = bound;
    c.details["instances"] = instances;
  }));
  r.checks.push_back(timed("slice exponentials", [&](Check& c) {
    std::size_t instances = 0, pairs = 0;
    const auto base = FinSetObj::of_size(2);
    std::vector<FinFn> over;
    for (std::size_t n = 1; n <= 2; ++n)
      for (auto& f : all_functions(FinSetObj::of_size(n), base)) over.push_back(f);
    for (const auto& f : over)
      for (const auto& g : over) {
        auto rep = verify_slice_exponential(fs_slice_exponential(f, g), std::min<std::size_t>(bound, 2));
        ++pairs;
        instances += rep.instances;
        if (!rep.pass) fail(c, rep.witness);
      }
    c.details["pairs"] = pairs;
    c.details["instances"] = instances;
  }));
  r.checks.push_back(timed("curry isomorphism", [&](Check& c) {
    std::size_t triples = 0;
    for (std::size_t a = 0; a <= 2; ++a)
      for (std::size_t b = 0; b <= 2; ++b)
        for (std::size_t k = 0; k <= 2; ++k) {
          ++triples;
          auto iso = ccc_exponential_iso(FinSetObj::of_size(a), FinSetObj::of_size(b), FinSetObj::of_size(k));
          if (!iso.round_trip) {
            fail(c, "round trip fails for sizes " + std::to_string(a) + ", " + std::to_string(b) + ", " +
                        std::to_string(k));
          }
        }
    auto nat = ccc_naturality(2);
    c.details["triples"] = triples;
    c.details["naturality_squares"] = nat.squares;
    if (!nat.pass) fail(c, nat.witness);
  }));
  if (!o.of.empty()) {
    const FinFn& mono = m.fn(o.of);
    r.checks.push_back(timed("classify " + o.of, [&](Check& c) {
      const FinFn chi = omega.classify(mono);
      c.details["chi"] = fn_json(chi);
    }));
  }
  return r;
}

Report cmd_complete_preorder(const Model& m, const CommandOptions& o) {
  Report r{"check complete-preorder", {}};
  if (o.scan) {
    r.checks.push_back(timed("scan " + std::to_string(o.max_objects) + " objects, " +
                                 std::to_string(o.max_morphisms) + " morphisms",
                             [&](Check& c) {
                               auto s = scan_complete_preorder(o.max_objects, o.max_morphisms);
                               c.details["hom_matrices"] = s.hom_matrices;
                               c.details["pruned_by_counts"] = s.pruned_by_counts;
                               c.details["categories_checked"] = s.categories_checked;
                               c.details["complete"] = s.complete;
                               c.details["counterexamples"] = s.counterexamples;
                               if (s.counterexamples > 0) {
                                 const auto& t = s.counterexample_categories.front()->tables();
                                 fail(c, "complete non-preorder with " + std::to_string(t.object_names.size()) +
                                             " objects and " + std::to_string(t.src.size()) + " morphisms");
                               }
                             }));
    return r;
  }
  const std::string& name = need(o.of, "--of");
  const CatRef& cat = m.category(name);
  require_valid(cat, name);
  r.checks.push_back(timed(name, [&](Check& c) {
    auto rep = complete_preorder_check(cat);
    c.details["complete"] = rep.complete;
    if (!rep.complete) c.details["missing"] = rep.missing;
    c.details["preorder"] = rep.preorder;
    c.details["theorem_holds"] = rep.theorem_holds;
    c.details["hom_power_pairs"] = rep.hom_power.size();
    c.details["hom_power_ok"] = rep.hom_power_ok;
    if (!rep.theorem_holds) fail(c, name + " is complete but not a preorder");
    for (const auto& h : rep.hom_power) {
      if (h.hom_to_power != h.hom_power || !h.bijective) {
        fail(c, "hom-power identity fails at (" + cat->object_name(h.x) + ", " + cat->object_name(h.y) +
                    "): " + std::to_string(h.hom_to_power) + " vs " + std::to_string(h.hom_power));
      }
    }
  }));
  return r;
}

Report cmd_universal(const Model& m, const CommandOptions& o) {
  const std::string& kind = need(o.kind, "--kind");
  Report r{"check universal", {}};
  auto report = [&](Check& c, const UniversalReport& u) {
    c.details["bound"] = o.bound;
    c.details["instances"] = u.instances;
    if (!u.pass) fail(c, u.witness);
  };
  if (kind == "slice-exponential") {
    const FinFn& f = m.fn(need(o.left, "--left"));
    const FinFn& g = m.fn(need(o.right, "--right"));
    r.checks.push_back(timed("slice-exponential " + o.left + " " + o.right, [&](Check& c) {
      auto s = fs_slice_exponential(f, g);
      c.details["cardinality"] = s.object.size();
      report(c, verify_slice_exponential(s, o.bound));
    }));
    return r;
  }
  if (kind == "subobject-classifier") {
    const FinFn& mono = m.fn(need(o.of, "--of"));
    r.checks.push_back(timed("subobject-classifier " + o.of, [&](Check& c) {
      const auto omega = fs_subobject_classifier();
      const FinFn chi = omega.classify(mono);
      std::size_t found = 0;
      for (const auto& k : all_functions(mono.cod(), omega.omega))
        found += is_pullback_square(mono, to_terminal(mono.dom()), k, omega.truth);
      c.details["chi"] = fn_json(chi);
      c.details["candidates"] = std::size_t{1} << mono.cod().size();
      c.details["classifying"] = found;
      if (found != 1) fail(c, std::to_string(found) + " maps classify " + o.of);
    }));
    return r;
  }
  const UniversalKind k = parse_universal_kind(kind);
  r.checks.push_back(timed(kind + (o.left.empty() ? "" : " " + o.left + " " + o.right), [&](Check& c) {
    UniversalCandidate cand{k, {}, {}, {}, {}};
    switch (k) {
      case UniversalKind::Terminal: cand.object = terminal_set(); break;
      case UniversalKind::Initial: break;
      case UniversalKind::Product:
        cand = candidate(fs_product(m.set(need(o.left, "--left")), m.set(need(o.right, "--right"))));
        break;
      case UniversalKind::Sum:
        cand = candidate(fs_sum(m.set(need(o.left, "--left")), m.set(need(o.right, "--right"))));
        break;
      case UniversalKind::Exponential:
        cand = candidate(fs_exponential(m.set(need(o.left, "--left")), m.set(need(o.right, "--right"))));
        break;
      case UniversalKind::Equalizer: {
        const FinFn& f = m.fn(need(o.left, "--left"));
        const FinFn& g = m.fn(need(o.right, "--right"));
        cand = candidate(fs_equalizer(f, g), f, g);
        break;
      }
      case UniversalKind::Coequalizer: {
        const FinFn& f = m.fn(need(o.left, "--left"));
        const FinFn& g = m.fn(need(o.right, "--right"));
        cand = candidate(fs_coequalizer(f, g), f, g);
        break;
      }
      case UniversalKind::PullbackSquare: {
        const FinFn& f = m.fn(need(o.left, "--left"));
        const FinFn& g = m.fn(need(o.right, "--right"));
        cand = candidate(fs_pullback(f, g), f, g);
        break;
      }
    }
    c.details["cardinality"] = cand.object.size();
    if (o.tables) c.details["elements"] = set_json(cand.object);
    report(c, fs_verify_universal(cand, o.bound));
  }));
  return r;
}

void kan_report(Check& c, const KanCheckReport& rep) {
  c.details["cone_ok"] = rep.cone_ok;
  c.details["hom_ok"] = rep.hom_ok;
  c.details["functors_checked"] = rep.functors_checked;
  bool equal = true;
  for (const auto& [a, b] : rep.counts) equal = equal && a == b;
  c.details["counts_equal"] = equal;
  if (!rep.pass) fail(c, rep.witness);
  if (!equal) fail(c, "|Nat(M, Ran)| differs from |Nat(M.p, F)|");
}

Report cmd_kan_check(const Model& m, const CommandOptions& o) {
  const std::string& name = need(o.of, "--of");
  need_diagram_or_functor(m, name);
  const Functor& p = m.functor(need(o.along, "--along"));
  require_valid(p, o.along);
  Report r{"check kan", {}};
  if (m.has_diagram(name)) {
    const Diagram& d = m.diagram(name);
    require_valid(d, name);
    r.checks.push_back(timed("Ran_" + o.along + " " + name, [&](Check& c) {
      auto k = right_kan_finset(d, p);
      c.details["bound"] = o.shape();
      kan_report(c, kan_local_check(k, d, p, o.shape()));
    }));
    return r;
  }
  const Functor& f = m.functor(name);
  require_valid(f, name);
  r.checks.push_back(timed("Ran_" + o.along + " " + name, [&](Check& c) {
    auto k = right_kan_pointwise(f, p);
    if (!k) {
      fail(c, "a pointwise limit is missing");
      return;
    }
    kan_report(c, kan_local_check(*k, f, p));
    bool preserved = true;
    for (auto e : f.cod().objects()) preserved = preserved && representable_preservation(*k, f, p, e);
    c.details["representables"] = preserved;
    if (!preserved) fail(c, "Hom(e, -) does not preserve the extension");
  }));
  r.checks.push_back(timed("Lan_" + o.along + " " + name, [&](Check& c) {
    auto k = left_kan(f, p);
    if (!k) {
      fail(c, "a pointwise colimit is missing");
      return;
    }
    const Functor fop = opposite_functor(f);
    const Functor pop = opposite_functor(p);
    KanResult dual{opposite_functor(k->extension), opposite_nattrans(k->comparison)};
    kan_report(c, kan_local_check(dual, fop, pop));
  }));
  return r;
}

Report cmd_kan_global(const Model& m, const CommandOptions& o) {
  const Functor& p = m.functor(need(o.along, "--along"));
  const CatRef& e = m.category(need(o.with, "--with"));
  require_valid(p, o.along);
  require_valid(e, o.with);
  Report r{"check kan-global", {}};
  r.checks.push_back(timed("Ran_" + o.along + " into " + o.with, [&](Check& c) {
    auto rep = kan_global_check(p, e);
    c.details["source_functors"] = rep.source_functors;
    c.details["target_functors"] = rep.target_functors;
    c.details["cardinalities"] = rep.cardinalities;
    c.details["adjunction"] = std::string(to_string(rep.adjunction.law));
    if (!rep.pass) fail(c, rep.witness.empty() ? describe(rep.adjunction) : rep.witness);
  }));
  return r;
}

// ---------------------------------------------------------------- universe

Json atomic_list(const std::vector<AtomicConstraint>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(to_string(c));
  return out;
}

void verdict_details(Check& c, const Verdict& v) {
  c.details["consistent"] = v.consistent;
  c.details["trace"] = atomic_list(v.trace);
  if (!v.consistent) {
    c.details["cycle"] = atomic_list(v.cycle);
    const bool valid = validate_cycle(v.cycle);
    c.details["cycle_valid"] = valid;
    if (valid) c.details["conclusion"] = cycle_conclusion(v.cycle);
    if (!valid) fail(c, "the inconsistency witness does not re-validate");
  }
}

Report cmd_scenario(const Model& m, const CommandOptions& o) {
  Report r{"universe scenario", {}};
  for (const auto& name : o.names) {
    r.checks.push_back(timed(name, [&](Check& c) {
      auto out = run_builtin_scenario(name);
      c.details["description"] = out.description;
      c.details["expected_consistent"] = out.expected_consistent;
      verdict_details(c, out.verdict);
      Json ent = Json::array();
      for (const auto& e : out.entailments) {
        ent.push_back({{"statement", e.statement}, {"expected", e.expected}, {"holds", e.holds}});
        if (e.holds != e.expected) fail(c, "entailment '" + e.statement + "' is " + (e.holds ? "true" : "false"));
      }
      c.details["entailments"] = ent;
      if (out.verdict.consistent != out.expected_consistent) {
        fail(c, std::string("expected ") + (out.expected_consistent ? "consistent" : "inconsistent"));
      }
    }));
  }
  for (const auto& [kind, name] : m.declarations()) {
    if (kind != "scenario" || (!o.of.empty() && o.of != name)) continue;
    const ScenarioDecl& s = m.scenario(name);
    r.checks.push_back(timed(name, [&, name = name](Check& c) {
      UniverseContext u;
      auto parse = [&](const std::string& text) {
        try {
          return u.parse_constraint(text);
        } catch (const Error& e) {
          throw SpecError(SpecErrorKind::ParseError, s.pos, name + ": " + e.what());
        }
      };
      for (const auto& step : s.steps) {
        if (const auto* sig = std::get_if<SigDecl>(&step)) {
          u.register_signature(sig->name, parse_sig_kind(sig->kind), sig->rigid);
        } else if (const auto* text = std::get_if<std::string>(&step)) {
          auto k = parse(*text);
          k.origin = "declared";
          u.add(std::move(k));
        } else {
          const auto& t = std::get<TheoremDecl>(step);
          u.apply_theorem(t.theorem, t.sigs);
        }
      }
      const Verdict v = u.check();
      if (s.expect_consistent) c.details["expected_consistent"] = *s.expect_consistent;
      verdict_details(c, v);
      Json ent = Json::array();
      for (const auto& e : s.entails) {
        const bool holds = u.entails(parse(e.constraint));
        ent.push_back({{"statement", e.constraint}, {"expected", e.expected}, {"holds", holds}});
        if (holds != e.expected) fail(c, "entailment '" + e.constraint + "' is " + (holds ? "true" : "false"));
      }
      c.details["entailments"] = ent;
      if (s.expect_consistent && v.consistent != *s.expect_consistent) {
        fail(c, std::string("expected ") + (*s.expect_consistent ? "consistent" : "inconsistent") +
                    (v.consistent ? "" : ", derived " + cycle_conclusion(v.cycle)));
      }
    }));
  }
  if (!o.of.empty() && r.checks.empty()) {
    throw SpecError(SpecErrorKind::UnresolvedName, {}, "unknown scenario '" + o.of + "'");
  }
  if (r.checks.empty()) throw Error(ErrorCode::InvalidInput, "no scenario given");
  return r;
}

std::vector<CommandEntry> make_table() {
  using O = const CommandOptions&;
  using M = const Model&;
  std::vector<CommandEntry> t;
  t.push_back({"validate", "", "check the laws of every declaration", {"validate"},
               {{"walking-arrow.fcat"}, {"chain3.fcat", "galois.fcat"}}, cmd_validate});
  t.push_back({"construct", "limit", "limit of a set-valued diagram or a diagram in a finite category",
               {"finset_limit", "enumerate_cones", "limit_by_search"},
               {{"cospan.fcat", "--of", "D"}, {"walking-arrow.fcat", "--of", "incl"}},
               [](M m, O o) { return cmd_limit(m, o, false); }});
  t.push_back({"construct", "colimit", "colimit of a diagram", {"finset_colimit", "colimit_by_search"},
               {{"cospan.fcat", "--of", "D"}, {"walking-arrow.fcat", "--of", "T"}},
               [](M m, O o) { return cmd_limit(m, o, true); }});
  t.push_back({"construct", "kan-right", "right Kan extension along a functor",
               {"right_kan_pointwise", "right_kan_finset"},
               {{"walking-arrow.fcat", "--of", "F", "--along", "incl"},
                {"walking-arrow.fcat", "--of", "incl", "--along", "incl"}},
               [](M m, O o) { return cmd_kan(m, o, false); }});
  t.push_back({"construct", "kan-left", "left Kan extension along a functor", {"left_kan", "left_kan_finset"},
               {{"walking-arrow.fcat", "--of", "F", "--along", "incl"},
                {"walking-arrow.fcat", "--of", "incl", "--along", "incl"}},
               [](M m, O o) { return cmd_kan(m, o, true); }});
  t.push_back({"construct", "comma", "comma category of two functors", {"comma_category"},
               {{"walking-arrow.fcat", "--left", "incl", "--right", "T"}}, cmd_comma});
  t.push_back({"construct", "functor-cat", "category of functors", {"functor_category"},
               {{"walking-arrow.fcat", "--left", "D2", "--right", "W"}}, cmd_functor_cat});
  t.push_back({"construct", "product", "product of two categories", {"product_category"},
               {{"walking-arrow.fcat", "--left", "W", "--right", "W"}}, cmd_product});
  t.push_back({"construct", "opposite", "opposite category or functor", {"opposite_category", "opposite_functor"},
               {{"walking-arrow.fcat", "--of", "W"}, {"walking-arrow.fcat", "--of", "incl"}}, cmd_opposite});
  t.push_back({"construct", "compose", "composite of two functors", {"compose_functors"},
               {{"walking-arrow.fcat", "--of", "incl", "--with", "T"}}, cmd_compose});
  t.push_back({"construct", "curry", "curry a functor out of a product", {"curry_functor"},
               {{"walking-arrow.fcat", "--of", "proj"}}, cmd_curry});
  t.push_back({"construct", "cat-universal", "terminal and initial categories", {"cat_terminal_initial_witness"},
               {{"walking-arrow.fcat", "--of", "W"}}, cmd_cat_universal});
  t.push_back({"construct", "algebra-cat", "algebras of an endofunctor", {"algebra_category"},
               {{"walking-arrow.fcat", "--of", "T"}}, [](M m, O o) { return cmd_algebra(m, o, false); }});
  t.push_back({"construct", "coalgebra-cat", "coalgebras of an endofunctor", {"coalgebra_category"},
               {{"walking-arrow.fcat", "--of", "T"}}, [](M m, O o) { return cmd_algebra(m, o, true); }});
  t.push_back({"construct", "hom", "representable presheaf", {"hom_functor"},
               {{"chain3.fcat", "--of", "Chain3", "--at", "1"}}, cmd_hom});
  t.push_back({"check", "adjunction", "adjunction laws, conversions and duals, or a finite-set witness",
               {"validate_adjunction", "adj_convert", "adj_dual", "adj_unique_iso", "fs_adjunction_witness"},
               {{"galois.fcat", "--of", "A", "--with", "A2"}, {"--kind", "all", "--bound", "2"}}, cmd_adjunction});
  t.push_back({"check", "yoneda", "embedding and the Yoneda bijection",
               {"hom_functor", "yoneda_embedding", "yoneda_bijection"},
               {{"chain3.fcat", "--of", "Chain3", "--with", "P"}}, cmd_yoneda});
  t.push_back({"check", "topos", "classifier, exponentials and slices in finite sets",
               {"fs_subobject_classifier", "fs_exponential", "fs_slice_exponential", "fs_verify_universal",
                "ccc_exponential_iso"},
               {{"--bound", "2"}}, cmd_topos});
  t.push_back({"check", "complete-preorder", "complete categories are preorders", {"complete_preorder_check"},
               {{"chain3.fcat", "--of", "Chain3"}, {"--scan", "--max-objects", "2", "--max-morphisms", "4"}},
               cmd_complete_preorder});
  t.push_back({"check", "universal", "universal property of a finite-set construction",
               {"fs_product", "fs_sum", "fs_equalizer", "fs_coequalizer", "fs_exponential", "fs_slice_exponential",
                "fs_subobject_classifier", "fs_verify_universal"},
               {{"cospan.fcat", "--kind", "pullback-square", "--left", "f", "--right", "g"},
                {"cospan.fcat", "--kind", "product", "--left", "A", "--right", "C"},
                {"cospan.fcat", "--kind", "sum", "--left", "A", "--right", "C"},
                {"cospan.fcat", "--kind", "exponential", "--left", "C", "--right", "C"},
                {"cospan.fcat", "--kind", "equalizer", "--left", "f", "--right", "h"},
                {"cospan.fcat", "--kind", "coequalizer", "--left", "f", "--right", "h"},
                {"cospan.fcat", "--kind", "slice-exponential", "--left", "f", "--right", "g", "--bound", "2"},
                {"cospan.fcat", "--kind", "subobject-classifier", "--of", "m"},
                {"--kind", "terminal"},
                {"--kind", "initial"}},
               cmd_universal});
  t.push_back({"check", "kan", "local universal property of Kan extensions", {"kan_local_check"},
               {{"walking-arrow.fcat", "--of", "F", "--along", "incl"},
                {"walking-arrow.fcat", "--of", "incl", "--along", "incl"}},
               cmd_kan_check});
  t.push_back({"check", "kan-global", "precomposition is left adjoint to Ran", {"kan_global_check"},
               {{"walking-arrow.fcat", "--along", "incl", "--with", "W"}}, cmd_kan_global});
  t.push_back({"universe", "scenario", "universe consistency scenarios",
               {"check_consistency", "builtin_signature", "apply_theorem"},
               {{"set-complete-preorder"}, {"scenarios.fcat"}}, cmd_scenario});
  return t;
}

}  // namespace

const std::vector<CommandEntry>& dispatch_table() {
  static const std::vector<CommandEntry> table = make_table();
  return table;
}

Report run_command(const std::string& group, const std::string& name, const Model& model,
                   const CommandOptions& options) {
  for (const auto& e : dispatch_table()) {
    if (e.group == group && e.name == name) return e.run(model, options);
  }
  throw Error(ErrorCode::UnknownKind, "unknown command '" + group + (name.empty() ? "" : " " + name) + "'");
}

}  // namespace fincat::cli
