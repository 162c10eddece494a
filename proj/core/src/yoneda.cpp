#include "fincat/yoneda.hpp"

#include <functional>
#include <set>

namespace fincat {

namespace {

std::vector<std::string> hom_labels(const FinCat& c, ObjId a, ObjId b) {
  std::vector<std::string> labels;
  std::set<std::string> seen;
  bool clash = false;
  for (auto f : c.hom(a, b)) {
    labels.push_back(c.morphism_name(f));
    clash = clash || !seen.insert(labels.back()).second;
  }
  if (clash) {
    const auto homs = c.hom(a, b);
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] += "#" + std::to_string(homs[i].index);
  }
  return labels;
}

}  // namespace

Presheaf hom_functor(const FinCat& c, const CatRef& op, ObjId x) {
  Presheaf out{op, {}, {}};
  for (auto d : c.objects()) out.objects.emplace_back(hom_labels(c, d, x));
  // f: d' → d in C acts Hom(d, x) → Hom(d', x) by h ↦ h∘f.
  for (auto f : c.morphisms()) {
    std::vector<std::size_t> t;
    for (auto h : c.hom(c.dst(f), x)) t.push_back(c.hom_position(c.compose(h, f)));
    out.morphisms.emplace_back(out.objects[c.dst(f).index], out.objects[c.src(f).index], std::move(t));
  }
  return out;
}

Presheaf hom_functor(const CatRef& c, ObjId x) { return hom_functor(*c, opposite(c), x); }

YonedaEmbedding yoneda_embedding(const CatRef& c) {
  YonedaEmbedding y{c, opposite(c), {}, {}};
  for (auto x : c->objects()) y.objects.push_back(hom_functor(*c, y.op, x));
  for (auto g : c->morphisms()) {
    const ObjId from = c->src(g), to = c->dst(g);
    DiagramMorphism alpha;
    for (auto d : c->objects()) {
      std::vector<std::size_t> t;
      for (auto h : c->hom(d, from)) t.push_back(c->hom_position(c->compose(g, h)));
      alpha.emplace_back(y.objects[from.index](d), y.objects[to.index](d), std::move(t));
    }
    y.morphisms.push_back(std::move(alpha));
  }
  return y;
}

EmbeddingReport check_embedding(const YonedaEmbedding& y) {
  EmbeddingReport rep;
  const FinCat& C = *y.category;
  auto note = [&](bool& flag, const std::string& what) {
    flag = false;
    if (rep.witness.empty()) rep.witness = what;
  };
  for (auto x : C.objects()) {
    if (!validate(y.objects[x.index])) note(rep.functorial, "y(" + C.object_name(x) + ") is not a presheaf");
    const auto& id = y.morphisms[C.identity(x).index];
    for (const auto& comp : id) {
      if (!(comp == identity_fn(comp.dom()))) note(rep.functorial, "y does not preserve the identity of " + C.object_name(x));
    }
  }
  for (auto g : C.morphisms()) {
    if (!is_natural(y.objects[C.src(g).index], y.objects[C.dst(g).index], y.morphisms[g.index])) {
      note(rep.functorial, "y(" + C.morphism_name(g) + ") is not natural");
    }
    for (auto f : C.morphisms()) {
      auto gf = C.try_compose(g, f);
      if (!gf) continue;
      for (auto d : C.objects()) {
        if (!(compose(y.morphisms[g.index][d.index], y.morphisms[f.index][d.index]) == y.morphisms[gf->index][d.index])) {
          note(rep.functorial, "y does not preserve " + C.morphism_name(g) + " ∘ " + C.morphism_name(f));
        }
      }
    }
  }
  for (auto a : C.objects()) {
    for (auto b : C.objects()) {
      const auto nats = enumerate_diagram_morphisms(y.objects[a.index], y.objects[b.index]);
      std::set<std::vector<std::vector<std::size_t>>> images;
      for (auto g : C.hom(a, b)) {
        std::vector<std::vector<std::size_t>> key;
        for (const auto& comp : y.morphisms[g.index]) key.push_back(comp.table());
        images.insert(key);
      }
      if (images.size() != C.hom(a, b).size()) {
        note(rep.faithful, "distinct arrows " + C.object_name(a) + " → " + C.object_name(b) + " share an image");
      }
      std::size_t hit = 0;
      for (const auto& n : nats) {
        std::vector<std::vector<std::size_t>> key;
        for (const auto& comp : n) key.push_back(comp.table());
        hit += images.count(key);
      }
      if (nats.size() != images.size() || hit != nats.size()) {
        note(rep.full, "|Nat(y " + C.object_name(a) + ", y " + C.object_name(b) + ")| = " + std::to_string(nats.size()) +
                           " but |Hom| = " + std::to_string(C.hom(a, b).size()));
      }
    }
  }
  return rep;
}

std::size_t yoneda_forward(const CatRef& c, const DiagramMorphism& alpha, ObjId x) {
  return alpha[x.index](c->hom_position(c->identity(x)));
}

DiagramMorphism yoneda_inverse(const CatRef& c, const Presheaf& f, ObjId x, std::size_t e) {
  const FinCat& C = *c;
  DiagramMorphism alpha;
  for (auto d : C.objects()) {
    std::vector<std::size_t> t;
    for (auto h : C.hom(d, x)) t.push_back(f(h)(e));
    alpha.emplace_back(FinSetObj(hom_labels(C, d, x)), f(d), std::move(t));
  }
  return alpha;
}

YonedaReport yoneda_bijection(const CatRef& c, const Presheaf& f, ObjId x) {
  YonedaReport rep;
  Presheaf yc = hom_functor(*c, f.shape, x);
  const auto nats = enumerate_diagram_morphisms(yc, f);
  rep.nat_count = nats.size();
  rep.set_size = f(x).size();
  for (std::size_t e = 0; e < rep.set_size; ++e) {
    if (yoneda_forward(c, yoneda_inverse(c, f, x, e), x) != e) rep.inverse_then_forward = false;
  }
  for (const auto& alpha : nats) {
    if (!(yoneda_inverse(c, f, x, yoneda_forward(c, alpha, x)) == alpha)) rep.forward_then_inverse = false;
  }
  return rep;
}

bool yoneda_natural_in_object(const CatRef& c, const Presheaf& f) {
  const FinCat& C = *c;
  YonedaEmbedding y{c, f.shape, {}, {}};
  for (auto x : C.objects()) y.objects.push_back(hom_functor(C, f.shape, x));
  for (auto g : C.morphisms()) {
    const ObjId from = C.src(g), to = C.dst(g);
    for (const auto& alpha : enumerate_diagram_morphisms(y.objects[to.index], f)) {
      // α∘y(g) at d: h ↦ α_d(g∘h)
      DiagramMorphism pulled;
      for (auto d : C.objects()) {
        std::vector<std::size_t> t;
        for (auto h : C.hom(d, from)) t.push_back(alpha[d.index](C.hom_position(C.compose(g, h))));
        pulled.emplace_back(y.objects[from.index](d), f(d), std::move(t));
      }
      if (yoneda_forward(c, pulled, from) != f(g)(yoneda_forward(c, alpha, to))) return false;
    }
  }
  return true;
}

CurryIso ccc_exponential_iso(const FinSetObj& a, const FinSetObj& b, const FinSetObj& c) {
  ExponentialObject ab = fs_exponential(b, a);          // a^b
  ExponentialObject abc = fs_exponential(c, ab.object); // (a^b)^c
  ProductCone bc = fs_product(b, c);
  ExponentialObject a_bc = fs_exponential(bc.object, a);

  std::vector<std::size_t> fwd, inv;
  for (std::size_t g = 0; g < abc.object.size(); ++g) {
    const auto outer = abc.table_of(g);
    std::vector<std::size_t> t(bc.object.size());
    for (std::size_t y = 0; y < b.size(); ++y) {
      for (std::size_t z = 0; z < c.size(); ++z) t[bc.index(y, z)] = ab.table_of(outer[z])[y];
    }
    fwd.push_back(a_bc.element_of(t));
  }
  for (std::size_t k = 0; k < a_bc.object.size(); ++k) {
    const auto t = a_bc.table_of(k);
    std::vector<std::size_t> outer(c.size());
    for (std::size_t z = 0; z < c.size(); ++z) {
      std::vector<std::size_t> row(b.size());
      for (std::size_t y = 0; y < b.size(); ++y) row[y] = t[bc.index(y, z)];
      outer[z] = ab.element_of(row);
    }
    inv.push_back(abc.element_of(outer));
  }
  CurryIso out{FinFn(abc.object, a_bc.object, std::move(fwd)), FinFn(a_bc.object, abc.object, std::move(inv)), false};
  out.round_trip = compose(out.inverse, out.forward) == identity_fn(abc.object) &&
                   compose(out.forward, out.inverse) == identity_fn(a_bc.object);
  return out;
}

namespace {

// u^X: A^X → A'^X.
FinFn post(const ExponentialObject& from, const ExponentialObject& to, const std::function<std::size_t(std::size_t)>& u) {
  std::vector<std::size_t> t;
  for (std::size_t e = 0; e < from.object.size(); ++e) {
    auto row = from.table_of(e);
    for (auto& v : row) v = u(v);
    t.push_back(to.element_of(row));
  }
  return FinFn(from.object, to.object, std::move(t));
}

// A^v: A^X → A^X' for v: X' → X.
FinFn pre(const ExponentialObject& from, const ExponentialObject& to, const FinFn& v) {
  std::vector<std::size_t> t;
  for (std::size_t e = 0; e < from.object.size(); ++e) {
    auto row = from.table_of(e);
    std::vector<std::size_t> out(v.dom().size());
    for (std::size_t x = 0; x < out.size(); ++x) out[x] = row[v(x)];
    t.push_back(to.element_of(out));
  }
  return FinFn(from.object, to.object, std::move(t));
}

}  // namespace

CurryNaturalityReport ccc_naturality(std::size_t bound) {
  CurryNaturalityReport rep;
  auto square = [&](bool ok, const std::string& what) {
    ++rep.squares;
    if (!ok && rep.pass) {
      rep.pass = false;
      rep.witness = what;
    }
  };
  for_each_table(4, bound + 1, [&](const std::vector<std::size_t>& s) {
    ++rep.instances;
    // s = (a, b, c, other): other replaces one of a, b, c in turn
    FinSetObj a = FinSetObj::of_size(s[0]), b = FinSetObj::of_size(s[1]), c = FinSetObj::of_size(s[2]);
    FinSetObj o = FinSetObj::of_size(s[3]);
    const std::string where = "sizes " + table_label(s);
    CurryIso base = ccc_exponential_iso(a, b, c);
    ExponentialObject ab = fs_exponential(b, a), abc = fs_exponential(c, ab.object);
    ExponentialObject a_bc = fs_exponential(fs_product(b, c).object, a);
    {
      // u: a → o
      CurryIso other = ccc_exponential_iso(o, b, c);
      ExponentialObject ob = fs_exponential(b, o), obc = fs_exponential(c, ob.object);
      ExponentialObject o_bc = fs_exponential(fs_product(b, c).object, o);
      for (const auto& u : all_functions(a, o)) {
        FinFn inner = post(ab, ob, [&](std::size_t v) { return u(v); });
        FinFn left = post(abc, obc, [&](std::size_t v) { return inner(v); });
        FinFn right = post(a_bc, o_bc, [&](std::size_t v) { return u(v); });
        square(compose(other.forward, left) == compose(right, base.forward), "natural in a at " + where);
      }
    }
    {
      // v: o → b
      CurryIso other = ccc_exponential_iso(a, o, c);
      ExponentialObject ao = fs_exponential(o, a), aoc = fs_exponential(c, ao.object);
      ProductCone bc = fs_product(b, c), oc = fs_product(o, c);
      ExponentialObject a_oc = fs_exponential(oc.object, a);
      for (const auto& v : all_functions(o, b)) {
        FinFn inner = pre(ab, ao, v);
        FinFn left = post(abc, aoc, [&](std::size_t e) { return inner(e); });
        FinFn right = pre(a_bc, a_oc, bc.pair(compose(v, oc.first), oc.second));
        square(compose(other.forward, left) == compose(right, base.forward), "natural in b at " + where);
      }
    }
    {
      // w: o → c
      CurryIso other = ccc_exponential_iso(a, b, o);
      ExponentialObject abo = fs_exponential(o, ab.object);
      ProductCone bc = fs_product(b, c), bo = fs_product(b, o);
      ExponentialObject a_bo = fs_exponential(bo.object, a);
      for (const auto& w : all_functions(o, c)) {
        FinFn left = pre(abc, abo, w);
        FinFn right = pre(a_bc, a_bo, bc.pair(bo.first, compose(w, bo.second)));
        square(compose(other.forward, left) == compose(right, base.forward), "natural in c at " + where);
      }
    }
  });
  return rep;
}

}  // namespace fincat
