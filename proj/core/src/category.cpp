#include "fincat/category.hpp"

#include <string>
#include <utility>

namespace fincat {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

}  // namespace

std::string_view to_string(Law law) {
  switch (law) {
    case Law::Ok: return "Ok";
    case Law::IdentityLaw: return "IdentityLaw";
    case Law::Associativity: return "Associativity";
    case Law::Typing: return "Typing";
    case Law::Composability: return "Composability";
    case Law::FunctorTyping: return "FunctorTyping";
    case Law::FunctorIdentity: return "FunctorIdentity";
    case Law::FunctorComposition: return "FunctorComposition";
    case Law::ComponentTyping: return "ComponentTyping";
    case Law::Naturality: return "Naturality";
    case Law::Bijection: return "Bijection";
    case Law::Triangle: return "Triangle";
    case Law::Universality: return "Universality";
  }
  return "Unknown";
}

FinCat::FinCat(CategoryTables tables, std::shared_ptr<const ProductFactors> factors)
    : tables_(std::move(tables)), factors_(std::move(factors)) {
  const std::size_t n = tables_.object_names.size();
  const std::size_t m = tables_.src.size();
  if (tables_.dst.size() != m || tables_.morphism_names.size() != m) {
    throw Error(ErrorCode::OutOfRange, "src/dst/name tables disagree on morphism count");
  }
  if (tables_.identity.size() != n) {
    throw Error(ErrorCode::OutOfRange, "identity table must have one entry per object");
  }
  if (tables_.comp.size() != m * m) {
    throw Error(ErrorCode::OutOfRange, "composition table must be morphism_count^2");
  }
  for (std::size_t f = 0; f < m; ++f) {
    if (tables_.src[f].index >= n || tables_.dst[f].index >= n) {
      throw Error(ErrorCode::OutOfRange, "morphism " + idx(f) + " has an endpoint out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (tables_.identity[a].index >= m) {
      throw Error(ErrorCode::OutOfRange, "identity of object " + idx(a) + " out of range");
    }
  }
  for (std::size_t e : tables_.comp) {
    if (e != npos && e >= m) throw Error(ErrorCode::OutOfRange, "composite index out of range");
  }

  homs_.assign(n * n, {});
  hom_position_.assign(m, 0);
  for (std::size_t f = 0; f < m; ++f) {
    auto& bucket = homs_[tables_.src[f].index * n + tables_.dst[f].index];
    hom_position_[f] = bucket.size();
    bucket.push_back(MorId{f});
  }
}

ObjId FinCat::object(std::size_t index) const {
  if (index >= object_count()) throw Error(ErrorCode::OutOfRange, "object " + idx(index));
  return ObjId{index};
}

MorId FinCat::morphism(std::size_t index) const {
  if (index >= morphism_count()) throw Error(ErrorCode::OutOfRange, "morphism " + idx(index));
  return MorId{index};
}

std::optional<MorId> FinCat::try_compose(MorId g, MorId f) const {
  const std::size_t e = tables_.comp[g.index * morphism_count() + f.index];
  if (e == npos) return std::nullopt;
  return MorId{e};
}

MorId FinCat::compose(MorId g, MorId f) const {
  if (auto r = try_compose(g, f)) return *r;
  throw Error(ErrorCode::DomainMismatch,
              "no composite for " + morphism_name(g) + " after " + morphism_name(f));
}

std::optional<ObjId> FinCat::find_object(std::string_view name) const {
  for (std::size_t i = 0; i < object_count(); ++i) {
    if (tables_.object_names[i] == name) return ObjId{i};
  }
  return std::nullopt;
}

std::optional<MorId> FinCat::find_morphism(std::string_view name) const {
  for (std::size_t i = 0; i < morphism_count(); ++i) {
    if (tables_.morphism_names[i] == name) return MorId{i};
  }
  return std::nullopt;
}

CatRef make_category(CategoryTables tables) {
  return std::make_shared<const FinCat>(std::move(tables));
}

bool same_category(const CatRef& a, const CatRef& b) {
  return a == b || (a && b && *a == *b);
}

Functor::Functor(CatRef dom, CatRef cod, std::vector<ObjId> omap, std::vector<MorId> mmap)
    : dom_(std::move(dom)), cod_(std::move(cod)), omap_(std::move(omap)), mmap_(std::move(mmap)) {
  if (!dom_ || !cod_) throw Error(ErrorCode::InvalidInput, "functor needs domain and codomain");
  if (omap_.size() != dom_->object_count() || mmap_.size() != dom_->morphism_count()) {
    throw Error(ErrorCode::OutOfRange, "functor tables do not match the domain size");
  }
  for (auto o : omap_) {
    if (o.index >= cod_->object_count()) throw Error(ErrorCode::OutOfRange, "functor object image");
  }
  for (auto m : mmap_) {
    if (m.index >= cod_->morphism_count()) throw Error(ErrorCode::OutOfRange, "functor morphism image");
  }
}

bool operator==(const Functor& a, const Functor& b) {
  return a.omap_ == b.omap_ && a.mmap_ == b.mmap_ && same_category(a.dom_, b.dom_) &&
         same_category(a.cod_, b.cod_);
}

Validation validate(const FinCat& c) {
  for (auto f : c.morphisms()) {
    for (auto g : c.morphisms()) {
      auto gf = c.try_compose(g, f);
      const bool composable = c.dst(f) == c.src(g);
      if (composable != gf.has_value()) {
        return Validation::fail(Law::Composability, {g.index, f.index},
                                composable ? "composable pair has no composite"
                                           : "composite defined on a non-composable pair");
      }
    }
  }
  for (auto a : c.objects()) {
    auto id = c.identity(a);
    if (c.src(id) != a || c.dst(id) != a) {
      return Validation::fail(Law::Typing, {id.index}, "identity is not an endomorphism of its object");
    }
  }
  for (auto f : c.morphisms()) {
    if (c.compose(c.identity(c.dst(f)), f) != f || c.compose(f, c.identity(c.src(f))) != f) {
      return Validation::fail(Law::IdentityLaw, {f.index},
                              "identity law fails for " + c.morphism_name(f));
    }
  }
  std::vector<std::vector<MorId>> out(c.object_count());
  for (auto f : c.morphisms()) out[c.src(f).index].push_back(f);
  for (auto f : c.morphisms()) {
    for (auto g : out[c.dst(f).index]) {
      const MorId gf = c.compose(g, f);
      if (c.src(gf) != c.src(f) || c.dst(gf) != c.dst(g)) {
        return Validation::fail(Law::Typing, {gf.index},
                                "composite of " + c.morphism_name(g) + " after " +
                                    c.morphism_name(f) + " has the wrong endpoints");
      }
    }
  }
  for (auto f : c.morphisms()) {
    for (auto g : out[c.dst(f).index]) {
      const MorId gf = c.compose(g, f);
      for (auto h : out[c.dst(g).index]) {
        if (c.compose(h, gf) != c.compose(c.compose(h, g), f)) {
          return Validation::fail(Law::Associativity, {h.index, g.index, f.index},
                                  "associativity fails for (" + c.morphism_name(h) + ", " +
                                      c.morphism_name(g) + ", " + c.morphism_name(f) + ")");
        }
      }
    }
  }
  return Validation::pass();
}

Validation validate(const Functor& F) {
  const FinCat& C = F.dom();
  const FinCat& D = F.cod();
  for (auto f : C.morphisms()) {
    if (D.src(F(f)) != F(C.src(f)) || D.dst(F(f)) != F(C.dst(f))) {
      return Validation::fail(Law::FunctorTyping, {f.index},
                              "image of " + C.morphism_name(f) + " has the wrong endpoints");
    }
  }
  for (auto a : C.objects()) {
    if (F(C.identity(a)) != D.identity(F(a))) {
      return Validation::fail(Law::FunctorIdentity, {a.index},
                              "identity of " + C.object_name(a) + " not preserved");
    }
  }
  for (auto f : C.morphisms()) {
    for (auto g : C.morphisms()) {
      auto gf = C.try_compose(g, f);
      if (!gf) continue;
      if (F(*gf) != D.compose(F(g), F(f))) {
        return Validation::fail(Law::FunctorComposition, {g.index, f.index},
                                "composite " + C.morphism_name(g) + " after " + C.morphism_name(f) +
                                    " not preserved");
      }
    }
  }
  return Validation::pass();
}

Validation validate(const NatTrans& n) {
  const Functor& F = n.source;
  const Functor& G = n.target;
  if (!same_category(F.dom_ref(), G.dom_ref()) || !same_category(F.cod_ref(), G.cod_ref())) {
    return Validation::fail(Law::ComponentTyping, {}, "source and target functors are not parallel");
  }
  const FinCat& C = F.dom();
  const FinCat& D = F.cod();
  if (n.components.size() != C.object_count()) {
    return Validation::fail(Law::ComponentTyping, {}, "one component per object required");
  }
  for (auto a : C.objects()) {
    auto eta = n(a);
    if (eta.index >= D.morphism_count() || D.src(eta) != F(a) || D.dst(eta) != G(a)) {
      return Validation::fail(Law::ComponentTyping, {a.index},
                              "component at " + C.object_name(a) + " has the wrong type");
    }
  }
  for (auto f : C.morphisms()) {
    auto lhs = D.compose(G(f), n(C.src(f)));
    auto rhs = D.compose(n(C.dst(f)), F(f));
    if (lhs != rhs) {
      return Validation::fail(Law::Naturality, {f.index},
                              "naturality square fails at " + C.morphism_name(f));
    }
  }
  return Validation::pass();
}

FinCat opposite_category(const FinCat& c) {
  CategoryTables t = c.tables();
  std::swap(t.src, t.dst);
  const std::size_t m = c.morphism_count();
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t f = 0; f < m; ++f) {
      t.comp[g * m + f] = c.tables().comp[f * m + g];
    }
  }
  return FinCat(std::move(t));
}

CatRef opposite(const CatRef& c) { return std::make_shared<const FinCat>(opposite_category(*c)); }

Functor opposite_functor(const Functor& f) {
  return Functor(opposite(f.dom_ref()), opposite(f.cod_ref()), f.omap(), f.mmap());
}

NatTrans opposite_nattrans(const NatTrans& n) {
  return NatTrans{opposite_functor(n.target), opposite_functor(n.source), n.components};
}

Functor identity_functor(const CatRef& c) {
  std::vector<ObjId> omap;
  std::vector<MorId> mmap;
  for (auto a : c->objects()) omap.push_back(a);
  for (auto f : c->morphisms()) mmap.push_back(f);
  return Functor(c, c, std::move(omap), std::move(mmap));
}

Functor compose_functors(const Functor& second, const Functor& first) {
  if (!same_category(first.cod_ref(), second.dom_ref())) {
    throw Error(ErrorCode::DomainMismatch, "codomain of the first functor is not the domain of the second");
  }
  std::vector<ObjId> omap;
  std::vector<MorId> mmap;
  omap.reserve(first.omap().size());
  mmap.reserve(first.mmap().size());
  for (auto o : first.omap()) omap.push_back(second(o));
  for (auto m : first.mmap()) mmap.push_back(second(m));
  return Functor(first.dom_ref(), second.cod_ref(), std::move(omap), std::move(mmap));
}

NatTrans identity_nattrans(const Functor& f) {
  std::vector<MorId> comps;
  for (auto a : f.dom().objects()) comps.push_back(f.cod().identity(f(a)));
  return NatTrans{f, f, std::move(comps)};
}

NatTrans vertical_compose(const NatTrans& after, const NatTrans& before) {
  if (!(before.target == after.source)) {
    throw Error(ErrorCode::DomainMismatch, "vertical composition of non-adjacent transformations");
  }
  const FinCat& D = after.source.cod();
  std::vector<MorId> comps;
  for (std::size_t a = 0; a < before.components.size(); ++a) {
    comps.push_back(D.compose(after.components[a], before.components[a]));
  }
  return NatTrans{before.source, after.target, std::move(comps)};
}

NatTrans whisker_left(const Functor& h, const NatTrans& alpha) {
  std::vector<MorId> comps;
  for (auto c : alpha.components) comps.push_back(h(c));
  return NatTrans{compose_functors(h, alpha.source), compose_functors(h, alpha.target),
                  std::move(comps)};
}

NatTrans whisker_right(const NatTrans& alpha, const Functor& k) {
  std::vector<MorId> comps;
  for (auto a : k.dom().objects()) comps.push_back(alpha(k(a)));
  return NatTrans{compose_functors(alpha.source, k), compose_functors(alpha.target, k),
                  std::move(comps)};
}

}  // namespace fincat
