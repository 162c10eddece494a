#include "fincat/constructions.hpp"

#include <algorithm>
#include <string>

#include "fincat/catalog.hpp"

namespace fincat {

ProductCategory product_category(const CatRef& c, const CatRef& d) {
  const std::size_t nc = c->object_count(), nd = d->object_count();
  const std::size_t mc = c->morphism_count(), md = d->morphism_count();
  CategoryTables t;
  for (std::size_t a = 0; a < nc; ++a) {
    for (std::size_t b = 0; b < nd; ++b) {
      t.object_names.push_back("(" + c->object_name(ObjId{a}) + "," + d->object_name(ObjId{b}) + ")");
      t.identity.push_back(MorId{c->identity(ObjId{a}).index * md + d->identity(ObjId{b}).index});
    }
  }
  for (std::size_t f = 0; f < mc; ++f) {
    for (std::size_t g = 0; g < md; ++g) {
      t.morphism_names.push_back("(" + c->morphism_name(MorId{f}) + "," + d->morphism_name(MorId{g}) + ")");
      t.src.push_back(ObjId{c->src(MorId{f}).index * nd + d->src(MorId{g}).index});
      t.dst.push_back(ObjId{c->dst(MorId{f}).index * nd + d->dst(MorId{g}).index});
    }
  }
  const std::size_t m = mc * md;
  t.comp.assign(m * m, npos);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      auto cf = c->try_compose(MorId{x / md}, MorId{y / md});
      auto dg = d->try_compose(MorId{x % md}, MorId{y % md});
      if (cf && dg) t.comp[x * m + y] = cf->index * md + dg->index;
    }
  }
  auto factors = std::make_shared<const ProductFactors>(ProductFactors{c, d});
  auto cat = std::make_shared<const FinCat>(std::move(t), factors);

  std::vector<ObjId> o1, o2;
  std::vector<MorId> m1, m2;
  for (std::size_t a = 0; a < nc * nd; ++a) {
    o1.push_back(ObjId{a / nd});
    o2.push_back(ObjId{a % nd});
  }
  for (std::size_t f = 0; f < m; ++f) {
    m1.push_back(MorId{f / md});
    m2.push_back(MorId{f % md});
  }
  return ProductCategory{cat, Functor(cat, c, std::move(o1), std::move(m1)),
                         Functor(cat, d, std::move(o2), std::move(m2))};
}

Functor diagonal_functor(const ProductCategory& square) {
  const CatRef& c = square.first.cod_ref();
  if (!same_category(c, square.second.cod_ref())) {
    throw Error(ErrorCode::DomainMismatch, "diagonal needs a product of a category with itself");
  }
  std::vector<ObjId> omap;
  std::vector<MorId> mmap;
  for (auto a : c->objects()) omap.push_back(square.pair(a, a));
  for (auto f : c->morphisms()) mmap.push_back(square.pair(f, f));
  return Functor(c, square.category, std::move(omap), std::move(mmap));
}

CommaCategory comma_category(const Functor& F, const Functor& G) {
  if (!same_category(F.cod_ref(), G.cod_ref())) {
    throw Error(ErrorCode::DomainMismatch, "comma category needs functors into the same category");
  }
  const FinCat& A = F.dom();
  const FinCat& B = G.dom();
  const FinCat& E = F.cod();

  std::vector<CommaObject> objects;
  for (auto a : A.objects()) {
    for (auto b : B.objects()) {
      for (auto h : E.hom(F(a), G(b))) objects.push_back({a, b, h});
    }
  }

  CategoryTables t;
  std::vector<std::pair<MorId, MorId>> pairs;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, std::size_t> index;
  for (const auto& o : objects) {
    t.object_names.push_back("(" + A.object_name(o.left) + "," + B.object_name(o.right) + "," +
                             E.morphism_name(o.arrow) + ")");
  }
  for (std::size_t s = 0; s < objects.size(); ++s) {
    for (std::size_t r = 0; r < objects.size(); ++r) {
      const auto& from = objects[s];
      const auto& to = objects[r];
      for (auto u : A.hom(from.left, to.left)) {
        for (auto v : B.hom(from.right, to.right)) {
          if (E.compose(G(v), from.arrow) != E.compose(to.arrow, F(u))) continue;
          index[{s, r, u.index, v.index}] = pairs.size();
          pairs.emplace_back(u, v);
          t.src.push_back(ObjId{s});
          t.dst.push_back(ObjId{r});
          t.morphism_names.push_back("(" + A.morphism_name(u) + "," + B.morphism_name(v) + ")");
        }
      }
    }
  }
  for (std::size_t s = 0; s < objects.size(); ++s) {
    const auto& o = objects[s];
    t.identity.push_back(
        MorId{index.at({s, s, A.identity(o.left).index, B.identity(o.right).index})});
  }
  const std::size_t m = pairs.size();
  t.comp.assign(m * m, npos);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (t.dst[y] != t.src[x]) continue;
      auto u = A.compose(pairs[x].first, pairs[y].first);
      auto v = B.compose(pairs[x].second, pairs[y].second);
      t.comp[x * m + y] = index.at({t.src[y].index, t.dst[x].index, u.index, v.index});
    }
  }
  auto cat = make_category(std::move(t));

  std::vector<ObjId> lo, ro;
  std::vector<MorId> lm, rm;
  for (const auto& o : objects) {
    lo.push_back(o.left);
    ro.push_back(o.right);
  }
  for (const auto& [u, v] : pairs) {
    lm.push_back(u);
    rm.push_back(v);
  }
  return CommaCategory{cat, Functor(cat, F.dom_ref(), std::move(lo), std::move(lm)),
                       Functor(cat, G.dom_ref(), std::move(ro), std::move(rm)),
                       std::move(objects)};
}

namespace {

// Backtracking enumerator for functors C→D in lexicographic (omap, mmap)
// order. Composition constraints are checked as soon as all three of their
// morphisms are assigned.
class FunctorSearch {
 public:
  FunctorSearch(const CatRef& c, const CatRef& d) : c_(c), d_(d) {
    const std::size_t m = c->morphism_count();
    checks_.assign(m, {});
    for (auto f : c->morphisms()) {
      for (auto g : c->morphisms()) {
        auto gf = c->try_compose(g, f);
        if (!gf) continue;
        const std::size_t last = std::max({g.index, f.index, gf->index});
        checks_[last].push_back({g, f, *gf});
      }
    }
  }

  std::vector<Functor> run() {
    const std::size_t n = c_->object_count();
    omap_.assign(n, ObjId{0});
    if (n > 0 && d_->object_count() == 0) return {};
    assign_object(0);
    return std::move(out_);
  }

 private:
  struct Check {
    MorId g, f, gf;
  };

  void assign_object(std::size_t a) {
    if (a == c_->object_count()) {
      mmap_.assign(c_->morphism_count(), MorId{0});
      assign_morphism(0);
      return;
    }
    for (std::size_t x = 0; x < d_->object_count(); ++x) {
      omap_[a] = ObjId{x};
      assign_object(a + 1);
    }
  }

  void assign_morphism(std::size_t f) {
    if (f == c_->morphism_count()) {
      out_.emplace_back(c_, d_, omap_, mmap_);
      return;
    }
    const MorId fm{f};
    const ObjId s = omap_[c_->src(fm).index];
    const ObjId t = omap_[c_->dst(fm).index];
    if (c_->is_identity(fm)) {
      mmap_[f] = d_->identity(s);
      if (consistent(f)) assign_morphism(f + 1);
      return;
    }
    for (auto cand : d_->hom(s, t)) {
      mmap_[f] = cand;
      if (consistent(f)) assign_morphism(f + 1);
    }
  }

  bool consistent(std::size_t last) const {
    for (const auto& ch : checks_[last]) {
      if (d_->compose(mmap_[ch.g.index], mmap_[ch.f.index]) != mmap_[ch.gf.index]) return false;
    }
    return true;
  }

  CatRef c_, d_;
  std::vector<std::vector<Check>> checks_;
  std::vector<ObjId> omap_;
  std::vector<MorId> mmap_;
  std::vector<Functor> out_;
};

}  // namespace

std::vector<Functor> enumerate_functors(const CatRef& c, const CatRef& d) {
  return FunctorSearch(c, d).run();
}

std::vector<NatTrans> enumerate_nattrans(const Functor& F, const Functor& G) {
  if (!same_category(F.dom_ref(), G.dom_ref()) || !same_category(F.cod_ref(), G.cod_ref())) {
    throw Error(ErrorCode::DomainMismatch, "natural transformations need parallel functors");
  }
  const FinCat& C = F.dom();
  const FinCat& D = F.cod();
  const std::size_t n = C.object_count();
  // Naturality squares, grouped by the later of the two objects they involve.
  std::vector<std::vector<MorId>> squares(n);
  for (auto f : C.morphisms()) {
    squares[std::max(C.src(f).index, C.dst(f).index)].push_back(f);
  }
  std::vector<NatTrans> out;
  std::vector<MorId> comps(n);
  auto rec = [&](auto&& self, std::size_t a) -> void {
    if (a == n) {
      out.push_back(NatTrans{F, G, comps});
      return;
    }
    for (auto cand : D.hom(F(ObjId{a}), G(ObjId{a}))) {
      comps[a] = cand;
      bool ok = true;
      for (auto f : squares[a]) {
        if (D.compose(G(f), comps[C.src(f).index]) != D.compose(comps[C.dst(f).index], F(f))) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, a + 1);
    }
  };
  rec(rec, 0);
  return out;
}

FunctorCategory::FunctorCategory(CatRef source, CatRef target)
    : source_(std::move(source)), target_(std::move(target)) {
  functors_ = enumerate_functors(source_, target_);
  for (std::size_t i = 0; i < functors_.size(); ++i) {
    functor_index_[{functors_[i].omap(), functors_[i].mmap()}] = i;
  }
  CategoryTables t;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t i = 0; i < functors_.size(); ++i) t.object_names.push_back("F" + std::to_string(i));
  for (std::size_t s = 0; s < functors_.size(); ++s) {
    for (std::size_t r = 0; r < functors_.size(); ++r) {
      for (auto& n : enumerate_nattrans(functors_[s], functors_[r])) {
        nat_index_[{s, r, n.components}] = transformations_.size();
        t.morphism_names.push_back("n" + std::to_string(transformations_.size()));
        t.src.push_back(ObjId{s});
        t.dst.push_back(ObjId{r});
        transformations_.push_back(std::move(n));
      }
    }
  }
  for (std::size_t s = 0; s < functors_.size(); ++s) {
    t.identity.push_back(MorId{nat_index_.at({s, s, identity_nattrans(functors_[s]).components})});
  }
  const std::size_t m = transformations_.size();
  const FinCat& D = *target_;
  t.comp.assign(m * m, npos);
  std::vector<MorId> comps;
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (t.dst[y] != t.src[x]) continue;
      const auto& after = transformations_[x].components;
      const auto& before = transformations_[y].components;
      comps.resize(after.size());
      for (std::size_t a = 0; a < after.size(); ++a) comps[a] = D.compose(after[a], before[a]);
      t.comp[x * m + y] = nat_index_.at({t.src[y].index, t.dst[x].index, comps});
    }
  }
  category_ = make_category(std::move(t));
}

std::optional<ObjId> FunctorCategory::find(const Functor& f) const {
  if (!same_category(f.dom_ref(), source_) || !same_category(f.cod_ref(), target_)) return std::nullopt;
  auto it = functor_index_.find({f.omap(), f.mmap()});
  if (it == functor_index_.end()) return std::nullopt;
  return ObjId{it->second};
}

std::optional<MorId> FunctorCategory::find(const NatTrans& n) const {
  auto s = find(n.source);
  auto r = find(n.target);
  if (!s || !r) return std::nullopt;
  auto it = nat_index_.find({s->index, r->index, n.components});
  if (it == nat_index_.end()) return std::nullopt;
  return MorId{it->second};
}

FunctorCategory functor_category(const CatRef& c, const CatRef& d) { return FunctorCategory(c, d); }

CurriedFunctor curry_functor(const Functor& F) {
  const ProductFactors* factors = F.dom().product_factors();
  if (factors == nullptr) {
    throw Error(ErrorCode::NotAProductDomain, "domain was not built by product_category");
  }
  const CatRef& C = factors->left;
  const CatRef& D = factors->right;
  const CatRef& E = F.cod_ref();
  ProductCategory P = product_category(C, D);
  FunctorCategory exponent(D, E);

  auto slice = [&](ObjId c) {
    std::vector<ObjId> omap;
    std::vector<MorId> mmap;
    for (auto d : D->objects()) omap.push_back(F(P.pair(c, d)));
    for (auto g : D->morphisms()) mmap.push_back(F(P.pair(C->identity(c), g)));
    return Functor(D, E, std::move(omap), std::move(mmap));
  };

  std::vector<ObjId> omap;
  std::vector<MorId> mmap;
  for (auto c : C->objects()) {
    auto idx = exponent.find(slice(c));
    if (!idx) throw Error(ErrorCode::InvalidInput, "input is not a functor (slice is not functorial)");
    omap.push_back(*idx);
  }
  for (auto f : C->morphisms()) {
    std::vector<MorId> comps;
    for (auto d : D->objects()) comps.push_back(F(P.pair(f, D->identity(d))));
    NatTrans n{slice(C->src(f)), slice(C->dst(f)), std::move(comps)};
    auto idx = exponent.find(n);
    if (!idx) throw Error(ErrorCode::InvalidInput, "input is not a functor (transposed square fails)");
    mmap.push_back(*idx);
  }
  Functor curried(C, exponent.category(), std::move(omap), std::move(mmap));
  return CurriedFunctor{std::move(curried), std::move(exponent)};
}

Functor uncurry_functor(const Functor& G, const FunctorCategory& exponent) {
  if (!same_category(G.cod_ref(), exponent.category())) {
    throw Error(ErrorCode::DomainMismatch, "codomain is not the given functor category");
  }
  const CatRef& C = G.dom_ref();
  const CatRef& D = exponent.source();
  const CatRef& E = exponent.target();
  ProductCategory P = product_category(C, D);
  std::vector<ObjId> omap;
  std::vector<MorId> mmap;
  for (auto c : C->objects()) {
    const Functor& slice = exponent.functor(G(c));
    for (auto d : D->objects()) omap.push_back(slice(d));
  }
  for (auto f : C->morphisms()) {
    const Functor& from = exponent.functor(G(C->src(f)));
    const NatTrans& along = exponent.transformation(G(f));
    for (auto g : D->morphisms()) {
      mmap.push_back(E->compose(along(D->dst(g)), from(g)));
    }
  }
  return Functor(P.category, E, std::move(omap), std::move(mmap));
}

CatUniversalWitness cat_terminal_initial_witness(const CatRef& c) {
  CatUniversalWitness w;
  w.unit = unit_category();
  w.empty = empty_category();
  w.functors_from_empty = enumerate_functors(w.empty, c).size();
  w.functors_to_unit = enumerate_functors(c, w.unit).size();
  return w;
}

}  // namespace fincat
