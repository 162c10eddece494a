#include "fincat/finset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace fincat {

FinSetObj::FinSetObj(std::vector<std::string> elements) : elements_(std::move(elements)) {
  std::set<std::string> seen;
  for (const auto& e : elements_) {
    if (!seen.insert(e).second) throw Error(ErrorCode::DuplicateLabel, "label '" + e + "' repeated");
  }
}

FinSetObj FinSetObj::of_size(std::size_t n) {
  std::vector<std::string> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(std::to_string(i));
  return FinSetObj(std::move(e));
}

std::optional<std::size_t> FinSetObj::find(const std::string& label) const {
  auto it = std::find(elements_.begin(), elements_.end(), label);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

FinFn::FinFn(FinSetObj dom, FinSetObj cod, std::vector<std::size_t> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (table_.size() != dom_.size()) throw Error(ErrorCode::OutOfRange, "function table length != |dom|");
  for (auto v : table_) {
    if (v >= cod_.size()) throw Error(ErrorCode::OutOfRange, "function value outside the codomain");
  }
}

FinFn identity_fn(const FinSetObj& a) {
  std::vector<std::size_t> t(a.size());
  std::iota(t.begin(), t.end(), 0);
  return FinFn(a, a, std::move(t));
}

FinFn compose(const FinFn& g, const FinFn& f) {
  if (!(f.cod() == g.dom())) throw Error(ErrorCode::DomainMismatch, "functions are not composable");
  std::vector<std::size_t> t(f.dom().size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = g(f(x));
  return FinFn(f.dom(), g.cod(), std::move(t));
}

bool is_injective(const FinFn& f) {
  std::vector<bool> hit(f.cod().size(), false);
  for (auto v : f.table()) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool is_surjective(const FinFn& f) {
  std::vector<bool> hit(f.cod().size(), false);
  for (auto v : f.table()) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::string tuple_label(std::span<const std::string> parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ',';
    if (parts[i].find(',') != std::string::npos) out += "(" + parts[i] + ")";
    else out += parts[i];
  }
  return out;
}

std::string table_label(std::span<const std::size_t> table) {
  std::string out = "[";
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(table[i]);
  }
  return out + "]";
}

void for_each_table(std::size_t dom, std::size_t cod,
                    const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> t(dom, 0);
  if (dom > 0 && cod == 0) return;
  while (true) {
    visit(t);
    std::size_t i = dom;
    while (i > 0) {
      --i;
      if (++t[i] < cod) break;
      t[i] = 0;
      if (i == 0) return;
    }
    if (dom == 0) return;
  }
}

std::vector<FinFn> all_functions(const FinSetObj& a, const FinSetObj& b) {
  std::vector<FinFn> out;
  for_each_table(a.size(), b.size(), [&](const std::vector<std::size_t>& t) { out.emplace_back(a, b, t); });
  return out;
}

FinSetObj terminal_set() { return FinSetObj({"*"}); }

FinFn to_terminal(const FinSetObj& a) {
  return FinFn(a, terminal_set(), std::vector<std::size_t>(a.size(), 0));
}

FinFn from_empty(const FinSetObj& a) { return FinFn(FinSetObj{}, a, {}); }

ProductCone fs_product(const FinSetObj& a, const FinSetObj& b) {
  std::vector<std::string> labels;
  std::vector<std::size_t> p1, p2;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::string parts[] = {a.label(i), b.label(j)};
      labels.push_back(tuple_label(parts));
      p1.push_back(i);
      p2.push_back(j);
    }
  }
  FinSetObj p(std::move(labels));
  return ProductCone{p, FinFn(p, a, std::move(p1)), FinFn(p, b, std::move(p2))};
}

FinFn ProductCone::pair(const FinFn& f, const FinFn& g) const {
  if (!(f.dom() == g.dom())) throw Error(ErrorCode::DomainMismatch, "pairing needs a common domain");
  if (!(f.cod() == first.cod()) || !(g.cod() == second.cod())) {
    throw Error(ErrorCode::CodomainMismatch, "pairing legs do not land in the factors");
  }
  std::vector<std::size_t> t(f.dom().size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = index(f(x), g(x));
  return FinFn(f.dom(), object, std::move(t));
}

FinFn product_map(const FinFn& f, const FinFn& g) {
  ProductCone from = fs_product(f.dom(), g.dom());
  ProductCone to = fs_product(f.cod(), g.cod());
  return to.pair(compose(f, from.first), compose(g, from.second));
}

SumCocone fs_sum(const FinSetObj& a, const FinSetObj& b) {
  std::vector<std::string> labels;
  std::vector<std::size_t> inl, inr;
  for (std::size_t i = 0; i < a.size(); ++i) {
    inl.push_back(labels.size());
    labels.push_back("L:" + a.label(i));
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    inr.push_back(labels.size());
    labels.push_back("R:" + b.label(j));
  }
  FinSetObj s(std::move(labels));
  return SumCocone{s, FinFn(a, s, std::move(inl)), FinFn(b, s, std::move(inr))};
}

FinFn SumCocone::copair(const FinFn& f, const FinFn& g) const {
  if (!(f.cod() == g.cod())) throw Error(ErrorCode::CodomainMismatch, "copairing needs a common codomain");
  if (!(f.dom() == left.dom()) || !(g.dom() == right.dom())) {
    throw Error(ErrorCode::DomainMismatch, "copairing legs do not start at the summands");
  }
  std::vector<std::size_t> t(object.size());
  for (std::size_t i = 0; i < f.dom().size(); ++i) t[left(i)] = f(i);
  for (std::size_t j = 0; j < g.dom().size(); ++j) t[right(j)] = g(j);
  return FinFn(object, f.cod(), std::move(t));
}

namespace {

void require_parallel(const FinFn& f, const FinFn& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) {
    throw Error(ErrorCode::NotParallel, "functions do not share domain and codomain");
  }
}

// Union-find whose roots are always the least member of their class.
class LeastRootUnionFind {
 public:
  explicit LeastRootUnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      std::size_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent_[b] = a;
    else parent_[a] = b;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

EqualizerCone fs_equalizer(const FinFn& f, const FinFn& g) {
  require_parallel(f, g);
  std::vector<std::string> labels;
  std::vector<std::size_t> incl;
  for (std::size_t x = 0; x < f.dom().size(); ++x) {
    if (f(x) == g(x)) {
      labels.push_back(f.dom().label(x));
      incl.push_back(x);
    }
  }
  FinSetObj e(std::move(labels));
  return EqualizerCone{e, FinFn(e, f.dom(), std::move(incl))};
}

FinFn EqualizerCone::factor(const FinFn& h) const {
  if (!(h.cod() == inclusion.cod())) throw Error(ErrorCode::CodomainMismatch, "map does not land in the domain");
  std::vector<std::size_t> t(h.dom().size());
  for (std::size_t x = 0; x < t.size(); ++x) {
    auto it = std::find(inclusion.table().begin(), inclusion.table().end(), h(x));
    if (it == inclusion.table().end()) throw Error(ErrorCode::InvalidInput, "map does not equalize the pair");
    t[x] = static_cast<std::size_t>(it - inclusion.table().begin());
  }
  return FinFn(h.dom(), object, std::move(t));
}

CoequalizerCocone fs_coequalizer(const FinFn& f, const FinFn& g) {
  require_parallel(f, g);
  const FinSetObj& cod = f.cod();
  LeastRootUnionFind uf(cod.size());
  for (std::size_t x = 0; x < f.dom().size(); ++x) uf.unite(f(x), g(x));
  std::vector<std::size_t> class_of_root(cod.size(), npos);
  std::vector<std::string> labels;
  std::vector<std::size_t> q(cod.size());
  for (std::size_t y = 0; y < cod.size(); ++y) {
    const std::size_t r = uf.find(y);
    if (class_of_root[r] == npos) {
      class_of_root[r] = labels.size();
      labels.push_back(cod.label(r));
    }
    q[y] = class_of_root[r];
  }
  FinSetObj quotient(std::move(labels));
  return CoequalizerCocone{quotient, FinFn(cod, quotient, std::move(q))};
}

FinFn CoequalizerCocone::factor(const FinFn& h) const {
  if (!(h.dom() == quotient.dom())) throw Error(ErrorCode::DomainMismatch, "map does not start at the codomain");
  std::vector<std::size_t> t(object.size(), npos);
  for (std::size_t y = 0; y < h.dom().size(); ++y) {
    auto& slot = t[quotient(y)];
    if (slot != npos && slot != h(y)) throw Error(ErrorCode::InvalidInput, "map does not coequalize the pair");
    slot = h(y);
  }
  return FinFn(object, h.cod(), std::move(t));
}

PullbackCone fs_pullback(const FinFn& f, const FinFn& g) {
  if (!(f.cod() == g.cod())) throw Error(ErrorCode::CodomainMismatch, "pullback needs a cospan");
  std::vector<std::string> labels;
  std::vector<std::size_t> p1, p2;
  for (std::size_t a = 0; a < f.dom().size(); ++a) {
    for (std::size_t b = 0; b < g.dom().size(); ++b) {
      if (f(a) != g(b)) continue;
      const std::string parts[] = {f.dom().label(a), g.dom().label(b)};
      labels.push_back(tuple_label(parts));
      p1.push_back(a);
      p2.push_back(b);
    }
  }
  FinSetObj p(std::move(labels));
  return PullbackCone{p, FinFn(p, f.dom(), std::move(p1)), FinFn(p, g.dom(), std::move(p2))};
}

FinFn PullbackCone::factor(const FinFn& p, const FinFn& q) const {
  if (!(p.dom() == q.dom())) throw Error(ErrorCode::DomainMismatch, "legs need a common domain");
  std::vector<std::size_t> t(p.dom().size());
  for (std::size_t x = 0; x < t.size(); ++x) {
    std::size_t found = npos;
    for (std::size_t i = 0; i < object.size(); ++i) {
      if (first(i) == p(x) && second(i) == q(x)) {
        found = i;
        break;
      }
    }
    if (found == npos) throw Error(ErrorCode::InvalidInput, "legs do not form a commuting square");
    t[x] = found;
  }
  return FinFn(p.dom(), object, std::move(t));
}

PushoutCocone fs_pushout(const FinFn& f, const FinFn& g) {
  if (!(f.dom() == g.dom())) throw Error(ErrorCode::DomainMismatch, "pushout needs a span");
  SumCocone s = fs_sum(f.cod(), g.cod());
  CoequalizerCocone q = fs_coequalizer(compose(s.left, f), compose(s.right, g));
  return PushoutCocone{q.object, compose(q.quotient, s.left), compose(q.quotient, s.right)};
}

ExponentialObject fs_exponential(const FinSetObj& a, const FinSetObj& b) {
  std::vector<std::string> labels;
  for_each_table(a.size(), b.size(), [&](const std::vector<std::size_t>& t) { labels.push_back(table_label(t)); });
  FinSetObj e(std::move(labels));
  ProductCone ea = fs_product(e, a);
  std::vector<std::size_t> ev(ea.object.size());
  ExponentialObject out{a, b, e, FinFn(ea.object, b, std::vector<std::size_t>(ea.object.size(), 0))};
  for (std::size_t i = 0; i < e.size(); ++i) {
    auto t = out.table_of(i);
    for (std::size_t x = 0; x < a.size(); ++x) ev[ea.index(i, x)] = t[x];
  }
  out.eval = FinFn(ea.object, b, std::move(ev));
  return out;
}

std::size_t ExponentialObject::element_of(std::span<const std::size_t> table) const {
  std::size_t idx = 0;
  for (auto v : table) idx = idx * value.size() + v;
  return idx;
}

std::vector<std::size_t> ExponentialObject::table_of(std::size_t element) const {
  std::vector<std::size_t> t(base.size());
  for (std::size_t i = base.size(); i > 0; --i) {
    t[i - 1] = element % value.size();
    element /= value.size();
  }
  return t;
}

FinFn ExponentialObject::transpose(const FinFn& f, const FinSetObj& x) const {
  ProductCone xa = fs_product(x, base);
  if (!(f.dom() == xa.object) || !(f.cod() == value)) {
    throw Error(ErrorCode::DomainMismatch, "transpose needs a map X×A → B");
  }
  std::vector<std::size_t> t(x.size());
  std::vector<std::size_t> row(base.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < base.size(); ++j) row[j] = f(xa.index(i, j));
    t[i] = element_of(row);
  }
  return FinFn(x, object, std::move(t));
}

SubobjectClassifier fs_subobject_classifier() {
  FinSetObj omega({"false", "true"});
  return SubobjectClassifier{omega, FinFn(terminal_set(), omega, {1})};
}

FinFn SubobjectClassifier::classify(const FinFn& mono) const {
  if (!is_injective(mono)) throw Error(ErrorCode::NotMono, "classified map must be injective");
  std::vector<std::size_t> chi(mono.cod().size(), 0);
  for (auto v : mono.table()) chi[v] = 1;
  return FinFn(mono.cod(), omega, std::move(chi));
}

bool is_pullback_square(const FinFn& left, const FinFn& top, const FinFn& bottom, const FinFn& right) {
  if (!(left.dom() == top.dom()) || !(left.cod() == bottom.dom()) || !(top.cod() == right.dom()) ||
      !(bottom.cod() == right.cod())) {
    return false;
  }
  if (!(compose(bottom, left) == compose(right, top))) return false;
  PullbackCone pb = fs_pullback(bottom, right);
  FinFn u = pb.factor(left, top);
  return is_injective(u) && is_surjective(u);
}

namespace {

std::vector<std::vector<std::size_t>> fibers(const FinFn& f) {
  std::vector<std::vector<std::size_t>> out(f.cod().size());
  for (std::size_t x = 0; x < f.dom().size(); ++x) out[f(x)].push_back(x);
  return out;
}

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

struct SliceLayout {
  std::vector<std::vector<std::size_t>> xf, yf;
  std::vector<std::size_t> offset;  // first element of each base point's block

  explicit SliceLayout(const FinFn& f, const FinFn& g) : xf(fibers(f)), yf(fibers(g)) {
    std::size_t acc = 0;
    for (std::size_t a = 0; a < xf.size(); ++a) {
      offset.push_back(acc);
      acc += ipow(xf[a].size(), yf[a].size());
    }
    offset.push_back(acc);
  }

  std::size_t base_of(std::size_t e) const {
    std::size_t a = 0;
    while (offset[a + 1] <= e) ++a;
    return a;
  }

  std::vector<std::size_t> table_of(std::size_t e) const {
    const std::size_t a = base_of(e);
    std::size_t local = e - offset[a];
    std::vector<std::size_t> t(yf[a].size());
    for (std::size_t i = t.size(); i > 0; --i) {
      t[i - 1] = local % xf[a].size();
      local /= xf[a].size();
    }
    return t;
  }

  std::size_t element_of(std::size_t a, std::span<const std::size_t> t) const {
    std::size_t local = 0;
    for (auto v : t) local = local * xf[a].size() + v;
    return offset[a] + local;
  }
};

}  // namespace

SliceExponential fs_slice_exponential(const FinFn& f, const FinFn& g) {
  if (!(f.cod() == g.cod())) throw Error(ErrorCode::CodomainMismatch, "slice objects over different bases");
  SliceLayout layout(f, g);
  const FinSetObj& base = f.cod();
  std::vector<std::string> labels;
  std::vector<std::size_t> proj;
  for (std::size_t a = 0; a < base.size(); ++a) {
    for_each_table(layout.yf[a].size(), layout.xf[a].size(), [&](const std::vector<std::size_t>& t) {
      labels.push_back(base.label(a) + ":" + table_label(t));
      proj.push_back(a);
    });
  }
  FinSetObj e(std::move(labels));
  FinFn projection(e, base, std::move(proj));
  PullbackCone dom = fs_pullback(projection, g);
  std::vector<std::size_t> ev(dom.object.size());
  for (std::size_t i = 0; i < dom.object.size(); ++i) {
    const std::size_t elem = dom.first(i), y = dom.second(i);
    const std::size_t a = g(y);
    const auto& ya = layout.yf[a];
    const std::size_t pos = static_cast<std::size_t>(std::find(ya.begin(), ya.end(), y) - ya.begin());
    ev[i] = layout.xf[a][layout.table_of(elem)[pos]];
  }
  FinFn eval(dom.object, f.dom(), std::move(ev));
  return SliceExponential{f, g, e, projection, dom, eval};
}

FinFn SliceExponential::transpose(const FinFn& z, const FinFn& h) const {
  PullbackCone zy = fs_pullback(z, exponent);
  if (!(h.dom() == zy.object) || !(h.cod() == source.dom())) {
    throw Error(ErrorCode::DomainMismatch, "transpose needs a map Z ×_A Y → X");
  }
  SliceLayout layout(source, exponent);
  std::vector<std::size_t> k(z.dom().size());
  for (std::size_t zz = 0; zz < k.size(); ++zz) {
    const std::size_t a = z(zz);
    std::vector<std::size_t> phi;
    for (std::size_t y : layout.yf[a]) {
      std::size_t pair = npos;
      for (std::size_t i = 0; i < zy.object.size(); ++i) {
        if (zy.first(i) == zz && zy.second(i) == y) pair = i;
      }
      const std::size_t x = h(pair);
      if (source(x) != a) throw Error(ErrorCode::InvalidInput, "map is not over the base");
      const auto& xa = layout.xf[a];
      phi.push_back(static_cast<std::size_t>(std::find(xa.begin(), xa.end(), x) - xa.begin()));
    }
    k[zz] = layout.element_of(a, phi);
  }
  return FinFn(z.dom(), object, std::move(k));
}

FinFn SliceExponential::lift(const FinFn& z, const FinFn& k) const {
  PullbackCone zy = fs_pullback(z, exponent);
  return eval_domain.factor(compose(k, zy.first), zy.second);
}

Validation validate(const Diagram& d) {
  const FinCat& J = *d.shape;
  if (d.objects.size() != J.object_count() || d.morphisms.size() != J.morphism_count()) {
    return Validation::fail(Law::FunctorTyping, {}, "diagram tables do not match the shape");
  }
  for (auto f : J.morphisms()) {
    if (!(d(f).dom() == d(J.src(f))) || !(d(f).cod() == d(J.dst(f)))) {
      return Validation::fail(Law::FunctorTyping, {f.index},
                              "image of " + J.morphism_name(f) + " has the wrong endpoints");
    }
  }
  for (auto a : J.objects()) {
    if (!(d(J.identity(a)) == identity_fn(d(a)))) {
      return Validation::fail(Law::FunctorIdentity, {a.index},
                              "identity of " + J.object_name(a) + " not sent to an identity");
    }
  }
  for (auto f : J.morphisms()) {
    for (auto g : J.morphisms()) {
      auto gf = J.try_compose(g, f);
      if (!gf) continue;
      if (!(d(*gf) == compose(d(g), d(f)))) {
        return Validation::fail(Law::FunctorComposition, {g.index, f.index},
                                "composite " + J.morphism_name(g) + " after " + J.morphism_name(f) +
                                    " not preserved");
      }
    }
  }
  return Validation::pass();
}

Diagram precompose(const Diagram& d, const Functor& p) {
  if (!same_category(p.cod_ref(), d.shape)) throw Error(ErrorCode::DomainMismatch, "functor does not land in the shape");
  Diagram out{p.dom_ref(), {}, {}};
  for (auto a : p.dom().objects()) out.objects.push_back(d(p(a)));
  for (auto f : p.dom().morphisms()) out.morphisms.push_back(d(p(f)));
  return out;
}

std::vector<Diagram> enumerate_diagrams(const CatRef& shape, std::size_t max_size) {
  const FinCat& J = *shape;
  const std::size_t n = J.object_count(), m = J.morphism_count();
  std::vector<std::vector<std::pair<MorId, MorId>>> checks(m);
  for (auto f : J.morphisms()) {
    for (auto g : J.morphisms()) {
      if (auto gf = J.try_compose(g, f)) checks[std::max({g.index, f.index, gf->index})].push_back({g, f});
    }
  }
  std::vector<Diagram> out;
  std::vector<std::size_t> sizes(n, 0);
  std::vector<std::vector<std::size_t>> tables(m);
  auto value = [&](std::size_t f, std::size_t x) { return tables[f][x]; };
  auto consistent = [&](std::size_t last) {
    for (auto [g, f] : checks[last]) {
      const std::size_t gf = J.compose(g, f).index;
      for (std::size_t x = 0; x < sizes[J.src(f).index]; ++x) {
        if (value(gf, x) != value(g.index, value(f.index, x))) return false;
      }
    }
    return true;
  };
  auto emit = [&] {
    Diagram d{shape, {}, {}};
    for (auto s : sizes) d.objects.push_back(FinSetObj::of_size(s));
    for (auto f : J.morphisms()) d.morphisms.emplace_back(d(J.src(f)), d(J.dst(f)), tables[f.index]);
    out.push_back(std::move(d));
  };
  auto morphs = [&](auto&& self, std::size_t f) -> void {
    if (f == m) {
      emit();
      return;
    }
    const MorId fm{f};
    const std::size_t s = sizes[J.src(fm).index], t = sizes[J.dst(fm).index];
    if (J.is_identity(fm)) {
      tables[f].resize(s);
      std::iota(tables[f].begin(), tables[f].end(), 0);
      if (consistent(f)) self(self, f + 1);
      return;
    }
    for_each_table(s, t, [&](const std::vector<std::size_t>& tab) {
      tables[f] = tab;
      if (consistent(f)) self(self, f + 1);
    });
  };
  auto objs = [&](auto&& self, std::size_t a) -> void {
    if (a == n) {
      morphs(morphs, 0);
      return;
    }
    for (std::size_t k = 0; k <= max_size; ++k) {
      sizes[a] = k;
      self(self, a + 1);
    }
  };
  objs(objs, 0);
  return out;
}

bool is_natural(const Diagram& from, const Diagram& to, const DiagramMorphism& alpha) {
  const FinCat& J = *from.shape;
  if (alpha.size() != J.object_count()) return false;
  for (auto a : J.objects()) {
    if (!(alpha[a.index].dom() == from(a)) || !(alpha[a.index].cod() == to(a))) return false;
  }
  for (auto f : J.morphisms()) {
    if (!(compose(to(f), alpha[J.src(f).index]) == compose(alpha[J.dst(f).index], from(f)))) return false;
  }
  return true;
}

std::vector<DiagramMorphism> enumerate_diagram_morphisms(const Diagram& from, const Diagram& to) {
  if (!same_category(from.shape, to.shape)) throw Error(ErrorCode::DomainMismatch, "diagrams on different shapes");
  const FinCat& J = *from.shape;
  const std::size_t n = J.object_count();
  std::vector<std::vector<MorId>> squares(n);
  for (auto f : J.morphisms()) squares[std::max(J.src(f).index, J.dst(f).index)].push_back(f);
  std::vector<DiagramMorphism> out;
  std::vector<std::vector<std::size_t>> comps(n);
  auto rec = [&](auto&& self, std::size_t a) -> void {
    if (a == n) {
      DiagramMorphism alpha;
      for (auto b : J.objects()) alpha.emplace_back(from(b), to(b), comps[b.index]);
      out.push_back(std::move(alpha));
      return;
    }
    for_each_table(from.objects[a].size(), to.objects[a].size(), [&](const std::vector<std::size_t>& t) {
      comps[a] = t;
      for (auto f : squares[a]) {
        const auto& s = comps[J.src(f).index];
        const auto& d = comps[J.dst(f).index];
        for (std::size_t x = 0; x < s.size(); ++x) {
          if (to(f)(s[x]) != d[from(f)(x)]) return;
        }
      }
      self(self, a + 1);
    });
  };
  rec(rec, 0);
  return out;
}

}  // namespace fincat
