#include "fincat/adjunction.hpp"

#include <algorithm>
#include <functional>

#include "fincat/finset.hpp"

namespace fincat {

namespace {

std::string num(std::size_t i) { return std::to_string(i); }

MorId at_position(const FinCat& c, ObjId a, ObjId b, std::size_t pos) { return c.hom(a, b)[pos]; }

bool is_permutation(const std::vector<std::size_t>& t, std::size_t n) {
  if (t.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto v : t) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Validation check_pair(const Functor& f, const Functor& g) {
  if (auto v = validate(f); !v) return v;
  if (auto v = validate(g); !v) return v;
  if (!same_category(f.dom_ref(), g.cod_ref()) || !same_category(f.cod_ref(), g.dom_ref())) {
    return Validation::fail(Law::FunctorTyping, {}, "functors are not opposing");
  }
  return Validation::pass();
}

void require_valid(const Validation& v) {
  if (!v) throw Error(ErrorCode::InvalidInput, "adjunction fails " + std::string(to_string(v.law)) + ": " + v.detail);
}

// Unique g: F₀ a → b (b fixed) with G g ∘ η_a = k.
std::optional<MorId> factor_into(const AdjUniversal& u, ObjId a, ObjId b, MorId k) {
  const FinCat& A = u.right.cod();
  const FinCat& B = u.right.dom();
  std::optional<MorId> found;
  for (auto g : B.hom(u.left_objects[a.index], b)) {
    if (A.compose(u.right(g), u.unit[a.index]) == k) {
      if (found) return std::nullopt;
      found = g;
    }
  }
  return found;
}

// F on morphisms: F(u) is the factorization of η_{a'} ∘ u through η_a.
Functor left_from_universal(const AdjUniversal& u) {
  const FinCat& A = u.right.cod();
  std::vector<MorId> mmap;
  for (auto m : A.morphisms()) {
    const ObjId a = A.src(m), a2 = A.dst(m);
    auto g = factor_into(u, a, u.left_objects[a2.index], A.compose(u.unit[a2.index], m));
    if (!g) throw Error(ErrorCode::InvalidInput, "unit arrow is not universal");
    mmap.push_back(*g);
  }
  return Functor(u.right.cod_ref(), u.right.dom_ref(), u.left_objects, std::move(mmap));
}

}  // namespace

MorId AdjHom::transpose(ObjId a, MorId h) const {
  const FinCat& B = left.cod();
  const ObjId b = B.dst(h);
  return at_position(left.dom(), a, right(b), at(a, b)[B.hom_position(h)]);
}

MorId AdjHom::untranspose(ObjId b, MorId k) const {
  const FinCat& A = left.dom();
  const ObjId a = A.src(k);
  const auto& t = at(a, b);
  const auto pos = static_cast<std::size_t>(std::find(t.begin(), t.end(), A.hom_position(k)) - t.begin());
  return at_position(left.cod(), left(a), b, pos);
}

std::string_view to_string(AdjForm form) {
  switch (form) {
    case AdjForm::Hom: return "hom";
    case AdjForm::UnitCounit: return "unit-counit";
    case AdjForm::Universal: return "universal";
  }
  return "unknown";
}

AdjForm form_of(const Adjunction& a) { return static_cast<AdjForm>(a.index()); }

Validation validate_adjunction(const AdjHom& adj) {
  if (auto v = check_pair(adj.left, adj.right); !v) return v;
  const Functor& F = adj.left;
  const Functor& G = adj.right;
  const FinCat& A = F.dom();
  const FinCat& B = F.cod();
  if (adj.phi.size() != A.object_count() * B.object_count()) {
    return Validation::fail(Law::Bijection, {}, "phi needs one table per object pair");
  }
  for (auto a : A.objects()) {
    for (auto b : B.objects()) {
      const auto& t = adj.at(a, b);
      const std::size_t lhs = B.hom(F(a), b).size();
      const std::size_t rhs = A.hom(a, G(b)).size();
      if (lhs != rhs || !is_permutation(t, lhs)) {
        return Validation::fail(Law::Bijection, {a.index, b.index},
                                "phi at (" + A.object_name(a) + ", " + B.object_name(b) + ") is not a bijection");
      }
    }
  }
  auto phi = [&](ObjId a, MorId h) { return at_position(A, a, G(B.dst(h)), adj.at(a, B.dst(h))[B.hom_position(h)]); };
  // phi(h ∘ F u) = phi(h) ∘ u for u: a' → a
  for (auto u : A.morphisms()) {
    const ObjId a2 = A.src(u), a = A.dst(u);
    for (auto b : B.objects()) {
      for (auto h : B.hom(F(a), b)) {
        if (phi(a2, B.compose(h, F(u))) != A.compose(phi(a, h), u)) {
          return Validation::fail(Law::Naturality, {u.index, h.index},
                                  "phi not natural in the first variable at " + A.morphism_name(u));
        }
      }
    }
  }
  // phi(v ∘ h) = G v ∘ phi(h) for v: b → b'
  for (auto v : B.morphisms()) {
    const ObjId b = B.src(v);
    for (auto a : A.objects()) {
      for (auto h : B.hom(F(a), b)) {
        if (phi(a, B.compose(v, h)) != A.compose(G(v), phi(a, h))) {
          return Validation::fail(Law::Naturality, {v.index, h.index},
                                  "phi not natural in the second variable at " + B.morphism_name(v));
        }
      }
    }
  }
  return Validation::pass();
}

Validation validate_adjunction(const AdjUnitCounit& adj) {
  if (auto v = check_pair(adj.left, adj.right); !v) return v;
  const Functor& F = adj.left;
  const Functor& G = adj.right;
  const FinCat& A = F.dom();
  const FinCat& B = F.cod();
  if (!(adj.unit.source == identity_functor(F.dom_ref())) || !(adj.unit.target == compose_functors(G, F))) {
    return Validation::fail(Law::ComponentTyping, {}, "unit must be Id ⇒ G∘F");
  }
  if (!(adj.counit.source == compose_functors(F, G)) || !(adj.counit.target == identity_functor(F.cod_ref()))) {
    return Validation::fail(Law::ComponentTyping, {}, "counit must be F∘G ⇒ Id");
  }
  if (auto v = validate(adj.unit); !v) return v;
  if (auto v = validate(adj.counit); !v) return v;
  // (εF)∘(Fη) = id_F
  for (auto a : A.objects()) {
    const MorId fe = F(adj.unit(a));
    const MorId ef = adj.counit(F(a));
    if (B.compose(ef, fe) != B.identity(F(a))) {
      return Validation::fail(Law::Triangle, {0, a.index, ef.index, fe.index},
                              "left triangle fails at " + A.object_name(a) + ": " + B.morphism_name(ef) + " ∘ " +
                                  B.morphism_name(fe) + " is not the identity on F(" + A.object_name(a) + ")");
    }
  }
  // (Gε)∘(ηG) = id_G
  for (auto b : B.objects()) {
    const MorId ge = G(adj.counit(b));
    const MorId eg = adj.unit(G(b));
    if (A.compose(ge, eg) != A.identity(G(b))) {
      return Validation::fail(Law::Triangle, {1, b.index, ge.index, eg.index},
                              "right triangle fails at " + B.object_name(b) + ": " + A.morphism_name(ge) + " ∘ " +
                                  A.morphism_name(eg) + " is not the identity on G(" + B.object_name(b) + ")");
    }
  }
  return Validation::pass();
}

Validation validate_adjunction(const AdjUniversal& adj) {
  if (auto v = validate(adj.right); !v) return v;
  const Functor& G = adj.right;
  const FinCat& A = G.cod();
  const FinCat& B = G.dom();
  if (adj.left_objects.size() != A.object_count() || adj.unit.size() != A.object_count()) {
    return Validation::fail(Law::ComponentTyping, {}, "one universal arrow per object");
  }
  for (auto a : A.objects()) {
    const ObjId fa = adj.left_objects[a.index];
    const MorId eta = adj.unit[a.index];
    if (fa.index >= B.object_count() || eta.index >= A.morphism_count() || A.src(eta) != a ||
        A.dst(eta) != G(fa)) {
      return Validation::fail(Law::ComponentTyping, {a.index}, "unit arrow at " + A.object_name(a) + " is mistyped");
    }
  }
  for (auto a : A.objects()) {
    for (auto b : B.objects()) {
      for (auto k : A.hom(a, G(b))) {
        std::size_t count = 0;
        for (auto g : B.hom(adj.left_objects[a.index], b)) {
          if (A.compose(G(g), adj.unit[a.index]) == k) ++count;
        }
        if (count != 1) {
          return Validation::fail(Law::Universality, {a.index, b.index, k.index},
                                  A.morphism_name(k) + " factors through the unit at " + A.object_name(a) + " " +
                                      num(count) + " times");
        }
      }
    }
  }
  return Validation::pass();
}

Validation validate_adjunction(const Adjunction& a) {
  return std::visit([](const auto& x) { return validate_adjunction(x); }, a);
}

AdjUnitCounit hom_to_unit_counit(const AdjHom& adj) {
  require_valid(validate_adjunction(adj));
  const Functor& F = adj.left;
  const Functor& G = adj.right;
  const FinCat& A = F.dom();
  const FinCat& B = F.cod();
  std::vector<MorId> eta, eps;
  for (auto a : A.objects()) {
    const ObjId fa = F(a);
    eta.push_back(at_position(A, a, G(fa), adj.at(a, fa)[B.hom_position(B.identity(fa))]));
  }
  for (auto b : B.objects()) {
    const ObjId gb = G(b);
    const auto& t = adj.at(gb, b);
    const std::size_t target = A.hom_position(A.identity(gb));
    const std::size_t pos = static_cast<std::size_t>(std::find(t.begin(), t.end(), target) - t.begin());
    eps.push_back(at_position(B, F(gb), b, pos));
  }
  return AdjUnitCounit{F, G, NatTrans{identity_functor(F.dom_ref()), compose_functors(G, F), std::move(eta)},
                       NatTrans{compose_functors(F, G), identity_functor(F.cod_ref()), std::move(eps)}};
}

AdjUniversal hom_to_universal(const AdjHom& adj) {
  require_valid(validate_adjunction(adj));
  const Functor& F = adj.left;
  const Functor& G = adj.right;
  const FinCat& A = F.dom();
  const FinCat& B = F.cod();
  std::vector<MorId> eta;
  for (auto a : A.objects()) {
    eta.push_back(at_position(A, a, G(F(a)), adj.at(a, F(a))[B.hom_position(B.identity(F(a)))]));
  }
  return AdjUniversal{G, F.omap(), std::move(eta)};
}

AdjHom unit_counit_to_hom(const AdjUnitCounit& adj) {
  require_valid(validate_adjunction(adj));
  const Functor& F = adj.left;
  const Functor& G = adj.right;
  const FinCat& A = F.dom();
  const FinCat& B = F.cod();
  AdjHom out{F, G, {}};
  for (auto a : A.objects()) {
    for (auto b : B.objects()) {
      std::vector<std::size_t> t;
      for (auto h : B.hom(F(a), b)) t.push_back(A.hom_position(A.compose(G(h), adj.unit(a))));
      out.phi.push_back(std::move(t));
    }
  }
  return out;
}

AdjUniversal unit_counit_to_universal(const AdjUnitCounit& adj) {
  require_valid(validate_adjunction(adj));
  return AdjUniversal{adj.right, adj.left.omap(), adj.unit.components};
}

AdjHom universal_to_hom(const AdjUniversal& adj) {
  require_valid(validate_adjunction(adj));
  Functor F = left_from_universal(adj);
  const Functor& G = adj.right;
  const FinCat& A = F.dom();
  const FinCat& B = F.cod();
  AdjHom out{F, G, {}};
  for (auto a : A.objects()) {
    for (auto b : B.objects()) {
      std::vector<std::size_t> t;
      for (auto h : B.hom(F(a), b)) t.push_back(A.hom_position(A.compose(G(h), adj.unit[a.index])));
      out.phi.push_back(std::move(t));
    }
  }
  return out;
}

AdjUnitCounit universal_to_unit_counit(const AdjUniversal& adj) {
  require_valid(validate_adjunction(adj));
  Functor F = left_from_universal(adj);
  const Functor& G = adj.right;
  const FinCat& A = F.dom();
  const FinCat& B = F.cod();
  std::vector<MorId> eps;
  for (auto b : B.objects()) {
    auto g = factor_into(adj, G(b), b, A.identity(G(b)));
    if (!g) throw Error(ErrorCode::InvalidInput, "unit arrow is not universal");
    eps.push_back(*g);
  }
  return AdjUnitCounit{F, G, NatTrans{identity_functor(F.dom_ref()), compose_functors(G, F), adj.unit},
                       NatTrans{compose_functors(F, G), identity_functor(F.cod_ref()), std::move(eps)}};
}

Adjunction adj_convert(const Adjunction& a, AdjForm target) {
  require_valid(validate_adjunction(a));
  if (form_of(a) == target) return a;
  if (auto* h = std::get_if<AdjHom>(&a)) {
    if (target == AdjForm::UnitCounit) return hom_to_unit_counit(*h);
    return hom_to_universal(*h);
  }
  if (auto* u = std::get_if<AdjUnitCounit>(&a)) {
    if (target == AdjForm::Hom) return unit_counit_to_hom(*u);
    return unit_counit_to_universal(*u);
  }
  const auto& v = std::get<AdjUniversal>(a);
  if (target == AdjForm::Hom) return universal_to_hom(v);
  return universal_to_unit_counit(v);
}

AdjHom adj_dual(const AdjHom& adj) {
  require_valid(validate_adjunction(adj));
  const FinCat& A = adj.left.dom();
  const FinCat& B = adj.left.cod();
  Functor left = opposite_functor(adj.right);   // G^op: B^op → A^op
  Functor right = opposite_functor(adj.left);   // F^op: A^op → B^op
  AdjHom out{left, right, {}};
  out.phi.resize(A.object_count() * B.object_count());
  // Hom_{A^op}(G b, a) = Hom_A(a, G b) and Hom_{B^op}(b, F a) = Hom_B(F a, b).
  for (auto b : B.objects()) {
    for (auto a : A.objects()) {
      const auto& t = adj.at(a, b);
      std::vector<std::size_t> inv(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) inv[t[i]] = i;
      out.phi[b.index * A.object_count() + a.index] = std::move(inv);
    }
  }
  return out;
}

AdjUnitCounit adj_dual(const AdjUnitCounit& adj) {
  require_valid(validate_adjunction(adj));
  Functor left = opposite_functor(adj.right);
  Functor right = opposite_functor(adj.left);
  return AdjUnitCounit{left, right,
                       NatTrans{identity_functor(left.dom_ref()), compose_functors(right, left), adj.counit.components},
                       NatTrans{compose_functors(left, right), identity_functor(left.cod_ref()), adj.unit.components}};
}

AdjUniversal adj_dual(const AdjUniversal& adj) {
  AdjUnitCounit uc = universal_to_unit_counit(adj);
  return unit_counit_to_universal(adj_dual(uc));
}

Adjunction adj_dual(const Adjunction& a) {
  return std::visit([](const auto& x) -> Adjunction { return adj_dual(x); }, a);
}

AdjHom identity_adjunction(const CatRef& c) {
  Functor id = identity_functor(c);
  AdjHom out{id, id, {}};
  for (auto a : c->objects()) {
    for (auto b : c->objects()) {
      std::vector<std::size_t> t(c->hom(a, b).size());
      for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
      out.phi.push_back(std::move(t));
    }
  }
  return out;
}

std::optional<MorId> find_inverse(const FinCat& c, MorId f) {
  for (auto g : c.hom(c.dst(f), c.src(f))) {
    if (c.compose(g, f) == c.identity(c.src(f)) && c.compose(f, g) == c.identity(c.dst(f))) return g;
  }
  return std::nullopt;
}

bool is_natural_isomorphism(const NatTrans& n) {
  if (!validate(n)) return false;
  for (auto c : n.components) {
    if (!find_inverse(n.source.cod(), c)) return false;
  }
  return true;
}

NatTrans adj_unique_iso(const AdjHom& a, const AdjHom& b) {
  if (!validate_adjunction(a) || !validate_adjunction(b)) throw Error(ErrorCode::NotAdjoint, "input adjunction is invalid");
  if (!(a.left == b.left)) throw Error(ErrorCode::NotAdjoint, "right adjoints of different functors");
  const Functor& F = a.left;
  const FinCat& A = F.dom();
  const FinCat& B = F.cod();
  std::vector<MorId> comps;
  // θ_c = phi'(phi⁻¹(id_{G c})), the transpose of the counit of a under b.
  for (auto c : B.objects()) {
    const ObjId gc = a.right(c);
    const auto& t = a.at(gc, c);
    const std::size_t pos = static_cast<std::size_t>(
        std::find(t.begin(), t.end(), A.hom_position(A.identity(gc))) - t.begin());
    const std::size_t image = b.at(gc, c)[pos];
    comps.push_back(at_position(A, gc, b.right(c), image));
  }
  NatTrans theta{a.right, b.right, std::move(comps)};
  if (!is_natural_isomorphism(theta)) throw Error(ErrorCode::NotAdjoint, "comparison is not a natural isomorphism");
  return theta;
}

FinSetAdjunctionKind parse_finset_adjunction_kind(std::string_view name) {
  if (name == "sum_diag") return FinSetAdjunctionKind::SumDiag;
  if (name == "diag_prod") return FinSetAdjunctionKind::DiagProd;
  if (name == "prod_exp") return FinSetAdjunctionKind::ProdExp;
  throw Error(ErrorCode::UnknownKind, "unknown adjunction kind '" + std::string(name) + "'");
}

std::string_view to_string(FinSetAdjunctionKind kind) {
  switch (kind) {
    case FinSetAdjunctionKind::SumDiag: return "sum_diag";
    case FinSetAdjunctionKind::DiagProd: return "diag_prod";
    case FinSetAdjunctionKind::ProdExp: return "prod_exp";
  }
  return "unknown";
}

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

// Every n-tuple of sizes in [0, bound].
void for_each_sizes(std::size_t n, std::size_t bound, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  for_each_table(n, bound + 1, visit);
}

FinSetObj set_of(std::size_t k) { return FinSetObj::of_size(k); }

// f + g: A'+B' → A+B.
FinFn sum_map(const FinFn& f, const FinFn& g) {
  SumCocone from = fs_sum(f.dom(), g.dom());
  SumCocone to = fs_sum(f.cod(), g.cod());
  return from.copair(compose(to.left, f), compose(to.right, g));
}

// b^X: B^X → B'^X.
FinFn exp_map(const ExponentialObject& from, const ExponentialObject& to, const FinFn& b) {
  std::vector<std::size_t> t;
  for (std::size_t e = 0; e < from.object.size(); ++e) {
    auto row = from.table_of(e);
    for (auto& v : row) v = b(v);
    t.push_back(to.element_of(row));
  }
  return FinFn(from.object, to.object, std::move(t));
}

struct Recorder {
  FinSetAdjunctionReport& rep;
  void fail(bool& flag, const std::string& what) {
    if (flag && rep.witness.empty()) rep.witness = what;
    flag = false;
  }
  void square(bool ok, const std::string& what) {
    ++rep.squares;
    if (!ok) fail(rep.natural, what);
  }
};

std::string sizes_label(const std::vector<std::size_t>& s) { return table_label(s); }

void sum_diag(FinSetAdjunctionReport& rep, Recorder& r) {
  // φ(h) = (h∘inl, h∘inr) : Hom(A+B, C) → Hom(A, C) × Hom(B, C)
  for_each_sizes(3, rep.bound, [&](const std::vector<std::size_t>& s) {
    ++rep.instances;
    FinSetObj A = set_of(s[0]), B = set_of(s[1]), C = set_of(s[2]);
    SumCocone ab = fs_sum(A, B);
    auto phi = [&](const FinFn& h) { return std::pair{compose(h, ab.left), compose(h, ab.right)}; };
    auto hs = all_functions(ab.object, C);
    if (hs.size() != ipow(s[2], s[0] + s[1]) || hs.size() != all_functions(A, C).size() * all_functions(B, C).size()) {
      r.fail(rep.cardinality, "sizes " + sizes_label(s));
    }
    for (const auto& h : hs) {
      auto [f, g] = phi(h);
      if (!(ab.copair(f, g) == h)) r.fail(rep.bijective, "copair∘φ at sizes " + sizes_label(s));
    }
    for (const auto& f : all_functions(A, C)) {
      for (const auto& g : all_functions(B, C)) {
        if (phi(ab.copair(f, g)) != std::pair{f, g}) r.fail(rep.bijective, "φ∘copair at sizes " + sizes_label(s));
      }
    }
  });
  // naturality in A, B (precomposition) and C (postcomposition)
  for_each_sizes(4, rep.bound, [&](const std::vector<std::size_t>& s) {
    FinSetObj A2 = set_of(s[0]), A = set_of(s[1]), B = set_of(s[2]), C = set_of(s[3]);
    SumCocone ab = fs_sum(A, B), a2b = fs_sum(A2, B), ba2 = fs_sum(B, A2), ba = fs_sum(B, A);
    for (const auto& u : all_functions(A2, A)) {
      FinFn left = sum_map(u, identity_fn(B));
      FinFn right = sum_map(identity_fn(B), u);
      for (const auto& h : all_functions(ab.object, C)) {
        FinFn h2 = compose(h, left);
        r.square(compose(h2, a2b.left) == compose(compose(h, ab.left), u) && compose(h2, a2b.right) == compose(h, ab.right),
                 "sum_diag naturality in A at sizes " + sizes_label(s));
      }
      for (const auto& h : all_functions(ba.object, C)) {
        FinFn h2 = compose(h, right);
        r.square(compose(h2, ba2.right) == compose(compose(h, ba.right), u) && compose(h2, ba2.left) == compose(h, ba.left),
                 "sum_diag naturality in B at sizes " + sizes_label(s));
      }
    }
  });
  for_each_sizes(4, rep.bound, [&](const std::vector<std::size_t>& s) {
    FinSetObj A = set_of(s[0]), B = set_of(s[1]), C = set_of(s[2]), C2 = set_of(s[3]);
    SumCocone ab = fs_sum(A, B);
    for (const auto& v : all_functions(C, C2)) {
      for (const auto& h : all_functions(ab.object, C)) {
        FinFn h2 = compose(v, h);
        r.square(compose(h2, ab.left) == compose(v, compose(h, ab.left)) &&
                     compose(h2, ab.right) == compose(v, compose(h, ab.right)),
                 "sum_diag naturality in C at sizes " + sizes_label(s));
      }
    }
  });
}

void diag_prod(FinSetAdjunctionReport& rep, Recorder& r) {
  // φ(f, g) = ⟨f, g⟩ : Hom(A, B) × Hom(A, C) → Hom(A, B×C)
  for_each_sizes(3, rep.bound, [&](const std::vector<std::size_t>& s) {
    ++rep.instances;
    FinSetObj A = set_of(s[0]), B = set_of(s[1]), C = set_of(s[2]);
    ProductCone bc = fs_product(B, C);
    auto ks = all_functions(A, bc.object);
    if (ks.size() != ipow(s[1] * s[2], s[0]) || ks.size() != all_functions(A, B).size() * all_functions(A, C).size()) {
      r.fail(rep.cardinality, "sizes " + sizes_label(s));
    }
    for (const auto& k : ks) {
      if (!(bc.pair(compose(bc.first, k), compose(bc.second, k)) == k)) {
        r.fail(rep.bijective, "pair∘φ⁻¹ at sizes " + sizes_label(s));
      }
    }
    for (const auto& f : all_functions(A, B)) {
      for (const auto& g : all_functions(A, C)) {
        FinFn k = bc.pair(f, g);
        if (!(compose(bc.first, k) == f) || !(compose(bc.second, k) == g)) {
          r.fail(rep.bijective, "φ⁻¹∘pair at sizes " + sizes_label(s));
        }
      }
    }
  });
  for_each_sizes(4, rep.bound, [&](const std::vector<std::size_t>& s) {
    FinSetObj A2 = set_of(s[0]), A = set_of(s[1]), B = set_of(s[2]), C = set_of(s[3]);
    ProductCone bc = fs_product(B, C);
    for (const auto& u : all_functions(A2, A)) {
      for (const auto& f : all_functions(A, B)) {
        for (const auto& g : all_functions(A, C)) {
          r.square(bc.pair(compose(f, u), compose(g, u)) == compose(bc.pair(f, g), u),
                   "diag_prod naturality in A at sizes " + sizes_label(s));
        }
      }
    }
  });
  for_each_sizes(4, rep.bound, [&](const std::vector<std::size_t>& s) {
    FinSetObj A = set_of(s[0]), B = set_of(s[1]), C = set_of(s[2]), B2 = set_of(s[3]);
    ProductCone bc = fs_product(B, C), b2c = fs_product(B2, C), cb = fs_product(C, B), cb2 = fs_product(C, B2);
    for (const auto& v : all_functions(B, B2)) {
      FinFn vl = product_map(v, identity_fn(C));
      FinFn vr = product_map(identity_fn(C), v);
      for (const auto& f : all_functions(A, B)) {
        for (const auto& g : all_functions(A, C)) {
          r.square(b2c.pair(compose(v, f), g) == compose(vl, bc.pair(f, g)),
                   "diag_prod naturality in B at sizes " + sizes_label(s));
          r.square(cb2.pair(g, compose(v, f)) == compose(vr, cb.pair(g, f)),
                   "diag_prod naturality in C at sizes " + sizes_label(s));
        }
      }
    }
  });
}

void prod_exp(FinSetAdjunctionReport& rep, Recorder& r) {
  // φ(f) = transpose(f) : Hom(A×X, B) → Hom(A, B^X); φ⁻¹(k) = eval∘(k×X)
  for_each_sizes(3, rep.bound, [&](const std::vector<std::size_t>& s) {
    ++rep.instances;
    FinSetObj A = set_of(s[0]), X = set_of(s[1]), B = set_of(s[2]);
    ExponentialObject e = fs_exponential(X, B);
    ProductCone ax = fs_product(A, X);
    auto fs = all_functions(ax.object, B);
    auto ks = all_functions(A, e.object);
    if (fs.size() != ipow(s[2], s[0] * s[1]) || fs.size() != ks.size()) r.fail(rep.cardinality, "sizes " + sizes_label(s));
    for (const auto& f : fs) {
      if (!(compose(e.eval, product_map(e.transpose(f, A), identity_fn(X))) == f)) {
        r.fail(rep.bijective, "φ⁻¹∘φ at sizes " + sizes_label(s));
      }
    }
    for (const auto& k : ks) {
      if (!(e.transpose(compose(e.eval, product_map(k, identity_fn(X))), A) == k)) {
        r.fail(rep.bijective, "φ∘φ⁻¹ at sizes " + sizes_label(s));
      }
    }
  });
  for_each_sizes(4, rep.bound, [&](const std::vector<std::size_t>& s) {
    FinSetObj A2 = set_of(s[0]), A = set_of(s[1]), X = set_of(s[2]), B = set_of(s[3]);
    ExponentialObject e = fs_exponential(X, B);
    ProductCone ax = fs_product(A, X);
    for (const auto& u : all_functions(A2, A)) {
      FinFn ux = product_map(u, identity_fn(X));
      for (const auto& f : all_functions(ax.object, B)) {
        r.square(e.transpose(compose(f, ux), A2) == compose(e.transpose(f, A), u),
                 "prod_exp naturality in A at sizes " + sizes_label(s));
      }
    }
  });
  for_each_sizes(4, rep.bound, [&](const std::vector<std::size_t>& s) {
    FinSetObj A = set_of(s[0]), X = set_of(s[1]), B = set_of(s[2]), B2 = set_of(s[3]);
    ExponentialObject e = fs_exponential(X, B), e2 = fs_exponential(X, B2);
    ProductCone ax = fs_product(A, X);
    for (const auto& v : all_functions(B, B2)) {
      FinFn vx = exp_map(e, e2, v);
      for (const auto& f : all_functions(ax.object, B)) {
        r.square(e2.transpose(compose(v, f), A) == compose(vx, e.transpose(f, A)),
                 "prod_exp naturality in B at sizes " + sizes_label(s));
      }
    }
  });
}

}  // namespace

FinSetAdjunctionReport fs_adjunction_witness(FinSetAdjunctionKind kind, std::size_t bound) {
  if (bound < 1) throw Error(ErrorCode::InvalidInput, "bound must be at least 1");
  FinSetAdjunctionReport rep;
  rep.kind = kind;
  rep.bound = bound;
  Recorder r{rep};
  switch (kind) {
    case FinSetAdjunctionKind::SumDiag: sum_diag(rep, r); break;
    case FinSetAdjunctionKind::DiagProd: diag_prod(rep, r); break;
    case FinSetAdjunctionKind::ProdExp: prod_exp(rep, r); break;
  }
  return rep;
}

FinSetAdjunctionReport fs_adjunction_chain(std::size_t bound) {
  FinSetAdjunctionReport rep;
  rep.kind = FinSetAdjunctionKind::DiagProd;
  rep.bound = bound;
  Recorder r{rep};
  for_each_sizes(4, bound, [&](const std::vector<std::size_t>& s) {
    ++rep.instances;
    FinSetObj A = set_of(s[0]), B = set_of(s[1]), C = set_of(s[2]), D = set_of(s[3]);
    SumCocone ab = fs_sum(A, B);
    ProductCone cd = fs_product(C, D);
    for (const auto& h : all_functions(ab.object, cd.object)) {
      // + ⊣ Δ first: (h∘inl, h∘inr), then split each through ×.
      FinFn l = compose(h, ab.left), rr = compose(h, ab.right);
      std::vector<FinFn> first{compose(cd.first, l), compose(cd.second, l), compose(cd.first, rr), compose(cd.second, rr)};
      // Δ ⊣ × first: (π₁∘h, π₂∘h), then split each through +.
      FinFn p = compose(cd.first, h), q = compose(cd.second, h);
      std::vector<FinFn> second{compose(p, ab.left), compose(q, ab.left), compose(p, ab.right), compose(q, ab.right)};
      r.square(first == second, "chain at sizes " + sizes_label(s));
      // and back: ⟨[a,c],[b,d]⟩ = [⟨a,b⟩,⟨c,d⟩] = h
      FinFn back1 = cd.pair(ab.copair(first[0], first[2]), ab.copair(first[1], first[3]));
      FinFn back2 = ab.copair(cd.pair(first[0], first[1]), cd.pair(first[2], first[3]));
      if (!(back1 == h) || !(back2 == h)) r.fail(rep.bijective, "chain inverse at sizes " + sizes_label(s));
    }
  });
  return rep;
}

}  // namespace fincat
