// Acceptance run: one line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fincat/adjunction.hpp"
#include "fincat/catalog.hpp"
#include "fincat/constructions.hpp"
#include "fincat/kan.hpp"
#include "fincat/limits.hpp"
#include "fincat/universal.hpp"
#include "fincat/universes.hpp"
#include "fincat/yoneda.hpp"
#include "oracle.hpp"

#ifdef FINCAT_WITH_CLI
#include "golden.hpp"
#endif

using namespace fincat;

namespace {

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
    failures_ += ok ? 0 : 1;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  bool pass() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << checks_ << " checks";
    if (!notes_.empty()) s << "; " << notes_;
    if (!pass()) s << "; " << failures_ << " failed, first: " << first_failure_;
    return s.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_failure_;
  std::string notes_;
};

FinSetObj sz(std::size_t n) { return FinSetObj::of_size(n); }

std::string str(std::size_t n) { return std::to_string(n); }

oracle::Tuple indices(const std::vector<MorId>& ms) {
  oracle::Tuple out;
  for (auto m : ms) out.push_back(m.index);
  return out;
}

std::pair<oracle::Tuple, oracle::Tuple> tables_of(const Functor& f) {
  oracle::Tuple om;
  for (auto o : f.omap()) om.push_back(o.index);
  return {om, indices(f.mmap())};
}

template <class T>
std::vector<T> capped(std::vector<T> v, std::size_t cap) {
  if (v.size() > cap) v.erase(v.begin() + static_cast<std::ptrdiff_t>(cap), v.end());
  return v;
}

void duality(Tally& t) {
  const auto cats = oracle::generated_corpus();
  t.expect(cats.size() >= 20, "corpus has at least 20 categories");
  std::size_t functors = 0, transformations = 0, composites = 0;
  for (const auto& c : cats) {
    t.expect(opposite_category(opposite_category(*c)).tables() == c->tables(), "op op C = C");
  }
  for (const auto& c : cats)
    for (const auto& d : cats) {
      if (c->morphism_count() * d->morphism_count() > 16) continue;
      const auto fs = capped(enumerate_functors(c, d), 3);
      for (const auto& f : fs) {
        ++functors;
        const auto ff = opposite_functor(opposite_functor(f));
        t.expect(ff.omap() == f.omap() && ff.mmap() == f.mmap() && ff.dom().tables() == f.dom().tables() &&
                     ff.cod().tables() == f.cod().tables(),
                 "op op F = F");
        for (const auto& g : fs)
          for (const auto& n : capped(enumerate_nattrans(f, g), 2)) {
            ++transformations;
            const auto nn = opposite_nattrans(opposite_nattrans(n));
            t.expect(nn.components == n.components && nn.source.omap() == n.source.omap() &&
                         nn.target.omap() == n.target.omap(),
                     "op op α = α");
          }
      }
    }
  auto classes = enumerate_categories(2, 4, true);
  for (const auto& [name, c] : oracle::corpus()) classes.push_back(c);
  for (const auto& c : classes)
    for (const auto& d : classes)
      for (const auto& e : classes)
        for (const auto& f1 : capped(enumerate_functors(c, d), 2))
          for (const auto& f2 : capped(enumerate_functors(d, e), 2)) {
            ++composites;
            const auto lhs = opposite_functor(compose_functors(f2, f1));
            const auto rhs = compose_functors(opposite_functor(f2), opposite_functor(f1));
            t.expect(lhs.omap() == rhs.omap() && lhs.mmap() == rhs.mmap() &&
                         lhs.dom().tables() == rhs.dom().tables() && lhs.cod().tables() == rhs.cod().tables(),
                     "(F∘F')^op = F^op∘F'^op");
          }
  t.note(str(cats.size()) + " categories, " + str(functors) + " functors, " + str(transformations) +
         " transformations, " + str(composites) + " composites");
}

void limit_oracle(Tally& t) {
  const auto diagrams = oracle::random_diagrams(150, 2024);
  for (const auto& d : diagrams) {
    const auto lim = finset_limit(d);
    const auto fams = oracle::matching_families(d);
    t.expect(lim.apex.size() == fams.size(), "limit cardinality");
    std::set<oracle::Tuple> image;
    for (std::size_t i = 0; i < lim.apex.size(); ++i) {
      oracle::Tuple fam;
      for (std::size_t c = 0; c < d.objects.size(); ++c) fam.push_back(lim.legs[c](i));
      image.insert(fam);
    }
    t.expect(image == fams, "apex elements correspond to matching families");
    for (auto f : d.shape->morphisms()) {
      t.expect(compose(d(f), lim.legs[d.shape->src(f).index]) == lim.legs[d.shape->dst(f).index], "legs commute");
    }
    t.expect(lim.mediate(lim.apex, lim.legs) == identity_fn(lim.apex), "legs mediate to the identity");
  }
  t.note(str(diagrams.size()) + " diagrams");
}

void complete_preorder(Tally& t) {
  const auto scan = scan_complete_preorder(3, 8);
  t.expect(scan.counterexamples == 0, "no complete non-preorder with ≤ 3 objects, ≤ 8 morphisms");
  for (const auto& c : scan.complete_categories) t.expect(oracle::is_preorder(*c), "scan result is thin");
  std::size_t complete = 0;
  std::vector<CatRef> pool = scan.complete_categories;
  for (const auto& [name, c] : oracle::corpus()) pool.push_back(c);
  for (const auto& c : pool) {
    if (!oracle::complete(c)) continue;
    ++complete;
    const auto r = complete_preorder_check(c);
    t.expect(r.complete && r.preorder && r.hom_power_ok, "complete corpus category passes");
    for (const auto& hp : r.hom_power) {
      std::size_t power = 1;
      for (std::size_t i = 0; i < c->morphism_count(); ++i) power *= c->hom(hp.x, hp.y).size();
      t.expect(hp.hom_power == power && hp.hom_to_power == power && hp.bijective, "|Hom(x, y')| = |Hom(x, y)|^|Mor|");
    }
  }
  t.expect(complete >= 10, "at least 10 complete categories");
  t.note(str(scan.hom_matrices) + " hom matrices, " + str(scan.pruned_by_counts) + " pruned, " +
         str(scan.categories_checked) + " categories checked, " + str(scan.complete) + " complete, " +
         str(scan.counterexamples) + " counterexamples; hom power on " + str(complete));
}

void adjunctions(Tally& t) {
  const auto corpus = oracle::corpus_adjunctions();
  t.expect(corpus.size() > 20, "adjunction corpus is nontrivial");
  const AdjForm kinds[3] = {AdjForm::Hom, AdjForm::UnitCounit, AdjForm::Universal};
  std::size_t paths = 0;
  for (const auto& uc : corpus) {
    const Adjunction forms[3] = {unit_counit_to_hom(uc), uc, unit_counit_to_universal(uc)};
    for (int s = 0; s < 3; ++s) {
      t.expect(validate_adjunction(forms[s]).ok(), "every form validates");
      for (int d = 0; d < 3; ++d) {
        const auto direct = adj_convert(forms[s], kinds[d]);
        ++paths;
        t.expect(direct == forms[d], "conversion agrees with the reference form");
        for (int via = 0; via < 3; ++via) {
          t.expect(adj_convert(adj_convert(forms[s], kinds[via]), kinds[d]) == direct, "conversion paths commute");
        }
        t.expect(oracle::triangles(std::get<AdjUnitCounit>(adj_convert(direct, AdjForm::UnitCounit))),
                 "triangles hold after conversion");
      }
      const auto dual = adj_dual(forms[s]);
      t.expect(validate_adjunction(dual).ok(), "dual validates");
      t.expect(adj_dual(dual) == forms[s], "dual is an involution");
    }
    t.expect(oracle::triangles(adj_dual(uc)), "dual triangles");
  }
  for (auto kind : {FinSetAdjunctionKind::SumDiag, FinSetAdjunctionKind::DiagProd, FinSetAdjunctionKind::ProdExp}) {
    const auto r = fs_adjunction_witness(kind, 2);
    t.expect(r.pass() && r.squares > 0, std::string("FinSet witness ") + std::string(to_string(kind)));
  }
  t.expect(fs_adjunction_chain(2).pass(), "FinSet chain");
  t.note(str(corpus.size()) + " adjunctions, " + str(paths) + " direct conversions");
}

void kan(Tally& t) {
  const std::vector<CatRef> shapes = {unit_category(), discrete_category(2), walking_arrow(), iso_pair()};
  std::size_t limits = 0;
  for (const auto& [name, e] : oracle::corpus()) {
    if (e->morphism_count() > 6) continue;
    for (const auto& c : shapes) {
      const auto bang = terminal_functor(c);
      for (const auto& f : enumerate_functors(c, e)) {
        const auto ran = right_kan_pointwise(f, bang);
        const auto lim = limit_by_search(f);
        t.expect(ran.has_value() == lim.has_value(), "Ran along ! exists iff the limit does");
        if (!ran || !lim) continue;
        ++limits;
        const Cone cone{ran->extension(ObjId{0}), ran->comparison.components};
        t.expect(oracle::is_limit(*c, *e, tables_of(f), cone.apex.index, indices(cone.legs)), "Ran along ! is a limit");
        t.expect(cone_isomorphism(f, cone, *lim).has_value(), "Ran along ! ≅ limit");
      }
    }
  }
  std::size_t set_limits = 0;
  for (const auto& d : oracle::random_diagrams(40, 7, 2)) {
    const auto bang = terminal_functor(d.shape);
    const auto ran = right_kan_finset(d, bang);
    const auto lim = finset_limit(d);
    t.expect(ran.extension.objects[0].size() == lim.apex.size(), "set-valued Ran along ! has the limit's size");
    ++set_limits;
  }

  std::size_t extensions = 0;
  const std::vector<CatRef> targets = {chain_category(3), walking_arrow(), iso_pair(), discrete_category(2)};
  for (const auto& c : shapes)
    for (const auto& d : shapes)
      for (const auto& e : targets) {
        const auto ps = capped(enumerate_functors(c, d), 5);
        const auto fs = capped(enumerate_functors(c, e), 5);
        for (const auto& p : ps)
          for (const auto& f : fs) {
            const auto ran = right_kan_pointwise(f, p);
            if (!ran) continue;
            ++extensions;
            const auto r = kan_local_check(*ran, f, p);
            t.expect(r.pass && r.cone_ok && r.hom_ok, "local check passes");
            for (auto [lhs, rhs] : r.counts) t.expect(lhs == rhs, "|Nat(M, Ran)| = |Nat(M∘p, F)|");
          }
      }

  std::size_t pairs = 0;
  for (const auto& c : {unit_category(), discrete_category(2)})
    for (const auto& d : {unit_category(), walking_arrow()})
      for (const auto& e : {iso_pair(), chain_category(2)})
        for (const auto& p : enumerate_functors(c, d))
          for (const auto& f : enumerate_functors(c, e)) {
            std::vector<KanResult> passing;
            for (const auto& r : enumerate_functors(d, e))
              for (const auto& n : enumerate_nattrans(compose_functors(r, p), f)) {
                KanResult candidate{r, n};
                if (kan_local_check(candidate, f, p).pass) passing.push_back(candidate);
              }
            for (const auto& a : passing)
              for (const auto& b : passing) {
                const auto iso = kan_comparison_iso(a, b, p);
                t.expect(iso.has_value() && is_natural_isomorphism(*iso), "passing candidates are isomorphic");
                ++pairs;
              }
          }
  t.note(str(limits) + " limits, " + str(set_limits) + " set-valued limits, " + str(extensions) +
         " extensions, " + str(pairs) + " candidate pairs");
}

void yoneda(Tally& t) {
  std::mt19937 gen(99);
  std::size_t presheaves = 0, bijections = 0;
  for (const auto& [name, c] : oracle::corpus()) {
    const auto y = yoneda_embedding(c);
    t.expect(check_embedding(y).pass(), "embedding is functorial, full and faithful: " + name);
    for (auto a : c->objects())
      for (auto b : c->objects()) {
        t.expect(oracle::count_diagram_morphisms(y.objects[a.index], y.objects[b.index]) == c->hom(a, b).size(),
                 "Nat(y a, y b) ≅ Hom(a, b)");
        const auto hom = c->hom(a, b);
        for (std::size_t i = 0; i < hom.size(); ++i)
          for (std::size_t j = 0; j < i; ++j)
            t.expect(y.morphisms[hom[i].index] != y.morphisms[hom[j].index], "y is injective on hom-sets");
      }
    const auto all = enumerate_diagrams(opposite(c), 2);
    for (int trial = 0; trial < 20 && !all.empty(); ++trial) {
      const auto& f = all[gen() % all.size()];
      ++presheaves;
      for (auto x : c->objects()) {
        ++bijections;
        const auto r = yoneda_bijection(c, f, x);
        t.expect(r.nat_count == f(x).size() && r.set_size == f(x).size(), "|Nat(y c, F)| = |F(c)|");
        t.expect(r.forward_then_inverse && r.inverse_then_forward, "round trips are identities");
        t.expect(oracle::count_diagram_morphisms(hom_functor(c, x), f) == f(x).size(), "oracle count agrees");
      }
    }
  }
  t.note(str(presheaves) + " presheaves, " + str(bijections) + " bijections");
}

void topos(Tally& t) {
  const auto omega = fs_subobject_classifier();
  for (std::size_t a = 0; a <= 4; ++a) {
    std::set<oracle::Tuple> characteristic;
    for (std::size_t s = 0; s <= a; ++s)
      for (const auto& table : oracle::tables(s, a)) {
        const auto m = oracle::fn(sz(s), sz(a), table);
        if (!is_injective(m)) continue;
        std::size_t matching = 0;
        for (const auto& ct : oracle::tables(a, 2)) {
          if (is_pullback_square(m, to_terminal(sz(s)), oracle::fn(sz(a), omega.omega, ct), omega.truth)) {
            ++matching;
            t.expect(omega.classify(m).table() == ct, "classify picks the unique χ");
          }
        }
        t.expect(matching == 1, "exactly one χ per mono");
        characteristic.insert(omega.classify(m).table());
      }
    t.expect(characteristic.size() == (std::size_t{1} << a), "|Sub(A)| = 2^|A|");
  }
  std::size_t exponentials = 0, slices = 0;
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 2; ++b) {
      ++exponentials;
      t.expect(fs_verify_universal(candidate(fs_exponential(sz(a), sz(b))), 3).pass, "exponential universal");
    }
  for (std::size_t nx = 0; nx <= 2; ++nx)
    for (std::size_t ny = 0; ny <= 2; ++ny)
      for (const auto& ft : oracle::tables(nx, 2))
        for (const auto& gt : oracle::tables(ny, 2)) {
          ++slices;
          const auto se = fs_slice_exponential(oracle::fn(sz(nx), sz(2), ft), oracle::fn(sz(ny), sz(2), gt));
          t.expect(verify_slice_exponential(se, 3).pass, "slice exponential universal");
        }
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 2; ++b)
      for (std::size_t c = 0; c <= 2; ++c) {
        const auto iso = ccc_exponential_iso(sz(a), sz(b), sz(c));
        t.expect(iso.round_trip && compose(iso.inverse, iso.forward) == identity_fn(iso.forward.dom()) &&
                     compose(iso.forward, iso.inverse) == identity_fn(iso.forward.cod()),
                 "curry iso round-trips");
      }
  t.note(str(exponentials) + " exponentials, " + str(slices) + " slice exponentials");
}

/// Each edge is a normalized input constraint and the weights around the
/// closed path add up to a positive amount.
bool positive_cycle(const std::vector<AtomicConstraint>& cycle, const std::vector<AtomicConstraint>& edges) {
  if (cycle.empty()) return false;
  long weight = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const auto& c = cycle[i];
    if (c.rhs.var != cycle[(i + 1) % cycle.size()].lhs.var) return false;
    const bool known = std::any_of(edges.begin(), edges.end(), [&](const AtomicConstraint& e) {
      return e.lhs == c.lhs && e.rhs == c.rhs && e.strict == c.strict;
    });
    if (!known) return false;
    weight += static_cast<long>(c.lhs.offset) + (c.strict ? 1 : 0) - static_cast<long>(c.rhs.offset);
  }
  return weight > 0;
}

void universes(Tally& t) {
  auto run = [&](const std::string& label, bool consistent, const std::function<void(UniverseContext&)>& build,
                 const std::vector<std::string>& entailed) {
    UniverseContext u;
    build(u);
    const auto v = u.check();
    t.expect(v.consistent == consistent, label + " verdict");
    if (!v.consistent) t.expect(positive_cycle(v.cycle, normalize(u.constraints())), label + " cycle");
    for (const auto& e : entailed) t.expect(u.entails(u.parse_constraint(e)), label + " entails " + e);
  };
  run("set complete preorder", false, [](UniverseContext& u) {
    u.register_signature("Set", SigKind::Set);
    u.apply_theorem("complete_preorder", {"Set"});
  }, {});
  run("small complete preorder", true, [](UniverseContext& u) {
    u.register_signature("C", SigKind::Category);
    u.add(u.parse_constraint("C.obj <= C.hom"));
    u.apply_theorem("complete_preorder", {"C"});
  }, {});
  run("cat exponentials", true, [](UniverseContext& u) {
    u.register_signature("Cat", SigKind::Cat);
    u.apply_theorem("cat_exponentials", {"Cat"});
  }, {"Cat.j = Cat.k", "Cat.k = Cat.l"});
  run("set in cat", false, [](UniverseContext& u) {
    u.register_signature("Cat", SigKind::Cat);
    u.register_signature("Set", SigKind::Set);
    u.apply_theorem("set_in_cat", {"Cat", "Set"});
  }, {});
  std::size_t builtins = 0;
  for (const auto& name : builtin_scenario_names()) {
    const auto out = run_builtin_scenario(name);
    ++builtins;
    t.expect(out.pass(), "builtin scenario " + name);
    if (!out.verdict.consistent) t.expect(validate_cycle(out.verdict.cycle), "builtin cycle " + name);
  }
  t.note("4 scenarios rebuilt, " + str(builtins) + " builtins");
}

void cli_determinism(Tally& t) {
#ifdef FINCAT_WITH_CLI
  ::unsetenv("FINCAT_BOUND");
  const std::string corpus = FINCAT_CORPUS_DIR;
  const auto cases = golden::manifest(corpus);
  t.expect(!cases.empty(), "golden manifest is present");
  for (const auto& c : cases) {
    const auto first = golden::run_structured(corpus, c);
    const auto second = golden::run_structured(corpus, c);
    t.expect(first.exit == c.expected_exit, c.name + " exit code");
    t.expect(first.out == second.out, c.name + " stable across runs");
    t.expect(first.out == golden::read_file(corpus + "/golden/" + c.name + ".json"), c.name + " matches golden");
  }
  t.note(str(cases.size()) + " golden reports");
#else
  t.expect(false, "built without the command-line tool");
#endif
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria = {
      {"duality involution", duality},
      {"limit oracle equivalence", limit_oracle},
      {"complete preorder at finite scale", complete_preorder},
      {"adjunction coherence", adjunctions},
      {"Kan extension checks", kan},
      {"Yoneda", yoneda},
      {"topos suite", topos},
      {"universe scenarios", universes},
      {"CLI determinism", cli_determinism},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(t);
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    all = all && t.pass();
    std::printf("[%s] %zu %s: %s (%.0f ms)\n", t.pass() ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                t.summary().c_str(), ms);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
