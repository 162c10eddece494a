#include "doctest.h"
#include "fincat/adjunction.hpp"
#include "fincat/catalog.hpp"
#include "fincat/constructions.hpp"
#include "fincat/kan.hpp"
#include "fincat/limits.hpp"
#include "oracle.hpp"

using namespace fincat;

namespace {

std::vector<CatRef> small_shapes() { return {unit_category(), discrete_category(2), walking_arrow(), iso_pair()}; }
std::vector<CatRef> targets() { return {chain_category(3), walking_arrow(), iso_pair(), discrete_category(2)}; }

std::pair<oracle::Tuple, oracle::Tuple> tables_of(const Functor& f) {
  oracle::Tuple om, mm;
  for (auto o : f.omap()) om.push_back(o.index);
  for (auto m : f.mmap()) mm.push_back(m.index);
  return {om, mm};
}

template <class Visit>
void for_each_instance(std::size_t cap, Visit visit) {
  for (const auto& c : small_shapes())
    for (const auto& d : small_shapes())
      for (const auto& e : targets()) {
        auto ps = enumerate_functors(c, d);
        auto fs = enumerate_functors(c, e);
        for (std::size_t i = 0; i < ps.size() && i < cap; ++i)
          for (std::size_t j = 0; j < fs.size() && j < cap; ++j) visit(fs[j], ps[i]);
      }
}

Diagram sets(const CatRef& shape, std::vector<std::size_t> sizes) {
  Diagram d{shape, {}, {}};
  for (auto n : sizes) d.objects.push_back(FinSetObj::of_size(n));
  for (auto f : shape->morphisms()) d.morphisms.push_back(identity_fn(d.objects[shape->src(f).index]));
  return d;
}

}  // namespace

TEST_CASE("Ran along the identity is isomorphic to F") {
  auto c = walking_arrow();
  for (const auto& f : enumerate_functors(c, chain_category(3))) {
    auto id = identity_functor(c);
    auto ran = right_kan_pointwise(f, id);
    REQUIRE(ran);
    KanResult trivial{f, identity_nattrans(f)};
    CHECK(kan_local_check(trivial, f, id).pass);
    CHECK(kan_comparison_iso(*ran, trivial, id).has_value());
    auto lan = left_kan(f, id);
    REQUIRE(lan);
    CHECK(is_natural_isomorphism(lan->comparison));
  }
}

TEST_CASE("Ran along the terminal functor is the limit") {
  std::size_t seen = 0;
  for (const auto& [name, e] : oracle::corpus()) {
    if (e->morphism_count() > 6) continue;
    for (const auto& c : small_shapes()) {
      auto bang = terminal_functor(c);
      for (const auto& f : enumerate_functors(c, e)) {
        auto ran = right_kan_pointwise(f, bang);
        auto lim = limit_by_search(f);
        REQUIRE(ran.has_value() == lim.has_value());
        if (!ran) continue;
        Cone cone{ran->extension(ObjId{0}), ran->comparison.components};
        CHECK(oracle::is_limit(*c, *e, tables_of(f), cone.apex.index, oracle::Tuple([&] {
                                 oracle::Tuple t;
                                 for (auto l : cone.legs) t.push_back(l.index);
                                 return t;
                               }())));
        CHECK(cone_isomorphism(f, cone, *lim).has_value());

        auto lan = left_kan(f, bang);
        auto colim = colimit_by_search(f);
        REQUIRE(lan.has_value() == colim.has_value());
        if (lan) CHECK(cone_isomorphism(opposite_functor(f), Cone{lan->extension(ObjId{0}), lan->comparison.components}, *colim).has_value());
        ++seen;
      }
    }
  }
  CHECK(seen > 50);
}

TEST_CASE("Lan is Ran on opposites") {
  for_each_instance(4, [](const Functor& f, const Functor& p) {
    auto lan = left_kan(f, p);
    auto ran = right_kan_pointwise(opposite_functor(f), opposite_functor(p));
    REQUIRE(lan.has_value() == ran.has_value());
    if (!lan) return;
    CHECK(lan->extension == opposite_functor(ran->extension));
    CHECK(lan->comparison.components == ran->comparison.components);
    CHECK(opposite_functor(opposite_functor(lan->extension)) == lan->extension);
    CHECK(validate(lan->extension).ok());
    CHECK(validate(lan->comparison).ok());
  });
}

TEST_CASE("computed right Kan extensions pass both local characterisations") {
  std::size_t checked = 0, missing = 0;
  for_each_instance(5, [&](const Functor& f, const Functor& p) {
    auto ran = right_kan_pointwise(f, p);
    if (!ran) {
      ++missing;
      return;
    }
    CHECK(validate(ran->extension).ok());
    CHECK(validate(ran->comparison).ok());
    auto r = kan_local_check(*ran, f, p);
    CHECK(r.pass);
    CHECK(r.cone_ok);
    CHECK(r.hom_ok);
    for (auto [lhs, rhs] : r.counts) CHECK(lhs == rhs);
    CHECK(r.functors_checked == enumerate_functors(p.cod_ref(), f.cod_ref()).size());
    ++checked;
  });
  CHECK(checked > 30);
  CHECK(missing > 0);
}

TEST_CASE("a non-universal candidate is rejected") {
  auto u = unit_category();
  auto chain = chain_category(3);
  auto f = object_functor(chain, ObjId{1});
  auto p = identity_functor(u);
  auto wrong = object_functor(chain, ObjId{0});
  KanResult cand{wrong, NatTrans{compose_functors(wrong, p), f, {chain->hom(ObjId{0}, ObjId{1})[0]}}};
  auto r = kan_local_check(cand, f, p);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.witness.empty());
}

TEST_CASE("passing candidates are naturally isomorphic") {
  std::size_t pairs = 0;
  for (const auto& c : {unit_category(), discrete_category(2)})
    for (const auto& d : {unit_category(), walking_arrow()})
      for (const auto& e : {iso_pair(), chain_category(2)}) {
        for (const auto& p : enumerate_functors(c, d))
          for (const auto& f : enumerate_functors(c, e)) {
            std::vector<KanResult> good;
            for (const auto& r : enumerate_functors(d, e))
              for (const auto& n : enumerate_nattrans(compose_functors(r, p), f)) {
                KanResult cand{r, n};
                if (kan_local_check(cand, f, p).pass) good.push_back(cand);
              }
            auto ran = right_kan_pointwise(f, p);
            CHECK(ran.has_value() == !good.empty());
            for (const auto& a : good)
              for (const auto& b : good) {
                auto iso = kan_comparison_iso(a, b, p);
                REQUIRE(iso);
                CHECK(is_natural_isomorphism(*iso));
                ++pairs;
              }
          }
      }
  CHECK(pairs > 10);
}

TEST_CASE("right adjoints preserve right Kan extensions") {
  std::size_t checked = 0;
  for (const auto& adj : oracle::corpus_adjunctions()) {
    const Functor& g = adj.right;
    const CatRef& e = g.dom_ref();
    if (e->object_count() > 3) continue;
    for (const auto& c : {unit_category(), discrete_category(2)}) {
      for (const auto& p : enumerate_functors(c, walking_arrow())) {
        auto fs = enumerate_functors(c, e);
        for (std::size_t i = 0; i < fs.size() && i < 3; ++i) {
          auto ran = right_kan_pointwise(fs[i], p);
          if (!ran) continue;
          KanResult pushed{compose_functors(g, ran->extension), whisker_left(g, ran->comparison)};
          CHECK(kan_local_check(pushed, compose_functors(g, fs[i]), p).pass);
          ++checked;
        }
      }
    }
    if (checked > 200) break;
  }
  CHECK(checked > 20);
}

TEST_CASE("representable functors preserve pointwise extensions") {
  for_each_instance(3, [](const Functor& f, const Functor& p) {
    auto ran = right_kan_pointwise(f, p);
    if (!ran) return;
    for (auto e : f.cod().objects()) CHECK(representable_preservation(*ran, f, p, e));
  });
}

TEST_CASE("set-valued Kan extensions") {
  auto two = discrete_category(2);
  auto w = walking_arrow();
  auto incl = enumerate_functors(two, w);
  const Functor* p = nullptr;
  for (const auto& f : incl)
    if (f(ObjId{0}) == ObjId{0} && f(ObjId{1}) == ObjId{1}) p = &f;
  REQUIRE(p);
  auto f = sets(two, {2, 3});
  auto ran = right_kan_finset(f, *p);
  CHECK(validate(ran.extension).ok());
  CHECK(ran.extension.objects[0].size() == 6);
  CHECK(ran.extension.objects[1].size() == 3);
  auto rep = kan_local_check(ran, f, *p, 2);
  CHECK(rep.pass);
  for (auto [lhs, rhs] : rep.counts) CHECK(lhs == rhs);

  auto lan = left_kan_finset(f, *p);
  CHECK(validate(lan.extension).ok());
  CHECK(lan.extension.objects[0].size() == 2);
  CHECK(lan.extension.objects[1].size() == 5);

  for (const auto& d : oracle::random_diagrams(40, 5, 2)) {
    auto bang = terminal_functor(d.shape);
    auto r = right_kan_finset(d, bang);
    CHECK(r.extension.objects[0].size() == oracle::matching_families(d).size());
    CHECK(r.extension.objects[0].size() == finset_limit(d).apex.size());
    auto l = left_kan_finset(d, bang);
    CHECK(l.extension.objects[0].size() == oracle::colimit_classes(d));
  }
}

TEST_CASE("global check") {
  for (const auto& c : {unit_category(), walking_arrow(), discrete_category(2)}) {
    auto r = kan_global_check(identity_functor(c), chain_category(2));
    CHECK(r.pass);
    CHECK(r.adjunction.ok());
    CHECK(r.cardinalities);
  }
  auto two = discrete_category(2);
  auto w = walking_arrow();
  for (const auto& p : enumerate_functors(two, w)) {
    auto r = kan_global_check(p, chain_category(2));
    CHECK(r.pass);
    CHECK(r.cardinalities);
  }
  auto swap = enumerate_functors(iso_pair(), iso_pair());
  for (const auto& p : swap) CHECK(kan_global_check(p, chain_category(3)).pass);
  CHECK_THROWS_AS(kan_global_check(terminal_functor(two), discrete_category(2)), Error);
}
