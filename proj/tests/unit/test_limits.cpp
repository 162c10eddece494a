#include <map>

#include "doctest.h"
#include "fincat/catalog.hpp"
#include "fincat/constructions.hpp"
#include "fincat/enumerate.hpp"
#include "fincat/limits.hpp"
#include "oracle.hpp"

using namespace fincat;

namespace {

Functor pick(const CatRef& shape, const CatRef& c, std::vector<std::size_t> objects) {
  for (auto& f : enumerate_functors(shape, c)) {
    bool ok = true;
    for (std::size_t i = 0; i < objects.size(); ++i) ok = ok && f(ObjId{i}).index == objects[i];
    if (ok) return f;
  }
  throw std::runtime_error("no such functor");
}

std::pair<oracle::Tuple, oracle::Tuple> tables_of(const Functor& f) {
  oracle::Tuple om, mm;
  for (auto o : f.omap()) om.push_back(o.index);
  for (auto m : f.mmap()) mm.push_back(m.index);
  return {om, mm};
}

oracle::Tuple legs_of(const Cone& c) {
  oracle::Tuple out;
  for (auto l : c.legs) out.push_back(l.index);
  return out;
}

std::vector<CatRef> shapes() {
  return {empty_category(), unit_category(), discrete_category(2), walking_arrow(), parallel_pair(),
          preorder_category(3, {{0, 2}, {1, 2}})};
}

}  // namespace

TEST_CASE("cone enumeration") {
  auto chain = chain_category(3);
  auto empty = pick(empty_category(), chain, {});
  CHECK(enumerate_cones(empty).size() == 3);
  for (const auto& c : enumerate_cones(empty)) CHECK(c.legs.empty());

  auto z2 = monoid_category({{0, 1}, {1, 0}});
  auto one = object_functor(z2, ObjId{0});
  CHECK(enumerate_cones(one).size() == 2);

  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) {
      auto d = pick(discrete_category(2), chain, {x, y});
      std::size_t expect = 0;
      for (std::size_t a = 0; a < 3; ++a)
        for (auto u : chain->hom(ObjId{a}, ObjId{x}))
          for (auto v : chain->hom(ObjId{a}, ObjId{y})) {
            (void)u, (void)v;
            ++expect;
          }
      auto cones = enumerate_cones(d);
      CHECK(cones.size() == expect);
      for (std::size_t i = 1; i < cones.size(); ++i) {
        auto key = [](const Cone& c) { return std::make_pair(c.apex, c.legs); };
        CHECK(key(cones[i - 1]) < key(cones[i]));
      }
    }
}

TEST_CASE("limit search in the 3-chain and discrete categories") {
  auto chain = chain_category(3);
  auto top = limit_by_search(pick(empty_category(), chain, {}));
  REQUIRE(top);
  CHECK(top->apex == ObjId{2});
  auto meet = limit_by_search(pick(discrete_category(2), chain, {0, 1}));
  REQUIRE(meet);
  CHECK(meet->apex == ObjId{0});
  auto d2 = discrete_category(2);
  CHECK_FALSE(limit_by_search(pick(discrete_category(2), d2, {0, 1})).has_value());
  auto bottom = colimit_by_search(pick(empty_category(), chain, {}));
  REQUIRE(bottom);
  CHECK(bottom->apex == ObjId{0});
}

TEST_CASE("limit search agrees with the brute-force universality oracle") {
  std::size_t found = 0, absent = 0;
  for (const auto& [name, c] : oracle::corpus()) {
    if (c->morphism_count() > 6) continue;
    for (const auto& shape : shapes()) {
      for (const auto& d : enumerate_functors(shape, c)) {
        auto lim = limit_by_search(d);
        CHECK(lim.has_value() == oracle::has_limit(*shape, *c, tables_of(d)));
        if (lim) {
          CHECK(is_cone(d, *lim));
          CHECK(oracle::is_limit(*shape, *c, tables_of(d), lim->apex.index, legs_of(*lim)));
          ++found;
        } else {
          ++absent;
        }
        auto colim = colimit_by_search(d);
        auto dual = limit_by_search(opposite_functor(d));
        CHECK(colim == dual);
        if (colim) CHECK(is_cocone(d, *colim));
      }
    }
  }
  CHECK(found > 0);
  CHECK(absent > 0);
}

TEST_CASE("universal cones are unique up to a unique isomorphism") {
  auto iso = iso_pair();
  auto d = pick(empty_category(), iso, {});
  std::vector<Cone> universal;
  for (const auto& c : enumerate_cones(d))
    if (oracle::is_limit(*empty_category(), *iso, tables_of(d), c.apex.index, legs_of(c))) universal.push_back(c);
  REQUIRE(universal.size() == 2);
  for (const auto& a : universal)
    for (const auto& b : universal) {
      auto m = cone_isomorphism(d, a, b);
      REQUIRE(m);
      CHECK(iso->src(*m) == a.apex);
      CHECK(iso->dst(*m) == b.apex);
      CHECK(cone_factorizations(d, b, a).size() == 1);
    }

  for (const auto& [name, c] : oracle::corpus()) {
    if (c->morphism_count() > 6) continue;
    for (const auto& dd : enumerate_functors(discrete_category(2), c)) {
      std::vector<Cone> us;
      for (const auto& k : enumerate_cones(dd))
        if (oracle::is_limit(*discrete_category(2), *c, tables_of(dd), k.apex.index, legs_of(k))) us.push_back(k);
      for (const auto& a : us)
        for (const auto& b : us) CHECK(cone_isomorphism(dd, a, b).has_value());
    }
  }
}

TEST_CASE("set-valued limits") {
  auto disc = discrete_category(3);
  Diagram d{disc, {FinSetObj::of_size(2), FinSetObj::of_size(3), FinSetObj::of_size(2)},
            {identity_fn(FinSetObj::of_size(2)), identity_fn(FinSetObj::of_size(3)), identity_fn(FinSetObj::of_size(2))}};
  CHECK(finset_limit(d).apex.size() == 12);
  CHECK(finset_colimit(d).apex.size() == 7);

  Diagram e{empty_category(), {}, {}};
  CHECK(finset_limit(e).apex.size() == 1);
  CHECK(finset_colimit(e).apex.size() == 0);

  auto cospan = preorder_category(3, {{0, 2}, {1, 2}});
  auto two = FinSetObj::of_size(2), one = FinSetObj::of_size(1);
  Diagram cs{cospan, {two, two, one}, {}};
  for (auto f : cospan->morphisms()) {
    const auto& s = cs.objects[cospan->src(f).index];
    const auto& t = cs.objects[cospan->dst(f).index];
    cs.morphisms.push_back(cospan->is_identity(f) ? identity_fn(s) : FinFn(s, t, oracle::Tuple(s.size(), 0)));
  }
  REQUIRE(validate(cs).ok());
  auto pb = finset_limit(cs);
  CHECK(pb.apex.size() == 4);
  CHECK(oracle::matching_families(cs).size() == 4);

  auto span = preorder_category(3, {{0, 1}, {0, 2}});
  Diagram sp{span, {two, two, two}, {}};
  for (auto f : span->morphisms()) {
    const auto& s = sp.objects[span->src(f).index];
    if (span->is_identity(f)) {
      sp.morphisms.push_back(identity_fn(s));
    } else {
      sp.morphisms.push_back(span->dst(f) == ObjId{1} ? FinFn(s, two, {0, 1}) : FinFn(s, two, {1, 0}));
    }
  }
  REQUIRE(validate(sp).ok());
  CHECK(finset_colimit(sp).apex.size() == oracle::colimit_classes(sp));
  CHECK(finset_colimit(sp).apex.size() == 2);
}

TEST_CASE("set-valued limits and colimits match the oracles on random diagrams") {
  for (const auto& d : oracle::random_diagrams(150, 11)) {
    REQUIRE(validate(d).ok());
    auto lim = finset_limit(d);
    auto fams = oracle::matching_families(d);
    REQUIRE(lim.apex.size() == fams.size());
    std::set<oracle::Tuple> got;
    for (std::size_t i = 0; i < lim.apex.size(); ++i) {
      oracle::Tuple fam;
      for (std::size_t c = 0; c < d.objects.size(); ++c) fam.push_back(lim.legs[c](i));
      CHECK(fam == lim.families[i]);
      got.insert(fam);
    }
    CHECK(got == fams);
    for (auto f : d.shape->morphisms()) {
      CHECK(compose(d(f), lim.legs[d.shape->src(f).index]) == lim.legs[d.shape->dst(f).index]);
    }
    CHECK(lim.mediate(lim.apex, lim.legs) == identity_fn(lim.apex));

    auto [p, q] = finset_limit_maps(d);
    std::size_t equal = 0;
    for (std::size_t i = 0; i < p.dom().size(); ++i) equal += p(i) == q(i) ? 1 : 0;
    CHECK(equal == fams.size());

    auto colim = finset_colimit(d);
    CHECK(colim.apex.size() == oracle::colimit_classes(d));
    for (auto f : d.shape->morphisms()) {
      CHECK(compose(colim.legs[d.shape->dst(f).index], d(f)) == colim.legs[d.shape->src(f).index]);
    }
    CHECK(colim.mediate(colim.legs, colim.apex) == identity_fn(colim.apex));
  }
}

TEST_CASE("complete preorder check on named categories") {
  auto chain = complete_preorder_check(chain_category(3));
  CHECK(chain.complete);
  CHECK(chain.preorder);
  CHECK(chain.theorem_holds);
  CHECK(chain.hom_power_ok);

  auto w = walking_arrow();
  auto arrow = complete_preorder_check(w);
  CHECK(arrow.complete);
  CHECK(arrow.preorder);
  CHECK(arrow.hom_power_ok);
  CHECK(arrow.hom_power.size() == 4);
  for (const auto& hp : arrow.hom_power) {
    std::size_t pow = 1;
    for (std::size_t i = 0; i < w->morphism_count(); ++i) pow *= w->hom(hp.x, hp.y).size();
    CHECK(hp.hom_power == pow);
    CHECK(hp.hom_to_power == pow);
    CHECK(hp.bijective);
  }

  auto pp = complete_preorder_check(parallel_pair());
  CHECK_FALSE(pp.complete);
  CHECK_FALSE(pp.preorder);
  CHECK(pp.theorem_holds);
  CHECK_FALSE(pp.missing.empty());
}

TEST_CASE("completeness proxy agrees with the brute-force oracle") {
  for (const auto& c : oracle::generated_corpus()) {
    if (c->morphism_count() > 6) continue;
    auto r = complete_preorder_check(c);
    CHECK(r.complete == oracle::complete(c));
    CHECK(r.preorder == oracle::is_preorder(*c));
    if (r.complete) {
      CHECK(r.preorder);
      std::vector<std::size_t> counts;
      for (auto a : c->objects())
        for (auto b : c->objects()) counts.push_back(c->hom(a, b).size());
      CHECK(counts_admit_finite_products(counts, c->object_count()));
    }
  }
}

TEST_CASE("small scan: pruning loses no complete category") {
  auto scan = scan_complete_preorder(2, 5);
  CHECK(scan.counterexamples == 0);
  std::size_t complete = 0, total = 0;
  for (std::size_t n = 0; n <= 2; ++n)
    for (const auto& m : hom_count_matrices(n, 5))
      for_each_category(m, [&](const CatRef& c) {
        ++total;
        complete += oracle::complete(c) ? 1 : 0;
        return true;
      });
  CHECK(scan.complete == complete);
  CHECK(scan.categories_checked + scan.pruned_by_counts <= total + scan.hom_matrices);
}

TEST_CASE("arrow index") {
  auto c = parallel_pair();
  auto a = arrow_index(*c);
  CHECK(a->object_count() == c->morphism_count());
  CHECK(a->morphism_count() == c->morphism_count());
}
