#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "fincat/finset.hpp"
#include "fincat/universal.hpp"
#include "oracle.hpp"

using namespace fincat;
using oracle::Tuple;

namespace {

FinSetObj sz(std::size_t n) { return FinSetObj::of_size(n); }

// For every pair (f: X→A, g: X→B), how many m: X→P satisfy p∘m = f, q∘m = g.
std::map<std::pair<Tuple, Tuple>, std::size_t> mediator_counts(const FinSetObj& x, const FinFn& p, const FinFn& q) {
  std::map<std::pair<Tuple, Tuple>, std::size_t> out;
  for (const auto& m : oracle::tables(x.size(), p.dom().size())) {
    Tuple f(m.size()), g(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      f[i] = p.table()[m[i]];
      g[i] = q.table()[m[i]];
    }
    out[{f, g}]++;
  }
  return out;
}

bool product_universal_by_enumeration(const FinFn& p, const FinFn& q, std::size_t bound) {
  for (std::size_t n = 0; n <= bound; ++n) {
    auto x = sz(n);
    auto counts = mediator_counts(x, p, q);
    for (const auto& f : oracle::tables(n, p.cod().size()))
      for (const auto& g : oracle::tables(n, q.cod().size()))
        if (counts[{f, g}] != 1) return false;
  }
  return true;
}

bool mono_by_cancellation(const FinFn& f) {
  for (std::size_t n = 0; n <= 3; ++n)
    for (const auto& g : oracle::tables(n, f.dom().size()))
      for (const auto& h : oracle::tables(n, f.dom().size())) {
        bool same = true;
        for (std::size_t i = 0; i < n; ++i) same = same && f(g[i]) == f(h[i]);
        if (same && g != h) return false;
      }
  return true;
}

bool epi_by_cancellation(const FinFn& f) {
  for (std::size_t n = 0; n <= 3; ++n)
    for (const auto& g : oracle::tables(f.cod().size(), n))
      for (const auto& h : oracle::tables(f.cod().size(), n)) {
        bool same = true;
        for (std::size_t i = 0; i < f.dom().size(); ++i) same = same && g[f(i)] == h[f(i)];
        if (same && g != h) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("labels and construction errors") {
  CHECK_THROWS_AS(FinSetObj({"a", "a"}), Error);
  CHECK_THROWS_AS(FinFn(sz(2), sz(1), {0, 1}), Error);
  CHECK_THROWS_AS(compose(identity_fn(sz(2)), identity_fn(sz(3))), Error);
  auto p = fs_product(FinSetObj({"a", "b"}), FinSetObj({"x", "y", "z"}));
  CHECK(p.object.label(0) == "a,x");
  CHECK(p.object.label(5) == "b,z");
  auto s = fs_sum(FinSetObj({"a"}), FinSetObj({"a"}));
  CHECK(s.object.elements() == std::vector<std::string>{"L:a", "R:a"});
}

TEST_CASE("products: cardinality, unit, mediating uniqueness") {
  CHECK(fs_product(sz(2), sz(3)).object.size() == 6);
  auto a1 = fs_product(sz(3), terminal_set());
  CHECK(is_injective(a1.first));
  CHECK(is_surjective(a1.first));
  for (std::size_t a = 0; a <= 3; ++a) {
    for (std::size_t b = 0; b <= 3; ++b) {
      auto p = fs_product(sz(a), sz(b));
      CHECK(product_universal_by_enumeration(p.first, p.second, 3));
      for (std::size_t n = 0; n <= 2; ++n) {
        for (const auto& f : oracle::tables(n, a))
          for (const auto& g : oracle::tables(n, b)) {
            auto m = p.pair(oracle::fn(sz(n), sz(a), f), oracle::fn(sz(n), sz(b), g));
            CHECK(compose(p.first, m).table() == f);
            CHECK(compose(p.second, m).table() == g);
          }
      }
    }
  }
}

TEST_CASE("sums: cardinality, unit, copairing uniqueness") {
  CHECK(fs_sum(sz(2), sz(3)).object.size() == 5);
  auto a0 = fs_sum(sz(3), sz(0));
  CHECK(is_injective(a0.left));
  CHECK(is_surjective(a0.left));
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b) {
      auto s = fs_sum(sz(a), sz(b));
      for (std::size_t n = 0; n <= 3; ++n) {
        std::map<std::pair<Tuple, Tuple>, std::size_t> counts;
        for (const auto& m : oracle::tables(a + b, n)) {
          Tuple f(a), g(b);
          for (std::size_t i = 0; i < a; ++i) f[i] = m[s.left(i)];
          for (std::size_t i = 0; i < b; ++i) g[i] = m[s.right(i)];
          counts[{f, g}]++;
        }
        for (const auto& f : oracle::tables(a, n))
          for (const auto& g : oracle::tables(b, n)) {
            CHECK(counts[{f, g}] == 1);
            auto cp = s.copair(oracle::fn(sz(a), sz(n), f), oracle::fn(sz(b), sz(n), g));
            CHECK(compose(cp, s.left).table() == f);
            CHECK(compose(cp, s.right).table() == g);
          }
      }
    }
}

TEST_CASE("equalizers") {
  auto f = oracle::fn(sz(3), sz(2), {0, 0, 0});
  auto g = oracle::fn(sz(3), sz(2), {0, 1, 0});
  auto e = fs_equalizer(f, g);
  CHECK(e.object.elements() == std::vector<std::string>{"0", "2"});
  CHECK(e.inclusion.table() == Tuple{0, 2});
  CHECK(is_injective(e.inclusion));
  CHECK(fs_equalizer(f, f).object.size() == 3);
  CHECK_THROWS_AS(fs_equalizer(f, identity_fn(sz(3))), Error);
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 1; b <= 2; ++b)
      for (const auto& ft : oracle::tables(a, b))
        for (const auto& gt : oracle::tables(a, b)) {
          auto eq = fs_equalizer(oracle::fn(sz(a), sz(b), ft), oracle::fn(sz(a), sz(b), gt));
          Tuple expect;
          for (std::size_t x = 0; x < a; ++x)
            if (ft[x] == gt[x]) expect.push_back(x);
          CHECK(eq.inclusion.table() == expect);
        }
}

TEST_CASE("coequalizers") {
  auto pq = FinSetObj({"p", "q"});
  auto f = FinFn(terminal_set(), pq, {0});
  auto g = FinFn(terminal_set(), pq, {1});
  auto q = fs_coequalizer(f, g);
  CHECK(q.object.size() == 1);
  CHECK(is_surjective(q.quotient));
  auto same = fs_coequalizer(f, f);
  CHECK(same.object.size() == 2);
  CHECK(same.quotient.table() == Tuple{0, 1});
  CHECK_THROWS_AS(fs_coequalizer(f, identity_fn(pq)), Error);

  // Naive fixpoint merging as the oracle.
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 1; b <= 3; ++b)
      for (const auto& ft : oracle::tables(a, b))
        for (const auto& gt : oracle::tables(a, b)) {
          Tuple cls(b);
          for (std::size_t i = 0; i < b; ++i) cls[i] = i;
          for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t x = 0; x < a; ++x) {
              const std::size_t lo = std::min(cls[ft[x]], cls[gt[x]]);
              for (auto& c : cls) {
                if ((c == cls[ft[x]] || c == cls[gt[x]]) && c != lo) {
                  c = lo;
                  changed = true;
                }
              }
            }
          }
          std::set<std::size_t> reps(cls.begin(), cls.end());
          auto co = fs_coequalizer(oracle::fn(sz(a), sz(b), ft), oracle::fn(sz(a), sz(b), gt));
          REQUIRE(co.object.size() == reps.size());
          for (std::size_t i = 0; i < b; ++i)
            for (std::size_t j = 0; j < b; ++j) CHECK((co.quotient(i) == co.quotient(j)) == (cls[i] == cls[j]));
          std::size_t k = 0;
          for (auto r : reps) CHECK(co.object.label(k++) == std::to_string(r));
        }
}

TEST_CASE("exponentials: size, evaluation, transpose uniqueness") {
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b) {
      auto e = fs_exponential(sz(a), sz(b));
      std::size_t pow = 1;
      for (std::size_t i = 0; i < a; ++i) pow *= b;
      CHECK(e.object.size() == pow);
    }
  for (std::size_t x = 0; x <= 3; ++x)
    for (std::size_t a = 0; a <= 3; ++a)
      for (std::size_t b = 0; b <= 3; ++b) {
        if (x * a > 4 || b > 2) continue;
        auto e = fs_exponential(sz(a), sz(b));
        auto xa = fs_product(sz(x), sz(a));
        for (const auto& ft : oracle::tables(x * a, b)) {
          auto f = oracle::fn(xa.object, sz(b), ft);
          auto t = e.transpose(f, sz(x));
          CHECK(compose(e.eval, product_map(t, identity_fn(sz(a)))) == f);
        }
      }
  for (std::size_t x = 0; x <= 2; ++x)
    for (std::size_t a = 0; a <= 2; ++a)
      for (std::size_t b = 0; b <= 2; ++b) {
        auto e = fs_exponential(sz(a), sz(b));
        auto xa = fs_product(sz(x), sz(a));
        std::map<Tuple, std::size_t> hits;
        for (const auto& kt : oracle::tables(x, e.object.size())) {
          auto k = oracle::fn(sz(x), e.object, kt);
          hits[compose(e.eval, product_map(k, identity_fn(sz(a)))).table()]++;
        }
        for (const auto& ft : oracle::tables(x * a, b)) CHECK(hits[ft] == 1);
      }
}

TEST_CASE("subobject classifier") {
  auto omega = fs_subobject_classifier();
  CHECK(omega.omega.elements() == std::vector<std::string>{"false", "true"});
  auto xy = FinSetObj({"x", "y"});
  auto chi = omega.classify(FinFn(FinSetObj({"x"}), xy, {0}));
  CHECK(chi.table() == Tuple{1, 0});
  CHECK_THROWS_AS(omega.classify(FinFn(sz(2), sz(1), {0, 0})), Error);

  for (std::size_t a = 0; a <= 4; ++a) {
    std::vector<FinFn> monos;
    for (std::size_t s = 0; s <= a; ++s)
      for (const auto& t : oracle::tables(s, a)) {
        auto m = oracle::fn(sz(s), sz(a), t);
        if (!is_injective(m)) continue;
        monos.push_back(m);
        std::size_t matching = 0;
        for (const auto& ct : oracle::tables(a, 2)) {
          auto c = oracle::fn(sz(a), omega.omega, ct);
          // Pullback of c along true is c⁻¹(true); the square is a pullback
          // exactly when m is a bijection onto it.
          std::set<std::size_t> fibre, image(t.begin(), t.end());
          for (std::size_t i = 0; i < a; ++i)
            if (ct[i] == 1) fibre.insert(i);
          const bool pullback = fibre == image;
          CHECK(is_pullback_square(m, to_terminal(sz(s)), c, omega.truth) == pullback);
          if (pullback) {
            ++matching;
            CHECK(omega.classify(m) == c);
          }
        }
        CHECK(matching == 1);
      }
    // Quotient monos by isomorphisms of domains commuting with the inclusions.
    std::vector<std::size_t> rep(monos.size());
    std::size_t classes = 0;
    for (std::size_t i = 0; i < monos.size(); ++i) {
      rep[i] = i;
      for (std::size_t j = 0; j < i && rep[i] == i; ++j) {
        if (rep[j] != j || monos[i].dom().size() != monos[j].dom().size()) continue;
        const std::size_t n = monos[i].dom().size();
        Tuple perm(n);
        for (std::size_t k = 0; k < n; ++k) perm[k] = k;
        do {
          bool ok = true;
          for (std::size_t k = 0; k < n; ++k) ok = ok && monos[j](perm[k]) == monos[i](k);
          if (ok) rep[i] = j;
        } while (rep[i] == i && std::next_permutation(perm.begin(), perm.end()));
      }
      if (rep[i] == i) ++classes;
    }
    CHECK(classes == (std::size_t{1} << a));
  }
}

TEST_CASE("slice exponentials") {
  auto x = sz(3), y = sz(2);
  auto f1 = FinFn(x, terminal_set(), {0, 0, 0});
  auto g1 = FinFn(y, terminal_set(), {0, 0});
  auto s = fs_slice_exponential(f1, g1);
  auto e = fs_exponential(y, x);
  CHECK(s.object.size() == e.object.size());
  CHECK(s.eval.table() == e.eval.table());

  for (std::size_t a = 1; a <= 2; ++a)
    for (std::size_t nx = 0; nx <= 3; ++nx)
      for (std::size_t ny = 0; ny <= 2; ++ny)
        for (const auto& ft : oracle::tables(nx, a))
          for (const auto& gt : oracle::tables(ny, a)) {
            auto f = oracle::fn(sz(nx), sz(a), ft);
            auto g = oracle::fn(sz(ny), sz(a), gt);
            auto se = fs_slice_exponential(f, g);
            std::size_t expect = 0;
            for (std::size_t b = 0; b < a; ++b) {
              const auto fx = static_cast<std::size_t>(std::count(ft.begin(), ft.end(), b));
              const auto gy = static_cast<std::size_t>(std::count(gt.begin(), gt.end(), b));
              std::size_t p = 1;
              for (std::size_t i = 0; i < gy; ++i) p *= fx;
              expect += p;
            }
            CHECK(se.object.size() == expect);
            if (nx + ny <= 3) CHECK(verify_slice_exponential(se, 3).pass);
          }
  CHECK_THROWS_AS(fs_slice_exponential(f1, FinFn(y, sz(2), {0, 1})), Error);
}

TEST_CASE("universal verification") {
  auto p = fs_product(sz(2), sz(3));
  auto good = fs_verify_universal(candidate(p), 3);
  CHECK(good.pass);
  CHECK(good.instances > 0);

  auto swapped = candidate(fs_product(sz(3), sz(2)));
  swapped.factors = {sz(2), sz(3)};
  swapped.maps = {fs_product(sz(3), sz(2)).second, fs_product(sz(3), sz(2)).first};
  CHECK(fs_verify_universal(swapped, 3).pass);

  auto bad = candidate(p);
  bad.maps[0] = FinFn(p.object, sz(2), Tuple(6, 0));
  auto r = fs_verify_universal(bad, 3);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.witness.empty());

  for (std::size_t a = 1; a <= 2; ++a)
    for (std::size_t b = 1; b <= 2; ++b)
      for (std::size_t n = 0; n <= 4; ++n)
        for (const auto& pt : oracle::tables(n, a))
          for (const auto& qt : oracle::tables(n, b)) {
            UniversalCandidate c{UniversalKind::Product, sz(n),
                                 {oracle::fn(sz(n), sz(a), pt), oracle::fn(sz(n), sz(b), qt)}, {}, {sz(a), sz(b)}};
            CHECK(fs_verify_universal(c, 3).pass == product_universal_by_enumeration(c.maps[0], c.maps[1], 3));
          }

  auto f = oracle::fn(sz(3), sz(2), {0, 1, 1});
  auto g = oracle::fn(sz(3), sz(2), {0, 0, 1});
  CHECK(fs_verify_universal(candidate(fs_sum(sz(2), sz(1))), 3).pass);
  CHECK(fs_verify_universal(candidate(fs_equalizer(f, g), f, g), 3).pass);
  CHECK(fs_verify_universal(candidate(fs_coequalizer(f, g), f, g), 3).pass);
  CHECK(fs_verify_universal(candidate(fs_exponential(sz(2), sz(2))), 3).pass);
  CHECK(fs_verify_universal(candidate(fs_pullback(f, g), f, g), 3).pass);
  CHECK(fs_verify_universal(UniversalCandidate{UniversalKind::Terminal, terminal_set(), {}, {}, {}}, 3).pass);
  CHECK(fs_verify_universal(UniversalCandidate{UniversalKind::Initial, sz(0), {}, {}, {}}, 3).pass);
  CHECK_FALSE(fs_verify_universal(UniversalCandidate{UniversalKind::Terminal, sz(2), {}, {}, {}}, 3).pass);
  CHECK_THROWS_AS(parse_universal_kind("limit"), Error);
  CHECK(parse_universal_kind("pullback-square") == UniversalKind::PullbackSquare);
}

TEST_CASE("mono iff injective, epi iff surjective") {
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      for (const auto& t : oracle::tables(a, b)) {
        auto f = oracle::fn(sz(a), sz(b), t);
        CHECK(is_injective(f) == mono_by_cancellation(f));
        CHECK(is_surjective(f) == epi_by_cancellation(f));
      }
}

TEST_CASE("terminal and initial maps are unique") {
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(oracle::tables(n, 1).size() == 1);
    CHECK(oracle::tables(0, n).size() == 1);
    CHECK(to_terminal(sz(n)).cod() == terminal_set());
    CHECK(from_empty(sz(n)).dom().size() == 0);
  }
}

TEST_CASE("pullbacks and pushouts") {
  auto f = oracle::fn(sz(2), sz(1), {0, 0});
  auto pb = fs_pullback(f, f);
  CHECK(pb.object.size() == 4);
  CHECK(is_pullback_square(pb.first, pb.second, f, f));
  auto g = oracle::fn(sz(2), sz(2), {0, 1});
  auto h = oracle::fn(sz(2), sz(2), {1, 1});
  auto po = fs_pushout(g, h);
  CHECK(po.object.size() == 2);
  CHECK(compose(po.first, g) == compose(po.second, h));
}
