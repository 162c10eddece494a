// Brute-force reference implementations used only by tests. Each one works
// from raw tables and shares no search code with the library.
#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fincat/adjunction.hpp"
#include "fincat/catalog.hpp"
#include "fincat/constructions.hpp"
#include "fincat/category.hpp"
#include "fincat/enumerate.hpp"
#include "fincat/finset.hpp"

namespace oracle {

using fincat::CatRef;
using fincat::FinCat;
using fincat::MorId;
using fincat::ObjId;

using Tuple = std::vector<std::size_t>;

/// Calls visit on every tuple with t[i] < radix[i], lexicographically.
inline void odometer(const std::vector<std::size_t>& radix, const std::function<void(const Tuple&)>& visit) {
  for (auto r : radix)
    if (r == 0) return;
  Tuple t(radix.size(), 0);
  while (true) {
    visit(t);
    std::size_t i = t.size();
    while (true) {
      if (i == 0) return;
      --i;
      if (++t[i] < radix[i]) break;
      t[i] = 0;
    }
  }
}

inline std::size_t comp(const FinCat& c, std::size_t g, std::size_t f) {
  return c.tables().comp[g * c.morphism_count() + f];
}

inline std::vector<std::size_t> homs(const FinCat& c, std::size_t a, std::size_t b) {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < c.morphism_count(); ++f) {
    if (c.tables().src[f].index == a && c.tables().dst[f].index == b) out.push_back(f);
  }
  return out;
}

/// Every functor C → D as (omap, mmap), by filtering all assignments.
inline std::vector<std::pair<Tuple, Tuple>> functors(const FinCat& c, const FinCat& d) {
  std::vector<std::pair<Tuple, Tuple>> out;
  const auto& ct = c.tables();
  const auto& dt = d.tables();
  odometer(std::vector<std::size_t>(c.object_count(), d.object_count()), [&](const Tuple& om) {
    std::vector<std::vector<std::size_t>> choices;
    std::vector<std::size_t> radix;
    for (std::size_t f = 0; f < c.morphism_count(); ++f) {
      choices.push_back(homs(d, om[ct.src[f].index], om[ct.dst[f].index]));
      radix.push_back(choices.back().size());
    }
    auto emit = [&](const Tuple& pick) {
      Tuple mm(pick.size());
      for (std::size_t f = 0; f < mm.size(); ++f) mm[f] = choices[f][pick[f]];
      for (std::size_t a = 0; a < c.object_count(); ++a) {
        if (mm[ct.identity[a].index] != dt.identity[om[a]].index) return;
      }
      for (std::size_t g = 0; g < c.morphism_count(); ++g) {
        for (std::size_t f = 0; f < c.morphism_count(); ++f) {
          const std::size_t gf = comp(c, g, f);
          if (gf != fincat::npos && comp(d, mm[g], mm[f]) != mm[gf]) return;
        }
      }
      out.emplace_back(om, mm);
    };
    if (c.morphism_count() == 0) {
      emit({});
    } else {
      odometer(radix, emit);
    }
  });
  return out;
}

/// Every natural transformation between two functors given by tables.
inline std::vector<Tuple> nattrans(const FinCat& c, const FinCat& d, const std::pair<Tuple, Tuple>& f,
                                   const std::pair<Tuple, Tuple>& g) {
  std::vector<Tuple> out;
  std::vector<std::vector<std::size_t>> choices;
  std::vector<std::size_t> radix;
  for (std::size_t a = 0; a < c.object_count(); ++a) {
    choices.push_back(homs(d, f.first[a], g.first[a]));
    radix.push_back(choices.back().size());
  }
  auto emit = [&](const Tuple& pick) {
    Tuple comps(pick.size());
    for (std::size_t a = 0; a < comps.size(); ++a) comps[a] = choices[a][pick[a]];
    for (std::size_t u = 0; u < c.morphism_count(); ++u) {
      const std::size_t s = c.tables().src[u].index, t = c.tables().dst[u].index;
      if (comp(d, g.second[u], comps[s]) != comp(d, comps[t], f.second[u])) return;
    }
    out.push_back(comps);
  };
  if (c.object_count() == 0) {
    out.push_back({});
  } else {
    odometer(radix, emit);
  }
  return out;
}

/// Matching families of a set-valued diagram, found by testing every tuple.
inline std::set<Tuple> matching_families(const fincat::Diagram& d) {
  std::set<Tuple> out;
  std::vector<std::size_t> radix;
  for (const auto& s : d.objects) radix.push_back(s.size());
  const FinCat& J = *d.shape;
  auto check = [&](const Tuple& x) {
    for (std::size_t f = 0; f < J.morphism_count(); ++f) {
      const auto& t = J.tables();
      if (d.morphisms[f].table()[x[t.src[f].index]] != x[t.dst[f].index]) return;
    }
    out.insert(x);
  };
  if (radix.empty()) {
    out.insert(Tuple{});
  } else {
    odometer(radix, check);
  }
  return out;
}

/// Number of natural transformations between set-valued diagrams on one
/// shape, counted over every family of component tables.
inline std::size_t count_diagram_morphisms(const fincat::Diagram& a, const fincat::Diagram& b);

/// All tables A → B.
inline std::vector<Tuple> tables(std::size_t a, std::size_t b) {
  std::vector<Tuple> out;
  if (a == 0) return {Tuple{}};
  odometer(std::vector<std::size_t>(a, b), [&](const Tuple& t) { out.push_back(t); });
  return out;
}

inline fincat::FinFn fn(const fincat::FinSetObj& a, const fincat::FinSetObj& b, Tuple t) {
  return fincat::FinFn(a, b, std::move(t));
}

inline std::size_t count_diagram_morphisms(const fincat::Diagram& a, const fincat::Diagram& b) {
  const std::size_t n = a.objects.size();
  std::vector<std::vector<Tuple>> choices(n);
  std::vector<std::size_t> radix(n);
  for (std::size_t c = 0; c < n; ++c) {
    choices[c] = tables(a.objects[c].size(), b.objects[c].size());
    radix[c] = choices[c].size();
  }
  const auto& t = a.shape->tables();
  std::size_t count = 0;
  auto check = [&](const Tuple& pick) {
    for (std::size_t f = 0; f < t.src.size(); ++f) {
      const auto& s = choices[t.src[f].index][pick[t.src[f].index]];
      const auto& d = choices[t.dst[f].index][pick[t.dst[f].index]];
      for (std::size_t x = 0; x < s.size(); ++x)
        if (b.morphisms[f].table()[s[x]] != d[a.morphisms[f].table()[x]]) return;
    }
    ++count;
  };
  if (n == 0) {
    check(Tuple{});
  } else {
    odometer(radix, check);
  }
  return count;
}

/// Number of maps m: X → Y with pred(m).
inline std::size_t count_maps(const fincat::FinSetObj& x, const fincat::FinSetObj& y,
                              const std::function<bool(const fincat::FinFn&)>& pred) {
  std::size_t n = 0;
  for (auto& t : tables(x.size(), y.size())) n += pred(fn(x, y, t)) ? 1 : 0;
  return n;
}

/// Whether `apex` with `legs` is a limit of the diagram (omap, mmap): every
/// cone factors exactly once, cones and factorizations found by enumeration.
inline bool is_limit(const FinCat& j, const FinCat& c, const std::pair<Tuple, Tuple>& d, std::size_t apex,
                     const Tuple& legs) {
  auto cones_at = [&](std::size_t x) {
    std::vector<Tuple> out;
    std::vector<std::vector<std::size_t>> choices;
    std::vector<std::size_t> radix;
    for (std::size_t a = 0; a < j.object_count(); ++a) {
      choices.push_back(homs(c, x, d.first[a]));
      radix.push_back(choices.back().size());
    }
    auto emit = [&](const Tuple& pick) {
      Tuple l(pick.size());
      for (std::size_t a = 0; a < l.size(); ++a) l[a] = choices[a][pick[a]];
      for (std::size_t u = 0; u < j.morphism_count(); ++u) {
        if (comp(c, d.second[u], l[j.tables().src[u].index]) != l[j.tables().dst[u].index]) return;
      }
      out.push_back(l);
    };
    if (j.object_count() == 0) {
      out.push_back({});
    } else {
      odometer(radix, emit);
    }
    return out;
  };
  bool is_cone = false;
  for (const auto& l : cones_at(apex)) is_cone = is_cone || l == legs;
  if (!is_cone) return false;
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    for (const auto& l : cones_at(x)) {
      std::size_t n = 0;
      for (auto m : homs(c, x, apex)) {
        bool ok = true;
        for (std::size_t a = 0; a < legs.size(); ++a) ok = ok && comp(c, legs[a], m) == l[a];
        n += ok ? 1 : 0;
      }
      if (n != 1) return false;
    }
  }
  return true;
}

/// Whether some limit of the diagram exists, by trying every apex and leg
/// tuple.
inline bool has_limit(const FinCat& j, const FinCat& c, const std::pair<Tuple, Tuple>& d) {
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    std::vector<std::size_t> radix;
    std::vector<std::vector<std::size_t>> choices;
    for (std::size_t a = 0; a < j.object_count(); ++a) {
      choices.push_back(homs(c, x, d.first[a]));
      radix.push_back(choices.back().size());
    }
    bool found = false;
    auto test = [&](const Tuple& pick) {
      if (found) return;
      Tuple l(pick.size());
      for (std::size_t a = 0; a < l.size(); ++a) l[a] = choices[a][pick[a]];
      found = is_limit(j, c, d, x, l);
    };
    if (j.object_count() == 0) {
      test({});
    } else {
      odometer(radix, test);
    }
    if (found) return true;
  }
  return false;
}

/// Finite completeness by brute force: terminal object, binary products,
/// equalizers of parallel pairs, and |Mor C|-fold powers.
inline bool complete(const CatRef& c) {
  const FinCat& C = *c;
  auto all = [&](const CatRef& shape) {
    for (const auto& d : functors(*shape, C)) {
      if (!has_limit(*shape, C, d)) return false;
    }
    return true;
  };
  if (!all(fincat::empty_category()) || !all(fincat::discrete_category(2)) || !all(fincat::parallel_pair())) {
    return false;
  }
  auto arrows = fincat::discrete_category(C.morphism_count());
  for (std::size_t y = 0; y < C.object_count(); ++y) {
    std::pair<Tuple, Tuple> d{Tuple(C.morphism_count(), y), Tuple(C.morphism_count(), C.identity(ObjId{y}).index)};
    if (!has_limit(*arrows, C, d)) return false;
  }
  return true;
}

inline bool is_preorder(const FinCat& c) {
  for (std::size_t a = 0; a < c.object_count(); ++a)
    for (std::size_t b = 0; b < c.object_count(); ++b)
      if (homs(c, a, b).size() > 1) return false;
  return true;
}

/// Category laws checked straight from the tables.
inline bool lawful(const FinCat& c) {
  const auto& t = c.tables();
  const std::size_t m = c.morphism_count();
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t f = 0; f < m; ++f) {
      const bool composable = t.dst[f] == t.src[g];
      const std::size_t gf = comp(c, g, f);
      if (composable != (gf != fincat::npos)) return false;
      if (composable && (t.src[gf] != t.src[f] || t.dst[gf] != t.dst[g])) return false;
    }
  }
  for (std::size_t a = 0; a < c.object_count(); ++a) {
    const std::size_t id = t.identity[a].index;
    for (std::size_t f = 0; f < m; ++f) {
      if (t.dst[f].index == a && comp(c, id, f) != f) return false;
      if (t.src[f].index == a && comp(c, f, id) != f) return false;
    }
  }
  for (std::size_t h = 0; h < m; ++h)
    for (std::size_t g = 0; g < m; ++g)
      for (std::size_t f = 0; f < m; ++f) {
        const std::size_t gf = comp(c, g, f), hg = comp(c, h, g);
        if (gf == fincat::npos || hg == fincat::npos) continue;
        if (comp(c, h, gf) != comp(c, hg, f)) return false;
      }
  return true;
}

/// Handcrafted corpus: posets, monoids and small shapes.
inline std::vector<std::pair<std::string, CatRef>> corpus() {
  using namespace fincat;
  return {
      {"unit", unit_category()},
      {"empty", empty_category()},
      {"discrete2", discrete_category(2)},
      {"walking-arrow", walking_arrow()},
      {"chain3", chain_category(3)},
      {"parallel-pair", parallel_pair()},
      {"iso-pair", iso_pair()},
      {"cospan", preorder_category(3, {{0, 2}, {1, 2}})},
      {"span", preorder_category(3, {{0, 1}, {0, 2}})},
      {"diamond", preorder_category(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})},
      {"z2", monoid_category({{0, 1}, {1, 0}})},
      {"z3", monoid_category({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}})},
      {"idempotent", monoid_category({{0, 1}, {1, 1}})},
      {"left-zero3", monoid_category({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}})},
  };
}

/// Every category with ≤ 2 objects and ≤ 4 morphisms plus the handcrafted
/// corpus.
inline std::vector<CatRef> generated_corpus() {
  std::vector<CatRef> out = fincat::enumerate_categories(2, 4, false);
  for (auto& [name, c] : corpus()) out.push_back(c);
  return out;
}

/// Triangle identities read straight off the tables.
inline bool triangles(const fincat::AdjUnitCounit& a) {
  const FinCat& A = a.left.dom();
  const FinCat& B = a.left.cod();
  for (std::size_t x = 0; x < A.object_count(); ++x) {
    const std::size_t fx = a.left.omap()[x].index;
    const std::size_t lhs = comp(B, a.counit.components[fx].index, a.left.mmap()[a.unit.components[x].index].index);
    if (lhs != B.tables().identity[fx].index) return false;
  }
  for (std::size_t y = 0; y < B.object_count(); ++y) {
    const std::size_t gy = a.right.omap()[y].index;
    const std::size_t lhs = comp(A, a.right.mmap()[a.counit.components[y].index].index, a.unit.components[gy].index);
    if (lhs != A.tables().identity[gy].index) return false;
  }
  return true;
}

/// Every unit-counit adjunction between pairs of small corpus categories,
/// found by trying all F, G, η and ε and keeping those whose triangles hold.
inline std::vector<fincat::AdjUnitCounit> corpus_adjunctions() {
  using namespace fincat;
  std::vector<CatRef> cats = {unit_category(),  discrete_category(2), walking_arrow(),
                              chain_category(3), iso_pair(),           monoid_category({{0, 1}, {1, 1}})};
  std::vector<AdjUnitCounit> out;
  for (const auto& a : cats) {
    for (const auto& b : cats) {
      for (const auto& f : enumerate_functors(a, b)) {
        for (const auto& g : enumerate_functors(b, a)) {
          auto units = enumerate_nattrans(identity_functor(a), compose_functors(g, f));
          auto counits = enumerate_nattrans(compose_functors(f, g), identity_functor(b));
          for (const auto& eta : units)
            for (const auto& eps : counits) {
              AdjUnitCounit adj{f, g, eta, eps};
              if (triangles(adj)) out.push_back(adj);
            }
        }
      }
    }
  }
  return out;
}

/// Uniformly chosen diagrams on shapes with ≤ 3 objects and ≤ 4 morphisms
/// (one shape per isomorphism class), sets of size ≤ max_size.
inline std::vector<fincat::Diagram> random_diagrams(std::size_t count, std::uint32_t seed, std::size_t max_size = 3) {
  auto shapes = fincat::enumerate_categories(3, 4, true);
  std::vector<std::vector<fincat::Diagram>> pool(shapes.size());
  std::mt19937 gen(seed);
  std::vector<fincat::Diagram> out;
  while (out.size() < count) {
    const std::size_t s = gen() % shapes.size();
    if (pool[s].empty()) pool[s] = fincat::enumerate_diagrams(shapes[s], max_size);
    out.push_back(pool[s][gen() % pool[s].size()]);
  }
  return out;
}

/// Number of classes of Σ_c D(c) under x ~ D(f)(x), by repeated relabelling.
inline std::size_t colimit_classes(const fincat::Diagram& d) {
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (const auto& s : d.objects) {
    offset.push_back(total);
    total += s.size();
  }
  std::vector<std::size_t> cls(total);
  for (std::size_t i = 0; i < total; ++i) cls[i] = i;
  const auto& t = d.shape->tables();
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t f = 0; f < t.src.size(); ++f) {
      const std::size_t s = t.src[f].index, e = t.dst[f].index;
      for (std::size_t x = 0; x < d.objects[s].size(); ++x) {
        const std::size_t a = cls[offset[s] + x], b = cls[offset[e] + d.morphisms[f].table()[x]];
        if (a == b) continue;
        const std::size_t lo = a < b ? a : b, hi = a < b ? b : a;
        for (auto& c : cls)
          if (c == hi) c = lo;
        changed = true;
      }
    }
  }
  return std::set<std::size_t>(cls.begin(), cls.end()).size();
}

}  // namespace oracle
