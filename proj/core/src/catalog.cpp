#include "fincat/catalog.hpp"

#include <string>

namespace fincat {

namespace {

std::string num(std::size_t i) { return std::to_string(i); }

}  // namespace

CatRef unit_category() {
  CategoryTables t;
  t.object_names = {"*"};
  t.morphism_names = {"id_*"};
  t.src = {ObjId{0}};
  t.dst = {ObjId{0}};
  t.identity = {MorId{0}};
  t.comp = {0};
  return make_category(std::move(t));
}

CatRef empty_category() { return make_category(CategoryTables{}); }

CatRef discrete_category(std::size_t n) {
  CategoryTables t;
  t.comp.assign(n * n, npos);
  for (std::size_t a = 0; a < n; ++a) {
    t.object_names.push_back(num(a));
    t.morphism_names.push_back("id_" + num(a));
    t.src.push_back(ObjId{a});
    t.dst.push_back(ObjId{a});
    t.identity.push_back(MorId{a});
    t.comp[a * n + a] = a;
  }
  return make_category(std::move(t));
}

CatRef preorder_category(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& relation) {
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) le[a][a] = true;
  for (auto [a, b] : relation) {
    if (a >= n || b >= n) throw Error(ErrorCode::OutOfRange, "relation mentions a missing object");
    le[a][b] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (le[a][k] && le[k][b]) le[a][b] = true;

  CategoryTables t;
  std::vector<std::vector<std::size_t>> id(n, std::vector<std::size_t>(n, npos));
  for (std::size_t a = 0; a < n; ++a) t.object_names.push_back(num(a));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!le[a][b]) continue;
      id[a][b] = t.src.size();
      t.src.push_back(ObjId{a});
      t.dst.push_back(ObjId{b});
      t.morphism_names.push_back(a == b ? "id_" + num(a) : "le_" + num(a) + "_" + num(b));
    }
  }
  for (std::size_t a = 0; a < n; ++a) t.identity.push_back(MorId{id[a][a]});
  const std::size_t m = t.src.size();
  t.comp.assign(m * m, npos);
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t f = 0; f < m; ++f) {
      if (t.dst[f] != t.src[g]) continue;
      t.comp[g * m + f] = id[t.src[f].index][t.dst[g].index];
    }
  }
  return make_category(std::move(t));
}

CatRef walking_arrow() {
  CategoryTables t;
  t.object_names = {"0", "1"};
  t.morphism_names = {"id_0", "f", "id_1"};
  t.src = {ObjId{0}, ObjId{0}, ObjId{1}};
  t.dst = {ObjId{0}, ObjId{1}, ObjId{1}};
  t.identity = {MorId{0}, MorId{2}};
  t.comp.assign(9, npos);
  auto set = [&](std::size_t g, std::size_t f, std::size_t h) { t.comp[g * 3 + f] = h; };
  set(0, 0, 0);
  set(1, 0, 1);
  set(2, 1, 1);
  set(2, 2, 2);
  return make_category(std::move(t));
}

CatRef chain_category(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t a = 0; a + 1 < n; ++a) rel.emplace_back(a, a + 1);
  return preorder_category(n, rel);
}

CatRef parallel_pair() {
  CategoryTables t;
  t.object_names = {"0", "1"};
  t.morphism_names = {"id_0", "f", "g", "id_1"};
  t.src = {ObjId{0}, ObjId{0}, ObjId{0}, ObjId{1}};
  t.dst = {ObjId{0}, ObjId{1}, ObjId{1}, ObjId{1}};
  t.identity = {MorId{0}, MorId{3}};
  t.comp.assign(16, npos);
  auto set = [&](std::size_t g, std::size_t f, std::size_t h) { t.comp[g * 4 + f] = h; };
  set(0, 0, 0);
  set(1, 0, 1);
  set(2, 0, 2);
  set(3, 1, 1);
  set(3, 2, 2);
  set(3, 3, 3);
  return make_category(std::move(t));
}

CatRef iso_pair() {
  CategoryTables t;
  t.object_names = {"0", "1"};
  t.morphism_names = {"id_0", "u", "v", "id_1"};
  t.src = {ObjId{0}, ObjId{0}, ObjId{1}, ObjId{1}};
  t.dst = {ObjId{0}, ObjId{1}, ObjId{0}, ObjId{1}};
  t.identity = {MorId{0}, MorId{3}};
  t.comp.assign(16, npos);
  auto set = [&](std::size_t g, std::size_t f, std::size_t h) { t.comp[g * 4 + f] = h; };
  set(0, 0, 0);
  set(1, 0, 1);
  set(0, 2, 2);
  set(2, 1, 0);
  set(1, 2, 3);
  set(3, 1, 1);
  set(2, 3, 2);
  set(3, 3, 3);
  return make_category(std::move(t));
}

CatRef monoid_category(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t m = table.size();
  if (m == 0) throw Error(ErrorCode::InvalidInput, "a monoid has at least its unit");
  CategoryTables t;
  t.object_names = {"*"};
  t.identity = {MorId{0}};
  t.comp.assign(m * m, npos);
  for (std::size_t x = 0; x < m; ++x) {
    if (table[x].size() != m) throw Error(ErrorCode::OutOfRange, "monoid table must be square");
    t.morphism_names.push_back(x == 0 ? "e" : "m" + num(x));
    t.src.push_back(ObjId{0});
    t.dst.push_back(ObjId{0});
    for (std::size_t y = 0; y < m; ++y) t.comp[x * m + y] = table[x][y];
  }
  return make_category(std::move(t));
}

Functor object_functor(const CatRef& c, ObjId a) {
  return Functor(unit_category(), c, {a}, {c->identity(a)});
}

Functor constant_functor(const CatRef& shape, const CatRef& c, ObjId a) {
  return Functor(shape, c, std::vector<ObjId>(shape->object_count(), a),
                 std::vector<MorId>(shape->morphism_count(), c->identity(a)));
}

Functor terminal_functor(const CatRef& c) {
  return Functor(c, unit_category(), std::vector<ObjId>(c->object_count(), ObjId{0}),
                 std::vector<MorId>(c->morphism_count(), MorId{0}));
}

}  // namespace fincat
