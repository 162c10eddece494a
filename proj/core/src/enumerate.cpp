#include "fincat/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <tuple>
#include <set>
#include <string>

namespace fincat {

std::size_t HomCounts::total() const { return std::accumulate(counts.begin(), counts.end(), std::size_t{0}); }

std::vector<HomCounts> hom_count_matrices(std::size_t n, std::size_t max_morphisms) {
  std::vector<HomCounts> out;
  if (n > max_morphisms) return out;
  HomCounts h{n, std::vector<std::size_t>(n * n, 0)};
  auto closed = [&] {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (h.at(a, b) > 0 && h.at(b, c) > 0 && h.at(a, c) == 0) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t cell, std::size_t used) -> void {
    if (cell == n * n) {
      if (closed()) out.push_back(h);
      return;
    }
    const bool diagonal = cell / n == cell % n;
    for (std::size_t k = diagonal ? 1 : 0; used + k <= max_morphisms; ++k) {
      h.counts[cell] = k;
      self(self, cell + 1, used + k);
    }
    h.counts[cell] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

namespace {

CategoryTables block_layout(const HomCounts& h) {
  const std::size_t n = h.objects;
  CategoryTables t;
  t.identity.resize(n);
  for (std::size_t a = 0; a < n; ++a) t.object_names.push_back(std::to_string(a));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t k = 0; k < h.at(a, b); ++k) {
        const std::size_t idx = t.src.size();
        if (a == b && k == 0) {
          t.identity[a] = MorId{idx};
          t.morphism_names.push_back("id_" + std::to_string(a));
        } else {
          t.morphism_names.push_back("m" + std::to_string(idx));
        }
        t.src.push_back(ObjId{a});
        t.dst.push_back(ObjId{b});
      }
    }
  }
  return t;
}

}  // namespace

void for_each_category(const HomCounts& h, const std::function<bool(const CatRef&)>& visit) {
  CategoryTables t = block_layout(h);
  const std::size_t m = t.src.size();
  t.comp.assign(m * m, npos);
  auto is_id = [&](std::size_t f) { return t.identity[t.src[f].index].index == f; };

  // Cells fixed by the identity laws are filled in directly; the rest are
  // searched over in (g, f) order.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t f = 0; f < m; ++f) {
      if (t.dst[f] != t.src[g]) continue;
      if (is_id(g)) t.comp[g * m + f] = f;
      else if (is_id(f)) t.comp[g * m + f] = g;
      else cells.emplace_back(g, f);
    }
  }
  std::vector<std::vector<std::size_t>> homs(h.objects * h.objects);
  for (std::size_t f = 0; f < m; ++f) homs[t.src[f].index * h.objects + t.dst[f].index].push_back(f);

  auto c = [&](std::size_t g, std::size_t f) { return t.comp[g * m + f]; };
  auto associative_so_far = [&] {
    for (std::size_t f = 0; f < m; ++f) {
      for (std::size_t g = 0; g < m; ++g) {
        const std::size_t gf = c(g, f);
        if (gf == npos) continue;
        for (std::size_t k = 0; k < m; ++k) {
          const std::size_t kg = c(k, g);
          if (kg == npos) continue;
          const std::size_t l = c(k, gf), r = c(kg, f);
          if (l != npos && r != npos && l != r) return false;
        }
      }
    }
    return true;
  };

  bool stop = false;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (stop) return;
    if (i == cells.size()) {
      if (!visit(std::make_shared<const FinCat>(t))) stop = true;
      return;
    }
    auto [g, f] = cells[i];
    for (std::size_t cand : homs[t.src[f].index * h.objects + t.dst[g].index]) {
      t.comp[g * m + f] = cand;
      if (associative_so_far()) self(self, i + 1);
      if (stop) break;
    }
    t.comp[g * m + f] = npos;
  };
  rec(rec, 0);
}

CategoryTables canonical_tables(const FinCat& cat) {
  const std::size_t n = cat.object_count();
  const std::size_t m = cat.morphism_count();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  std::optional<CategoryTables> best;
  // For a fixed object permutation, enumerate relabellings inside each hom
  // block (identities stay first).
  do {
    // new object perm[a] is old object a; build inverse.
    std::vector<std::size_t> inv(n);
    for (std::size_t a = 0; a < n; ++a) inv[perm[a]] = a;
    HomCounts h{n, std::vector<std::size_t>(n * n)};
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) h.counts[a * n + b] = cat.hom(ObjId{inv[a]}, ObjId{inv[b]}).size();

    // Per block: list of old morphisms that are permutable.
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::vector<std::size_t> blk;
        for (auto f : cat.hom(ObjId{inv[a]}, ObjId{inv[b]})) {
          if (!cat.is_identity(f)) blk.push_back(f.index);
        }
        blocks.push_back(std::move(blk));
      }
    }
    auto emit = [&] {
      CategoryTables t = block_layout(h);
      std::vector<std::size_t> new_of_old(m, npos);
      std::size_t next = 0;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (a == b) new_of_old[cat.identity(ObjId{inv[a]}).index] = next++;
          for (std::size_t f : blocks[a * n + b]) new_of_old[f] = next++;
        }
      }
      t.comp.assign(m * m, npos);
      for (std::size_t g = 0; g < m; ++g)
        for (std::size_t f = 0; f < m; ++f)
          if (auto gf = cat.try_compose(MorId{g}, MorId{f}))
            t.comp[new_of_old[g] * m + new_of_old[f]] = new_of_old[gf->index];
      if (!best || std::tie(t.src, t.comp) < std::tie(best->src, best->comp)) best = std::move(t);
    };
    auto rec = [&](auto&& self, std::size_t blk) -> void {
      if (blk == blocks.size()) {
        emit();
        return;
      }
      auto& b = blocks[blk];
      std::sort(b.begin(), b.end());
      do {
        self(self, blk + 1);
      } while (std::next_permutation(b.begin(), b.end()));
    };
    rec(rec, 0);
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (!best) return block_layout(HomCounts{0, {}});
  return *best;
}

std::vector<CatRef> enumerate_categories(std::size_t max_objects, std::size_t max_morphisms, bool up_to_iso) {
  std::vector<CatRef> out;
  std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> seen;
  for (std::size_t n = 0; n <= max_objects; ++n) {
    for (const auto& h : hom_count_matrices(n, max_morphisms)) {
      for_each_category(h, [&](const CatRef& c) {
        if (!up_to_iso) {
          out.push_back(c);
          return true;
        }
        CategoryTables canon = canonical_tables(*c);
        std::vector<std::size_t> shape;
        shape.push_back(canon.object_names.size());
        for (auto s : canon.src) shape.push_back(s.index);
        for (auto d : canon.dst) shape.push_back(d.index);
        if (seen.insert({shape, canon.comp}).second) out.push_back(make_category(std::move(canon)));
        return true;
      });
    }
  }
  return out;
}

}  // namespace fincat
