#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

/// n×n matrix of hom-set sizes, row-major: counts[a * n + b] = |Hom(a, b)|.
struct HomCounts {
  std::size_t objects = 0;
  std::vector<std::size_t> counts;

  std::size_t at(std::size_t a, std::size_t b) const { return counts[a * objects + b]; }
  std::size_t total() const;
  friend bool operator==(const HomCounts&, const HomCounts&) = default;
};

/// All hom-count matrices on n objects with every endo-hom nonempty, total at
/// most `max_morphisms`, and Hom(a,b), Hom(b,c) nonempty ⇒ Hom(a,c) nonempty.
std::vector<HomCounts> hom_count_matrices(std::size_t n, std::size_t max_morphisms);

/// Calls `visit` on every category realising `counts`, with morphisms laid out
/// block by block in (src, dst) order and the identity first in each endo
/// block. Distinct calls receive distinct composition tables. Returning false
/// from `visit` stops the enumeration.
void for_each_category(const HomCounts& counts, const std::function<bool(const CatRef&)>& visit);

/// Canonical representative of the isomorphism class of a category in the
/// block layout above. Object and morphism names are regenerated.
CategoryTables canonical_tables(const FinCat& c);

/// Every category with at most the given numbers of objects and morphisms.
/// With `up_to_iso`, one representative per isomorphism class (canonical
/// tables); otherwise every labelled table in block layout.
std::vector<CatRef> enumerate_categories(std::size_t max_objects, std::size_t max_morphisms,
                                         bool up_to_iso);

}  // namespace fincat
