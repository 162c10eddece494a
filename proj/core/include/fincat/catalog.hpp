#pragma once

#include <cstddef>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

/// One object, one morphism.
CatRef unit_category();
CatRef empty_category();
/// n objects, identities only.
CatRef discrete_category(std::size_t n);
/// 0 → 1 with morphisms id_0, f, id_1 (in that index order).
CatRef walking_arrow();
/// The total order 0 < 1 < ... < n-1 as a thin category.
CatRef chain_category(std::size_t n);
/// Two parallel arrows f, g: 0 → 1.
CatRef parallel_pair();
/// Two objects joined by mutually inverse arrows.
CatRef iso_pair();

/// Thin category from a relation; the reflexive-transitive closure is taken.
/// Morphisms are the related pairs (a, b) in lexicographic order.
CatRef preorder_category(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& relation);

/// One-object category; `table[x][y]` is the product x∘y and element 0 must
/// be the unit. Laws are not checked here.
CatRef monoid_category(const std::vector<std::vector<std::size_t>>& table);

/// 1 → C picking c.
Functor object_functor(const CatRef& c, ObjId a);
/// J → C sending everything to c and its identity.
Functor constant_functor(const CatRef& shape, const CatRef& c, ObjId a);
/// C → 1.
Functor terminal_functor(const CatRef& c);

}  // namespace fincat
