#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

/// C×D with lexicographic pair indices and its two projections.
struct ProductCategory {
  CatRef category;
  Functor first;
  Functor second;

  ObjId pair(ObjId c, ObjId d) const {
    return ObjId{c.index * second.cod().object_count() + d.index};
  }
  MorId pair(MorId f, MorId g) const {
    return MorId{f.index * second.cod().morphism_count() + g.index};
  }
};

ProductCategory product_category(const CatRef& c, const CatRef& d);

/// Δ: C → C×C; `square` must be product_category(C, C).
Functor diagonal_functor(const ProductCategory& square);

struct CommaObject {
  ObjId left;
  ObjId right;
  MorId arrow;  // F(left) → G(right) in the common codomain
  friend bool operator==(const CommaObject&, const CommaObject&) = default;
};

/// (F ↓ G): objects are arrows F c → G d, morphisms commuting squares (u, v).
struct CommaCategory {
  CatRef category;
  Functor left_projection;
  Functor right_projection;
  std::vector<CommaObject> objects;
};

CommaCategory comma_category(const Functor& f, const Functor& g);

/// All functors C→D, lexicographic in (omap, mmap).
std::vector<Functor> enumerate_functors(const CatRef& c, const CatRef& d);

/// All natural transformations F ⇒ G, lexicographic in the component table.
std::vector<NatTrans> enumerate_nattrans(const Functor& f, const Functor& g);

/// [C, D]: functors as objects, natural transformations as morphisms.
class FunctorCategory {
 public:
  FunctorCategory(CatRef source, CatRef target);

  const CatRef& category() const { return category_; }
  const CatRef& source() const { return source_; }
  const CatRef& target() const { return target_; }

  const Functor& functor(ObjId a) const { return functors_[a.index]; }
  const NatTrans& transformation(MorId f) const { return transformations_[f.index]; }
  const std::vector<Functor>& functors() const { return functors_; }
  const std::vector<NatTrans>& transformations() const { return transformations_; }

  std::optional<ObjId> find(const Functor& f) const;
  std::optional<MorId> find(const NatTrans& n) const;

 private:
  CatRef source_;
  CatRef target_;
  CatRef category_;
  std::vector<Functor> functors_;
  std::vector<NatTrans> transformations_;
  std::map<std::pair<std::vector<ObjId>, std::vector<MorId>>, std::size_t> functor_index_;
  std::map<std::tuple<std::size_t, std::size_t, std::vector<MorId>>, std::size_t> nat_index_;
};

FunctorCategory functor_category(const CatRef& c, const CatRef& d);

/// F: C×D → E as C → [D, E].
struct CurriedFunctor {
  Functor functor;
  FunctorCategory exponent;
};

/// Throws NotAProductDomain unless dom(F) was built by product_category.
CurriedFunctor curry_functor(const Functor& f);

/// Inverse of curry_functor. `exponent` must be the codomain of `g`.
Functor uncurry_functor(const Functor& g, const FunctorCategory& exponent);

struct CatUniversalWitness {
  CatRef unit;
  CatRef empty;
  std::size_t functors_from_empty = 0;
  std::size_t functors_to_unit = 0;
};

/// Terminal (one object, one morphism) and initial (empty) categories, with
/// the number of functors ∅→C and C→1 counted by enumeration.
CatUniversalWitness cat_terminal_initial_witness(const CatRef& c);

}  // namespace fincat
