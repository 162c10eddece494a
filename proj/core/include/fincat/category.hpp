#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fincat/error.hpp"

namespace fincat {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

/// Index of an object, meaningful only relative to one FinCat.
struct ObjId {
  std::size_t index = 0;
  friend auto operator<=>(const ObjId&, const ObjId&) = default;
};

/// Index of a morphism, meaningful only relative to one FinCat.
struct MorId {
  std::size_t index = 0;
  friend auto operator<=>(const MorId&, const MorId&) = default;
};

/// Raw index tables of a finite category.
///
/// `comp[g * morphism_count + f]` holds the index of g∘f ("f then g") or
/// npos when the pair is not composable.
struct CategoryTables {
  std::vector<std::string> object_names;
  std::vector<std::string> morphism_names;
  std::vector<ObjId> src;
  std::vector<ObjId> dst;
  std::vector<MorId> identity;
  std::vector<std::size_t> comp;

  friend bool operator==(const CategoryTables&, const CategoryTables&) = default;
};

class FinCat;
using CatRef = std::shared_ptr<const FinCat>;

/// Set on categories built by product_category so that currying can recover
/// the factors. Not part of structural equality.
struct ProductFactors {
  CatRef left;
  CatRef right;
};

/// A finite category given by explicit tables. Construction bounds-checks
/// every index; the category laws are checked separately by validate().
class FinCat {
 public:
  explicit FinCat(CategoryTables tables, std::shared_ptr<const ProductFactors> factors = nullptr);

  std::size_t object_count() const { return tables_.object_names.size(); }
  std::size_t morphism_count() const { return tables_.src.size(); }

  ObjId object(std::size_t index) const;
  MorId morphism(std::size_t index) const;

  ObjId src(MorId f) const { return tables_.src[f.index]; }
  ObjId dst(MorId f) const { return tables_.dst[f.index]; }
  MorId identity(ObjId a) const { return tables_.identity[a.index]; }
  bool is_identity(MorId f) const { return identity(src(f)) == f; }

  std::optional<MorId> try_compose(MorId g, MorId f) const;
  /// g∘f; throws DomainMismatch when the table has no entry.
  MorId compose(MorId g, MorId f) const;

  /// Morphisms a→b in ascending index order.
  std::span<const MorId> hom(ObjId a, ObjId b) const {
    return homs_[a.index * object_count() + b.index];
  }
  /// Position of f inside hom(src f, dst f).
  std::size_t hom_position(MorId f) const { return hom_position_[f.index]; }

  const std::string& object_name(ObjId a) const { return tables_.object_names[a.index]; }
  const std::string& morphism_name(MorId f) const { return tables_.morphism_names[f.index]; }
  std::optional<ObjId> find_object(std::string_view name) const;
  std::optional<MorId> find_morphism(std::string_view name) const;

  const CategoryTables& tables() const { return tables_; }
  const ProductFactors* product_factors() const { return factors_.get(); }

  auto objects() const { return index_range<ObjId>(object_count()); }
  auto morphisms() const { return index_range<MorId>(morphism_count()); }

  friend bool operator==(const FinCat& a, const FinCat& b) { return a.tables_ == b.tables_; }

 private:
  template <class Id>
  static std::vector<Id> index_range(std::size_t n) {
    std::vector<Id> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i].index = i;
    return out;
  }

  CategoryTables tables_;
  std::shared_ptr<const ProductFactors> factors_;
  std::vector<std::vector<MorId>> homs_;
  std::vector<std::size_t> hom_position_;
};

CatRef make_category(CategoryTables tables);

/// Pointer equality first, then structural.
bool same_category(const CatRef& a, const CatRef& b);

class Functor {
 public:
  Functor(CatRef dom, CatRef cod, std::vector<ObjId> omap, std::vector<MorId> mmap);

  const FinCat& dom() const { return *dom_; }
  const FinCat& cod() const { return *cod_; }
  const CatRef& dom_ref() const { return dom_; }
  const CatRef& cod_ref() const { return cod_; }

  ObjId operator()(ObjId a) const { return omap_[a.index]; }
  MorId operator()(MorId f) const { return mmap_[f.index]; }

  const std::vector<ObjId>& omap() const { return omap_; }
  const std::vector<MorId>& mmap() const { return mmap_; }

  friend bool operator==(const Functor& a, const Functor& b);

 private:
  CatRef dom_;
  CatRef cod_;
  std::vector<ObjId> omap_;
  std::vector<MorId> mmap_;
};

/// A family of codomain morphisms indexed by the objects of the domain.
struct NatTrans {
  Functor source;
  Functor target;
  std::vector<MorId> components;

  MorId operator()(ObjId a) const { return components[a.index]; }
  friend bool operator==(const NatTrans&, const NatTrans&) = default;
};

enum class Law {
  Ok,
  IdentityLaw,
  Associativity,
  Typing,
  Composability,
  FunctorTyping,
  FunctorIdentity,
  FunctorComposition,
  ComponentTyping,
  Naturality,
  Bijection,
  Triangle,
  Universality,
};

std::string_view to_string(Law law);

/// Result of a law check: Ok, or the first violated law with a witness tuple
/// of indices (morphisms, objects, or positions depending on the law).
struct Validation {
  Law law = Law::Ok;
  std::vector<std::size_t> witness;
  std::string detail;

  bool ok() const { return law == Law::Ok; }
  explicit operator bool() const { return ok(); }

  static Validation pass() { return {}; }
  static Validation fail(Law law, std::vector<std::size_t> witness, std::string detail) {
    return {law, std::move(witness), std::move(detail)};
  }
};

Validation validate(const FinCat& c);
Validation validate(const Functor& f);
Validation validate(const NatTrans& n);

FinCat opposite_category(const FinCat& c);
CatRef opposite(const CatRef& c);
Functor opposite_functor(const Functor& f);
/// N: F ⇒ G becomes N^op: G^op ⇒ F^op with the same component table.
NatTrans opposite_nattrans(const NatTrans& n);

Functor identity_functor(const CatRef& c);
/// second ∘ first; throws DomainMismatch unless cod(first) = dom(second).
Functor compose_functors(const Functor& second, const Functor& first);

NatTrans identity_nattrans(const Functor& f);
/// (after ∘ before)_a = after_a ∘ before_a.
NatTrans vertical_compose(const NatTrans& after, const NatTrans& before);
/// H∘α with components H(α_a).
NatTrans whisker_left(const Functor& h, const NatTrans& alpha);
/// α∘K with components α_{K a}.
NatTrans whisker_right(const NatTrans& alpha, const Functor& k);

}  // namespace fincat
