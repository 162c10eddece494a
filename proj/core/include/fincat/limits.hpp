#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/finset.hpp"

namespace fincat {

/// A cone over a diagram D: J → C: an apex and one leg apex → D(j) per shape
/// object. The same type holds cocones (legs D(j) → apex).
struct Cone {
  ObjId apex;
  std::vector<MorId> legs;
  friend bool operator==(const Cone&, const Cone&) = default;
};

bool is_cone(const Functor& diagram, const Cone& cone);
bool is_cocone(const Functor& diagram, const Cone& cocone);

/// Every cone over the diagram, ordered by apex index, then leg tuples
/// lexicographically.
std::vector<Cone> enumerate_cones(const Functor& diagram);

/// Morphisms m: source.apex → target.apex with target.leg_j ∘ m = source.leg_j.
std::vector<MorId> cone_factorizations(const Functor& diagram, const Cone& target, const Cone& source);

/// The least (apex index, then legs) universal cone, or nullopt.
std::optional<Cone> limit_by_search(const Functor& diagram);
/// Limit of the opposite diagram, read back as a cocone in C.
std::optional<Cone> colimit_by_search(const Functor& diagram);

/// The unique comparison a.apex → b.apex between two universal cones when it
/// is an isomorphism.
std::optional<MorId> cone_isomorphism(const Functor& diagram, const Cone& a, const Cone& b);

/// Discrete category with one object per morphism of C.
CatRef arrow_index(const FinCat& c);

/// Limit of a set-valued diagram, built as the equalizer of the two canonical
/// maps Π_c D(c) ⇉ Π_f D(dst f).
struct FinSetLimit {
  FinSetObj apex;
  std::vector<FinFn> legs;
  /// The matching families, in apex order.
  std::vector<std::vector<std::size_t>> families;

  /// Unique X → apex through which the given cone (legs X → D(c)) factors.
  FinFn mediate(const FinSetObj& x, const std::vector<FinFn>& cone) const;
};

FinSetLimit finset_limit(const Diagram& d);

/// The two parallel maps Π_c D(c) ⇉ Π_f D(dst f), materialised. Only
/// sensible for small diagrams.
std::pair<FinFn, FinFn> finset_limit_maps(const Diagram& d);

/// Colimit as the coequalizer of Σ_f D(src f) ⇉ Σ_c D(c). Elements of the
/// sum are labelled "<object index>:<label>".
struct FinSetColimit {
  FinSetObj apex;
  std::vector<FinFn> legs;

  /// Unique apex → X induced by a cocone (legs D(c) → X).
  FinFn mediate(const std::vector<FinFn>& cocone, const FinSetObj& x) const;
};

FinSetColimit finset_colimit(const Diagram& d);

struct HomPowerCheck {
  ObjId x;
  ObjId y;
  std::size_t hom_to_power = 0;    // |Hom(x, y')|
  std::size_t hom_power = 0;       // |Hom(x, y)|^|Mor C|
  bool bijective = false;          // h ↦ (leg_i ∘ h)_i is a bijection
};

struct CompletePreorderReport {
  bool complete = false;
  /// First missing limit when not complete.
  std::string missing;
  bool preorder = false;
  /// complete ⇒ preorder.
  bool theorem_holds = false;
  std::vector<HomPowerCheck> hom_power;
  bool hom_power_ok = true;
};

/// Finite completeness proxy (terminal object, binary products, equalizers of
/// every parallel pair, and every |Mor C|-fold power), the preorder
/// conclusion, and the hom-power identity for each available power y'.
CompletePreorderReport complete_preorder_check(const CatRef& c);

struct PreorderScanReport {
  std::size_t hom_matrices = 0;
  /// Matrices whose hom counts already rule out a terminal object or some
  /// binary product.
  std::size_t pruned_by_counts = 0;
  std::size_t categories_checked = 0;
  std::size_t complete = 0;
  std::size_t counterexamples = 0;
  std::vector<CatRef> complete_categories;
  std::vector<CatRef> counterexample_categories;
};

/// Exhaustive scan of every category with at most the given numbers of
/// objects and morphisms for complete categories that are not preorders.
PreorderScanReport scan_complete_preorder(std::size_t max_objects, std::size_t max_morphisms);

/// Hom-count necessary condition for a terminal object and all binary
/// products. Sound: a category failing it fails the completeness proxy.
bool counts_admit_finite_products(const std::vector<std::size_t>& counts, std::size_t n);

}  // namespace fincat
