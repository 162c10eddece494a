#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

/// A finite set: an ordered sequence of distinct labels. Element i is
/// referred to by its position.
class FinSetObj {
 public:
  FinSetObj() = default;
  /// Throws DuplicateLabel when two labels coincide.
  explicit FinSetObj(std::vector<std::string> elements);
  /// {"0", "1", ..., "n-1"}.
  static FinSetObj of_size(std::size_t n);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::string& label(std::size_t i) const { return elements_[i]; }
  const std::vector<std::string>& elements() const { return elements_; }
  std::optional<std::size_t> find(const std::string& label) const;

  friend bool operator==(const FinSetObj&, const FinSetObj&) = default;

 private:
  std::vector<std::string> elements_;
};

/// A function between finite sets as a position table. Equality is
/// extensional: same domain, codomain and table.
class FinFn {
 public:
  FinFn(FinSetObj dom, FinSetObj cod, std::vector<std::size_t> table);

  const FinSetObj& dom() const { return dom_; }
  const FinSetObj& cod() const { return cod_; }
  const std::vector<std::size_t>& table() const { return table_; }
  std::size_t operator()(std::size_t x) const { return table_[x]; }

  friend bool operator==(const FinFn&, const FinFn&) = default;

 private:
  FinSetObj dom_;
  FinSetObj cod_;
  std::vector<std::size_t> table_;
};

FinFn identity_fn(const FinSetObj& a);
/// g∘f; throws DomainMismatch unless cod(f) = dom(g).
FinFn compose(const FinFn& g, const FinFn& f);
bool is_injective(const FinFn& f);
bool is_surjective(const FinFn& f);

/// Labels of composite elements. A component label that itself contains a
/// comma is parenthesised so that nested products keep distinct labels.
std::string tuple_label(std::span<const std::string> parts);
/// "[i0,i1,...]" for a function table.
std::string table_label(std::span<const std::size_t> table);

/// Calls `visit` with every table dom→cod in lexicographic order.
void for_each_table(std::size_t dom, std::size_t cod,
                    const std::function<void(const std::vector<std::size_t>&)>& visit);
std::vector<FinFn> all_functions(const FinSetObj& a, const FinSetObj& b);

/// The fixed singleton {"*"}.
FinSetObj terminal_set();
FinFn to_terminal(const FinSetObj& a);
FinFn from_empty(const FinSetObj& a);

struct ProductCone {
  FinSetObj object;
  FinFn first;
  FinFn second;

  /// ⟨f, g⟩: X → A×B.
  FinFn pair(const FinFn& f, const FinFn& g) const;
  std::size_t index(std::size_t a, std::size_t b) const { return a * second.cod().size() + b; }
};

ProductCone fs_product(const FinSetObj& a, const FinSetObj& b);
/// f×g between the canonical products of the domains and codomains.
FinFn product_map(const FinFn& f, const FinFn& g);

struct SumCocone {
  FinSetObj object;
  FinFn left;
  FinFn right;

  /// [f, g]: A+B → X.
  FinFn copair(const FinFn& f, const FinFn& g) const;
};

SumCocone fs_sum(const FinSetObj& a, const FinSetObj& b);

struct EqualizerCone {
  FinSetObj object;
  FinFn inclusion;

  /// Unique u with inclusion∘u = h; throws InvalidInput when h does not
  /// equalize the pair.
  FinFn factor(const FinFn& h) const;
};

/// Throws NotParallel unless f and g share domain and codomain.
EqualizerCone fs_equalizer(const FinFn& f, const FinFn& g);

struct CoequalizerCocone {
  FinSetObj object;
  FinFn quotient;

  /// Unique u with u∘quotient = h; throws InvalidInput when h does not
  /// coequalize the pair.
  FinFn factor(const FinFn& h) const;
};

/// Quotient of cod by the equivalence generated by f(x) ~ g(x). Classes are
/// ordered and labelled by their least member.
CoequalizerCocone fs_coequalizer(const FinFn& f, const FinFn& g);

struct PullbackCone {
  FinSetObj object;
  FinFn first;
  FinFn second;

  /// Unique u with first∘u = p and second∘u = q.
  FinFn factor(const FinFn& p, const FinFn& q) const;
};

/// A ×_C B for f: A→C, g: B→C; elements are the matching pairs "a,b".
PullbackCone fs_pullback(const FinFn& f, const FinFn& g);

/// Pushout of f: C→A, g: C→B as a quotient of A+B.
struct PushoutCocone {
  FinSetObj object;
  FinFn first;
  FinFn second;
};
PushoutCocone fs_pushout(const FinFn& f, const FinFn& g);

/// B^A with evaluation B^A × A → B.
struct ExponentialObject {
  FinSetObj base;   // A
  FinSetObj value;  // B
  FinSetObj object;
  FinFn eval;

  std::size_t element_of(std::span<const std::size_t> table) const;
  std::vector<std::size_t> table_of(std::size_t element) const;
  /// For f: X×A → B (canonical product), the unique X → B^A whose
  /// evaluation recovers f.
  FinFn transpose(const FinFn& f, const FinSetObj& x) const;
};

ExponentialObject fs_exponential(const FinSetObj& a, const FinSetObj& b);

struct SubobjectClassifier {
  FinSetObj omega;  // {"false", "true"}
  FinFn truth;      // 1 → Ω picking "true"

  /// χ_m; throws NotMono unless m is injective.
  FinFn classify(const FinFn& mono) const;
};

SubobjectClassifier fs_subobject_classifier();

/// True when (top: S→B, left: S→A) is a pullback of the cospan
/// (right: B→C, bottom: A→C).
bool is_pullback_square(const FinFn& left, const FinFn& top, const FinFn& bottom, const FinFn& right);

/// Exponential f^g in the slice over A, for f: X→A and g: Y→A. Elements are
/// pairs (a, φ) with φ: g⁻¹(a) → f⁻¹(a).
struct SliceExponential {
  FinFn source;      // f
  FinFn exponent;    // g
  FinSetObj object;  // E
  FinFn projection;  // E → A
  PullbackCone eval_domain;  // E ×_A Y
  FinFn eval;        // E ×_A Y → X, over A

  /// For z: Z→A and h: Z ×_A Y → X over A (domain the canonical pullback of
  /// z and g), the unique k: Z → E over A with eval∘(k ×_A Y) = h.
  FinFn transpose(const FinFn& z, const FinFn& h) const;
  /// k ×_A Y: Z ×_A Y → E ×_A Y for k over A.
  FinFn lift(const FinFn& z, const FinFn& k) const;
};

/// Throws CodomainMismatch unless f and g share a codomain.
SliceExponential fs_slice_exponential(const FinFn& f, const FinFn& g);

/// A functor from a finite shape into finite sets.
struct Diagram {
  CatRef shape;
  std::vector<FinSetObj> objects;
  std::vector<FinFn> morphisms;

  const FinSetObj& operator()(ObjId a) const { return objects[a.index]; }
  const FinFn& operator()(MorId f) const { return morphisms[f.index]; }
  friend bool operator==(const Diagram& a, const Diagram& b) {
    return same_category(a.shape, b.shape) && a.objects == b.objects && a.morphisms == b.morphisms;
  }
};

Validation validate(const Diagram& d);
/// D∘p for p: J' → J.
Diagram precompose(const Diagram& d, const Functor& p);
/// Every diagram on `shape` whose sets are {0..k-1} with k ≤ max_size.
std::vector<Diagram> enumerate_diagrams(const CatRef& shape, std::size_t max_size);

/// Components of a natural transformation between set-valued diagrams.
using DiagramMorphism = std::vector<FinFn>;
bool is_natural(const Diagram& from, const Diagram& to, const DiagramMorphism& alpha);
std::vector<DiagramMorphism> enumerate_diagram_morphisms(const Diagram& from, const Diagram& to);

}  // namespace fincat
