#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/finset.hpp"

namespace fincat {

/// A set-valued diagram on C^op.
using Presheaf = Diagram;

/// Hom(−, c) on `op`, which must be opposite(C). Elements of Hom(d, c) are
/// labelled by morphism name in index order.
Presheaf hom_functor(const FinCat& c, const CatRef& op, ObjId x);
Presheaf hom_functor(const CatRef& c, ObjId x);

struct YonedaEmbedding {
  CatRef category;
  CatRef op;
  std::vector<Presheaf> objects;
  /// y(g): y c ⇒ y c' by postcomposition.
  std::vector<DiagramMorphism> morphisms;
};

YonedaEmbedding yoneda_embedding(const CatRef& c);

struct EmbeddingReport {
  bool functorial = true;
  bool faithful = true;
  bool full = true;
  std::string witness;
  bool pass() const { return functorial && faithful && full; }
};

/// Functoriality, then for every pair (c, c') that Hom(c, c') → Nat(y c, y c')
/// is injective and onto by enumerating Nat(y c, y c').
EmbeddingReport check_embedding(const YonedaEmbedding& y);

/// θ(α) = α_c(id_c) as a position in F(c).
std::size_t yoneda_forward(const CatRef& c, const DiagramMorphism& alpha, ObjId x);
/// α_d(f) = F(f)(e) for e ∈ F(c).
DiagramMorphism yoneda_inverse(const CatRef& c, const Presheaf& f, ObjId x, std::size_t e);

struct YonedaReport {
  std::size_t nat_count = 0;  // |Nat(y c, F)|
  std::size_t set_size = 0;   // |F(c)|
  bool forward_then_inverse = true;
  bool inverse_then_forward = true;
  bool pass() const { return nat_count == set_size && forward_then_inverse && inverse_then_forward; }
};

YonedaReport yoneda_bijection(const CatRef& c, const Presheaf& f, ObjId x);

/// For g: c → c' and α: y c' ⇒ F, θ_c(α∘y g) = F(g)(θ_{c'} α).
bool yoneda_natural_in_object(const CatRef& c, const Presheaf& f);

/// (a^b)^c ≅ a^(b×c) as explicit tables.
struct CurryIso {
  FinFn forward;  // (a^b)^c → a^(b×c)
  FinFn inverse;
  bool round_trip = false;
};

CurryIso ccc_exponential_iso(const FinSetObj& a, const FinSetObj& b, const FinSetObj& c);

struct CurryNaturalityReport {
  std::size_t instances = 0;
  std::size_t squares = 0;
  bool pass = true;
  std::string witness;
};

/// Naturality in a (covariant), b and c (contravariant) over all sets of size
/// ≤ bound and all functions between them.
CurryNaturalityReport ccc_naturality(std::size_t bound);

}  // namespace fincat
