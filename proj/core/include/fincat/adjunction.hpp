#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

/// F ⊣ G with F: A → B and G: B → A, given by the hom bijections.
///
/// `phi[a * |Obj B| + b][i] = j` sends the i-th arrow of Hom_B(F a, b) to the
/// j-th arrow of Hom_A(a, G b), positions taken in ascending index order.
struct AdjHom {
  Functor left;
  Functor right;
  std::vector<std::vector<std::size_t>> phi;

  const std::vector<std::size_t>& at(ObjId a, ObjId b) const {
    return phi[a.index * left.cod().object_count() + b.index];
  }
  /// phi(h) for h: F a → b.
  MorId transpose(ObjId a, MorId h) const;
  /// phi⁻¹(k) for k: a → G b.
  MorId untranspose(ObjId b, MorId k) const;

  friend bool operator==(const AdjHom&, const AdjHom&) = default;
};

struct AdjUnitCounit {
  Functor left;
  Functor right;
  NatTrans unit;    // Id_A ⇒ G∘F
  NatTrans counit;  // F∘G ⇒ Id_B

  friend bool operator==(const AdjUnitCounit&, const AdjUnitCounit&) = default;
};

/// A right adjoint G: B → A presented by a universal arrow
/// η_a: a → G(F₀ a) for each object a of A.
struct AdjUniversal {
  Functor right;
  std::vector<ObjId> left_objects;  // F₀
  std::vector<MorId> unit;          // η_a in A

  friend bool operator==(const AdjUniversal&, const AdjUniversal&) = default;
};

using Adjunction = std::variant<AdjHom, AdjUnitCounit, AdjUniversal>;

enum class AdjForm { Hom, UnitCounit, Universal };
std::string_view to_string(AdjForm form);
AdjForm form_of(const Adjunction& a);

Validation validate_adjunction(const AdjHom& a);
Validation validate_adjunction(const AdjUnitCounit& a);
Validation validate_adjunction(const AdjUniversal& a);
Validation validate_adjunction(const Adjunction& a);

/// Each of the six directed conversions is implemented directly. Throws
/// InvalidInput when the input does not validate.
AdjUnitCounit hom_to_unit_counit(const AdjHom& a);
AdjUniversal hom_to_universal(const AdjHom& a);
AdjHom unit_counit_to_hom(const AdjUnitCounit& a);
AdjUniversal unit_counit_to_universal(const AdjUnitCounit& a);
AdjHom universal_to_hom(const AdjUniversal& a);
AdjUnitCounit universal_to_unit_counit(const AdjUniversal& a);

Adjunction adj_convert(const Adjunction& a, AdjForm target);

/// F ⊣ G becomes G^op ⊣ F^op, in the same form. Throws InvalidInput.
AdjHom adj_dual(const AdjHom& a);
AdjUnitCounit adj_dual(const AdjUnitCounit& a);
AdjUniversal adj_dual(const AdjUniversal& a);
Adjunction adj_dual(const Adjunction& a);

/// Id ⊣ Id on C.
AdjHom identity_adjunction(const CatRef& c);

/// The natural isomorphism G ⇒ G' between two right adjoints of the same F.
/// Throws NotAdjoint when either input is invalid or the left adjoints
/// differ.
NatTrans adj_unique_iso(const AdjHom& a, const AdjHom& b);

/// Two-sided inverse of f found by search.
std::optional<MorId> find_inverse(const FinCat& c, MorId f);
bool is_natural_isomorphism(const NatTrans& n);

/// The FinSet adjunctions + ⊣ Δ, Δ ⊣ × and (−×X) ⊣ (−)^X as explicit table
/// bijections, checked on every set of size ≤ bound.
enum class FinSetAdjunctionKind { SumDiag, DiagProd, ProdExp };
/// Accepts "sum_diag", "diag_prod", "prod_exp"; throws UnknownKind.
FinSetAdjunctionKind parse_finset_adjunction_kind(std::string_view name);
std::string_view to_string(FinSetAdjunctionKind kind);

struct FinSetAdjunctionReport {
  FinSetAdjunctionKind kind{};
  std::size_t bound = 0;
  std::size_t instances = 0;       // object tuples checked
  std::size_t squares = 0;         // naturality squares checked
  bool bijective = true;           // both round trips are identities
  bool cardinality = true;         // hom-set size identity
  bool natural = true;
  std::string witness;             // first failure
  bool pass() const { return bijective && cardinality && natural; }
};

FinSetAdjunctionReport fs_adjunction_witness(FinSetAdjunctionKind kind, std::size_t bound);

/// Hom(A+B, C×D) decomposed through + ⊣ Δ then Δ ⊣ ×, and through Δ ⊣ ×
/// then + ⊣ Δ, yields the same four components.
FinSetAdjunctionReport fs_adjunction_chain(std::size_t bound);

}  // namespace fincat
