#pragma once

#include <optional>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

struct TAlgebra {
  ObjId carrier;
  MorId structure;  // T(carrier) → carrier
  friend bool operator==(const TAlgebra&, const TAlgebra&) = default;
};

struct AlgebraCategory {
  CatRef category;
  Functor forgetful;
  /// For coalgebras the structure runs carrier → T(carrier).
  std::vector<TAlgebra> objects;
};

/// Objects in (carrier, structure) order, morphisms in (source, target,
/// carrier arrow) order. Throws NotEndofunctor.
AlgebraCategory algebra_category(const Functor& t);
/// The opposite of algebra_category(T^op). Throws NotEndofunctor.
AlgebraCategory coalgebra_category(const Functor& t);

/// Initial object by exhaustive search.
std::optional<ObjId> initial_object(const FinCat& c);
std::optional<ObjId> terminal_object(const FinCat& c);

struct LambekReport {
  std::optional<ObjId> initial;
  bool structure_iso = false;  // meaningful only when `initial` is set
};

LambekReport lambek_check(const AlgebraCategory& alg);

}  // namespace fincat
