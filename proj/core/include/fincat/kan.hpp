#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/finset.hpp"

namespace fincat {

/// A Kan extension of F: C → E along p: C → D. For a right extension the
/// comparison is extension∘p ⇒ F; for a left extension it is F ⇒ extension∘p.
struct KanResult {
  Functor extension;
  NatTrans comparison;
};

/// Ran_p F computed pointwise as the limit of F over (d ↓ p). Absent when any
/// pointwise limit is missing.
std::optional<KanResult> right_kan_pointwise(const Functor& f, const Functor& p);
/// Lan_p F as the opposite of Ran_{p^op} F^op.
std::optional<KanResult> left_kan(const Functor& f, const Functor& p);

/// Set-valued variants. Diagrams are functors into finite sets.
struct FinSetKanResult {
  Diagram extension;
  DiagramMorphism comparison;
};

FinSetKanResult right_kan_finset(const Diagram& f, const Functor& p);
/// Computed with colimits over (p ↓ d).
FinSetKanResult left_kan_finset(const Diagram& f, const Functor& p);

struct KanCheckReport {
  bool pass = true;
  bool cone_ok = true;  // every δ: M∘p ⇒ F has exactly one σ
  bool hom_ok = true;   // σ ↦ comparison∘(σp) is a bijection
  std::size_t functors_checked = 0;
  /// (|Nat(M, Ran)|, |Nat(M∘p, F)|) per enumerated M.
  std::vector<std::pair<std::size_t, std::size_t>> counts;
  std::string witness;
};

/// Checks both characterisations of a right Kan extension against every
/// functor M: D → E.
KanCheckReport kan_local_check(const KanResult& candidate, const Functor& f, const Functor& p);
/// Same for set-valued F; M ranges over diagrams on D with sets of size
/// ≤ bound.
KanCheckReport kan_local_check(const FinSetKanResult& candidate, const Diagram& f, const Functor& p,
                               std::size_t bound);

/// The unique σ: a ⇒ b with b.comparison∘(σp) = a.comparison, when it is a
/// natural isomorphism.
std::optional<NatTrans> kan_comparison_iso(const KanResult& a, const KanResult& b, const Functor& p);

struct KanGlobalReport {
  bool pass = false;
  Validation adjunction;
  std::size_t source_functors = 0;  // |Obj [C, E]|
  std::size_t target_functors = 0;  // |Obj [D, E]|
  bool cardinalities = true;        // |Hom(M∘p, F)| = |Hom(M, Ran F)|
  std::string witness;
};

/// −∘p: [D, E] → [C, E] and F ↦ Ran_p F assembled into a hom-form
/// adjunction and validated. Throws PointwiseKanMissing.
KanGlobalReport kan_global_check(const Functor& p, const CatRef& e);

/// Hom(e, F −) as a set-valued diagram on dom F.
Diagram corepresentable_diagram(const Functor& f, ObjId e);

/// For each d, Hom(e, Ran(d)) is in bijection with Ran of Hom(e, F −) at d
/// via k ↦ (leg ∘ k).
bool representable_preservation(const KanResult& ran, const Functor& f, const Functor& p, ObjId e);

}  // namespace fincat
