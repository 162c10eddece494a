#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace fincat {

/// var + offset. The variable "Set" denotes the lowest universe.
struct LevelAtom {
  std::string var;
  std::size_t offset = 0;
  friend bool operator==(const LevelAtom&, const LevelAtom&) = default;
};

/// A single atom, or the max of several.
struct LevelExpr {
  std::vector<LevelAtom> terms;

  static LevelExpr atom(std::string var, std::size_t offset = 0);
  /// Flattens nested maxima and drops duplicates. Throws MalformedConstraint
  /// when empty.
  static LevelExpr max(const std::vector<LevelExpr>& parts);
  bool is_max() const { return terms.size() > 1; }
  LevelExpr shifted(std::size_t n) const;
  friend bool operator==(const LevelExpr&, const LevelExpr&) = default;
};

std::string to_string(const LevelAtom& a);
std::string to_string(const LevelExpr& e);

enum class Relation { Le, Lt, Eq };

struct Constraint {
  Relation rel = Relation::Le;
  LevelExpr lhs;
  LevelExpr rhs;
  std::string origin;
};

std::string to_string(const Constraint& c);

/// lhs.var + lhs.offset (+1 when strict) ≤ rhs.var + rhs.offset.
struct AtomicConstraint {
  LevelAtom lhs;
  LevelAtom rhs;
  bool strict = false;
  std::string origin;
  friend bool operator==(const AtomicConstraint&, const AtomicConstraint&) = default;
};

std::string to_string(const AtomicConstraint& c);

/// Expands = into two ≤ and max(a, b) ≤ c into a ≤ c and b ≤ c. A max on
/// the right of ≤ or <, or on either side of =, throws MalformedConstraint.
std::vector<AtomicConstraint> normalize(const std::vector<Constraint>& cs);

struct Verdict {
  bool consistent = true;
  /// The normalized constraints that were solved.
  std::vector<AtomicConstraint> trace;
  /// A cycle of constraints with positive total weight when inconsistent.
  std::vector<AtomicConstraint> cycle;
};

Verdict check_consistency(const std::vector<Constraint>& cs);

/// Re-checks a witness without the solver: consecutive constraints chain
/// through the same variable, the chain closes, and the summed constraint
/// reads v + n ≤ v with n > 0.
bool validate_cycle(const std::vector<AtomicConstraint>& cycle);
/// "v+n ≤ v" for a valid cycle.
std::string cycle_conclusion(const std::vector<AtomicConstraint>& cycle);

/// True when every solution of cs satisfies c.
bool entails(const std::vector<Constraint>& cs, const Constraint& c);

enum class SigKind { Category, Set, Cat };
std::string_view to_string(SigKind kind);
/// "category", "set", "cat"; throws UnknownName.
SigKind parse_sig_kind(std::string_view name);

struct SizeSig {
  std::string name;
  SigKind kind{};
  bool rigid = false;
  /// Level variables by parameter name (i, j, k, l).
  std::map<std::string, std::string> params;
  LevelExpr obj_level;
  LevelExpr hom_level;
  LevelExpr type_level;
};

/// Signatures and constraints accumulated for one scenario.
class UniverseContext {
 public:
  /// Allocates fresh variables for a builtin signature and records its
  /// constraints. Registering a name again makes a fresh copy; when either
  /// registration is rigid the copies' parameters are equated.
  const SizeSig& register_signature(const std::string& name, SigKind kind, bool rigid = false);
  /// Throws UnknownName.
  const SizeSig& signature(const std::string& name) const;

  void add(Constraint c);
  /// complete_preorder (any signature), cat_exponentials (cat), set_in_cat
  /// (cat, set) and unit_terminal (set). Throws UnknownTheorem,
  /// SignatureKindMismatch.
  void apply_theorem(const std::string& theorem, const std::vector<std::string>& sigs);

  /// Parses "S.i", "S.obj", "max(S.i+1, S.j+1)", "Set" and bare variables.
  LevelExpr parse_level(std::string_view text) const;
  /// Parses "e <= e", "e < e" or "e = e".
  Constraint parse_constraint(std::string_view text) const;

  Verdict check() const { return check_consistency(constraints_); }
  bool entails(const Constraint& c) const { return fincat::entails(constraints_, c); }
  const std::vector<Constraint>& constraints() const { return constraints_; }

 private:
  std::string fresh(const std::string& base);

  std::map<std::string, SizeSig> sigs_;
  std::map<std::string, bool> used_;
  std::vector<Constraint> constraints_;
};

struct Entailment {
  std::string statement;
  bool expected = true;
  bool holds = false;
};

struct ScenarioOutcome {
  std::string name;
  std::string description;
  Verdict verdict;
  bool expected_consistent = true;
  std::vector<Entailment> entailments;
  bool pass() const;
};

std::vector<std::string> builtin_scenario_names();
/// Throws UnknownName.
ScenarioOutcome run_builtin_scenario(const std::string& name);

}  // namespace fincat
