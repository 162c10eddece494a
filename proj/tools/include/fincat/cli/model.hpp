#pragma once

#include <map>
#include <string>
#include <vector>

#include "fincat/adjunction.hpp"
#include "fincat/category.hpp"
#include "fincat/finset.hpp"
#include "fincat/cli/spec.hpp"

namespace fincat::cli {

/// A spec file resolved into library values. Resolution checks names and
/// typing only; the category, functor and naturality laws are left to the
/// `validate` command.
class Model {
 public:
  const CatRef& category(const std::string& name) const;
  const Functor& functor(const std::string& name) const;
  const NatTrans& nattrans(const std::string& name) const;
  const FinSetObj& set(const std::string& name) const;
  const FinFn& fn(const std::string& name) const;
  const Diagram& diagram(const std::string& name) const;
  const AdjUnitCounit& adjunction(const std::string& name) const;
  const ScenarioDecl& scenario(const std::string& name) const;

  bool has_category(const std::string& name) const { return categories_.count(name) > 0; }
  bool has_functor(const std::string& name) const { return functors_.count(name) > 0; }
  bool has_diagram(const std::string& name) const { return diagrams_.count(name) > 0; }
  bool has_fn(const std::string& name) const { return fns_.count(name) > 0; }
  bool has_set(const std::string& name) const { return sets_.count(name) > 0; }

  /// (keyword, name) in declaration order.
  const std::vector<std::pair<std::string, std::string>>& declarations() const { return order_; }
  /// (left, right) functor names of an adjunction declaration.
  std::pair<std::string, std::string> adjoint_names(const std::string& adjunction) const;
  /// Name of a registered category, for reports.
  std::string category_name(const FinCat& c) const;

  friend Model build_model(const SpecFile& spec);

 private:
  std::map<std::string, CatRef> categories_;
  std::map<std::string, Functor> functors_;
  std::map<std::string, NatTrans> nattrans_;
  std::map<std::string, FinSetObj> sets_;
  std::map<std::string, FinFn> fns_;
  std::map<std::string, Diagram> diagrams_;
  std::map<std::string, AdjUnitCounit> adjunctions_;
  std::map<std::string, ScenarioDecl> scenarios_;
  std::map<std::string, std::pair<std::string, std::string>> adjoints_;
  std::vector<std::pair<std::string, std::string>> order_;
};

/// Names must be declared before use. Throws SpecError (UnresolvedName,
/// IllTypedDeclaration).
Model build_model(const SpecFile& spec);

}  // namespace fincat::cli
