#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace fincat::cli {

/// Source position of a declaration. Positions never take part in equality,
/// so a re-parsed pretty-print compares equal to the original.
struct Pos {
  std::size_t line = 0;
  std::size_t column = 0;
  friend bool operator==(const Pos&, const Pos&) { return true; }
};

enum class SpecErrorKind { ParseError, UnresolvedName, IllTypedDeclaration };
std::string_view to_string(SpecErrorKind kind);

class SpecError : public std::runtime_error {
 public:
  SpecError(SpecErrorKind kind, Pos pos, const std::string& message);
  SpecErrorKind kind() const noexcept { return kind_; }
  const Pos& pos() const noexcept { return pos_; }
  const std::string& message() const noexcept { return message_; }

 private:
  SpecErrorKind kind_;
  Pos pos_;
  std::string message_;
};

using Mapping = std::pair<std::string, std::string>;

struct MorDecl {
  std::string name, src, dst;
  Pos pos;
  friend bool operator==(const MorDecl&, const MorDecl&) = default;
};

/// `comp g f = h` records g∘f = h.
struct CompDecl {
  std::string g, f, h;
  Pos pos;
  friend bool operator==(const CompDecl&, const CompDecl&) = default;
};

struct CategoryDecl {
  std::string name;
  std::vector<std::string> objects;
  std::vector<MorDecl> morphisms;
  std::vector<CompDecl> comps;
  Pos pos;
  friend bool operator==(const CategoryDecl&, const CategoryDecl&) = default;
};

/// `category X = op Y;` or `category X = product Y Z;`
struct DerivedCategoryDecl {
  std::string name;
  std::string op;
  std::vector<std::string> args;
  Pos pos;
  friend bool operator==(const DerivedCategoryDecl&, const DerivedCategoryDecl&) = default;
};

struct FunctorDecl {
  std::string name, dom, cod;
  std::vector<Mapping> objects;
  std::vector<Mapping> morphisms;
  Pos pos;
  friend bool operator==(const FunctorDecl&, const FunctorDecl&) = default;
};

struct NatTransDecl {
  std::string name, source, target;
  std::vector<Mapping> components;
  Pos pos;
  friend bool operator==(const NatTransDecl&, const NatTransDecl&) = default;
};

struct SetDecl {
  std::string name;
  std::vector<std::string> elements;
  Pos pos;
  friend bool operator==(const SetDecl&, const SetDecl&) = default;
};

struct FnDecl {
  std::string name, dom, cod;
  std::vector<Mapping> table;
  Pos pos;
  friend bool operator==(const FnDecl&, const FnDecl&) = default;
};

struct DiagramDecl {
  std::string name, shape;
  std::vector<Mapping> objects;    // shape object -> set
  std::vector<Mapping> morphisms;  // shape morphism -> fn
  Pos pos;
  friend bool operator==(const DiagramDecl&, const DiagramDecl&) = default;
};

/// Unit and counit are given by their components.
struct AdjunctionDecl {
  std::string name, left, right;
  std::vector<Mapping> unit;
  std::vector<Mapping> counit;
  Pos pos;
  friend bool operator==(const AdjunctionDecl&, const AdjunctionDecl&) = default;
};

struct SigDecl {
  std::string name, kind;
  bool rigid = false;
  friend bool operator==(const SigDecl&, const SigDecl&) = default;
};

struct TheoremDecl {
  std::string theorem;
  std::vector<std::string> sigs;
  friend bool operator==(const TheoremDecl&, const TheoremDecl&) = default;
};

struct EntailDecl {
  std::string constraint;
  bool expected = true;
  friend bool operator==(const EntailDecl&, const EntailDecl&) = default;
};

/// Statements run in order; `expect` and `entails` are checked afterwards.
struct ScenarioDecl {
  using Step = std::variant<SigDecl, std::string, TheoremDecl>;  // string: a constraint
  std::string name;
  std::vector<Step> steps;
  std::optional<bool> expect_consistent;
  std::vector<EntailDecl> entails;
  Pos pos;
  friend bool operator==(const ScenarioDecl&, const ScenarioDecl&) = default;
};

using Decl = std::variant<CategoryDecl, DerivedCategoryDecl, FunctorDecl, NatTransDecl, SetDecl, FnDecl,
                          DiagramDecl, AdjunctionDecl, ScenarioDecl>;

struct SpecFile {
  std::vector<Decl> decls;
  friend bool operator==(const SpecFile&, const SpecFile&) = default;
};

const std::string& decl_name(const Decl& d);
std::string_view decl_keyword(const Decl& d);

/// Throws SpecError(ParseError) with the position and expected token.
SpecFile parse_spec(std::string_view text);
SpecFile parse_spec_file(const std::string& path);

/// Canonical text form; parse_spec(print_spec(s)) == s.
std::string print_spec(const SpecFile& spec);

}  // namespace fincat::cli
