#include "fincat/universes.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <set>

#include "fincat/error.hpp"

namespace fincat {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedConstraint, what); }

}  // namespace

LevelExpr LevelExpr::atom(std::string var, std::size_t offset) { return LevelExpr{{LevelAtom{std::move(var), offset}}}; }

LevelExpr LevelExpr::max(const std::vector<LevelExpr>& parts) {
  LevelExpr out;
  for (const auto& p : parts) {
    for (const auto& t : p.terms) {
      if (std::find(out.terms.begin(), out.terms.end(), t) == out.terms.end()) out.terms.push_back(t);
    }
  }
  if (out.terms.empty()) malformed("max of nothing");
  return out;
}

LevelExpr LevelExpr::shifted(std::size_t n) const {
  LevelExpr out = *this;
  for (auto& t : out.terms) t.offset += n;
  return out;
}

std::string to_string(const LevelAtom& a) {
  return a.offset == 0 ? a.var : a.var + "+" + std::to_string(a.offset);
}

std::string to_string(const LevelExpr& e) {
  if (!e.is_max()) return e.terms.empty() ? "?" : to_string(e.terms[0]);
  std::string s = "max(";
  for (std::size_t i = 0; i < e.terms.size(); ++i) s += (i ? ", " : "") + to_string(e.terms[i]);
  return s + ")";
}

std::string to_string(const Constraint& c) {
  const char* op = c.rel == Relation::Le ? " <= " : c.rel == Relation::Lt ? " < " : " = ";
  return to_string(c.lhs) + op + to_string(c.rhs);
}

std::string to_string(const AtomicConstraint& c) {
  return to_string(c.lhs) + (c.strict ? " < " : " <= ") + to_string(c.rhs);
}

std::vector<AtomicConstraint> normalize(const std::vector<Constraint>& cs) {
  std::vector<AtomicConstraint> out;
  for (const auto& c : cs) {
    if (c.lhs.terms.empty() || c.rhs.terms.empty()) malformed("empty level expression in " + to_string(c));
    if (c.rhs.is_max()) malformed("max on the larger side of " + to_string(c));
    if (c.rel == Relation::Eq) {
      if (c.lhs.is_max()) malformed("max in an equation: " + to_string(c));
      out.push_back({c.lhs.terms[0], c.rhs.terms[0], false, c.origin});
      out.push_back({c.rhs.terms[0], c.lhs.terms[0], false, c.origin});
      continue;
    }
    for (const auto& t : c.lhs.terms) out.push_back({t, c.rhs.terms[0], c.rel == Relation::Lt, c.origin});
  }
  return out;
}

namespace {

const std::string kSet = "Set";

std::int64_t weight(const AtomicConstraint& a) {
  return static_cast<std::int64_t>(a.lhs.offset) + (a.strict ? 1 : 0) - static_cast<std::int64_t>(a.rhs.offset);
}

// Longest-path Bellman–Ford over v ≥ u + w edges; returns a positive cycle
// or an empty vector.
std::vector<AtomicConstraint> positive_cycle(std::vector<AtomicConstraint> atoms) {
  std::set<std::string> vars;
  for (const auto& a : atoms) {
    vars.insert(a.lhs.var);
    vars.insert(a.rhs.var);
  }
  if (vars.count(kSet)) {
    for (const auto& v : vars) {
      if (v != kSet) atoms.push_back({{kSet, 0}, {v, 0}, false, "Set is the lowest universe"});
    }
  }
  std::vector<std::string> names(vars.begin(), vars.end());
  auto id = [&](const std::string& v) {
    return static_cast<std::size_t>(std::lower_bound(names.begin(), names.end(), v) - names.begin());
  };
  const std::size_t n = names.size();
  std::vector<std::int64_t> dist(n, 0);
  std::vector<std::size_t> pred(n, SIZE_MAX);
  std::size_t last = SIZE_MAX;
  for (std::size_t round = 0; round < n; ++round) {
    last = SIZE_MAX;
    for (std::size_t e = 0; e < atoms.size(); ++e) {
      const std::size_t u = id(atoms[e].lhs.var), v = id(atoms[e].rhs.var);
      if (dist[u] + weight(atoms[e]) > dist[v]) {
        dist[v] = dist[u] + weight(atoms[e]);
        pred[v] = e;
        last = v;
      }
    }
    if (last == SIZE_MAX) return {};
  }
  if (last == SIZE_MAX) return {};
  std::size_t x = last;
  for (std::size_t i = 0; i < n; ++i) x = id(atoms[pred[x]].lhs.var);
  std::vector<AtomicConstraint> cycle;
  std::size_t v = x;
  do {
    const auto& e = atoms[pred[v]];
    cycle.push_back(e);
    v = id(e.lhs.var);
  } while (v != x);
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

Verdict solve(const std::vector<AtomicConstraint>& atoms) {
  Verdict v;
  v.trace = atoms;
  v.cycle = positive_cycle(atoms);
  v.consistent = v.cycle.empty();
  return v;
}

}  // namespace

Verdict check_consistency(const std::vector<Constraint>& cs) { return solve(normalize(cs)); }

bool validate_cycle(const std::vector<AtomicConstraint>& cycle) {
  if (cycle.empty()) return false;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (cycle[i].rhs.var != cycle[(i + 1) % cycle.size()].lhs.var) return false;
    total += static_cast<std::int64_t>(cycle[i].lhs.offset) + (cycle[i].strict ? 1 : 0);
    total -= static_cast<std::int64_t>(cycle[i].rhs.offset);
  }
  return total > 0;
}

std::string cycle_conclusion(const std::vector<AtomicConstraint>& cycle) {
  if (cycle.empty()) return "";
  std::int64_t total = 0;
  for (const auto& a : cycle) total += weight(a);
  const std::string& v = cycle.front().lhs.var;
  return v + "+" + std::to_string(total) + " <= " + v;
}

bool entails(const std::vector<Constraint>& cs, const Constraint& c) {
  const auto base = normalize(cs);
  for (const auto& a : normalize({c})) {
    // ¬(u+p+s ≤ v+q) is v+q < u+p+s.
    auto extended = base;
    extended.push_back({a.rhs, {a.lhs.var, a.lhs.offset + (a.strict ? 1 : 0)}, true, "negated goal"});
    if (solve(extended).consistent) return false;
  }
  return true;
}

std::string_view to_string(SigKind kind) {
  switch (kind) {
    case SigKind::Category: return "category";
    case SigKind::Set: return "set";
    case SigKind::Cat: return "cat";
  }
  return "unknown";
}

SigKind parse_sig_kind(std::string_view name) {
  if (name == "category") return SigKind::Category;
  if (name == "set") return SigKind::Set;
  if (name == "cat") return SigKind::Cat;
  throw Error(ErrorCode::UnknownName, "unknown signature kind '" + std::string(name) + "'");
}

std::string UniverseContext::fresh(const std::string& base) {
  std::string name = base;
  while (used_.count(name)) name += "'";
  used_[name] = true;
  return name;
}

const SizeSig& UniverseContext::register_signature(const std::string& name, SigKind kind, bool rigid) {
  SizeSig sig;
  sig.name = name;
  sig.kind = kind;
  sig.rigid = rigid;
  auto var = [&](const std::string& p) { return sig.params[p] = fresh(name + "." + p); };
  auto at = [&](const std::string& p, std::size_t off = 0) { return LevelExpr::atom(sig.params.at(p), off); };
  switch (kind) {
    case SigKind::Category:
      var("i");
      var("j");
      sig.obj_level = at("i");
      sig.hom_level = at("j");
      break;
    case SigKind::Set:
      var("i");
      sig.obj_level = at("i", 1);
      sig.hom_level = at("i");
      break;
    case SigKind::Cat:
      for (const char* p : {"i", "j", "k", "l"}) var(p);
      sig.obj_level = at("i");
      sig.hom_level = at("j");
      break;
  }
  sig.type_level = LevelExpr::max({sig.obj_level.shifted(1), sig.hom_level.shifted(1)});

  if (kind == SigKind::Set) {
    constraints_.push_back({Relation::Le, sig.hom_level.shifted(1), sig.obj_level, name + ": arrows strictly below objects"});
  }
  if (kind == SigKind::Cat) {
    constraints_.push_back({Relation::Le, LevelExpr::max({at("k", 1), at("l", 1)}), at("i"),
                            name + ": member categories are objects"});
    constraints_.push_back({Relation::Le, LevelExpr::max({at("k"), at("l")}), at("j"), name + ": functors are arrows"});
  }

  auto old = sigs_.find(name);
  if (old != sigs_.end()) {
    if (old->second.kind != kind) throw Error(ErrorCode::SignatureKindMismatch, name + " re-registered with another kind");
    if (rigid || old->second.rigid) {
      sig.rigid = true;
      for (const auto& [p, v] : old->second.params) {
        constraints_.push_back({Relation::Eq, LevelExpr::atom(v), LevelExpr::atom(sig.params.at(p)),
                                name + ": rigid instance"});
      }
    }
  }
  sigs_[name] = std::move(sig);
  return sigs_[name];
}

const SizeSig& UniverseContext::signature(const std::string& name) const {
  auto it = sigs_.find(name);
  if (it == sigs_.end()) throw Error(ErrorCode::UnknownName, "unknown signature '" + name + "'");
  return it->second;
}

void UniverseContext::add(Constraint c) {
  normalize({c});
  constraints_.push_back(std::move(c));
}

void UniverseContext::apply_theorem(const std::string& theorem, const std::vector<std::string>& names) {
  auto need = [&](std::size_t n) {
    if (names.size() != n) {
      throw Error(ErrorCode::SignatureKindMismatch, theorem + " takes " + std::to_string(n) + " signature(s)");
    }
  };
  auto kind = [&](std::size_t i, SigKind k) -> const SizeSig& {
    const SizeSig& s = signature(names[i]);
    if (s.kind != k) {
      throw Error(ErrorCode::SignatureKindMismatch,
                  theorem + " needs a " + std::string(to_string(k)) + " signature, got " + std::string(to_string(s.kind)));
    }
    return s;
  };
  if (theorem == "complete_preorder") {
    need(1);
    const SizeSig& s = signature(names[0]);
    constraints_.push_back({Relation::Le, s.obj_level, s.hom_level, theorem + " " + s.name + ": objects at most arrows"});
  } else if (theorem == "cat_exponentials") {
    need(1);
    const SizeSig& s = kind(0, SigKind::Cat);
    auto p = [&](const char* x) { return LevelExpr::atom(s.params.at(x)); };
    constraints_.push_back({Relation::Eq, p("j"), p("k"), theorem + " " + s.name});
    constraints_.push_back({Relation::Eq, p("k"), p("l"), theorem + " " + s.name});
  } else if (theorem == "set_in_cat") {
    need(2);
    const SizeSig& c = kind(0, SigKind::Cat);
    const SizeSig& s = kind(1, SigKind::Set);
    apply_theorem("cat_exponentials", {names[0]});
    constraints_.push_back({Relation::Eq, LevelExpr::atom(c.params.at("k")), s.obj_level,
                            theorem + ": " + s.name + " is an object of " + c.name});
    constraints_.push_back({Relation::Eq, LevelExpr::atom(c.params.at("l")), s.hom_level,
                            theorem + ": " + s.name + " is an object of " + c.name});
  } else if (theorem == "unit_terminal") {
    need(1);
    const SizeSig& s = kind(0, SigKind::Set);
    constraints_.push_back({Relation::Eq, s.hom_level, LevelExpr::atom(kSet), theorem + " " + s.name});
  } else {
    throw Error(ErrorCode::UnknownTheorem, "unknown theorem '" + theorem + "'");
  }
}

namespace {

struct LevelParser {
  std::string_view text;
  std::size_t pos = 0;
  const std::function<LevelExpr(const std::string&)>& resolve;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
                                 text[pos] == '.' || text[pos] == '\'')) {
      ++pos;
    }
    if (start == pos) malformed("expected a level at column " + std::to_string(pos + 1) + " of '" + std::string(text) + "'");
    return std::string(text.substr(start, pos - start));
  }
  std::size_t number() {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) malformed("expected a number after '+' in '" + std::string(text) + "'");
    return std::stoul(std::string(text.substr(start, pos - start)));
  }
  LevelExpr expr() {
    LevelExpr e;
    std::string name = ident();
    if (name == "max" && eat('(')) {
      std::vector<LevelExpr> parts{expr()};
      while (eat(',')) parts.push_back(expr());
      if (!eat(')')) malformed("expected ')' in '" + std::string(text) + "'");
      e = LevelExpr::max(parts);
    } else {
      e = resolve(name);
    }
    if (eat('+')) e = e.shifted(number());
    return e;
  }
};

}  // namespace

LevelExpr UniverseContext::parse_level(std::string_view text) const {
  std::function<LevelExpr(const std::string&)> resolve = [&](const std::string& name) -> LevelExpr {
    const auto dot = name.find('.');
    if (dot == std::string::npos || used_.count(name)) return LevelExpr::atom(name);
    const SizeSig& s = signature(name.substr(0, dot));
    const std::string field = name.substr(dot + 1);
    if (field == "obj") return s.obj_level;
    if (field == "hom") return s.hom_level;
    if (field == "type") return s.type_level;
    auto it = s.params.find(field);
    if (it == s.params.end()) throw Error(ErrorCode::UnknownName, "signature " + s.name + " has no level '" + field + "'");
    return LevelExpr::atom(it->second);
  };
  LevelParser p{text, 0, resolve};
  LevelExpr e = p.expr();
  p.skip();
  if (p.pos != text.size()) malformed("trailing input in '" + std::string(text) + "'");
  return e;
}

Constraint UniverseContext::parse_constraint(std::string_view text) const {
  struct Op {
    std::string_view token;
    Relation rel;
  };
  for (Op op : {Op{"<=", Relation::Le}, Op{"<", Relation::Lt}, Op{"=", Relation::Eq}}) {
    const auto at = text.find(op.token);
    if (at == std::string_view::npos) continue;
    Constraint c{op.rel, parse_level(text.substr(0, at)), parse_level(text.substr(at + op.token.size())), "user"};
    normalize({c});
    return c;
  }
  malformed("no relation in '" + std::string(text) + "'");
}

bool ScenarioOutcome::pass() const {
  if (verdict.consistent != expected_consistent) return false;
  if (!verdict.consistent && !validate_cycle(verdict.cycle)) return false;
  return std::all_of(entailments.begin(), entailments.end(), [](const Entailment& e) { return e.expected == e.holds; });
}

namespace {

struct Scenario {
  std::string name;
  std::string description;
  bool consistent;
  std::function<void(UniverseContext&)> build;
  std::vector<std::pair<std::string, bool>> entail;
};

const std::vector<Scenario>& scenarios() {
  static const std::vector<Scenario> all = {
      {"set-complete-preorder", "the preorder theorem applied to Set", false,
       [](UniverseContext& u) {
         u.register_signature("Set", SigKind::Set);
         u.apply_theorem("complete_preorder", {"Set"});
       },
       {}},
      {"small-complete-preorder", "the preorder theorem applied to a category whose objects sit no higher than its arrows",
       true,
       [](UniverseContext& u) {
         u.register_signature("C", SigKind::Category);
         u.add(u.parse_constraint("C.obj <= C.hom"));
         u.apply_theorem("complete_preorder", {"C"});
       },
       {}},
      {"cat-exponentials", "functor categories in Cat", true,
       [](UniverseContext& u) {
         u.register_signature("Cat", SigKind::Cat);
         u.apply_theorem("cat_exponentials", {"Cat"});
       },
       {{"Cat.j = Cat.k", true}, {"Cat.k = Cat.l", true}, {"Cat.j = Cat.l", true}, {"Cat.i = Cat.j", false}}},
      {"set-in-cat", "a Cat with exponentials that contains Set", false,
       [](UniverseContext& u) {
         u.register_signature("Cat", SigKind::Cat);
         u.register_signature("Set", SigKind::Set);
         u.apply_theorem("set_in_cat", {"Cat", "Set"});
       },
       {}},
      {"rigid-instances", "one category registered twice at fresh levels", true,
       [](UniverseContext& u) {
         u.register_signature("C", SigKind::Category, true);
         u.register_signature("C", SigKind::Category, true);
       },
       {{"C.i = C.i'", true}, {"C.j = C.j'", true}}},
      {"unit-terminal", "unit as the terminal object of Set", true,
       [](UniverseContext& u) {
         u.register_signature("Set", SigKind::Set);
         u.apply_theorem("unit_terminal", {"Set"});
       },
       {{"Set.hom = Set", true}, {"Set.obj = Set", false}}},
  };
  return all;
}

}  // namespace

std::vector<std::string> builtin_scenario_names() {
  std::vector<std::string> out;
  for (const auto& s : scenarios()) out.push_back(s.name);
  return out;
}

ScenarioOutcome run_builtin_scenario(const std::string& name) {
  for (const auto& s : scenarios()) {
    if (s.name != name) continue;
    UniverseContext u;
    s.build(u);
    ScenarioOutcome out{s.name, s.description, u.check(), s.consistent, {}};
    for (const auto& [text, expected] : s.entail) out.entailments.push_back({text, expected, u.entails(u.parse_constraint(text))});
    return out;
  }
  throw Error(ErrorCode::UnknownName, "unknown scenario '" + name + "'");
}

}  // namespace fincat
