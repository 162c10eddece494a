#include "fincat/cli/spec.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace fincat::cli {

std::string_view to_string(SpecErrorKind kind) {
  switch (kind) {
    case SpecErrorKind::ParseError: return "ParseError";
    case SpecErrorKind::UnresolvedName: return "UnresolvedName";
    case SpecErrorKind::IllTypedDeclaration: return "IllTypedDeclaration";
  }
  return "Unknown";
}

SpecError::SpecError(SpecErrorKind kind, Pos pos, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + " at " + std::to_string(pos.line) + ":" +
                         std::to_string(pos.column) + ": " + message),
      kind_(kind),
      pos_(pos),
      message_(message) {}

const std::string& decl_name(const Decl& d) {
  return std::visit([](const auto& x) -> const std::string& { return x.name; }, d);
}

std::string_view decl_keyword(const Decl& d) {
  static constexpr std::string_view names[] = {"category", "category", "functor",    "nattrans", "set",
                                               "fn",       "diagram",  "adjunction", "scenario"};
  return names[d.index()];
}

namespace {

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'' || c == '*';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SpecFile file() {
    SpecFile out;
    skip();
    while (!at_end()) {
      out.decls.push_back(decl());
      skip();
    }
    return out;
  }

 private:
  bool at_end() const { return i_ >= text_.size(); }
  char cur() const { return at_end() ? '\0' : text_[i_]; }
  char next() const { return i_ + 1 < text_.size() ? text_[i_ + 1] : '\0'; }
  Pos pos() const { return {line_, col_}; }

  void advance() {
    if (cur() == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void skip() {
    while (!at_end()) {
      if (std::isspace(static_cast<unsigned char>(cur()))) {
        advance();
      } else if (cur() == '#') {
        while (!at_end() && cur() != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string found() const {
    if (at_end()) return "end of input";
    std::string s(1, cur());
    for (std::size_t k = i_ + 1; k < text_.size() && ident_char(text_[k]) && ident_char(cur()) && s.size() < 20; ++k) {
      s += text_[k];
    }
    return "'" + s + "'";
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw SpecError(SpecErrorKind::ParseError, pos(), "expected " + expected + ", found " + found());
  }

  bool word_start() const {
    return cur() == '"' || ident_char(cur()) || (cur() == '-' && next() != '>' && next() != '|');
  }

  // Identifier, or a double-quoted string with \" and \\ escapes. Sets
  // `quoted` when the token was a string.
  std::string word(const std::string& what = "a name", bool* quoted = nullptr) {
    skip();
    if (quoted) *quoted = false;
    if (cur() == '"') {
      if (quoted) *quoted = true;
      advance();
      std::string s;
      while (!at_end() && cur() != '"') {
        if (cur() == '\n') fail("closing '\"'");
        if (cur() == '\\') advance();
        if (at_end()) break;
        s += cur();
        advance();
      }
      if (at_end()) fail("closing '\"'");
      advance();
      return s;
    }
    std::string s;
    while (!at_end() && (ident_char(cur()) || (cur() == '-' && next() != '>' && next() != '|'))) {
      s += cur();
      advance();
    }
    if (s.empty()) fail(what);
    return s;
  }

  bool peek_symbol(std::string_view sym) {
    skip();
    return text_.substr(i_, sym.size()) == sym;
  }

  void expect(std::string_view sym) {
    if (!peek_symbol(sym)) fail("'" + std::string(sym) + "'");
    for (std::size_t k = 0; k < sym.size(); ++k) advance();
  }

  bool try_symbol(std::string_view sym) {
    if (!peek_symbol(sym)) return false;
    for (std::size_t k = 0; k < sym.size(); ++k) advance();
    return true;
  }

  // Raw statement text up to ';', trimmed.
  std::string raw(const std::string& what) {
    skip();
    const std::size_t start = i_;
    while (!at_end() && cur() != ';' && cur() != '}' && cur() != '\n') advance();
    std::string s(text_.substr(start, i_ - start));
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) fail(what);
    expect(";");
    return s;
  }

  std::string keyword(std::initializer_list<std::string_view> allowed) {
    skip();
    const Pos p = pos();
    std::string expected;
    for (auto k : allowed) expected += (expected.empty() ? "" : " or ") + std::string("'") + std::string(k) + "'";
    if (!word_start()) fail(expected);
    const std::size_t save_i = i_, save_line = line_, save_col = col_;
    std::string w = word();
    for (auto k : allowed) {
      if (w == k) return w;
    }
    i_ = save_i;
    line_ = save_line;
    col_ = save_col;
    (void)p;
    fail(expected);
  }

  Decl decl() {
    skip();
    const Pos p = pos();
    const std::string kw =
        keyword({"category", "functor", "nattrans", "set", "fn", "diagram", "adjunction", "scenario"});
    if (kw == "category") return category(p);
    if (kw == "functor") return functor(p);
    if (kw == "nattrans") return nattrans(p);
    if (kw == "set") return set(p);
    if (kw == "fn") return fn(p);
    if (kw == "diagram") return diagram(p);
    if (kw == "adjunction") return adjunction(p);
    return scenario(p);
  }

  Decl category(Pos p) {
    std::string name = word();
    if (try_symbol("=")) {
      DerivedCategoryDecl d{name, keyword({"op", "product"}), {}, p};
      d.args.push_back(word());
      if (d.op == "product") d.args.push_back(word());
      expect(";");
      return d;
    }
    CategoryDecl c{name, {}, {}, {}, p};
    expect("{");
    while (!try_symbol("}")) {
      skip();
      const Pos sp = pos();
      const std::string kw = keyword({"objects", "mor", "comp"});
      if (kw == "objects") {
        expect(":");
        std::vector<std::string> names;
        bool single_quoted = false;
        while (!peek_symbol(";")) {
          bool q = false;
          names.push_back(word("an object name or ';'", &q));
          single_quoted = q;
        }
        expect(";");
        if (names.size() == 1 && !single_quoted && !names[0].empty() &&
            names[0].find_first_not_of("0123456789") == std::string::npos) {
          const std::size_t n = std::stoul(names[0]);
          names.clear();
          for (std::size_t k = 0; k < n; ++k) names.push_back(std::to_string(k));
        }
        c.objects.insert(c.objects.end(), names.begin(), names.end());
      } else if (kw == "mor") {
        MorDecl m;
        m.pos = sp;
        m.name = word();
        expect(":");
        m.src = word("a source object");
        expect("->");
        m.dst = word("a target object");
        expect(";");
        c.morphisms.push_back(m);
      } else {
        CompDecl k;
        k.pos = sp;
        k.g = word();
        k.f = word();
        expect("=");
        k.h = word();
        expect(";");
        c.comps.push_back(k);
      }
    }
    return c;
  }

  Decl functor(Pos p) {
    FunctorDecl f{word(), "", "", {}, {}, p};
    expect(":");
    f.dom = word("a domain category");
    expect("->");
    f.cod = word("a codomain category");
    expect("{");
    while (!try_symbol("}")) {
      const std::string kw = keyword({"obj", "mor"});
      Mapping m;
      m.first = word();
      expect("->");
      m.second = word();
      expect(";");
      (kw == "obj" ? f.objects : f.morphisms).push_back(m);
    }
    return f;
  }

  Decl nattrans(Pos p) {
    NatTransDecl n{word(), "", "", {}, p};
    expect(":");
    n.source = word("a source functor");
    expect("=>");
    n.target = word("a target functor");
    expect("{");
    while (!try_symbol("}")) {
      keyword({"at"});
      Mapping m;
      m.first = word();
      expect("=");
      m.second = word();
      expect(";");
      n.components.push_back(m);
    }
    return n;
  }

  Decl set(Pos p) {
    SetDecl s{word(), {}, p};
    expect("{");
    while (!try_symbol("}")) {
      keyword({"elements"});
      expect(":");
      while (!peek_symbol(";")) s.elements.push_back(word("an element or ';'"));
      expect(";");
    }
    return s;
  }

  Decl fn(Pos p) {
    FnDecl f{word(), "", "", {}, p};
    expect(":");
    f.dom = word("a domain set");
    expect("->");
    f.cod = word("a codomain set");
    expect("{");
    while (!try_symbol("}")) {
      Mapping m;
      m.first = word("an element or '}'");
      expect("->");
      m.second = word();
      expect(";");
      f.table.push_back(m);
    }
    return f;
  }

  Decl diagram(Pos p) {
    DiagramDecl d{word(), "", {}, {}, p};
    expect(":");
    d.shape = word("a shape category");
    expect("{");
    while (!try_symbol("}")) {
      const std::string kw = keyword({"obj", "mor"});
      Mapping m;
      m.first = word();
      expect("=");
      m.second = word();
      expect(";");
      (kw == "obj" ? d.objects : d.morphisms).push_back(m);
    }
    return d;
  }

  Decl adjunction(Pos p) {
    AdjunctionDecl a{word(), "", "", {}, {}, p};
    expect(":");
    a.left = word("a left adjoint");
    expect("-|");
    a.right = word("a right adjoint");
    expect("{");
    while (!try_symbol("}")) {
      const std::string kw = keyword({"unit", "counit"});
      Mapping m;
      m.first = word();
      expect("=");
      m.second = word();
      expect(";");
      (kw == "unit" ? a.unit : a.counit).push_back(m);
    }
    return a;
  }

  Decl scenario(Pos p) {
    ScenarioDecl s;
    s.name = word();
    s.pos = p;
    expect("{");
    while (!try_symbol("}")) {
      const std::string kw = keyword({"sig", "constraint", "theorem", "expect", "entails", "not"});
      if (kw == "sig") {
        SigDecl sig;
        sig.name = word();
        expect(":");
        sig.kind = keyword({"category", "set", "cat"});
        if (!peek_symbol(";")) {
          keyword({"rigid"});
          sig.rigid = true;
        }
        expect(";");
        s.steps.emplace_back(sig);
      } else if (kw == "constraint") {
        s.steps.emplace_back(raw("a constraint"));
      } else if (kw == "theorem") {
        TheoremDecl t;
        t.theorem = word("a theorem name");
        while (!peek_symbol(";")) t.sigs.push_back(word("a signature name or ';'"));
        expect(";");
        s.steps.emplace_back(t);
      } else if (kw == "expect") {
        s.expect_consistent = keyword({"consistent", "inconsistent"}) == "consistent";
        expect(";");
      } else if (kw == "entails") {
        s.entails.push_back({raw("a constraint"), true});
      } else {
        keyword({"entails"});
        s.entails.push_back({raw("a constraint"), false});
      }
    }
    return s;
  }

  std::string_view text_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

bool plain(const std::string& s) {
  if (s.empty()) return false;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const char c = s[k];
    if (ident_char(c)) continue;
    if (c == '-' && k + 1 < s.size() && s[k + 1] != '>' && s[k + 1] != '|') continue;
    if (c == '-' && k + 1 == s.size()) continue;
    return false;
  }
  return true;
}

std::string quote(const std::string& s) {
  if (plain(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

struct Printer {
  std::ostringstream os;

  void operator()(const CategoryDecl& c) {
    os << "category " << quote(c.name) << " {\n  objects:";
    bool iota = c.objects.size() != 1;
    for (std::size_t k = 0; k < c.objects.size() && iota; ++k) iota = c.objects[k] == std::to_string(k);
    if (iota && !c.objects.empty()) {
      os << " " << c.objects.size();
    } else {
      for (const auto& o : c.objects) {
        const bool numeric = o.find_first_not_of("0123456789") == std::string::npos;
        os << " " << (c.objects.size() == 1 && numeric ? "\"" + o + "\"" : quote(o));
      }
    }
    os << ";\n";
    for (const auto& m : c.morphisms) os << "  mor " << quote(m.name) << ": " << quote(m.src) << " -> " << quote(m.dst) << ";\n";
    for (const auto& k : c.comps) os << "  comp " << quote(k.g) << " " << quote(k.f) << " = " << quote(k.h) << ";\n";
    os << "}\n";
  }
  void operator()(const DerivedCategoryDecl& d) {
    os << "category " << quote(d.name) << " = " << d.op;
    for (const auto& a : d.args) os << " " << quote(a);
    os << ";\n";
  }
  void operator()(const FunctorDecl& f) {
    os << "functor " << quote(f.name) << " : " << quote(f.dom) << " -> " << quote(f.cod) << " {\n";
    for (const auto& [a, b] : f.objects) os << "  obj " << quote(a) << " -> " << quote(b) << ";\n";
    for (const auto& [a, b] : f.morphisms) os << "  mor " << quote(a) << " -> " << quote(b) << ";\n";
    os << "}\n";
  }
  void operator()(const NatTransDecl& n) {
    os << "nattrans " << quote(n.name) << " : " << quote(n.source) << " => " << quote(n.target) << " {\n";
    for (const auto& [a, f] : n.components) os << "  at " << quote(a) << " = " << quote(f) << ";\n";
    os << "}\n";
  }
  void operator()(const SetDecl& s) {
    os << "set " << quote(s.name) << " {\n  elements:";
    for (const auto& e : s.elements) os << " " << quote(e);
    os << ";\n}\n";
  }
  void operator()(const FnDecl& f) {
    os << "fn " << quote(f.name) << " : " << quote(f.dom) << " -> " << quote(f.cod) << " {\n";
    for (const auto& [a, b] : f.table) os << "  " << quote(a) << " -> " << quote(b) << ";\n";
    os << "}\n";
  }
  void operator()(const DiagramDecl& d) {
    os << "diagram " << quote(d.name) << " : " << quote(d.shape) << " {\n";
    for (const auto& [a, b] : d.objects) os << "  obj " << quote(a) << " = " << quote(b) << ";\n";
    for (const auto& [a, b] : d.morphisms) os << "  mor " << quote(a) << " = " << quote(b) << ";\n";
    os << "}\n";
  }
  void operator()(const AdjunctionDecl& a) {
    os << "adjunction " << quote(a.name) << " : " << quote(a.left) << " -| " << quote(a.right) << " {\n";
    for (const auto& [x, f] : a.unit) os << "  unit " << quote(x) << " = " << quote(f) << ";\n";
    for (const auto& [x, f] : a.counit) os << "  counit " << quote(x) << " = " << quote(f) << ";\n";
    os << "}\n";
  }
  void operator()(const ScenarioDecl& s) {
    os << "scenario " << quote(s.name) << " {\n";
    for (const auto& step : s.steps) {
      if (const auto* sig = std::get_if<SigDecl>(&step)) {
        os << "  sig " << quote(sig->name) << " : " << sig->kind << (sig->rigid ? " rigid" : "") << ";\n";
      } else if (const auto* c = std::get_if<std::string>(&step)) {
        os << "  constraint " << *c << ";\n";
      } else {
        const auto& t = std::get<TheoremDecl>(step);
        os << "  theorem " << quote(t.theorem);
        for (const auto& g : t.sigs) os << " " << quote(g);
        os << ";\n";
      }
    }
    if (s.expect_consistent) os << "  expect " << (*s.expect_consistent ? "consistent" : "inconsistent") << ";\n";
    for (const auto& e : s.entails) os << "  " << (e.expected ? "" : "not ") << "entails " << e.constraint << ";\n";
    os << "}\n";
  }
};

}  // namespace

SpecFile parse_spec(std::string_view text) { return Parser(text).file(); }

SpecFile parse_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError(SpecErrorKind::ParseError, Pos{0, 0}, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

std::string print_spec(const SpecFile& spec) {
  Printer p;
  for (std::size_t k = 0; k < spec.decls.size(); ++k) {
    if (k > 0) p.os << "\n";
    std::visit(p, spec.decls[k]);
  }
  return p.os.str();
}

}  // namespace fincat::cli
