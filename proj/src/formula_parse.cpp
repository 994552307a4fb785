#include <cctype>
#include <utility>

#include "ordlat/formula.hpp"

namespace ordlat {

using FormulaPtr = std::shared_ptr<const Formula>;

FormulaPtr Formula::lt(std::string a, std::string b) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Lt;
  f->vars = {std::move(a), std::move(b)};
  return f;
}

FormulaPtr Formula::eq(std::string a, std::string b) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Eq;
  f->vars = {std::move(a), std::move(b)};
  return f;
}

FormulaPtr Formula::rel(std::string name, std::vector<std::string> args) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::RelAtom;
  f->rel_name = std::move(name);
  f->vars = std::move(args);
  return f;
}

FormulaPtr Formula::diff_atom(std::string a, std::string b, long long k) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Diff;
  f->vars = {std::move(a), std::move(b)};
  f->literal = k;
  return f;
}

static FormulaPtr unary_node(Formula::Kind kind, FormulaPtr child) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->children = {std::move(child)};
  return f;
}

static FormulaPtr binary_node(Formula::Kind kind, FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->children = {std::move(a), std::move(b)};
  return f;
}

FormulaPtr Formula::negate(FormulaPtr f) { return unary_node(Kind::Not, std::move(f)); }
FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b) {
  return binary_node(Kind::And, std::move(a), std::move(b));
}
FormulaPtr Formula::disj(FormulaPtr a, FormulaPtr b) {
  return binary_node(Kind::Or, std::move(a), std::move(b));
}
FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr b) {
  return binary_node(Kind::Implies, std::move(a), std::move(b));
}

FormulaPtr Formula::exists(std::string v, FormulaPtr f) {
  auto node = std::make_shared<Formula>();
  node->kind = Kind::Exists;
  node->bound_var = std::move(v);
  node->children = {std::move(f)};
  return node;
}

FormulaPtr Formula::forall(std::string v, FormulaPtr f) {
  auto node = std::make_shared<Formula>();
  node->kind = Kind::Forall;
  node->bound_var = std::move(v);
  node->children = {std::move(f)};
  return node;
}

bool structurally_equal(const Formula& a, const Formula& b) {
  if (a.kind != b.kind || a.vars != b.vars || a.rel_name != b.rel_name ||
      a.literal != b.literal || a.bound_var != b.bound_var ||
      a.children.size() != b.children.size()) {
    return false;
  }
  for (size_t i = 0; i < a.children.size(); ++i) {
    if (!structurally_equal(*a.children[i], *b.children[i])) return false;
  }
  return true;
}

namespace {

enum class Tok { Name, Int, Lparen, Rparen, Comma, Define, Lt, Gt, Eq, Not, And, Or, Arrow, Dot, End };

struct Token {
  Tok kind;
  std::string text;
  long long value = 0;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("parse error at " + std::to_string(tok_.line) + ":" +
                std::to_string(tok_.col) + ": " + what);
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      bump();
    }
    tok_.line = line_;
    tok_.col = col_;
    tok_.text.clear();
    if (pos_ >= text_.size()) {
      tok_.kind = Tok::End;
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        tok_.text += text_[pos_];
        bump();
      }
      tok_.kind = Tok::Name;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        ((c == '-' || c == '+') && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) && minus_starts_int_)) {
      std::string digits;
      digits += c;
      bump();
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits += text_[pos_];
        bump();
      }
      tok_.kind = Tok::Int;
      tok_.text = digits;
      tok_.value = std::stoll(digits);
      return;
    }
    switch (c) {
      case '(': bump(); tok_.kind = Tok::Lparen; return;
      case ')': bump(); tok_.kind = Tok::Rparen; return;
      case ',': bump(); tok_.kind = Tok::Comma; return;
      case '<': bump(); tok_.kind = Tok::Lt; return;
      case '>': bump(); tok_.kind = Tok::Gt; return;
      case '=': bump(); tok_.kind = Tok::Eq; return;
      case '!': bump(); tok_.kind = Tok::Not; return;
      case '&': bump(); tok_.kind = Tok::And; return;
      case '|': bump(); tok_.kind = Tok::Or; return;
      case '.': bump(); tok_.kind = Tok::Dot; return;
      case ':':
        bump();
        if (pos_ < text_.size() && text_[pos_] == '=') {
          bump();
          tok_.kind = Tok::Define;
          return;
        }
        fail("expected ':='");
      case '-':
        bump();
        if (pos_ < text_.size() && text_[pos_] == '>') {
          bump();
          tok_.kind = Tok::Arrow;
          return;
        }
        fail("stray '-' (use diff(x,y,k) for difference atoms)");
      default: {
        tok_.line = line_;
        tok_.col = col_;
        throw Error("parse error at " + std::to_string(line_) + ":" +
                    std::to_string(col_) + ": unexpected character '" +
                    std::string(1, c) + "'");
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;

 public:
  // Signed integers only appear as the third diff() argument; elsewhere a
  // '-' must be the start of '->'.
  bool minus_starts_int_ = false;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  DefinedRelation parse_def() {
    Token name = expect(Tok::Name, "relation name");
    expect(Tok::Lparen, "'('");
    DefinedRelation d;
    d.name = name.text;
    d.free_vars.push_back(expect(Tok::Name, "variable").text);
    while (lex_.peek().kind == Tok::Comma) {
      lex_.take();
      d.free_vars.push_back(expect(Tok::Name, "variable").text);
    }
    expect(Tok::Rparen, "')'");
    for (size_t i = 0; i < d.free_vars.size(); ++i) {
      for (size_t j = i + 1; j < d.free_vars.size(); ++j) {
        if (d.free_vars[i] == d.free_vars[j]) {
          lex_.fail("duplicate free variable '" + d.free_vars[i] + "'");
        }
      }
    }
    expect(Tok::Define, "':='");
    d.body = parse_form();
    if (lex_.peek().kind != Tok::End) lex_.fail("trailing input after formula");
    check_bound(*d.body, d.free_vars);
    return d;
  }

 private:
  Token expect(Tok kind, const std::string& what) {
    if (lex_.peek().kind != kind) lex_.fail("expected " + what);
    return lex_.take();
  }

  FormulaPtr parse_form() {
    if (lex_.peek().kind == Tok::Name &&
        (lex_.peek().text == "exists" || lex_.peek().text == "forall")) {
      Token q = lex_.take();
      Token var = expect(Tok::Name, "quantified variable");
      expect(Tok::Dot, "'.'");
      FormulaPtr body = parse_form();
      return q.text == "exists" ? Formula::exists(var.text, std::move(body))
                                : Formula::forall(var.text, std::move(body));
    }
    return parse_imp();
  }

  FormulaPtr parse_imp() {
    FormulaPtr left = parse_or();
    if (lex_.peek().kind == Tok::Arrow) {
      lex_.take();
      return Formula::implies(std::move(left), parse_imp());
    }
    return left;
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (lex_.peek().kind == Tok::Or) {
      lex_.take();
      f = Formula::disj(std::move(f), parse_and());
    }
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_unary();
    while (lex_.peek().kind == Tok::And) {
      lex_.take();
      f = Formula::conj(std::move(f), parse_unary());
    }
    return f;
  }

  FormulaPtr parse_unary() {
    switch (lex_.peek().kind) {
      case Tok::Not:
        lex_.take();
        return Formula::negate(parse_unary());
      case Tok::Lparen: {
        lex_.take();
        FormulaPtr f = parse_form();
        expect(Tok::Rparen, "')'");
        return f;
      }
      case Tok::Name:
        return parse_atom();
      default:
        lex_.fail("expected formula");
    }
  }

  FormulaPtr parse_atom() {
    Token head = expect(Tok::Name, "atom");
    if (head.text == "diff" && lex_.peek().kind == Tok::Lparen) {
      lex_.take();
      Token a = expect(Tok::Name, "variable");
      expect(Tok::Comma, "','");
      Token b = expect(Tok::Name, "variable");
      // The lexer is one token ahead: enable signed-integer lexing before
      // the comma is consumed, since taking it already lexes the literal.
      lex_.minus_starts_int_ = true;
      expect(Tok::Comma, "','");
      Token k = expect(Tok::Int, "integer");
      lex_.minus_starts_int_ = false;
      expect(Tok::Rparen, "')'");
      return Formula::diff_atom(a.text, b.text, k.value);
    }
    if (lex_.peek().kind == Tok::Lparen) {
      lex_.take();
      std::vector<std::string> args;
      args.push_back(expect(Tok::Name, "variable").text);
      while (lex_.peek().kind == Tok::Comma) {
        lex_.take();
        args.push_back(expect(Tok::Name, "variable").text);
      }
      expect(Tok::Rparen, "')'");
      return Formula::rel(head.text, std::move(args));
    }
    switch (lex_.peek().kind) {
      case Tok::Lt: {
        lex_.take();
        Token rhs = expect(Tok::Name, "variable");
        return Formula::lt(head.text, rhs.text);
      }
      case Tok::Gt: {
        lex_.take();
        Token rhs = expect(Tok::Name, "variable");
        // x > y is stored as y < x
        return Formula::lt(rhs.text, head.text);
      }
      case Tok::Eq: {
        lex_.take();
        Token rhs = expect(Tok::Name, "variable");
        return Formula::eq(head.text, rhs.text);
      }
      default:
        lex_.fail("expected '<', '>', '=' or '(' after '" + head.text + "'");
    }
  }

  void check_bound(const Formula& f, std::vector<std::string> scope) {
    switch (f.kind) {
      case Formula::Kind::Exists:
      case Formula::Kind::Forall:
        scope.push_back(f.bound_var);
        check_bound(*f.children[0], std::move(scope));
        return;
      default:
        break;
    }
    for (const std::string& v : f.vars) {
      bool found = false;
      for (const std::string& s : scope) {
        if (s == v) {
          found = true;
          break;
        }
      }
      if (!found) throw Error("unbound variable '" + v + "'");
    }
    for (const auto& child : f.children) check_bound(*child, scope);
  }

  Lexer lex_;
};

void print_form(const Formula& f, std::string& out) {
  switch (f.kind) {
    case Formula::Kind::Lt:
      out += f.vars[0] + "<" + f.vars[1];
      return;
    case Formula::Kind::Eq:
      out += f.vars[0] + "=" + f.vars[1];
      return;
    case Formula::Kind::RelAtom: {
      out += f.rel_name + "(";
      for (size_t i = 0; i < f.vars.size(); ++i) {
        if (i) out += ",";
        out += f.vars[i];
      }
      out += ")";
      return;
    }
    case Formula::Kind::Diff:
      out += "diff(" + f.vars[0] + "," + f.vars[1] + "," + std::to_string(f.literal) + ")";
      return;
    case Formula::Kind::Not:
      out += "!";
      if (f.children[0]->children.empty() &&
          f.children[0]->kind != Formula::Kind::Not) {
        print_form(*f.children[0], out);
      } else {
        out += "(";
        print_form(*f.children[0], out);
        out += ")";
      }
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies: {
      const char* op = f.kind == Formula::Kind::And   ? " & "
                       : f.kind == Formula::Kind::Or  ? " | "
                                                      : " -> ";
      // quantifier children need their own parentheses: the grammar admits
      // them only at form level, with bodies extending maximally right
      auto print_side = [&out](const Formula& side) {
        bool quantified = side.kind == Formula::Kind::Exists ||
                          side.kind == Formula::Kind::Forall;
        if (quantified) out += "(";
        print_form(side, out);
        if (quantified) out += ")";
      };
      out += "(";
      print_side(*f.children[0]);
      out += op;
      print_side(*f.children[1]);
      out += ")";
      return;
    }
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      out += f.kind == Formula::Kind::Exists ? "exists " : "forall ";
      out += f.bound_var + ". (";
      print_form(*f.children[0], out);
      out += ")";
      return;
  }
}

}  // namespace

DefinedRelation parse(const std::string& text) { return Parser(text).parse_def(); }

std::string print(const Formula& f) {
  std::string out;
  print_form(f, out);
  return out;
}

std::string print(const DefinedRelation& d) {
  std::string out = d.name + "(";
  for (size_t i = 0; i < d.free_vars.size(); ++i) {
    if (i) out += ",";
    out += d.free_vars[i];
  }
  out += ") := ";
  print_form(*d.body, out);
  return out;
}

}  // namespace ordlat
