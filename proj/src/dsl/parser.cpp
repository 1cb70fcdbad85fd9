#include "lig/dsl/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "lig/core/types.hpp"

namespace lig::dsl {

namespace {

enum class Tok { Ident, LParen, RParen, Comma, Semi, Dot, And, Or, Not, Define, End };

const char* tok_text(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Dot: return "'.'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Not: return "'!'";
    case Tok::Define: return "':='";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
 public:
  Lexer(const std::string& s, int line0) : s_(s), line_(line0) {}

  Token next() {
    skip();
    Token t;
    t.line = line_;
    t.col = col_;
    if (i_ >= s_.size()) return t;
    const char c = s_[i_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t b = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) advance();
      t.kind = Tok::Ident;
      t.text = s_.substr(b, i_ - b);
      return t;
    }
    advance();
    switch (c) {
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      case ',': t.kind = Tok::Comma; break;
      case ';': t.kind = Tok::Semi; break;
      case '.': t.kind = Tok::Dot; break;
      case '&': t.kind = Tok::And; break;
      case '|': t.kind = Tok::Or; break;
      case '!': t.kind = Tok::Not; break;
      case ':':
        if (i_ < s_.size() && s_[i_] == '=') {
          advance();
          t.kind = Tok::Define;
          break;
        }
        [[fallthrough]];
      default:
        throw ParseError(t.line, t.col, std::string("unexpected character '") + c + "'");
    }
    t.text = std::string(1, c);
    return t;
  }

 private:
  void advance() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }
  void skip() {
    for (;;) {
      while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) advance();
      if (i_ + 1 < s_.size() && s_[i_] == '/' && s_[i_ + 1] == '/') {
        while (i_ < s_.size() && s_[i_] != '\n') advance();
        continue;
      }
      return;
    }
  }

  const std::string& s_;
  std::size_t i_ = 0;
  int line_ = 1, col_ = 1;
};

const std::set<std::string> kKeywords = {"forall", "exists", "sim", "eq", "neq", "simeq", "true", "false"};

class Parser {
 public:
  Parser(const std::string& s, int line0) : lex_(s, line0) { cur_ = lex_.next(); }

  Definition definition() {
    Definition d;
    d.name = ident("definition name");
    expect(Tok::LParen);
    if (cur_.kind != Tok::RParen) d.params = var_list(Tok::RParen);
    expect(Tok::RParen);
    expect(Tok::Define);
    scope_.insert(scope_.end(), d.params.begin(), d.params.end());
    d.body = formula();
    expect(Tok::End);
    return d;
  }

  NodePtr bare() {
    allow_free_ = true;
    NodePtr f = formula();
    expect(Tok::End);
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    const std::string got = cur_.kind == Tok::Ident ? "'" + cur_.text + "'" : tok_text(cur_.kind);
    throw ParseError(cur_.line, cur_.col, "expected " + expected + ", got " + got);
  }
  void expect(Tok k) {
    if (cur_.kind != k) fail(tok_text(k));
    cur_ = lex_.next();
  }
  bool accept(Tok k) {
    if (cur_.kind != k) return false;
    cur_ = lex_.next();
    return true;
  }
  std::string ident(const char* what) {
    if (cur_.kind != Tok::Ident) fail(what);
    std::string s = cur_.text;
    cur_ = lex_.next();
    return s;
  }
  std::string var() {
    const Token t = cur_;
    std::string v = ident("variable");
    if (kKeywords.count(v)) throw ParseError(t.line, t.col, "keyword '" + v + "' used as a variable");
    if (!allow_free_ && std::find(scope_.begin(), scope_.end(), v) == scope_.end())
      throw Error(ErrorCode::UnboundVariable,
                  "line " + std::to_string(t.line) + ", column " + std::to_string(t.col) + ": unbound variable '" +
                      v + "'");
    return v;
  }
  std::vector<std::string> var_list(Tok stop) {
    std::vector<std::string> out;
    for (;;) {
      const Token t = cur_;
      std::string v = ident("parameter");
      if (kKeywords.count(v)) throw ParseError(t.line, t.col, "keyword '" + v + "' used as a parameter");
      out.push_back(std::move(v));
      if (cur_.kind == stop) return out;
      expect(Tok::Comma);
    }
  }

  NodePtr formula() {
    std::vector<NodePtr> parts{conj()};
    while (accept(Tok::Or)) parts.push_back(conj());
    return make_nary(NodeKind::Or, std::move(parts));
  }
  NodePtr conj() {
    std::vector<NodePtr> parts{unary()};
    while (accept(Tok::And)) parts.push_back(unary());
    return make_nary(NodeKind::And, std::move(parts));
  }
  NodePtr unary() {
    const int line = cur_.line, col = cur_.col;
    if (!accept(Tok::Not)) return primary();
    return make_not(unary(), line, col);
  }

  NodePtr primary() {
    if (accept(Tok::LParen)) {
      NodePtr f = formula();
      expect(Tok::RParen);
      return f;
    }
    if (cur_.kind != Tok::Ident) fail("formula");
    const Token head = cur_;
    const std::string w = ident("formula");
    if (w == "forall" || w == "exists") {
      std::vector<std::string> vs;
      while (cur_.kind == Tok::Ident) {
        const Token t = cur_;
        std::string v = ident("variable");
        if (kKeywords.count(v)) throw ParseError(t.line, t.col, "keyword '" + v + "' used as a variable");
        vs.push_back(std::move(v));
      }
      expect(Tok::Dot);
      const std::size_t mark = scope_.size();
      scope_.insert(scope_.end(), vs.begin(), vs.end());
      NodePtr body = formula();
      scope_.resize(mark);
      // an empty block (a family over an empty range) binds nothing
      return make_quant(w == "forall" ? NodeKind::Forall : NodeKind::Exists, std::move(vs), std::move(body));
    }
    if (w == "true") return make_const(true);
    if (w == "false") return make_const(false);
    expect(Tok::LParen);
    if (w == "sim" || w == "eq" || w == "neq" || w == "simeq") return atom(w, head);
    std::vector<std::string> args;
    if (cur_.kind != Tok::RParen) {
      args.push_back(var());
      while (accept(Tok::Comma)) args.push_back(var());
    }
    expect(Tok::RParen);
    return make_ref(w, std::move(args), head.line, head.col);
  }

  // sim(a,b), or the list form sim(a1,a2 ; b1,b2,b3) for every pair across
  // the semicolon; simeq(a,b) is sim(a,b) | eq(a,b).
  NodePtr atom(const std::string& w, const Token& head) {
    std::vector<std::string> left{var()}, right;
    bool list = false;
    while (accept(Tok::Comma)) left.push_back(var());
    if (accept(Tok::Semi)) {
      list = true;
      right.push_back(var());
      while (accept(Tok::Comma)) right.push_back(var());
    }
    expect(Tok::RParen);
    if (!list) {
      if (left.size() != 2)
        throw ParseError(head.line, head.col, w + " takes two arguments or the form " + w + "(xs ; ys)");
      right = {left[1]};
      left.resize(1);
    }
    std::vector<NodePtr> parts;
    for (const auto& a : left)
      for (const auto& b : right) {
        if (w == "simeq") {
          parts.push_back(make_nary(NodeKind::Or, {make_atom(NodeKind::Sim, a, b, head.line, head.col),
                                                   make_atom(NodeKind::Eq, a, b, head.line, head.col)}));
        } else {
          const NodeKind k = w == "sim" ? NodeKind::Sim : w == "eq" ? NodeKind::Eq : NodeKind::Neq;
          parts.push_back(make_atom(k, a, b, head.line, head.col));
        }
      }
    return make_nary(NodeKind::And, std::move(parts));
  }

  Lexer lex_;
  Token cur_;
  std::vector<std::string> scope_;
  bool allow_free_ = false;
};

}  // namespace

Definition parse_definition(const std::string& text, int line0) { return Parser(text, line0).definition(); }

NodePtr parse_formula(const std::string& text, int line0) { return Parser(text, line0).bare(); }

}  // namespace lig::dsl
