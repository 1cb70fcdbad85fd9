#include "lig/dsl/preprocess.hpp"

#include <cctype>
#include <sstream>

namespace lig::dsl {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

class IntParser {
 public:
  IntParser(const std::string& s, const Env& env) : s_(s), env_(env) {}

  long run() {
    const long v = sum();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(1, i_ + 1, "in expression '" + s_ + "': " + why);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  long sum() {
    long v = product();
    for (;;) {
      if (eat('+')) v += product();
      else if (eat('-')) v -= product();
      else return v;
    }
  }
  long product() {
    long v = power();
    for (;;) {
      if (eat('*')) {
        v *= power();
      } else if (eat('/') || eat('%')) {
        const char op = s_[i_ - 1];
        const long d = power();
        if (d == 0) fail("division by zero");
        v = op == '/' ? v / d : ((v % d) + d) % d;
      } else {
        return v;
      }
    }
  }
  long power() {
    const long b = unary();
    if (!eat('^')) return b;
    const long e = power();
    if (e < 0) fail("negative exponent");
    long v = 1;
    for (long i = 0; i < e; ++i) v *= b;
    return v;
  }
  long unary() {
    if (eat('-')) return -unary();
    if (eat('(')) {
      const long v = sum();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    skip();
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      long v = 0;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) v = v * 10 + (s_[i_++] - '0');
      return v;
    }
    if (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
      const std::size_t b = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      const std::string id = s_.substr(b, i_ - b);
      auto it = env_.find(id);
      if (it == env_.end()) fail("unknown name '" + id + "'");
      return it->second;
    }
    fail("expected a number");
  }

  const std::string& s_;
  const Env& env_;
  std::size_t i_ = 0;
};

// Position of the closing bracket matching s[open].
std::size_t match(const std::string& s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '[' || s[i] == '{') ++depth;
    if (s[i] == ']' || s[i] == '}') {
      if (--depth == 0) return i;
    }
  }
  return std::string::npos;
}

// Last occurrence of a whole word at bracket depth 0.
std::size_t find_word(const std::string& s, const std::string& w) {
  int depth = 0;
  std::size_t found = std::string::npos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[' || s[i] == '{') ++depth;
    else if (s[i] == ']' || s[i] == '}') --depth;
    else if (depth == 0 && s.compare(i, w.size(), w) == 0) {
      const bool lb = i == 0 || std::isspace(static_cast<unsigned char>(s[i - 1]));
      const bool rb = i + w.size() == s.size() || std::isspace(static_cast<unsigned char>(s[i + w.size()]));
      if (lb && rb) found = i;
    }
  }
  return found;
}

std::pair<std::size_t, std::size_t> position(const std::string& s, std::size_t at) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < at && i < s.size(); ++i) {
    if (s[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::string expand_family(const std::string& inner, const Env& env) {
  const std::size_t f = find_word(inner, "for");
  if (f == std::string::npos) throw ParseError(1, 1, "family without 'for': [" + inner + "]");
  const std::string body = inner.substr(0, f);
  const std::string rest = inner.substr(f + 3);
  const std::size_t in = find_word(rest, "in");
  const std::size_t join = find_word(rest, "join");
  if (in == std::string::npos || join == std::string::npos || join < in)
    throw ParseError(1, 1, "family needs 'for i in lo..hi join SEP': [" + inner + "]");
  const std::string var = trim(rest.substr(0, in));
  const std::string range = rest.substr(in + 2, join - in - 2);
  const std::string sep = trim(rest.substr(join + 4));
  const std::size_t dots = range.find("..");
  if (var.empty() || dots == std::string::npos) throw ParseError(1, 1, "bad family range: [" + inner + "]");
  const long lo = eval_int(range.substr(0, dots), env);
  const long hi = eval_int(range.substr(dots + 2), env);

  std::string glue, empty;
  if (sep == "&") glue = " & ", empty = "true";
  else if (sep == "|") glue = " | ", empty = "false";
  else if (sep == ",") glue = ", ";
  else if (sep == "sp") glue = " ";
  else throw ParseError(1, 1, "unknown family separator '" + sep + "'");

  Env local = env;
  std::string out;
  for (long i = lo; i <= hi; ++i) {
    local[var] = i;
    if (i != lo) out += glue;
    out += expand(body, local);
  }
  if (lo > hi) return empty;
  if (sep == "&" || sep == "|") return "(" + trim(out) + ")";
  return out;
}

}  // namespace

Guard Guard::parse(const std::string& text) {
  Guard g;
  g.text_ = trim(text);
  std::istringstream is(g.text_);
  std::vector<std::string> alts;
  for (std::string part; std::getline(is, part, '|');) alts.push_back(part);
  for (const auto& a : alts) {
    Alt alt;
    for (const auto& w : words(a)) {
      if (w == "projective") alt.kind = SpaceKind::Projective;
      else if (w == "affine") alt.kind = SpaceKind::Affine;
      else if (w == "any") alt.kind.reset();
      else if (w == "even") alt.parity = 0;
      else if (w == "odd") alt.parity = 1;
      else {
        const auto p = w.find_first_of("<>=!");
        if (p == std::string::npos || p == 0) throw ParseError(1, 1, "bad guard term '" + w + "'");
        auto q = w.find_first_not_of("<>=!", p);
        if (q == std::string::npos) throw ParseError(1, 1, "bad guard term '" + w + "'");
        Cond c{w.substr(0, p), w.substr(p, q - p), std::stol(w.substr(q))};
        if (c.var != "n" && c.var != "q" && c.var != "lines") throw ParseError(1, 1, "unknown guard variable '" + c.var + "'");
        alt.conds.push_back(c);
      }
    }
    g.alts_.push_back(alt);
  }
  return g;
}

bool Guard::admits(const SpaceParams& p) const {
  for (const Alt& a : alts_) {
    if (a.kind && *a.kind != p.kind) continue;
    if (a.parity && static_cast<int>(p.n % 2) != *a.parity) continue;
    bool ok = true;
    for (const Cond& c : a.conds) {
      long v = c.var == "n" ? p.n : c.var == "q" ? p.q : 0;
      if (c.var == "lines") {
        const long qq = p.q;
        long num = 1, den = 1;  // Gaussian binomial [n+1 choose 2]_q, or its affine analogue
        if (p.projective()) {
          for (unsigned i = 0; i < 2; ++i) {
            long a1 = 1, b1 = 1;
            for (unsigned j = 0; j < p.n + 1 - i; ++j) a1 *= qq;
            for (unsigned j = 0; j < i + 1; ++j) b1 *= qq;
            num *= a1 - 1;
            den *= b1 - 1;
          }
          v = num / den;
        } else {
          long qn = 1;
          for (unsigned j = 0; j < p.n; ++j) qn *= qq;
          v = qn * (qn - 1) / (qq * (qq - 1));
        }
      }
      if (c.op == ">=") ok = ok && v >= c.value;
      else if (c.op == "<=") ok = ok && v <= c.value;
      else if (c.op == "==") ok = ok && v == c.value;
      else if (c.op == "!=") ok = ok && v != c.value;
      else if (c.op == ">") ok = ok && v > c.value;
      else if (c.op == "<") ok = ok && v < c.value;
      else throw ParseError(1, 1, "bad guard operator '" + c.op + "'");
    }
    if (ok) return true;
  }
  return false;
}

SourceUnit read_unit(const std::string& text, const std::string& origin) {
  SourceUnit u;
  u.origin = origin;
  std::istringstream is(text);
  std::string body;
  int lineno = 0;
  bool body_started = false;
  for (std::string line; std::getline(is, line);) {
    ++lineno;
    if (auto c = line.find("//"); c != std::string::npos) line.erase(c);
    const std::string t = trim(line);
    if (!t.empty() && t[0] == '#') {
      const auto sp = t.find_first_of(" \t");
      const std::string key = t.substr(1, sp == std::string::npos ? std::string::npos : sp - 1);
      const std::string val = sp == std::string::npos ? "" : trim(t.substr(sp));
      if (key == "name") u.name = val;
      else if (key == "guard") u.guard = Guard::parse(val);
      else if (key == "audit-only") u.audit_only = true;
      else if (key == "flags") {
        for (const auto& w : words(val)) {
          if (w == "eq") u.flags.allow_eq = true;
          else if (w == "neq") u.flags.allow_neq = true;
          else if (w != "none") throw ParseError(lineno, 1, "unknown flag '" + w + "'");
        }
      } else if (key == "param" || key == "let") {
        const auto eq = val.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, 1, "#" + key + " needs name = expr");
        u.lets.emplace_back(trim(val.substr(0, eq)), trim(val.substr(eq + 1)));
      } else {
        throw ParseError(lineno, 1, "unknown directive '#" + key + "'");
      }
      if (!body_started) body += '\n';
      continue;
    }
    if (!body_started && !t.empty()) {
      body_started = true;
      u.body_line = lineno;
      body.clear();
    }
    if (body_started) body += line + '\n';
  }
  u.body = body;
  return u;
}

Env make_env(const SpaceParams& p, const SourceUnit& u) {
  Env env{{"n", p.n}, {"q", p.q}, {"m", p.m}, {"r", p.r}, {"k", static_cast<long>(p.k)}, {"p", 2}};
  for (const auto& [name, expr] : u.lets) env[name] = eval_int(expr, env);
  return env;
}

long eval_int(const std::string& expr, const Env& env) { return IntParser(expr, env).run(); }

std::string expand(const std::string& text, const Env& env) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '[' || c == '{') {
      const std::size_t close = match(text, i);
      if (close == std::string::npos) {
        auto [l, col] = position(text, i);
        throw ParseError(l, col, std::string("unclosed '") + c + "'");
      }
      const std::string inner = text.substr(i + 1, close - i - 1);
      out += c == '[' ? expand_family(inner, env) : std::to_string(eval_int(inner, env));
      i = close;
    } else if (c == ']' || c == '}') {
      auto [l, col] = position(text, i);
      throw ParseError(l, col, std::string("stray '") + c + "'");
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace lig::dsl
