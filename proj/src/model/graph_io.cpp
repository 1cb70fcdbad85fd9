#include "lig/model/graph_io.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <string>

namespace lig {

void export_graph(const IntersectionModel& model, std::ostream& out) {
  const auto& p = model.params();
  out << "model " << to_string(p.kind) << " n=" << p.n << " q=" << p.q << " lines=" << model.line_count() << "\n";
  for (LineId a = 0; a < model.line_count(); ++a) {
    out << "adj " << a << ":";
    model.neighbors(a).for_each([&](LineId b) { out << ' ' << b; });
    out << "\n";
  }
}

namespace {

class Cursor {
 public:
  Cursor(const std::string& text, std::size_t line) : s_(text), line_(line) {}

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, pos_ + 1, what); }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  void expect(const std::string& word) {
    skip_ws();
    if (s_.compare(pos_, word.size(), word) != 0) fail("expected '" + word + "'");
    pos_ += word.size();
  }
  std::string word() {
    skip_ws();
    const std::size_t b = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected a word");
    return s_.substr(b, pos_ - b);
  }
  unsigned long number() {
    skip_ws();
    const std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected a number");
    if (pos_ - b > 9) fail("number too large");
    return std::stoul(s_.substr(b, pos_ - b));
  }
  std::size_t column() const { return pos_ + 1; }

 private:
  const std::string& s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

IntersectionModel import_graph(std::istream& in) {
  std::string text;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, text)) {
      ++lineno;
      std::size_t i = 0;
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i < text.size()) return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError(1, 1, "empty stream, expected 'model' header");
  Cursor h(text, lineno);
  h.expect("model");
  const std::string kind = h.word();
  SpaceKind k;
  if (kind == "projective")
    k = SpaceKind::Projective;
  else if (kind == "affine")
    k = SpaceKind::Affine;
  else
    h.fail("expected 'projective' or 'affine'");
  h.expect("n=");
  const auto n = h.number();
  h.expect("q=");
  const auto q = h.number();
  h.expect("lines=");
  const auto L = h.number();
  if (!h.at_end()) h.fail("trailing text after header");
  if (n < 1 || n > 16 || q < 2 || q > 64) throw ParseError(lineno, 1, "header n/q out of range");

  const std::size_t W = words_for(L);
  std::vector<Word> rows(L * W, 0);
  for (std::size_t id = 0; id < L; ++id) {
    if (!next_line())
      throw ParseError(lineno + 1, 1, "header declares " + std::to_string(L) + " lines, stream has " + std::to_string(id));
    Cursor c(text, lineno);
    c.expect("adj");
    const auto got = c.number();
    if (got != id) c.fail("expected adj " + std::to_string(id));
    c.expect(":");
    long prev = -1;
    while (!c.at_end()) {
      const std::size_t col = c.column();
      const auto b = c.number();
      if (b >= L) throw ParseError(lineno, col, "neighbour id " + std::to_string(b) + " out of range");
      if (static_cast<long>(b) <= prev) throw ParseError(lineno, col, "neighbour ids must be strictly ascending");
      prev = static_cast<long>(b);
      rows[id * W + (b >> 6)] |= Word{1} << (b & 63);
    }
  }
  if (next_line()) throw ParseError(lineno, 1, "more adjacency lines than the header declares");
  return IntersectionModel(SpaceParams::make(k, static_cast<unsigned>(n), static_cast<unsigned>(q)), L, std::move(rows));
}

}  // namespace lig
