#include "bsnq/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bsnq {

FreeWord& FreeWord::append(int gen, const Int& exp) {
  if (exp == 0) return *this;
  if (!syllables_.empty() && syllables_.back().gen == gen) {
    syllables_.back().exp += exp;
    if (syllables_.back().exp == 0) syllables_.pop_back();
    return *this;
  }
  syllables_.push_back({gen, exp});
  return *this;
}

FreeWord& FreeWord::append(const FreeWord& w) {
  if (this == &w) {
    FreeWord copy = w;
    return append(copy);
  }
  for (const auto& s : w.syllables_) append(s.gen, s.exp);
  return *this;
}

FreeWord FreeWord::inverse() const {
  FreeWord r;
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    r.syllables_.push_back({it->gen, -it->exp});
  return r;
}

FreeWord FreeWord::pow(const Int& k) const {
  if (k == 0 || is_identity()) return {};
  FreeWord base = k < 0 ? inverse() : *this;
  Int reps = abs(k);
  // A power of a reduced word only cancels across the seam, so repeated
  // appends stay linear in the output size.
  FreeWord r;
  for (Int i = 0; i < reps; ++i) r.append(base);
  return r;
}

Int FreeWord::letter_length() const {
  Int n = 0;
  for (const auto& s : syllables_) n += abs(s.exp);
  return n;
}

Int FreeWord::exponent_sum(int gen) const {
  Int n = 0;
  for (const auto& s : syllables_)
    if (s.gen == gen) n += s.exp;
  return n;
}

int FreeWord::max_generator() const {
  int m = -1;
  for (const auto& s : syllables_) m = std::max(m, s.gen);
  return m;
}

FreeWord commutator_word(const FreeWord& u, const FreeWord& v) {
  FreeWord r = u.inverse();
  r.append(v.inverse());
  r.append(u);
  r.append(v);
  return r;
}

FreeWord conjugate_word(const FreeWord& u, const FreeWord& v) {
  FreeWord r = v.inverse();
  r.append(u);
  r.append(v);
  return r;
}

ParseError::ParseError(std::string msg, std::size_t pos)
    : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
      position(pos) {}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  std::span<const std::string> names;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_separators(bool* saw_separator = nullptr) {
    while (!eof() && (std::isspace(static_cast<unsigned char>(peek())) || peek() == '*')) {
      if (saw_separator) *saw_separator = true;
      ++pos;
    }
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos + 1); }

  bool name_char(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  int parse_name() {
    std::size_t start = pos;
    while (!eof() && name_char(peek())) ++pos;
    if (pos == start) fail("expected a generator name");
    std::string_view name = text.substr(start, pos - start);
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    pos = start;
    fail("unknown generator name '" + std::string(name) + "'");
  }

  Int parse_integer() {
    std::size_t start = pos;
    if (!eof() && (peek() == '-' || peek() == '+')) ++pos;
    std::size_t digits = pos;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (pos == digits) fail("expected an integer");
    return Int(std::string(text.substr(start, pos - start)));
  }

  // Returns the atom and whether it was a commutator bracket.
  std::pair<FreeWord, bool> parse_atom() {
    if (eof()) fail("expected an atom");
    char c = peek();
    if (c == '(') {
      ++pos;
      FreeWord w = parse_sequence(')');
      if (eof() || peek() != ')') fail("expected ')'");
      ++pos;
      return {w, false};
    }
    if (c == '[') {
      ++pos;
      FreeWord u = parse_sequence(',');
      if (eof() || peek() != ',') fail("expected ',' in commutator bracket");
      ++pos;
      FreeWord v = parse_sequence(']');
      if (eof() || peek() != ']') fail("expected ']'");
      ++pos;
      return {commutator_word(u, v), true};
    }
    if (name_char(c)) {
      int gen = parse_name();
      return {FreeWord::generator(gen), false};
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  FreeWord parse_term() {
    auto [atom, was_bracket] = parse_atom();
    if (!eof() && peek() == '^') {
      if (was_bracket)
        fail("exponent on a bracket needs parentheses: write ([u,v])^k");
      ++pos;
      Int e = parse_integer();
      return atom.pow(e);
    }
    return atom;
  }

  // Parses a word up to (not consuming) `stop` or end of input.
  FreeWord parse_sequence(char stop) {
    skip_separators();
    if (eof() || peek() == stop) fail("expected a word");
    if (peek() == '1') {
      ++pos;
      if (!eof() && name_char(peek())) fail("'1' cannot start a generator name");
      skip_separators();
      return {};
    }
    FreeWord w = parse_term();
    for (;;) {
      bool sep = false;
      skip_separators(&sep);
      if (eof() || peek() == stop) return w;
      if (peek() == ')' || peek() == ']' || peek() == ',')
        fail(std::string("unexpected '") + peek() + "'");
      if (!sep) fail("expected '*' or whitespace between terms");
      w.append(parse_term());
    }
  }
};

}  // namespace

FreeWord parse_word(std::string_view text, std::span<const std::string> names) {
  Parser p{text, 0, names};
  FreeWord w = p.parse_sequence('\0');
  p.skip_separators();
  if (!p.eof()) p.fail("trailing input");
  return w;
}

std::string format_word(const FreeWord& w, std::span<const std::string> names) {
  if (w.is_identity()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) out << ' ';
    first = false;
    if (s.gen < 0 || static_cast<std::size_t>(s.gen) >= names.size())
      throw std::invalid_argument("format_word: generator index out of range");
    out << names[s.gen];
    if (s.exp != 1) out << '^' << s.exp.get_str();
  }
  return out.str();
}

}  // namespace bsnq
