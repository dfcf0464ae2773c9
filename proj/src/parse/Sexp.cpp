#include "parse/Sexp.hpp"

namespace synthsat {

namespace {

struct Reader {
  const std::string& text;
  size_t pos = 0;
  int line = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skipSpace() {
    while (!done()) {
      char c = text[pos];
      if (c == ';') {
        while (!done() && text[pos] != '\n')
          ++pos;
      } else if (c == '\n') {
        ++line;
        ++pos;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++pos;
      } else {
        break;
      }
    }
  }

  static bool atomChar(char c) {
    return c != '(' && c != ')' && c != ';' && c != ' ' && c != '\t' && c != '\r' &&
           c != '\n';
  }

  Sexp next() {
    skipSpace();
    if (done())
      throw InputError("unexpected end of input at line " + std::to_string(line));
    Sexp s;
    s.line = line;
    if (peek() == '(') {
      ++pos;
      s.isAtom = false;
      while (true) {
        skipSpace();
        if (done())
          throw InputError("unclosed '(' starting at line " + std::to_string(s.line));
        if (peek() == ')') {
          ++pos;
          return s;
        }
        s.items.push_back(next());
      }
    }
    if (peek() == ')')
      throw InputError("unmatched ')' at line " + std::to_string(line));
    size_t start = pos;
    while (!done() && atomChar(text[pos]))
      ++pos;
    s.atom = text.substr(start, pos - start);
    return s;
  }
};

} // namespace

std::vector<Sexp> parseSexps(const std::string& text) {
  Reader r{text};
  std::vector<Sexp> out;
  while (true) {
    r.skipSpace();
    if (r.done())
      return out;
    out.push_back(r.next());
  }
}

} // namespace synthsat
