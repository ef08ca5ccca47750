#include "cubinf/parser.hpp"

#include <cctype>

namespace cubinf {

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool take(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
};

mpz_class read_integer(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) throw ParseError("expected an integer", start);
  return mpz_class(c.s.substr(start, c.i - start));
}

Rat read_rational(Cursor& c) {
  mpz_class num = read_integer(c);
  if (c.take('/')) {
    mpz_class den = read_integer(c);
    if (den == 0) throw ParseError("zero denominator", c.i);
    return Rat(num, den);
  }
  return Rat(num, mpz_class(1));
}

int read_var(Cursor& c, const std::vector<std::string>& vars) {
  c.skip_ws();
  // longest match wins so that e.g. a10 is not read as a1
  int best = -1;
  size_t best_len = 0;
  for (size_t v = 0; v < vars.size(); ++v) {
    const std::string& name = vars[v];
    if (name.size() > best_len && c.s.compare(c.i, name.size(), name) == 0) {
      best = static_cast<int>(v);
      best_len = name.size();
    }
  }
  if (best >= 0) c.i += best_len;
  return best;
}

}  // namespace

PolyQ parse_poly(const std::string& text, const std::vector<std::string>& vars) {
  const int n = static_cast<int>(vars.size());
  PolyQ out(n);
  Cursor c{text};
  bool first = true;
  while (!c.eof()) {
    int sign = 1;
    if (c.take('+')) {
    } else if (c.take('-')) {
      sign = -1;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", c.i);
    }
    while (c.take('-')) sign = -sign;  // tolerate e.g. "- -2"
    first = false;
    if (c.eof()) throw ParseError("dangling sign", c.i);

    Rat coeff(sign);
    Mono m(n);
    bool saw_number = false, saw_var = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff *= read_rational(c);
      saw_number = true;
    }
    for (;;) {
      if (c.peek() == '*') {
        c.take('*');
        if (c.eof()) throw ParseError("dangling '*'", c.i);
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        // only after '*'; adjacent numbers like "2 3" are a syntax error
        throw ParseError("unexpected number; use '*' between factors", c.i);
      }
      int v = read_var(c, vars);
      if (v < 0) break;
      saw_var = true;
      int k = 1;
      if (c.take('^')) {
        mpz_class e = read_integer(c);
        if (e < 0 || e > 64) throw ParseError("exponent out of range", c.i);
        k = static_cast<int>(e.get_si());
      }
      m.e[v] += k;
    }
    if (!saw_number && !saw_var) throw ParseError("expected a term", c.i);
    out.add_term(m, coeff);
  }
  return out;
}

PolyQ parse_poly3(const std::string& text) { return parse_poly(text, {"x0", "x1", "x2"}); }

}  // namespace cubinf
