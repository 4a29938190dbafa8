#include "graphlie/rational.hpp"

#include <stdexcept>
#include <string>

#include "graphlie/errors.hpp"

namespace graphlie {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(num, den);
  // mpq_class(n, d) stores the pair verbatim; reduce and fix the sign.
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");
  // mpq_set_str accepts "p" and "p/q" but also tolerates whitespace and
  // leading '+' inconsistently across inputs; keep the accepted grammar
  // tight: optional '-', digits, optionally '/' and digits.
  auto digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view body = s;
  if (body.front() == '-') body.remove_prefix(1);
  auto slash = body.find('/');
  bool ok;
  if (slash == std::string_view::npos) {
    ok = digits(body);
  } else {
    std::string_view den = body.substr(slash + 1);
    ok = digits(body.substr(0, slash)) && digits(den) && den != "0";
  }
  if (!ok) throw ParseError("malformed rational literal: '" + s + "'");
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0 || r.get_den() == 0)
    throw ParseError("malformed rational literal: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace graphlie
