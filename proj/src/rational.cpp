#include "dsp/rational.hpp"

#include <numeric>

#include "dsp/errors.hpp"

namespace dsp {

Rat parse_rat(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error("ParseError", "empty rational literal");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string part) {
    if (!part.empty() && part[0] == '+') part.erase(0, 1);
    return part;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw Error("ParseError", "bad rational literal: " + s);
    return Rat(Int(strip_plus(s)));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw Error("ParseError", "bad rational literal: " + s);
  Int d(strip_plus(den));
  if (d == 0) throw Error("ParseError", "zero denominator: " + s);
  Rat r(Int(strip_plus(num)), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integer(const Rat& value) { return value.get_den() == 1; }

Int floor_of(const Rat& value) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Rat frac_of(const Rat& value) { return value - Rat(floor_of(value)); }

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

long gcd(long a, long b) { return std::gcd(a, b); }

Rat make_rat(long num, long den) {
  if (den == 0) throw Error("DivisionByZero", "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace dsp
