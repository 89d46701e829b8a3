#include "dsp/poly.hpp"

#include <algorithm>

#include "dsp/errors.hpp"

namespace dsp {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rat& c, int degree) {
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
  return c_[i];
}

Rat Poly::leading() const { return c_.empty() ? Rat(0) : c_.back(); }

Rat Poly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rat inv = 1 / leading();
  return inv * *this;
}

Poly Poly::derivative() const {
  std::vector<Rat> v;
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * static_cast<long>(i));
  return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(v));
}

Poly operator*(const Rat& s, const Poly& a) {
  std::vector<Rat> v(a.c_);
  for (auto& x : v) x *= s;
  return Poly(std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("DivisionByZero", "polynomial division by zero");
  std::vector<Rat> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rat> quo(a.degree() - db + 1);
  Rat lb = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rat t = rem[k + db] / lb;
    quo[k] = t;
    if (t == 0) continue;
    for (int i = 0; i <= db; ++i) rem[k + i] -= t * b.coeff(i);
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<Poly> squarefree_decomposition(const Poly& f) {
  std::vector<Poly> out;
  if (f.degree() <= 0) return out;
  Poly fm = f.monic();
  Poly d = fm.derivative();
  Poly a = gcd(fm, d);
  Poly b = divmod(fm, a).first;
  Poly c = divmod(d, a).first;
  Poly e = c - b.derivative();
  while (b.degree() > 0) {
    Poly g = gcd(b, e);
    out.push_back(g);
    b = divmod(b, g).first;
    c = divmod(e, g).first;
    e = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

int simple_nonzero_root_count(const Poly& f) {
  auto parts = squarefree_decomposition(f);
  if (parts.empty()) return 0;
  const Poly& a1 = parts.front();
  int cnt = a1.degree();
  if (cnt > 0 && a1.coeff(0) == 0) --cnt;
  return cnt;
}

int distinct_nonzero_root_count(const Poly& f) {
  int cnt = 0;
  for (const auto& part : squarefree_decomposition(f)) {
    cnt += part.degree();
    if (part.degree() > 0 && part.coeff(0) == 0) --cnt;
  }
  return cnt;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = p.degree(); i >= 0; --i) {
    Rat c = p.coeff(i);
    if (c == 0) continue;
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    bool unit = (a == 1);
    if (!unit || i == 0) s += to_string(a);
    if (i > 0) {
      if (!unit) s += "*";
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace dsp
