#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dsp/rational.hpp"

namespace dsp {

// Univariate polynomial over Q, coefficients lowest degree first, no
// trailing zeros (the zero polynomial has an empty coefficient list).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  static Poly monomial(const Rat& c, int degree);
  static Poly x() { return monomial(Rat(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat coeff(int i) const;
  Rat leading() const;
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat eval(const Rat& x) const;

  Poly monic() const;
  Poly derivative() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rat> c_;
};

// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);
// Yun's algorithm: returns a_1..a_k, monic and pairwise coprime, with
// f = lc(f) * a_1 * a_2^2 * ... * a_k^k.
std::vector<Poly> squarefree_decomposition(const Poly& f);
// Number of roots of multiplicity exactly one that are nonzero.
int simple_nonzero_root_count(const Poly& f);
// Number of distinct nonzero roots.
int distinct_nonzero_root_count(const Poly& f);

// e.g. "x^4 + 3*x - 1/2"
std::string to_string(const Poly& p);

}  // namespace dsp
