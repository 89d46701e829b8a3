#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dsp {

using Int = mpz_class;
using Rat = mpq_class;

// Accepts "p", "-p", "p/q"; the result is canonical (lowest terms, q > 0).
Rat parse_rat(std::string_view text);

// num/den in lowest terms (mpq_class(num, den) alone does not reduce).
Rat make_rat(long num, long den);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& value);

bool is_integer(const Rat& value);
Int floor_of(const Rat& value);
// Representative of value mod 1 in [0, 1).
Rat frac_of(const Rat& value);

Int gcd(const Int& a, const Int& b);
long gcd(long a, long b);

}  // namespace dsp
