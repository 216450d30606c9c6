#pragma once

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <string>

namespace excy {

// Every quantity in this library is an exact integer or an exact normalized
// fraction. Floating point never enters a verdict path; decimal and
// scientific renderings below are display-only.
using Int = mpz_class;
using Rat = mpq_class;

// A computed quantity contradicts an identity it is required to satisfy.
// The message carries the two exact values involved.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class singular_matrix_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class unsupported_shape_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// a / b, throwing internal_error if b does not divide a exactly.
Int exact_div(const Int& a, const Int& b, const char* context = "exact_div");

// Normalized num/den; throws std::invalid_argument on a zero denominator.
Rat fraction(const Int& num, const Int& den);

Int int_pow(const Int& base, unsigned long exp);
Rat rat_pow(const Rat& base, unsigned long exp);

// 2^(2^n); n is limited to keep the result addressable.
Int two_to_two_to(int n);

// Nonnegative remainder of a mod m (m > 0).
Int mod_nonneg(const Int& a, const Int& m);

Int product(std::span<const Int> values);

enum class Rounding { down, nearest, up };

// Fixed-point decimal rendering of v with `places` digits after the point.
std::string decimal_string(const Rat& v, int places, Rounding mode = Rounding::nearest);

// Two-significant-digit scientific rendering of a positive rational,
// e.g. 1/462 -> "2.2e-3". Matches the display convention used for the
// volume and mld approximations.
std::string sci_string(const Rat& v);

// Parses "p" or "p/q" back into a normalized rational.
Rat parse_rat(const std::string& text);

}  // namespace excy
