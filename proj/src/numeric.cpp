#include "excy/numeric.hpp"

#include <sstream>

namespace excy {

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int exact_div(const Int& a, const Int& b, const char* context) {
  if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw internal_error(std::string(context) + ": inexact division, a=" + a.get_str() +
                         ", b=" + b.get_str());
  }
  Int r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Rat fraction(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("fraction: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rat rat_pow(const Rat& base, unsigned long exp) {
  Rat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
  return r;  // base canonical => powers canonical
}

Int two_to_two_to(int n) {
  if (n < 0 || n > 40) throw std::invalid_argument("two_to_two_to: n out of range");
  Int r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), 1ull << n);
  return r;
}

Int mod_nonneg(const Int& a, const Int& m) {
  if (m <= 0) throw std::invalid_argument("mod_nonneg: modulus must be positive");
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int product(std::span<const Int> values) {
  Int r = 1;
  for (const Int& v : values) r *= v;
  return r;
}

namespace {

Int pow10(unsigned long k) { return int_pow(Int(10), k); }

// round(num / den) with den > 0, mode applied in the usual signed sense.
Int rounded_quotient(const Int& num, const Int& den, Rounding mode) {
  Int q;
  switch (mode) {
    case Rounding::down:
      mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      break;
    case Rounding::up:
      mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      break;
    case Rounding::nearest: {
      // floor((2*num + den) / (2*den)): half rounds toward +inf
      Int t = 2 * num + den;
      mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), Int(2 * den).get_mpz_t());
      break;
    }
  }
  return q;
}

}  // namespace

std::string decimal_string(const Rat& v, int places, Rounding mode) {
  if (places < 0) throw std::invalid_argument("decimal_string: negative places");
  Int num = v.get_num() * pow10(static_cast<unsigned long>(places));
  Int q = rounded_quotient(num, v.get_den(), mode);
  bool neg = q < 0;
  Int a = abs(q);
  std::string digits = a.get_str();
  if (places == 0) return (neg ? "-" : "") + digits;
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<size_t>(places) + 1 - digits.size(), '0');
  }
  digits.insert(digits.size() - static_cast<size_t>(places), ".");
  return (neg ? "-" : "") + digits;
}

std::string sci_string(const Rat& v) {
  if (v <= 0) throw std::invalid_argument("sci_string: value must be positive");
  const Int& a = v.get_num();
  const Int& b = v.get_den();
  // e = floor(log10 v), found from digit counts and corrected by comparison
  long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 10));
  auto geq_pow10 = [&](long t) {
    // v >= 10^t ?
    if (t >= 0) return a >= b * pow10(static_cast<unsigned long>(t));
    return a * pow10(static_cast<unsigned long>(-t)) >= b;
  };
  while (!geq_pow10(e)) --e;
  while (geq_pow10(e + 1)) ++e;
  // mantissa to two significant digits: round(v * 10^(1-e)) in [10, 100]
  Int num = a, den = b;
  long shift = 1 - e;
  if (shift >= 0)
    num *= pow10(static_cast<unsigned long>(shift));
  else
    den *= pow10(static_cast<unsigned long>(-shift));
  Int m = rounded_quotient(num, den, Rounding::nearest);
  if (m == 100) {
    m = 10;
    ++e;
  }
  std::string ms = m.get_str();
  std::ostringstream out;
  out << ms[0] << "." << ms[1] << "e" << e;
  return out.str();
}

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    return fraction(Int(text), 1);
  }
  return fraction(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
}

}  // namespace excy
