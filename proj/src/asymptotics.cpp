#include "excy/asymptotics.hpp"

#include <algorithm>

#include "excy/sylvester.hpp"

namespace excy::asymptotics {

RationalEnclosure mul(const RationalEnclosure& a, const RationalEnclosure& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

RationalEnclosure scale(const Rat& c, const RationalEnclosure& a) {
  if (c >= 0) return {c * a.lo, c * a.hi};
  return {c * a.hi, c * a.lo};
}

RationalEnclosure alpha(int terms) {
  if (terms < 1) throw std::invalid_argument("alpha: terms must be >= 1");
  Rat lo = 2;
  for (int j = 1; j <= terms; ++j) {
    const Int& s = sylvester::value(j);
    Rat factor = fraction(sylvester::value(j + 1), (s - 1) * (s - 1));
    lo *= rat_pow(factor, 1ull << (j - 1));
  }
  // Tail bound, a rational upper estimate on
  //   prod_{j>T} [1 + x_j]^(2^(j-1))  with  x_j = s_j / (s_j - 1)^2,
  // using s_{j+1} = (s_j - 1)^2 + s_j. From log(1+x) <= x,
  //   log(tail) <= sum_{j>T} 2^(j-1) x_j.
  // Consecutive terms shrink by 2 x_{j+1} / x_j <= 4 / s_j <= 4 / s_{T+1}
  // (since x_{j+1}/x_j = (s_j-1)^2/s_j^3 + 1/s_j^2 <= 2/s_j), so the sum is
  // dominated by the geometric series
  //   L = 2^T x_{T+1} * s_{T+1} / (s_{T+1} - 4),
  // and tail <= e^L <= 1 / (1 - L) for L < 1 (true for every T >= 1).
  const Int& s_next = sylvester::value(terms + 1);
  Rat x = fraction(s_next, (s_next - 1) * (s_next - 1));
  Rat lambda = Rat(int_pow(2, static_cast<unsigned long>(terms))) * x *
               fraction(s_next, s_next - 4);
  if (lambda >= 1) throw internal_error("alpha: tail bound unusable");
  Rat hi = lo / (1 - lambda);
  return {std::move(lo), std::move(hi)};
}

RatioConstants ratio_constants(int terms) {
  RationalEnclosure a = alpha(terms);
  RationalEnclosure a2 = mul(a, a);
  RatioConstants out;
  out.even = a;
  out.odd = scale(fraction(3, 4), a2);
  out.index_even = scale(fraction(9, 8), a);
  out.index_odd = scale(fraction(6, 7), a2);
  return out;
}

}  // namespace excy::asymptotics
