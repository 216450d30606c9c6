#pragma once

#include "excy/numeric.hpp"

namespace excy::asymptotics {

// Exact rational interval certified to contain the targeted real number.
struct RationalEnclosure {
  Rat lo, hi;
  Rat width() const { return hi - lo; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
};

// Outward products in the enclosure lattice: the result contains every
// product of members.
RationalEnclosure mul(const RationalEnclosure& a, const RationalEnclosure& b);
RationalEnclosure scale(const Rat& c, const RationalEnclosure& a);

// Enclosure of alpha = 2 * prod_{j>=1} [s_{j+1} / (s_j - 1)^2]^(2^(j-1)),
// about 5.522868. lo is the exact partial product over j <= terms; hi
// multiplies lo by a rational bound on the tail (see the derivation in
// asymptotics.cpp). lo is nondecreasing and hi nonincreasing in terms.
RationalEnclosure alpha(int terms);

inline constexpr int kDefaultAlphaTerms = 8;

// The comparison constants: alpha itself (even-dimension mld ratio),
// 3 alpha^2 / 4 (odd mld ratio, ~22.876556), 9 alpha / 8 (even index
// ratio, ~6.213227), 6 alpha^2 / 7 (odd index ratio, ~26.144635).
struct RatioConstants {
  RationalEnclosure even;
  RationalEnclosure odd;
  RationalEnclosure index_even;
  RationalEnclosure index_odd;
};
RatioConstants ratio_constants(int terms = kDefaultAlphaTerms);

}  // namespace excy::asymptotics
