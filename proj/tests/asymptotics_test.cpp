#include <doctest.h>

#include <random>

#include "excy/asymptotics.hpp"

using namespace excy;
using asymptotics::RationalEnclosure;

namespace {

// [lo, hi] certified to round to the given decimal display (half-ulp window).
bool fits_display(const RationalEnclosure& e, long scaled, int places) {
  Rat v = fraction(scaled, int_pow(10, static_cast<unsigned long>(places)));
  Rat half_ulp = fraction(1, 2 * int_pow(10, static_cast<unsigned long>(places)));
  return v - half_ulp <= e.lo && e.hi <= v + half_ulp;
}

}  // namespace

TEST_CASE("alpha partial products and enclosure") {
  RationalEnclosure one = asymptotics::alpha(1);
  CHECK(one.lo == fraction(7, 2));  // 2 * s_2/(s_1-1)^2
  CHECK(one.hi > one.lo);

  RationalEnclosure six = asymptotics::alpha(6);
  CHECK(six.width() < fraction(1, 1000000));
  CHECK(fits_display(six, 5522868, 6));  // ~5.522868

  CHECK_THROWS_AS(asymptotics::alpha(0), std::invalid_argument);
}

TEST_CASE("alpha enclosures are nested: lo nondecreasing, hi nonincreasing") {
  RationalEnclosure prev = asymptotics::alpha(1);
  for (int terms = 2; terms <= 9; ++terms) {
    RationalEnclosure cur = asymptotics::alpha(terms);
    CHECK(cur.lo >= prev.lo);
    CHECK(cur.hi <= prev.hi);
    CHECK(cur.lo < cur.hi);
    prev = cur;
  }
}

TEST_CASE("enclosure still contains the 6-digit display once narrow") {
  for (int terms = 5; terms <= 9; ++terms) {
    RationalEnclosure e = asymptotics::alpha(terms);
    if (e.width() < fraction(1, 100000)) CHECK(fits_display(e, 5522868, 6));
  }
}

TEST_CASE("ratio constants enclose the displayed values") {
  asymptotics::RatioConstants rc = asymptotics::ratio_constants();
  CHECK(fits_display(rc.even, 5522868, 6));       // alpha
  CHECK(fits_display(rc.odd, 22876556, 6));       // 3 alpha^2 / 4
  CHECK(fits_display(rc.index_even, 6213227, 6)); // 9 alpha / 8
  CHECK(fits_display(rc.index_odd, 26144635, 6)); // 6 alpha^2 / 7
}

TEST_CASE("interval products are outward in the enclosure lattice") {
  std::mt19937_64 rng(17);
  auto random_rat = [&] {
    long num = static_cast<long>(rng() % 2001) - 1000;
    long den = 1 + static_cast<long>(rng() % 50);
    return fraction(num, den);
  };
  for (int trial = 0; trial < 300; ++trial) {
    Rat a1 = random_rat(), a2 = random_rat(), b1 = random_rat(), b2 = random_rat();
    RationalEnclosure a{std::min(a1, a2), std::max(a1, a2)};
    RationalEnclosure b{std::min(b1, b2), std::max(b1, b2)};
    RationalEnclosure p = asymptotics::mul(a, b);
    // products of members lie inside
    for (const Rat& x : {a.lo, a.hi})
      for (const Rat& y : {b.lo, b.hi}) CHECK(p.contains(x * y));
    Rat mid_x = (a.lo + a.hi) / 2, mid_y = (b.lo + b.hi) / 2;
    CHECK(p.contains(mid_x * mid_y));
  }
}

TEST_CASE("scaling respects signs") {
  RationalEnclosure a{fraction(1, 3), fraction(1, 2)};
  RationalEnclosure scaled = asymptotics::scale(fraction(-2, 1), a);
  CHECK(scaled.lo == fraction(-1, 1));
  CHECK(scaled.hi == fraction(-2, 3));
  CHECK(scaled.lo <= scaled.hi);
}
