#include <doctest.h>

#include "excy/sylvester.hpp"

using namespace excy;

TEST_CASE("sylvester values match the defining recurrence") {
  CHECK(sylvester::value(0) == 2);
  CHECK(sylvester::value(1) == 3);
  CHECK(sylvester::value(2) == 7);
  CHECK(sylvester::value(3) == 43);
  CHECK(sylvester::value(4) == 1807);
  // independent recurrence evaluation
  Int s = 2;
  for (int i = 0; i < 5; ++i) s = s * (s - 1) + 1;
  CHECK(sylvester::value(5) == s);
  CHECK(sylvester::value(5) == 3263443);
}

TEST_CASE("sylvester rejects bad indices and caps runaway requests") {
  CHECK_THROWS_AS(sylvester::value(-1), std::invalid_argument);
  CHECK_THROWS_AS(sylvester::value(sylvester::kDefaultCap + 1), std::invalid_argument);
}

TEST_CASE("partial sums telescope to 1 - 1/(s_{j+1}-1)") {
  CHECK(sylvester::partial_sum(0) == fraction(1, 2));
  CHECK(sylvester::partial_sum(1) == fraction(5, 6));
  CHECK(sylvester::partial_sum(3) == fraction(1805, 1806));
  for (int j = 0; j <= 12; ++j) {
    Rat closed = 1 - fraction(1, sylvester::value(j + 1) - 1);
    CHECK(sylvester::partial_sum(j) == closed);
  }
}

TEST_CASE("pairwise coprimality and product identity up to index 25") {
  // s_{j+1} - 1 = s_0 s_1 ... s_j
  Int prod = 1;
  for (int j = 0; j <= 25; ++j) {
    prod *= sylvester::value(j);
    CHECK(sylvester::value(j + 1) - 1 == prod);
  }
  for (int j = 1; j <= 25; ++j)
    for (int i = 0; i < j; ++i)
      CHECK(gcd(sylvester::value(i), sylvester::value(j)) == 1);
}

TEST_CASE("doubly exponential growth s_j > 2^(2^(j-1))") {
  // j = 0 via squaring to stay in integers
  CHECK(sylvester::value(0) * sylvester::value(0) > 2);
  for (int j = 1; j <= 25; ++j) {
    Int bound = 1;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), 1ull << (j - 1));
    CHECK(sylvester::value(j) > bound);
  }
}
