#pragma once

#include "excy/numeric.hpp"

namespace excy::sylvester {

// s_0 = 2, s_{j+1} = s_j(s_j - 1) + 1: 2, 3, 7, 43, 1807, 3263443, ...
// Pairwise coprime, with s_{j+1} - 1 = s_0 s_1 ... s_j and s_j > 2^(2^(j-1)).
//
// Values are memoized in a process-global append-only cache; concurrent
// readers are safe and extension is synchronized. Returned references stay
// valid for the lifetime of the process.

// Requests beyond this are almost certainly bugs: s_64 could never be
// materialized. Lift with value_uncapped.
inline constexpr int kDefaultCap = 64;

const Int& value(int j);           // throws std::invalid_argument if j < 0 or j > kDefaultCap
const Int& value_uncapped(int j);  // explicit opt-out of the cap

// 1/s_0 + ... + 1/s_j as an exact rational (equals 1 - 1/(s_{j+1}-1)).
Rat partial_sum(int j);

}  // namespace excy::sylvester
