#pragma once

#include <memory>
#include <vector>

#include "excy/numeric.hpp"

namespace excy::altsum {

// Ordered list of distinct exponent indices (the subscripts of an
// alternating sum).
using IndexList = std::vector<int>;

// B over (i_1, ..., i_k): b_{i1}...b_{ik} - b_{i1}...b_{i(k-1)} + ...
// + (-1)^{k-1} b_{i1} + (-1)^k. The empty list gives 1.
Int alternating_sum(std::span<const Int> b, std::span<const int> idx);

// sum_{j=0..k} (-1)^j B(idx[j:]), successively dropping the leading index;
// the empty suffix contributes (+1 for the even-length lists this is used
// on). This is the bracket in the w_k and last-exponent definitions.
Int drop_front_alternating_sum(std::span<const Int> b, std::span<const int> idx);

// The two zig-zag shapes every subscript pattern reduces to.
//
// middle_out_list(r, p) = (r+1, r, r+2, r-1, ..., r+p, r+1-p), 2p entries;
// ends_in_list(lo, hi, p) = (lo, hi, lo+1, hi-1, ..., lo+p-1, hi-p+1),
// 2p entries with hi = lo + 2p - 1.
//
// p <= 0 yields the empty list (the endpoints in the written-out patterns
// cross), which makes every base case of the identities come out right.
IndexList middle_out_list(int r, int pairs);
IndexList ends_in_list(int lo, int hi, int pairs);

// Subscript lists of the constants m_n and u_n. For n = 2r+1 these are
// (0, 2r+1, 1, 2r, ..., r, r+1) and (r+1, r, r+2, r-1, ..., 2r+1, 0); for
// n = 2r they start at 1 resp. end at (..., 2r, 1).
IndexList zigzag_m_list(int n);
IndexList zigzag_u_list(int n);

enum class Mode { mld, index };

// The exponents of a loop-shaped equation in dimension n: b_0..b_n plus
// the last exponent v_n (mld mode), or b_0..b_{n-1} plus the replaced head
// exponent b'_n, last exponent v'_n and constant E_n (index mode, where
// the defining divisions by 2 resp. 3 are checked to be exact).
struct ExponentSystem {
  int n = 0;
  int r = 0;
  Mode mode = Mode::mld;
  std::vector<Int> b;  // b_0..b_n; in index mode b[n] holds b'_n
  Int last_exponent;   // v_n or v'_n
  Int big_e;           // E_n; only meaningful in index mode
  bool even() const { return n % 2 == 0; }
};

// Systems are computed eagerly and cached immutably per (n, mode);
// families and verifiers share them. Thread-safe.
std::shared_ptr<const ExponentSystem> mld_exponents(int n);
std::shared_ptr<const ExponentSystem> index_exponents(int n);

// The three zig-zag sums tied together by the product formula
// (s_k - 1) g_k t_k - 1 = b_k ... b_{2r+1-k} w_k, for 0 <= k <= r+1.
// g is the ends-in sum, t the middle-out sum, and w the bracketed
// alternating combination of middle-out sums; w_0 = v_{2r+1} and
// w_1 = v_{2r}.
struct Gtw {
  Int g, t, w;
};
Gtw gtw(int r, int k);

// b'_n, u'_n, m'_n and E_n without the last exponent v'_n, which a deep
// gcd scan never needs.
struct IndexCore {
  Int b_prime, u_prime, m_prime, big_e;
};
IndexCore index_core(int n);

Int m_value(int n);  // B over zigzag_m_list(n)
Int u_value(int n);  // B over zigzag_u_list(n)

// Shared immutable prefix b_0..b_{count-1} of the exponent vector attached
// to the dimension pair (2r, 2r+1); count <= 2r+2.
std::shared_ptr<const std::vector<Int>> exponent_prefix(int r, int count);

}  // namespace excy::altsum
