#pragma once

#include <functional>
#include <string>
#include <vector>

#include "excy/asymptotics.hpp"
#include "excy/numeric.hpp"

namespace excy::verify {

enum class Status { pass, fail, inconclusive };

// Every comparison behind a check is exact-rational or certified-interval;
// a failing check always carries a witness with the exact values involved.
struct CheckResult {
  std::string name;
  std::string params;
  Status status = Status::pass;
  std::string witness;
};

struct VerificationReport {
  std::string suite;
  std::string parameter_range;
  std::vector<CheckResult> checks;
  bool all_pass() const;
  int failures() const;
};

// Product formula (s_k-1) g_k t_k - 1 = b_k...b_{2r+1-k} w_k together with
// the descent identity g_k - s_k g_{k+1} = (s_k-1) b_{k+1}...b_{2r-k} w_{k+1},
// swept over 1 <= r <= max_r and all admissible k.
VerificationReport product_formulas(int max_r);
VerificationReport qk_formulas(int max_r);  // the descent identity alone

// The per-dimension suites fan out across dimensions when jobs > 1; the
// report order is by dimension regardless of completion order.

// Calabi-Yau sums for the loop families: degree = weight sum via the charge
// computation AND via the term-by-term telescoping expansion; plus the
// small-volume family's canonical degree 1 - a_{n+1} (which is not 0).
VerificationReport calabi_yau_sums(int max_n, int jobs = 1);

// m'u' - 1 = (head product) v' in both parities, the analogous mu - 1
// identity of the small-mld family, and E_n = b'_n - b_n + 1.
VerificationReport index_identity(int max_n, int jobs = 1);

// d - sum_{j<=n} c_j = 1, c_{n+1} = m_n, canonical degree 1 - m.
VerificationReport pair_degree(int max_n, int jobs = 1);

// The cover and the small-mld hypersurface agree in the chart x_{n+1} = 1,
// and the cover has canonical degree 0.
VerificationReport cover_identity(int max_n, int jobs = 1);

// gcd(m'_n, E_n) = 1 for 2 <= n <= max_n; deterministic output order for
// any job count. Each check's witness holds the gcd as a decimal string.
// The optional table receives the full exact values; on_row is invoked in
// dimension order as results become available.
struct ScanRow {
  int n = 0;
  Int m_prime, big_e, gcd_value;
};
VerificationReport scan_gcd_conjecture(int max_n, int jobs, std::vector<ScanRow>* table,
                                       const std::function<void(const CheckResult&)>& on_row);
VerificationReport scan_gcd_conjecture(int max_n, int jobs = 1);

// Volume and mld bounds against the alpha enclosure: 1/m_n <= alpha/(s_{n+1}-1)
// (even) resp. (3 alpha^2/4)/(s_{n+1}-1) (odd); m'_n >= (s_n-1)(2s_n-3)
// over 9 alpha/8 resp. 6 alpha^2/7; volume < 1/2^(2^n) and m_n > 2^(2^n)
// for n > 2. A too-wide enclosure yields inconclusive, never a false pass.
VerificationReport asymptotic_bounds(int max_n, int alpha_terms = asymptotics::kDefaultAlphaTerms,
                                     int jobs = 1);

// Closed-form loop inverse against the fraction-free elimination oracle on
// seeded random odd-size loop matrices.
VerificationReport loop_inverse_oracle(int samples, int min_size, int max_size, int max_entry,
                                       unsigned long seed);

// Feeds each suite's comparison a deliberately perturbed fixture and passes
// exactly when the perturbation is rejected with a witness.
VerificationReport negative_controls();

// Building blocks exposed for the negative controls and tests: compare the
// two sides of an identity, producing a witness on mismatch.
CheckResult check_equal(const std::string& name, const std::string& params, const Int& lhs,
                        const Int& rhs);
CheckResult check_equal(const std::string& name, const std::string& params, const Rat& lhs,
                        const Rat& rhs);
CheckResult check_gcd_entry(int n, const Int& m_prime, const Int& big_e);

}  // namespace excy::verify
