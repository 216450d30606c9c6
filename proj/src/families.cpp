#include "excy/families.hpp"

#include "excy/altsum.hpp"
#include "excy/sylvester.hpp"

namespace excy::families {

using hypersurface::Monomial;
using hypersurface::WeightedHypersurface;

const char* family_tag(Family f) {
  switch (f) {
    case Family::small_volume: return "small-volume";
    case Family::esser_mld: return "esser-mld";
    case Family::pair_mld: return "pair-mld";
    case Family::large_index: return "large-index";
    case Family::kollar: return "kollar";
    case Family::liu: return "liu";
    case Family::index1_cover: return "index1-cover";
  }
  return "?";
}

std::optional<Family> family_from_tag(const std::string& tag) {
  for (Family f : {Family::small_volume, Family::esser_mld, Family::pair_mld,
                   Family::large_index, Family::kollar, Family::liu, Family::index1_cover})
    if (tag == family_tag(f)) return f;
  return std::nullopt;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw internal_error(what);
}

void check_dim(int n, bool allow_beyond_cap) {
  if (n < 2) throw std::invalid_argument("family builders require dimension >= 2");
  if (n > kDefaultDimCap && !allow_beyond_cap)
    throw std::invalid_argument("dimension " + std::to_string(n) +
                                " beyond the safety cap; values grow doubly exponentially");
}

Monomial pure_power(size_t vars, int head, const Int& e) {
  Monomial m;
  m.exponents.assign(vars, 0);
  m.exponents[static_cast<size_t>(head)] = e;
  return m;
}

Monomial power_times(size_t vars, int head, const Int& e, int tail) {
  Monomial m = pure_power(vars, head, e);
  m.exponents.at(static_cast<size_t>(tail)) += 1;
  return m;
}

// Tail of the loop equations: variable i is followed by 2r+2-i on the
// first half and 2r+1-i on the second.
int loop_tail(int n, int i) {
  int r = n / 2;
  return i <= r ? 2 * r + 2 - i : 2 * r + 1 - i;
}

// The loop equation shared by the small-mld and large-index families:
// heads 0..n carry b (with the family's own last head exponent), the extra
// variable carries last_exp and feeds the middle variable r+1.
std::vector<Monomial> loop_equation(int n, std::span<const Int> b, const Int& last_exp) {
  const size_t vars = static_cast<size_t>(n) + 2;
  std::vector<Monomial> out;
  out.reserve(vars);
  for (int i = 0; i <= n; ++i) {
    if (n % 2 == 0 && i == 0)
      out.push_back(pure_power(vars, 0, b[0]));
    else
      out.push_back(power_times(vars, i, b[static_cast<size_t>(i)], loop_tail(n, i)));
  }
  out.push_back(power_times(vars, n + 1, last_exp, n / 2 + 1));
  return out;
}

// The chain equation of the boundary pair and its cover: the loop is cut
// open at x_0 (and at x_1 in even dimensions), i.e. those heads become
// pure powers, and the extra variable carries last_exp.
std::vector<Monomial> chain_equation(int n, std::span<const Int> b, const Int& last_exp) {
  const size_t vars = static_cast<size_t>(n) + 2;
  std::vector<Monomial> out;
  out.reserve(vars);
  out.push_back(pure_power(vars, 0, b[0]));
  for (int i = 1; i <= n; ++i) {
    if (n % 2 == 0 && i == 1)
      out.push_back(pure_power(vars, 1, b[1]));
    else
      out.push_back(power_times(vars, i, b[static_cast<size_t>(i)], loop_tail(n, i)));
  }
  out.push_back(power_times(vars, n + 1, last_exp, n / 2 + 1));
  return out;
}

std::vector<std::vector<Int>> rows_of(const std::vector<Monomial>& monos) {
  std::vector<std::vector<Int>> rows;
  rows.reserve(monos.size());
  for (const Monomial& m : monos) rows.push_back(m.exponents);
  return rows;
}

Rat smallest_charge(const hypersurface::ChargeVector& q) {
  Rat best = q.charges.at(0);
  for (const Rat& c : q.charges) best = std::min(best, c);
  return best;
}

Int weight_sum(std::span<const Int> w) {
  Int s = 0;
  for (const Int& x : w) s += x;
  return s;
}

// Every monomial must pick up the same total action weight mod order.
void check_action(const WeightedHypersurface& h, std::span<const Int> action, const Int& order) {
  Int first = -1;
  for (const Monomial& m : h.monomials) {
    Int total = 0;
    for (size_t j = 0; j < action.size(); ++j) total += m.exponents[j] * action[j];
    total = mod_nonneg(total, order);
    if (first < 0)
      first = total;
    else
      require(total == first, "group action does not preserve the equation");
  }
}

void cross_check_weights(const std::vector<Monomial>& monos, std::span<const Int> weights,
                         const Int& degree) {
  auto [a, d] = hypersurface::weights_and_degree(rows_of(monos));
  require(d == degree, "charge degree " + d.get_str() + " != " + degree.get_str());
  require(std::equal(a.begin(), a.end(), weights.begin(), weights.end()),
          "charge weights disagree with closed-form weights");
}

}  // namespace

std::pair<Int, std::vector<Int>> pair_degree_and_weights(int n) {
  if (n < 2) throw std::invalid_argument("pair_degree_and_weights: n must be >= 2");
  auto sys = altsum::mld_exponents(n);
  const std::vector<Int>& b = sys->b;
  const int r = sys->r;
  Int d = product(b);

  // Alternating sums over every prefix of the m subscript list.
  altsum::IndexList mlist = altsum::zigzag_m_list(n);
  std::vector<Int> prefix_b(mlist.size() + 1);
  {
    Int acc = 1, run = 1;
    prefix_b[0] = acc;
    for (size_t i = 0; i < mlist.size(); ++i) {
      run *= b[static_cast<size_t>(mlist[i])];
      acc = run - acc;
      prefix_b[i + 1] = acc;
    }
  }
  // Products b_lo ... b_hi (empty when lo > hi).
  std::vector<Int> pp(b.size() + 1);
  pp[0] = 1;
  for (size_t i = 0; i < b.size(); ++i) pp[i + 1] = pp[i] * b[i];
  auto range = [&](int lo, int hi) {
    if (lo > hi) return Int(1);
    return exact_div(pp[static_cast<size_t>(hi) + 1], pp[static_cast<size_t>(lo)], "range product");
  };

  std::vector<Int> c(static_cast<size_t>(n) + 2);
  if (n % 2 == 1) {
    for (int i = 0; i <= r; ++i) {
      c[static_cast<size_t>(r + 1 + i)] =
          range(r + 1 - i, r) * range(r + 1, r + i) * prefix_b[static_cast<size_t>(2 * (r - i) + 1)];
      c[static_cast<size_t>(r - i)] =
          range(r + 1 - i, r) * range(r + 1, r + 1 + i) * prefix_b[static_cast<size_t>(2 * (r - i))];
    }
  } else {
    c[0] = range(1, 2 * r);
    for (int i = 0; i <= r - 1; ++i) {
      c[static_cast<size_t>(r + 1 + i)] =
          2 * range(r + 1 - i, r) * range(r + 1, r + i) * prefix_b[static_cast<size_t>(2 * (r - i) - 1)];
      c[static_cast<size_t>(r - i)] = 2 * range(r + 1 - i, r) * range(r + 1, r + 1 + i) *
                                      prefix_b[static_cast<size_t>(2 * (r - 1 - i))];
    }
  }
  c[static_cast<size_t>(n) + 1] = prefix_b.back();  // m_n
  return {std::move(d), std::move(c)};
}

FamilyRecord small_volume_pair(int n, bool allow_beyond_cap) {
  check_dim(n, allow_beyond_cap);
  FamilyRecord rec;
  rec.family = Family::small_volume;
  rec.dim = n;

  Int d = sylvester::value(n + 1) - 1;
  std::vector<Int> a;
  a.reserve(static_cast<size_t>(n) + 2);
  for (int i = 0; i <= n; ++i) a.push_back(exact_div(d, sylvester::value(i), "small_volume weight"));
  const Int& s_n = sylvester::value(n);
  Int last = (n % 2 == 0) ? exact_div(s_n * s_n - s_n + 2, 4, "small_volume last weight")
                          : exact_div(s_n * s_n - 3 * s_n + 4, 4, "small_volume last weight");
  require(last % 2 == 1, "small_volume: last weight must be odd");
  a.push_back(last);

  const size_t vars = static_cast<size_t>(n) + 2;
  std::vector<Monomial> monos;
  monos.reserve(vars);
  for (int i = 0; i <= n; ++i) monos.push_back(pure_power(vars, i, sylvester::value(i)));
  Monomial mixed;
  mixed.exponents.assign(vars, 0);
  for (int i = 1; i <= n; ++i) mixed.exponents[static_cast<size_t>(i)] = 1;
  if (n % 2 == 1) mixed.exponents[static_cast<size_t>(n)] = 2;
  mixed.exponents[vars - 1] = 2;
  monos.push_back(std::move(mixed));

  WeightedHypersurface h{a, d, std::move(monos), n};
  hypersurface::validate(h);
  if (n <= 10) cross_check_weights(h.monomials, h.weights, h.degree);

  Rat vol = fraction(1, int_pow(d, static_cast<unsigned long>(n - 1)) * last);
  require(vol == hypersurface::volume_O1(h), "small_volume: volume formula mismatch");
  Int kdeg = hypersurface::canonical_degree(h);
  require(kdeg == 1 - last, "small_volume: canonical degree mismatch");

  require(hypersurface::wps_well_formed(h.weights), "small_volume: ambient space not well-formed");
  rec.space_verdict = hypersurface::Verdict::well_formed;
  rec.surface_verdict = hypersurface::hypersurface_well_formed(h);
  require(rec.surface_verdict != hypersurface::Verdict::not_well_formed,
          "small_volume: hypersurface not well-formed");

  rec.boundary = Boundary{n + 1, Rat(1)};
  rec.ints["canonical_degree"] = kdeg;
  rec.rats["volume"] = vol;
  rec.hsurf = std::move(h);
  return rec;
}

FamilyRecord esser_mld(int n, bool allow_beyond_cap) {
  check_dim(n, allow_beyond_cap);
  FamilyRecord rec;
  rec.family = Family::esser_mld;
  rec.dim = n;

  auto sys = altsum::mld_exponents(n);
  std::vector<Monomial> monos = loop_equation(n, sys->b, sys->last_exponent);
  auto rows = rows_of(monos);
  auto [a, d] = hypersurface::weights_and_degree(rows);

  Int m = altsum::m_value(n);
  Int u = altsum::u_value(n);
  const bool even = n % 2 == 0;

  require(a.back() == 1, "esser: last weight must be 1, got " + a.back().get_str());
  require(d == (even ? Int(2 * u) : u), "esser: degree " + d.get_str() + " does not match u");
  require(d == weight_sum(a), "esser: not Calabi-Yau, degree != weight sum");

  // Product-formula specialization tying m, u and the equation data.
  Int bprod = product(sys->b);
  if (even) {
    require(2 * m * u - 1 == exact_div(bprod, sys->b[0], "esser") * sys->last_exponent,
            "esser: 2mu - 1 identity failed");
  } else {
    require(m * u - 1 == bprod * sys->last_exponent, "esser: mu - 1 identity failed");
  }

  hypersurface::ToricAut aut = hypersurface::toric_automorphism_order(rows, d);
  require(aut.order == (even ? Int(2 * m) : m), "esser: toric automorphism order mismatch");
  require(aut.structure == (even ? hypersurface::AutStructure::mu2_times_cyclic
                                 : hypersurface::AutStructure::cyclic),
          "esser: toric automorphism structure mismatch");

  // Smallest mirror charge: 1/m for a pure loop; the x0^2 block in even
  // dimensions doubles the denominator.
  Rat mirror_min = smallest_charge(hypersurface::mirror_charges(rows));
  require(mirror_min == (even ? fraction(1, 2 * m) : fraction(1, m)),
          "esser: smallest mirror charge mismatch: " + mirror_min.get_str());

  if (n > 2) require(m > two_to_two_to(n), "esser: m fails the doubly exponential bound");

  WeightedHypersurface h{std::move(a), d, std::move(monos), n};
  hypersurface::validate(h);
  require(hypersurface::canonical_degree(h) == 0, "esser: canonical degree must be 0");
  rec.space_verdict = hypersurface::wps_well_formed(h.weights)
                          ? hypersurface::Verdict::well_formed
                          : hypersurface::Verdict::not_well_formed;
  require(rec.space_verdict == hypersurface::Verdict::well_formed,
          "esser: ambient space not well-formed");
  rec.surface_verdict = hypersurface::hypersurface_well_formed(h);
  require(rec.surface_verdict == hypersurface::Verdict::well_formed,
          "esser: hypersurface well-formedness not established");

  // mu_m acts with the cover weights of the boundary pair on x_0..x_n.
  auto [pd, c] = pair_degree_and_weights(n);
  (void)pd;
  std::vector<Int> action;
  action.reserve(static_cast<size_t>(n) + 2);
  for (int j = 0; j <= n; ++j) action.push_back(mod_nonneg(c[static_cast<size_t>(j)], m));
  action.push_back(0);
  check_action(h, action, m);

  rec.ints["m"] = m;
  rec.ints["u"] = u;
  rec.ints["v"] = sys->last_exponent;
  rec.ints["group_order"] = m;
  rec.ints["canonical_degree"] = 0;
  rec.rats["mld"] = fraction(1, m);
  rec.action_weights = std::move(action);
  rec.hsurf = std::move(h);
  return rec;
}

FamilyRecord pair_mld(int n, bool allow_beyond_cap) {
  check_dim(n, allow_beyond_cap);
  FamilyRecord rec;
  rec.family = Family::pair_mld;
  rec.dim = n;

  auto sys = altsum::mld_exponents(n);
  auto [d, c] = pair_degree_and_weights(n);
  const Int m = c.back();

  Int head_sum = 0;
  for (int j = 0; j <= n; ++j) head_sum += c[static_cast<size_t>(j)];
  require(d - head_sum == 1, "pair: degree identity d - sum c_j = 1 failed");
  require(m == altsum::m_value(n), "pair: last weight is not m");

  std::vector<Monomial> monos = chain_equation(n, sys->b, Int(n % 2 == 1 ? 1 : 2));
  WeightedHypersurface h{c, d, std::move(monos), n};
  hypersurface::validate(h);
  cross_check_weights(h.monomials, h.weights, h.degree);

  Int kdeg = hypersurface::canonical_degree(h);
  require(kdeg == 1 - m, "pair: canonical degree must be 1 - m");

  require(hypersurface::wps_well_formed(h.weights), "pair: ambient space not well-formed");
  rec.space_verdict = hypersurface::Verdict::well_formed;
  rec.surface_verdict = hypersurface::hypersurface_well_formed(h);
  require(rec.surface_verdict == hypersurface::Verdict::well_formed,
          "pair: hypersurface well-formedness not established");

  rec.boundary = Boundary{n + 1, fraction(m - 1, m)};
  rec.ints["m"] = m;
  rec.ints["canonical_degree"] = kdeg;
  rec.rats["mld"] = fraction(1, m);
  rec.hsurf = std::move(h);
  return rec;
}

FamilyRecord index1_cover(int n, bool allow_beyond_cap) {
  check_dim(n, allow_beyond_cap);
  FamilyRecord rec;
  rec.family = Family::index1_cover;
  rec.dim = n;

  auto sys = altsum::mld_exponents(n);
  auto [d, c] = pair_degree_and_weights(n);
  const Int m = c.back();

  std::vector<Int> w(c.begin(), c.end() - 1);
  w.push_back(1);
  Int last_exp = (n % 2 == 1) ? m : Int(2 * m);
  std::vector<Monomial> monos = chain_equation(n, sys->b, last_exp);
  WeightedHypersurface h{std::move(w), d, std::move(monos), n};
  hypersurface::validate(h);
  require(hypersurface::canonical_degree(h) == 0, "cover: canonical degree must be 0");
  cross_check_weights(h.monomials, h.weights, h.degree);

  require(hypersurface::wps_well_formed(h.weights), "cover: ambient space not well-formed");
  rec.space_verdict = hypersurface::Verdict::well_formed;
  rec.surface_verdict = hypersurface::hypersurface_well_formed(h);
  require(rec.surface_verdict == hypersurface::Verdict::well_formed,
          "cover: hypersurface well-formedness not established");

  // mu_m acts on the cover by rescaling the last coordinate only.
  std::vector<Int> action(static_cast<size_t>(n) + 1, 0);
  action.push_back(m - 1);
  check_action(h, action, m);

  rec.ints["m"] = m;
  rec.ints["group_order"] = m;
  rec.ints["canonical_degree"] = 0;
  rec.action_weights = std::move(action);
  rec.hsurf = std::move(h);
  return rec;
}

FamilyRecord large_index(int n, bool allow_beyond_cap) {
  check_dim(n, allow_beyond_cap);
  FamilyRecord rec;
  rec.family = Family::large_index;
  rec.dim = n;

  auto sys = altsum::index_exponents(n);
  altsum::IndexCore core = altsum::index_core(n);
  std::vector<Monomial> monos = loop_equation(n, sys->b, sys->last_exponent);
  auto rows = rows_of(monos);
  auto [a, d] = hypersurface::weights_and_degree(rows);
  const bool even = n % 2 == 0;

  require(d == (even ? Int(2 * core.u_prime) : core.u_prime),
          "large_index: degree does not match u'");
  require(a[a.size() - 1] == 1 && a[a.size() - 2] == 1,
          "large_index: last two weights must be 1");
  require(d == weight_sum(a), "large_index: not Calabi-Yau, degree != weight sum");

  // Index identity m'u' - 1 = (product of heads) * v'.
  Int head_prod = product(std::span<const Int>(sys->b.data(), sys->b.size() - 1));
  if (even) {
    require(2 * core.m_prime * core.u_prime - 1 ==
                exact_div(head_prod, sys->b[0], "large_index") * core.b_prime * sys->last_exponent,
            "large_index: 2m'u' - 1 identity failed");
  } else {
    require(core.m_prime * core.u_prime - 1 == head_prod * core.b_prime * sys->last_exponent,
            "large_index: m'u' - 1 identity failed");
  }

  hypersurface::ToricAut aut = hypersurface::toric_automorphism_order(rows, d);
  require(aut.order == (even ? Int(2 * core.m_prime) : core.m_prime),
          "large_index: toric automorphism order mismatch");

  Rat mirror_min = smallest_charge(hypersurface::mirror_charges(rows));
  require(mirror_min == (even ? fraction(core.big_e, 2 * core.m_prime)
                              : fraction(core.big_e, core.m_prime)),
          "large_index: smallest mirror charge mismatch: " + mirror_min.get_str());

  WeightedHypersurface h{std::move(a), d, std::move(monos), n};
  hypersurface::validate(h);
  require(hypersurface::canonical_degree(h) == 0, "large_index: canonical degree must be 0");
  require(hypersurface::wps_well_formed(h.weights),
          "large_index: ambient space not well-formed");
  rec.space_verdict = hypersurface::Verdict::well_formed;
  rec.surface_verdict = hypersurface::hypersurface_well_formed(h);
  require(rec.surface_verdict == hypersurface::Verdict::well_formed,
          "large_index: hypersurface well-formedness not established");

  Int g = gcd(core.m_prime, core.big_e);
  rec.ints["m_prime"] = core.m_prime;
  rec.ints["u_prime"] = core.u_prime;
  rec.ints["v_prime"] = sys->last_exponent;
  rec.ints["E"] = core.big_e;
  rec.ints["group_order"] = core.m_prime;
  rec.ints["gcd_check"] = g;
  // The index of the quotient equals m' exactly when gcd(m', E) = 1; that
  // is conjectural in general, so the value stays conditional.
  if (g == 1) rec.ints["index_conditional"] = core.m_prime;
  rec.ints["canonical_degree"] = 0;
  rec.hsurf = std::move(h);
  return rec;
}

Rat kollar_volume(int n) {
  if (n < 2) throw std::invalid_argument("kollar_volume: n must be >= 2");
  return fraction(1, int_pow(sylvester::value(n + 1) - 1, static_cast<unsigned long>(n)));
}

Rat liu_mld(int n) {
  if (n == 1) return fraction(1, 3);
  if (n < 1) throw std::invalid_argument("liu_mld: n must be >= 1");
  return fraction(1, sylvester::value(n + 1) - 1);
}

FamilyRecord kollar(int n) {
  if (n < 2) throw std::invalid_argument("kollar: n must be >= 2");
  FamilyRecord rec;
  rec.family = Family::kollar;
  rec.dim = n;
  for (int i = 0; i <= n; ++i)
    rec.pair_coefficients.push_back(fraction(sylvester::value(i) - 1, sylvester::value(i)));
  rec.pair_coefficients.push_back(Rat(1));
  rec.rats["volume"] = kollar_volume(n);
  return rec;
}

FamilyRecord liu(int n) {
  if (n < 2) throw std::invalid_argument("liu: n must be >= 2");
  FamilyRecord rec;
  rec.family = Family::liu;
  rec.dim = n;
  for (int i = 0; i <= n; ++i)
    rec.pair_coefficients.push_back(fraction(sylvester::value(i) - 1, sylvester::value(i)));
  const Int& s = sylvester::value(n + 1);
  rec.pair_coefficients.push_back(fraction(s - 2, s - 1));
  rec.rats["mld"] = liu_mld(n);
  return rec;
}

FamilyRecord build(Family f, int n, bool allow_beyond_cap) {
  switch (f) {
    case Family::small_volume: return small_volume_pair(n, allow_beyond_cap);
    case Family::esser_mld: return esser_mld(n, allow_beyond_cap);
    case Family::pair_mld: return pair_mld(n, allow_beyond_cap);
    case Family::large_index: return large_index(n, allow_beyond_cap);
    case Family::kollar: return kollar(n);
    case Family::liu: return liu(n);
    case Family::index1_cover: return index1_cover(n, allow_beyond_cap);
  }
  throw std::invalid_argument("build: unknown family");
}

}  // namespace excy::families
