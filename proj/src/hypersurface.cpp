#include "excy/hypersurface.hpp"

#include <algorithm>

namespace excy::hypersurface {

void validate(const WeightedHypersurface& h) {
  const size_t vars = h.weights.size();
  if (static_cast<int>(vars) != h.dim + 2)
    throw std::invalid_argument("hypersurface: variable count must be dim + 2");
  for (const Int& w : h.weights)
    if (w <= 0) throw std::invalid_argument("hypersurface: weights must be positive");
  if (h.degree <= 0) throw std::invalid_argument("hypersurface: degree must be positive");
  Int g = 0;
  for (const Int& w : h.weights) g = gcd(g, w);
  if (g != 1) throw std::invalid_argument("hypersurface: weights must have gcd 1");
  if (h.monomials.empty()) throw std::invalid_argument("hypersurface: no monomials");
  for (const Monomial& m : h.monomials) {
    if (m.exponents.size() != vars)
      throw std::invalid_argument("hypersurface: monomial arity mismatch");
    Int deg = 0;
    bool positive = false;
    for (size_t j = 0; j < vars; ++j) {
      if (m.exponents[j] < 0) throw std::invalid_argument("hypersurface: negative exponent");
      if (m.exponents[j] > 0) positive = true;
      deg += m.exponents[j] * h.weights[j];
    }
    if (!positive) throw std::invalid_argument("hypersurface: constant monomial");
    if (deg != h.degree)
      throw std::invalid_argument("hypersurface: monomial of degree " + deg.get_str() +
                                  " in equation of degree " + h.degree.get_str());
  }
}

ExponentMatrix exponent_matrix(const WeightedHypersurface& h) {
  if (h.monomials.size() != h.weights.size())
    throw std::invalid_argument("exponent_matrix: monomial count must equal variable count");
  ExponentMatrix m;
  m.reserve(h.monomials.size());
  for (const Monomial& mono : h.monomials) m.push_back(mono.exponents);
  return m;
}

ExponentMatrix transpose(const ExponentMatrix& m) {
  if (m.empty()) return {};
  ExponentMatrix t(m[0].size(), std::vector<Int>(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

RatMatrix loop_inverse(std::span<const Int> diag) {
  const size_t k = diag.size();
  if (k < 3 || k % 2 == 0)
    throw std::invalid_argument("loop_inverse: size must be odd and at least 3");
  Int det = product(diag) + 1;  // e_1...e_k + (-1)^{k-1}
  RatMatrix inv(k, std::vector<Rat>(k));
  for (size_t j = 0; j < k; ++j) {
    // column j: entry at row i = (-1)^{l-1} e_{j+1}...e_{j+l-1} / det,
    // where l = i - j mod k in 1..k
    Int run = 1;
    for (size_t l = 1; l <= k; ++l) {
      size_t i = (j + l) % k;
      inv[i][j] = fraction((l % 2 == 1) ? run : -run, det);
      run *= diag[(j + l) % k];
    }
  }
  return inv;
}

namespace {

void require_square(const ExponentMatrix& m, const char* who) {
  if (m.empty()) throw std::invalid_argument(std::string(who) + ": empty matrix");
  for (const auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument(std::string(who) + ": not square");
}

}  // namespace

RatMatrix rational_inverse_oracle(const ExponentMatrix& m) {
  require_square(m, "rational_inverse_oracle");
  const size_t n = m.size();
  // Augmented [M | I], reduced by one-step fraction-free Gauss-Jordan;
  // all divisions below are exact.
  std::vector<std::vector<Int>> w(n, std::vector<Int>(2 * n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) w[i][j] = m[i][j];
    w[i][n + i] = 1;
  }
  Int prev = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && w[p][k] == 0) ++p;
    if (p == n) throw singular_matrix_error("rational_inverse_oracle: singular matrix");
    if (p != k) std::swap(w[p], w[k]);
    for (size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        w[i][j] = exact_div(w[k][k] * w[i][j] - w[i][k] * w[k][j], prev, "bareiss");
      }
      w[i][k] = 0;
    }
    prev = w[k][k];
  }
  RatMatrix inv(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = fraction(w[i][n + j], w[i][i]);
  return inv;
}

Int determinant(const ExponentMatrix& m) {
  require_square(m, "determinant");
  const size_t n = m.size();
  std::vector<std::vector<Int>> w = m;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t p = k;
    while (p < n && w[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(w[p], w[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        w[i][j] = exact_div(w[k][k] * w[i][j] - w[i][k] * w[k][j], prev, "bareiss det");
    prev = w[k][k];
  }
  return sign * w[n - 1][n - 1];
}

namespace {

struct HeadTail {
  int head;
  int tail;  // -1 for a pure power
};

// Resolve the head/tail reading of each monomial (the head variable is the
// one carrying the matrix diagonal). A x_i * x_j monomial is ambiguous and
// gets settled by the requirement that heads are a bijection onto the
// variables.
bool assign_heads(const std::vector<std::vector<Int>>& rows, std::vector<HeadTail>& out) {
  const size_t n = rows.size();
  struct Option {
    HeadTail a, b;
    int count;
  };
  std::vector<Option> options(n);
  for (size_t i = 0; i < n; ++i) {
    std::vector<int> support;
    for (size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j] != 0) support.push_back(static_cast<int>(j));
    if (support.empty() || support.size() > 2) return false;
    if (support.size() == 1) {
      options[i] = {{support[0], -1}, {}, 1};
    } else {
      int a = support[0], b = support[1];
      const Int& ea = rows[i][static_cast<size_t>(a)];
      const Int& eb = rows[i][static_cast<size_t>(b)];
      if (ea == 1 && eb == 1)
        options[i] = {{a, b}, {b, a}, 2};
      else if (eb == 1)
        options[i] = {{a, b}, {}, 1};
      else if (ea == 1)
        options[i] = {{b, a}, {}, 1};
      else
        return false;  // both exponents > 1: not an invertible-polynomial monomial
    }
  }
  // Backtracking over the (rare) ambiguous rows.
  out.assign(n, {-1, -1});
  std::vector<char> head_used(rows[0].size(), 0);
  auto rec = [&](auto&& self, size_t i) -> bool {
    if (i == n) return true;
    const Option& opt = options[i];
    for (int c = 0; c < opt.count; ++c) {
      const HeadTail& ht = c == 0 ? opt.a : opt.b;
      if (head_used[static_cast<size_t>(ht.head)]) continue;
      head_used[static_cast<size_t>(ht.head)] = 1;
      out[i] = ht;
      if (self(self, i + 1)) return true;
      head_used[static_cast<size_t>(ht.head)] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

ShapeReport classify_rows(const std::vector<std::vector<Int>>& rows) {
  ShapeReport report;
  if (rows.empty()) return report;
  const size_t n = rows[0].size();
  for (const auto& row : rows)
    if (row.size() != n) return report;
  if (rows.size() != n) return report;  // heads must biject onto variables

  std::vector<HeadTail> ht;
  if (!assign_heads(rows, ht)) return report;

  std::vector<int> row_of_head(n, -1), tail(n, -1), indegree(n, 0);
  for (size_t i = 0; i < rows.size(); ++i) {
    row_of_head[static_cast<size_t>(ht[i].head)] = static_cast<int>(i);
    tail[static_cast<size_t>(ht[i].head)] = ht[i].tail;
    if (ht[i].tail >= 0) ++indegree[static_cast<size_t>(ht[i].tail)];
  }
  for (size_t v = 0; v < n; ++v)
    if (indegree[v] > 1) return report;  // not a disjoint union of shapes

  auto head_exp = [&](int v) -> const Int& {
    return rows[static_cast<size_t>(row_of_head[static_cast<size_t>(v)])][static_cast<size_t>(v)];
  };

  std::vector<char> seen(n, 0);
  // Chains and Fermat pieces: walk forward from the in-degree-0 variables.
  for (size_t start = 0; start < n; ++start) {
    if (indegree[start] != 0 || seen[start]) continue;
    ShapeComponent comp;
    int v = static_cast<int>(start);
    while (true) {
      seen[static_cast<size_t>(v)] = 1;
      comp.variables.push_back(v);
      comp.exponents.push_back(head_exp(v));
      comp.monomial_rows.push_back(row_of_head[static_cast<size_t>(v)]);
      int next = tail[static_cast<size_t>(v)];
      if (next < 0) break;
      if (seen[static_cast<size_t>(next)]) return {};  // path feeding a cycle
      v = next;
    }
    comp.kind = comp.variables.size() == 1 ? ComponentKind::fermat : ComponentKind::chain;
    report.components.push_back(std::move(comp));
  }
  // Everything left lies on cycles.
  for (size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ShapeComponent comp;
    comp.kind = ComponentKind::loop;
    int v = static_cast<int>(start);
    do {
      seen[static_cast<size_t>(v)] = 1;
      comp.variables.push_back(v);
      comp.exponents.push_back(head_exp(v));
      comp.monomial_rows.push_back(row_of_head[static_cast<size_t>(v)]);
      v = tail[static_cast<size_t>(v)];
      if (v < 0) return {};  // cannot happen: cycles have tails
    } while (v != static_cast<int>(start));
    if (comp.variables.size() < 2) return {};
    report.components.push_back(std::move(comp));
  }

  report.classified = true;
  report.quasi_smooth = true;
  for (const ShapeComponent& comp : report.components) {
    bool some_big = std::any_of(comp.exponents.begin(), comp.exponents.end(),
                                [](const Int& e) { return e >= 2; });
    if (!some_big) report.quasi_smooth = false;  // all-ones shape carries no claim
  }
  return report;
}

ShapeReport classify_shape(const WeightedHypersurface& h) {
  std::vector<std::vector<Int>> rows;
  rows.reserve(h.monomials.size());
  for (const Monomial& m : h.monomials) rows.push_back(m.exponents);
  return classify_rows(rows);
}

namespace {

// Row sums of the inverse of an odd loop block: the sum for the variable at
// cycle position s is (1 - e_{s-1} + e_{s-1}e_{s-2} - ...) / (prod e + 1),
// an alternating product walk backward around the cycle.
void loop_charges(const ShapeComponent& comp, std::vector<Rat>& q) {
  const size_t k = comp.exponents.size();
  Int det = product(comp.exponents) + 1;
  for (size_t s = 0; s < k; ++s) {
    Int acc = 1;
    Int run = 1;
    for (size_t l = 1; l < k; ++l) {
      run *= comp.exponents[(s + k - l) % k];
      acc += (l % 2 == 1) ? -run : run;
    }
    q[static_cast<size_t>(comp.variables[s])] = fraction(acc, det);
  }
}

// Chain block in head-to-terminal order is upper bidiagonal, so the row
// sums satisfy e_i q_i + q_{i+1} = 1 with q_{k-1} = 1/e_{k-1}.
void chain_charges(const ShapeComponent& comp, std::vector<Rat>& q) {
  const size_t k = comp.exponents.size();
  Rat next = 0;
  for (size_t i = k; i-- > 0;) {
    Rat cur = (1 - next) / Rat(comp.exponents[i]);
    q[static_cast<size_t>(comp.variables[i])] = cur;
    next = cur;
  }
}

}  // namespace

ChargeVector charges(const ExponentMatrix& m) {
  require_square(m, "charges");
  const size_t n = m.size();
  ShapeReport shape = classify_rows(m);
  bool fast = shape.classified;
  if (fast) {
    for (const ShapeComponent& comp : shape.components)
      if (comp.kind == ComponentKind::loop && comp.variables.size() % 2 == 0) fast = false;
  }
  ChargeVector out;
  out.charges.assign(n, Rat(0));
  if (!fast) {
    RatMatrix inv = rational_inverse_oracle(m);
    for (size_t i = 0; i < n; ++i) {
      Rat sum = 0;
      for (size_t j = 0; j < n; ++j) sum += inv[i][j];
      out.charges[i] = sum;
    }
    return out;
  }
  for (const ShapeComponent& comp : shape.components) {
    switch (comp.kind) {
      case ComponentKind::fermat:
        out.charges[static_cast<size_t>(comp.variables[0])] = fraction(1, comp.exponents[0]);
        break;
      case ComponentKind::loop:
        loop_charges(comp, out.charges);
        break;
      case ComponentKind::chain:
        chain_charges(comp, out.charges);
        break;
    }
  }
  return out;
}

ChargeVector mirror_charges(const ExponentMatrix& m) { return charges(transpose(m)); }

std::pair<std::vector<Int>, Int> weights_and_degree(const ExponentMatrix& m) {
  ChargeVector q = charges(m);
  Int d = 1;
  for (const Rat& c : q.charges) {
    if (c <= 0)
      throw std::domain_error("weights_and_degree: nonpositive charge " + c.get_str() +
                              "; equation is not of hypersurface type");
    d = lcm(d, c.get_den());
  }
  std::vector<Int> weights;
  weights.reserve(q.charges.size());
  for (const Rat& c : q.charges)
    weights.push_back(exact_div(d * c.get_num(), c.get_den(), "weights_and_degree"));
  return {std::move(weights), std::move(d)};
}

Int canonical_degree(const WeightedHypersurface& h) {
  Int sum = 0;
  for (const Int& w : h.weights) sum += w;
  return h.degree - sum;
}

Rat volume_O1(const WeightedHypersurface& h) {
  return fraction(h.degree, product(h.weights));
}

bool wps_well_formed(std::span<const Int> weights) {
  const size_t n = weights.size();
  for (const Int& w : weights)
    if (w <= 0) throw std::invalid_argument("wps_well_formed: weights must be positive");
  if (n <= 1) return true;
  std::vector<Int> prefix(n + 1, 0), suffix(n + 1, 0);
  for (size_t i = 0; i < n; ++i) prefix[i + 1] = gcd(prefix[i], weights[i]);
  for (size_t i = n; i-- > 0;) suffix[i] = gcd(suffix[i + 1], weights[i]);
  for (size_t j = 0; j < n; ++j)
    if (gcd(prefix[j], suffix[j + 1]) != 1) return false;
  return true;
}

namespace {

// Does the equation vanish identically on the stratum where exactly the
// variables outside `off` survive? True iff every monomial involves some
// variable in `off`.
bool contains_stratum(const WeightedHypersurface& h, std::span<const int> off) {
  for (const Monomial& m : h.monomials) {
    bool hits = false;
    for (int j : off)
      if (m.exponents[static_cast<size_t>(j)] > 0) {
        hits = true;
        break;
      }
    if (!hits) return false;
  }
  return true;
}

// Looks for a coordinate stratum with nontrivial stabilizer, contained in
// the hypersurface, whose dimension violates the codimension-2 bound.
// Given a well-formed ambient space, a violation can only come from strata
// with at most two coordinates removed.
bool stratum_violation(const WeightedHypersurface& h) {
  const size_t n = h.weights.size();
  std::vector<Int> prefix(n + 1, 0), suffix(n + 1, 0);
  for (size_t i = 0; i < n; ++i) prefix[i + 1] = gcd(prefix[i], h.weights[i]);
  for (size_t i = n; i-- > 0;) suffix[i] = gcd(suffix[i + 1], h.weights[i]);
  for (size_t i = 0; i < n; ++i) {
    // strata missing the pair {i, j}; rolling gcd over the middle segment
    Int acc = prefix[i];
    for (size_t j = i + 1; j < n; ++j) {
      Int g = gcd(acc, suffix[j + 1]);
      if (g > 1) {
        int off[2] = {static_cast<int>(i), static_cast<int>(j)};
        if (contains_stratum(h, off)) return true;
      }
      acc = gcd(acc, h.weights[j]);
    }
  }
  return false;
}

}  // namespace

Verdict hypersurface_well_formed(const WeightedHypersurface& h) {
  validate(h);
  if (!wps_well_formed(h.weights)) return Verdict::not_well_formed;
  if (h.dim >= 3) {
    bool degree_hits_weight =
        std::any_of(h.weights.begin(), h.weights.end(), [&](const Int& w) { return w == h.degree; });
    if (!degree_hits_weight && classify_shape(h).quasi_smooth) return Verdict::well_formed;
  }
  if (stratum_violation(h)) return Verdict::not_well_formed;
  // The stratum accounting is decisive in dimension 2 (strata are points or
  // curves); higher-dimensional non-quasi-smooth cases make no claim.
  return h.dim == 2 ? Verdict::well_formed : Verdict::inconclusive;
}

ToricAut toric_automorphism_order(const ExponentMatrix& m, const Int& degree) {
  ShapeReport shape = classify_rows(m);
  if (!shape.classified)
    throw unsupported_shape_error("toric_automorphism_order: equation is not of loop type");
  const ShapeComponent* loop = nullptr;
  const ShapeComponent* fermat = nullptr;
  for (const ShapeComponent& comp : shape.components) {
    if (comp.kind == ComponentKind::loop && !loop)
      loop = &comp;
    else if (comp.kind == ComponentKind::fermat && !fermat)
      fermat = &comp;
    else
      throw unsupported_shape_error("toric_automorphism_order: unsupported shape");
  }
  if (!loop || loop->variables.size() % 2 == 0)
    throw unsupported_shape_error("toric_automorphism_order: need a single odd loop");
  Int det = product(loop->exponents) + 1;
  ToricAut out;
  if (fermat) {
    if (fermat->exponents[0] != 2)
      throw unsupported_shape_error("toric_automorphism_order: Fermat part must be a square");
    det *= 2;
    out.structure = AutStructure::mu2_times_cyclic;
  } else {
    out.structure = AutStructure::cyclic;
  }
  out.order = exact_div(det, degree, "toric_automorphism_order");
  return out;
}

}  // namespace excy::hypersurface
