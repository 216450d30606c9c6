#pragma once

#include <optional>
#include <vector>

#include "excy/numeric.hpp"

namespace excy::hypersurface {

struct Monomial {
  std::vector<Int> exponents;  // one entry per variable, at least one positive
  bool operator==(const Monomial&) const = default;
};

// A hypersurface of the given degree in P(weights), presented by the
// monomials of its equation. dim = #variables - 2.
struct WeightedHypersurface {
  std::vector<Int> weights;
  Int degree;
  std::vector<Monomial> monomials;
  int dim = 0;
  bool operator==(const WeightedHypersurface&) const = default;
};

// Type invariants: every monomial has the stated degree, gcd of weights is
// 1, variable count is dim + 2. Throws std::invalid_argument.
void validate(const WeightedHypersurface& h);

// Square integer matrix, one row of exponents per monomial.
using ExponentMatrix = std::vector<std::vector<Int>>;
using RatMatrix = std::vector<std::vector<Rat>>;

struct ChargeVector {
  std::vector<Rat> charges;  // row sums of the inverse exponent matrix
};

enum class ComponentKind { fermat, loop, chain };

struct ShapeComponent {
  ComponentKind kind;
  std::vector<int> variables;     // loop: cyclic order; chain: head to terminal
  std::vector<Int> exponents;     // head exponents in the same order
  std::vector<int> monomial_rows; // row headed by variables[i]
};

// Decomposition of the monomial set into Fermat/loop/chain pieces over
// disjoint variable sets. Such shapes are quasi-smooth for any positive
// head exponents (not all 1), so quasi_smooth is claimed exactly when the
// classification succeeds; anything else stays unclassified with no claim.
struct ShapeReport {
  bool classified = false;
  bool quasi_smooth = false;
  std::vector<ShapeComponent> components;
};

enum class Verdict { well_formed, not_well_formed, inconclusive };

ExponentMatrix exponent_matrix(const WeightedHypersurface& h);
ExponentMatrix transpose(const ExponentMatrix& m);

// Closed-form inverse of the odd-size loop matrix with the given diagonal,
// superdiagonal 1 and lower-left corner 1, scaled by 1/(prod diag + 1).
RatMatrix loop_inverse(std::span<const Int> diag);

// Exact inverse by fraction-free (Bareiss) Gauss-Jordan elimination; the
// independent check of the closed form above.
RatMatrix rational_inverse_oracle(const ExponentMatrix& m);

Int determinant(const ExponentMatrix& m);  // fraction-free triangulation

// Row sums of M^{-1}. Fermat and odd-loop blocks use closed forms, chain
// blocks a back-substitution recurrence, anything else the Gauss-Jordan
// oracle on the whole matrix.
ChargeVector charges(const ExponentMatrix& m);

// Charges of the transposed matrix (column sums of M^{-1}).
ChargeVector mirror_charges(const ExponentMatrix& m);

// Degree = least common denominator of the charges, weight_i = D q_i.
// Throws std::domain_error if some charge is not positive (the equation is
// not of hypersurface type).
std::pair<std::vector<Int>, Int> weights_and_degree(const ExponentMatrix& m);

Int canonical_degree(const WeightedHypersurface& h);  // d - sum of weights
Rat volume_O1(const WeightedHypersurface& h);         // d / product of weights

// Every leave-one-out gcd of the weights is 1.
bool wps_well_formed(std::span<const Int> weights);

ShapeReport classify_rows(const std::vector<std::vector<Int>>& rows);
ShapeReport classify_shape(const WeightedHypersurface& h);

// true via the quasi-smooth criterion (dim >= 3, ambient well-formed,
// degree distinct from every weight) or via the stratum accounting at
// dim <= 2; false when the ambient space fails or the equation contains a
// singular stratum too large for the codimension bound; inconclusive
// otherwise.
Verdict hypersurface_well_formed(const WeightedHypersurface& h);

enum class AutStructure { cyclic, mu2_times_cyclic };
struct ToricAut {
  Int order;  // |det M| / degree
  AutStructure structure;
};

// Supported for a single odd loop (cyclic) or x0^2 plus an odd loop (mu_2
// times cyclic); other shapes raise unsupported_shape_error.
ToricAut toric_automorphism_order(const ExponentMatrix& m, const Int& degree);

}  // namespace excy::hypersurface
