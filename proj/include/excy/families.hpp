#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "excy/hypersurface.hpp"

namespace excy::families {

enum class Family {
  small_volume,
  esser_mld,
  pair_mld,
  large_index,
  kollar,
  liu,
  index1_cover,
};

const char* family_tag(Family f);                  // e.g. "esser-mld"
std::optional<Family> family_from_tag(const std::string& tag);

struct Boundary {
  int variable;
  Rat coefficient;
  bool operator==(const Boundary&) const = default;
};

// A constructed example with every derived invariant it supports; the
// integer and rational maps use explicit presence (no sentinel values).
// kollar and liu are pairs on projective space and carry hyperplane
// coefficients instead of a hypersurface.
struct FamilyRecord {
  Family family = Family::small_volume;
  int dim = 0;
  std::optional<hypersurface::WeightedHypersurface> hsurf;
  std::optional<Boundary> boundary;
  std::vector<Rat> pair_coefficients;
  std::map<std::string, Int> ints;  // m, u, v, E, m_prime, u_prime, v_prime,
                                    // group_order, gcd_check,
                                    // index_conditional, canonical_degree
  std::map<std::string, Rat> rats;  // volume, mld
  std::optional<std::vector<Int>> action_weights;  // residues mod group_order
  hypersurface::Verdict space_verdict = hypersurface::Verdict::inconclusive;
  hypersurface::Verdict surface_verdict = hypersurface::Verdict::inconclusive;
  bool operator==(const FamilyRecord&) const = default;
};

// Builders refuse dimensions beyond this unless explicitly overridden; the
// values grow doubly exponentially with n.
inline constexpr int kDefaultDimCap = 40;

FamilyRecord small_volume_pair(int n, bool allow_beyond_cap = false);
FamilyRecord esser_mld(int n, bool allow_beyond_cap = false);
FamilyRecord pair_mld(int n, bool allow_beyond_cap = false);
FamilyRecord index1_cover(int n, bool allow_beyond_cap = false);
FamilyRecord large_index(int n, bool allow_beyond_cap = false);
FamilyRecord kollar(int n);
FamilyRecord liu(int n);
FamilyRecord build(Family f, int n, bool allow_beyond_cap = false);

// Closed-form comparison values.
Rat kollar_volume(int n);  // 1 / (s_{n+1} - 1)^n, n >= 2
Rat liu_mld(int n);        // 1 / (s_{n+1} - 1) for n >= 2; 1/3 for n = 1

// Degree b_0...b_n of the boundary-pair hypersurface together with its
// closed-form weights c_0..c_{n+1} (c_{n+1} = m_n). Shared by pair_mld and
// index1_cover.
std::pair<Int, std::vector<Int>> pair_degree_and_weights(int n);

}  // namespace excy::families
