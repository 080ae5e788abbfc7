#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "whs/surface.hpp"

namespace whs {

enum class StabilityClass { Stable, StrictlySemistable, Unstable };

const char* to_string(StabilityClass c);

/// Per-block multiplicity thresholds (m_0, ..., m_3). A direction l "meets"
/// the profile when mult_l(q_k) >= m_k for every k with q_k != 0 (zero blocks
/// are vacuous, as are entries with m_k <= 0).
struct MultiplicityProfile {
  std::array<int, 4> m;

  /// Failing stability: some l meets (5, 4, 3, 2).
  static MultiplicityProfile semistable_boundary() { return {{5, 4, 3, 2}}; }
  /// Failing semistability: some l meets (6, 5, 4, 3).
  static MultiplicityProfile unstable_boundary() { return {{6, 5, 4, 3}}; }
  /// Branch multiplicity >= 4 at a base point: some l meets (4, 3, 2, 1).
  static MultiplicityProfile excess_multiplicity() { return {{4, 3, 2, 1}}; }
};

/// One-parameter subgroup diag(mu^r, mu^-r) written in the coordinates of a
/// determinant-1 frame; `direction` is the linear form the frame sends to y.
struct OnePS {
  Matrix2 frame;
  int exponent = 1;
  LinearForm direction;
};

struct Witness {
  LinearForm direction;
  MultiplicityProfile profile_met;
  OnePS one_ps;
};

struct StabilityVerdict {
  StabilityClass cls;
  std::optional<Witness> witness;
};

/// mu-exponent 2j - (10 - 2k) = j - i of coordinate a_(i,j) in block k under
/// the standard torus with r = 1.
int coordinate_weight(int k, int i, int j);

/// Determinant-1 frame A with l o A proportional to y (identity when l = y).
Matrix2 frame_sending_to_y(const LinearForm& l);

/// (min, max) of coordinate_weight over the nonzero entries of the point
/// rewritten in the frame adapted to l. Stability needs min < 0 and max > 0
/// for every direction (<= / >= for semistability).
std::pair<int, int> weight_span(const CoefficientPoint& p, const LinearForm& l);

/// The common high-multiplicity direction search: gcd over nonzero blocks of
/// high_multiplicity_locus(q_k, m_k). Returns a canonical linear factor of
/// that gcd (lexicographically smallest canonical coefficients) or nothing.
std::optional<LinearForm> nonstable_witness(const CoefficientPoint& p,
                                            const MultiplicityProfile& profile);

/// Same search on a normal form directly (used by the singularity screen,
/// which must also handle the all-zero equation w^2 = z^5). Exact mode.
std::optional<LinearForm> common_direction(const NormalForm& nf,
                                           const MultiplicityProfile& profile);

/// Exact classification: Unstable iff a direction meets (6,5,4,3);
/// else StrictlySemistable iff one meets (5,4,3,2); else Stable.
StabilityVerdict classify(const NormalForm& nf);

struct OracleOptions {
  mpfr_prec_t precision = BigFloat::kDefaultPrecision;
  double tolerance = 1e-9;
  int frame_samples = 64;
  std::uint64_t seed = 20260811;
};

/// Independent numeric cross-check: enumerates candidate directions as the
/// complex roots of the nonzero blocks, tests both profiles with numeric
/// multiplicities, and validates weight_span signs on random determinant-1
/// frames. Throws DomainError if its own consistency checks fail.
StabilityVerdict oracle_classify(const NormalForm& nf, const OracleOptions& opts = {});

/// Group action on normal forms / directions (substitution by A).
NormalForm transformed(const NormalForm& nf, const Matrix2& A);

}  // namespace whs
