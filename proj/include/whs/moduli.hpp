#pragma once

#include <array>
#include <cstdint>

#include "whs/surface.hpp"

namespace whs {

/// Orbit data at a point: rank of the infinitesimal action of sl(2) plus the
/// grading field. Affine count 32 - rank and projective count 31 - (rank - 1)
/// agree; both reach 28 exactly when the rank is the full 4.
struct RankReport {
  int rank = 0;
  int orbit_dim = 0;             // = rank
  int orbit_dim_projective = 0;  // = rank - 1 (the grading direction is radial)
  bool stabilizer_finite = false;
  int moduli_dim_estimate = 0;   // 32 - rank
  int moduli_dim_projective = 0; // 31 - (rank - 1)
};

/// Columns E = x d/dy, F = y d/dx, H = x d/dx - y d/dy, and the grading field
/// scaling block k by its weight 10 - 2k; rows in coefficient-point order.
using ActionMatrix = std::array<std::array<Scalar, 4>, CoefficientPoint::kSize>;

ActionMatrix infinitesimal_action_matrix(const CoefficientPoint& p);

/// Exact rank of the action matrix (exact mode required).
RankReport orbit_rank(const CoefficientPoint& p);

/// Deterministic sample with independent rational entries, numerator and
/// denominator bounded by coefficient_height (redrawn if all 32 vanish).
NormalForm sample_normal_form(std::uint64_t seed, int coefficient_height);

enum class Family { Generic, Remark, Monomial };

/// Generic: sample_normal_form. Remark: common linear factor of multiplicity
/// exactly 4-k in each block with square-free pairwise-coprime cofactors.
/// Monomial: q_k = c_k x^(5-k) y^(5-k) with nonzero random scales.
NormalForm sample_family(Family family, std::uint64_t seed, int coefficient_height);

struct StratumStats {
  int n = 0;
  int stable = 0;
  int strictly_semistable = 0;
  int unstable = 0;
  int screen_passed = 0;
  int worse_than_canonical = 0;
  int not_general_type = 0;
  int smooth = 0;
  int singular = 0;
  int inconclusive = 0;

  double fraction(int count) const { return n == 0 ? 0.0 : static_cast<double>(count) / n; }
};

/// Classifies and screens n seeded samples; deterministic for a fixed seed
/// regardless of the thread count (samples are derived from their index).
StratumStats stratum_stats(int n, std::uint64_t seed, int coefficient_height,
                           Family family = Family::Generic, int threads = 0);

}  // namespace whs
