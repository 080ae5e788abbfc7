#pragma once

#include <optional>
#include <vector>

#include "whs/stability.hpp"
#include "whs/surface.hpp"

namespace whs {

/// Necessary conditions for the double cover to be a canonical model: q5 is 1
/// in normal form, q0 or q1 nonzero, and both readings of the linear-factor
/// count of the product of the nonzero blocks.
struct LemmaChecks {
  bool q5_nonzero = true;
  bool q0_or_q1_nonzero = false;
  int distinct_factor_count = 0;
  int factor_count_with_multiplicity = 0;
};

struct MultScreen {
  bool passed = true;
  std::optional<LinearForm> failed_at;
};

enum class SmoothnessStatus { Smooth, SingularAt, Inconclusive };

const char* to_string(SmoothnessStatus s);

/// Approximate singular-point location in an affine chart of P(1,1,2):
/// chart 'x' means x = 1 with t = y; chart 'y' means y = 1 with t = x.
struct ChartPoint {
  char chart;
  BigComplex t;
  BigComplex z;
};

struct Smoothness {
  SmoothnessStatus status = SmoothnessStatus::Inconclusive;
  std::vector<ChartPoint> points;
};

enum class ScreenOutcome { CanonicalScreenPassed, WorseThanCanonical, NotGeneralTypeForm };

const char* to_string(ScreenOutcome o);

struct ScreenReport {
  LemmaChecks lemma;
  MultScreen mult;
  Smoothness smoothness;
  ScreenOutcome overall = ScreenOutcome::CanonicalScreenPassed;
};

LemmaChecks lemma_conditions(const NormalForm& nf);

/// Branch multiplicity screen at base points: a common direction meeting the
/// thresholds (4, 3, 2, 1) is a point of multiplicity >= 4 on z = 0, which is
/// worse than canonical. Exact mode.
MultScreen mult_screen(const NormalForm& nf);

/// Smoothness of the branch curve z^5 + sum q_k z^k = 0 in P(1,1,2), checked
/// on the charts x = 1 and y = 1. Exact double-resultant certificate for
/// Smooth; numeric location of candidate points otherwise; Inconclusive is an
/// honest output (non-reduced curves, ambiguous residuals, approximate input).
Smoothness smoothness_certify(const NormalForm& nf,
                              mpfr_prec_t precision = BigFloat::kDefaultPrecision);

ScreenOutcome overall_outcome(const LemmaChecks& lemma, const MultScreen& mult);

struct ScreenOptions {
  mpfr_prec_t precision = BigFloat::kDefaultPrecision;
};

/// Runs all three checks. The overall verdict gates on the lemma conditions
/// and the multiplicity screen; passing is a necessary-conditions verdict,
/// not a proof of canonicity.
ScreenReport screen(const NormalForm& nf, const ScreenOptions& opts = {});

}  // namespace whs
