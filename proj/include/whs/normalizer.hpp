#pragma once

#include <optional>

#include "whs/surface.hpp"

namespace whs {

struct NormalizeOptions {
  /// In exact mode, when the z^5 coefficient is not the 5th power of a
  /// rational, switch to approximate arithmetic for the scaling step instead
  /// of returning a partial normalization.
  bool allow_approx = false;
  mpfr_prec_t precision = BigFloat::kDefaultPrecision;
};

struct NormalizeResult {
  /// The transformed equation: z^4 block zero; z^5 block 1 unless partial.
  SurfaceEquation surface;
  Transformation transform;
  /// Exact input whose q5 is not a rational 5th power and allow_approx off:
  /// the z-shift was applied but the unit in front of z^5 remains.
  bool partial = false;
  Scalar residual_unit{1L};
  std::optional<NormalForm> normal_form;
};

/// Kills the z^4 term by the Tschirnhaus shift z -> z - q4/(5 q5) and scales
/// z to make the z^5 coefficient 1. Requires q5 != 0. The returned
/// transformation satisfies apply_transformation(input, transform) = surface
/// (exactly in exact mode, within the mode tolerance in approximate mode).
NormalizeResult to_normal_form(const SurfaceEquation& f, const NormalizeOptions& opts = {});

/// True iff q5 = 1 and q4 = 0 (mode-appropriate equality).
bool is_normal_form(const SurfaceEquation& f);

}  // namespace whs
