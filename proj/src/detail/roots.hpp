#pragma once

#include <vector>

#include "whs/bigfloat.hpp"

namespace whs::detail {

/// All complex roots of a univariate polynomial with BigComplex coefficients
/// (ascending powers, leading coefficient nonzero, constant term may vanish).
/// Aberth--Ehrlich iteration with deterministic initial points; accuracy is
/// near the working precision for simple roots and degrades gracefully at
/// multiple roots (callers cluster when multiplicity matters).
std::vector<BigComplex> all_roots(const std::vector<BigComplex>& coeffs,
                                  mpfr_prec_t prec);

}  // namespace whs::detail
