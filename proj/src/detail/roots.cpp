#include "detail/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "whs/rational.hpp"

namespace whs::detail {

namespace {

// p(z) and p'(z) in one Horner pass.
void eval_with_derivative(const std::vector<BigComplex>& c, const BigComplex& z,
                          mpfr_prec_t prec, BigComplex& p, BigComplex& dp) {
  p = BigComplex(prec);
  dp = BigComplex(prec);
  for (std::size_t i = c.size(); i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
}

}  // namespace

std::vector<BigComplex> all_roots(const std::vector<BigComplex>& coeffs,
                                  mpfr_prec_t prec) {
  std::vector<BigComplex> c = coeffs;
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  if (c.empty()) throw DomainError("root finding on the zero polynomial");

  std::vector<BigComplex> roots;
  // Exact zeros at the origin come off first; Aberth needs p(0) != 0.
  std::size_t origin = 0;
  while (origin + 1 < c.size() && c[origin].is_zero()) ++origin;
  for (std::size_t k = 0; k < origin; ++k) roots.emplace_back(BigComplex(prec));
  c.erase(c.begin(), c.begin() + origin);

  std::size_t n = c.size() - 1;
  if (n == 0) return roots;

  // Cauchy-style radius: 1 + max |c_i / c_n|.
  BigFloat radius = BigFloat::of(0L, prec);
  BigFloat lead = c.back().abs();
  for (std::size_t i = 0; i < n; ++i) radius = max(radius, c[i].abs() / lead);
  radius = radius + BigFloat::of(1L, prec);

  // Deterministic start: equally spaced points with an irrational-ish phase
  // offset so symmetric configurations do not stall.
  std::vector<BigComplex> w(n, BigComplex(prec));
  const double two_pi = 6.283185307179586;
  for (std::size_t k = 0; k < n; ++k) {
    double ang = two_pi * (static_cast<double>(k) + 0.354) / static_cast<double>(n) + 0.618;
    BigFloat a = BigFloat::of(ang, prec);
    w[k] = BigComplex(radius * cos(a), radius * sin(a));
  }

  BigFloat stop = BigFloat::pow2(-static_cast<long>(prec) + 6, prec);
  const int max_iters = 600;
  for (int iter = 0; iter < max_iters; ++iter) {
    BigFloat worst = BigFloat::of(0L, prec);
    for (std::size_t k = 0; k < n; ++k) {
      BigComplex p(prec), dp(prec);
      eval_with_derivative(c, w[k], prec, p, dp);
      if (p.is_zero()) continue;
      BigComplex newton = dp.is_zero() ? BigComplex(prec) : p / dp;
      if (dp.is_zero()) {
        // Flat spot: nudge deterministically.
        w[k] += BigComplex::of(0.5, 0.25, prec);
        worst = max(worst, BigFloat::of(1L, prec));
        continue;
      }
      BigComplex repel(prec);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        BigComplex d = w[k] - w[j];
        if (d.is_zero()) {
          d = BigComplex::of(1e-20, 1e-20, prec);
        }
        repel += d.inverse();
      }
      BigComplex denom = BigComplex::of(GaussianRational(1), prec) - newton * repel;
      BigComplex corr = denom.is_zero() ? newton : newton / denom;
      w[k] -= corr;
      BigFloat rel = corr.abs() / max(BigFloat::of(1L, prec), w[k].abs());
      worst = max(worst, rel);
    }
    if (worst < stop) break;
  }

  for (auto& z : w) roots.push_back(std::move(z));
  return roots;
}

}  // namespace whs::detail
