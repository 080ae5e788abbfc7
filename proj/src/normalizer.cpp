#include "whs/normalizer.hpp"

namespace whs {

namespace {

// Rational 5th root when it exists: num and den both exact 5th powers
// (5 is odd, so signs pass through).
std::optional<Rational> rational_fifth_root(const Rational& v) {
  mpz_class num = v.get_num(), den = v.get_den();
  mpz_class rn, rd;
  bool neg = num < 0;
  mpz_class an = neg ? mpz_class(-num) : num;
  if (mpz_root(rn.get_mpz_t(), an.get_mpz_t(), 5) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 5) == 0) return std::nullopt;
  Rational r(neg ? mpz_class(-rn) : rn, rd);
  r.canonicalize();
  return r;
}

// Principal complex 5th root via polar form.
BigComplex complex_fifth_root(const BigComplex& v, mpfr_prec_t prec) {
  BigFloat r = v.abs();
  BigFloat theta = atan2(v.im, v.re);
  BigFloat r5 = r.root(5);
  BigFloat t5 = theta / BigFloat::of(5L, prec);
  return BigComplex(r5 * cos(t5), r5 * sin(t5));
}

}  // namespace

bool is_normal_form(const SurfaceEquation& f) {
  const Scalar& q5 = f.q(5)[0];
  if (!f.q(4).is_zero()) return false;
  if (q5.is_exact()) return q5.exact() == GaussianRational(1);
  const BigComplex& c = q5.approx();
  BigFloat tol = default_tolerance(c.precision());
  return numerically_equal(c, BigComplex::of(GaussianRational(1), c.precision()), tol);
}

NormalizeResult to_normal_form(const SurfaceEquation& f, const NormalizeOptions& opts) {
  const Scalar& q5 = f.q(5)[0];
  if (q5.is_zero())
    throw DomainError("q5 = 0: the equation is not of general-type form");

  // Tschirnhaus shift r = -q4 / (5 q5) removes the z^4 block.
  Scalar inv5q5 = (Scalar(5L) * q5).inverse();
  BinaryForm shift = -(inv5q5 * f.q(4));
  Transformation t_shift{Matrix2::identity(), Scalar(1L), shift, Scalar(1L)};
  SurfaceEquation shifted = apply_transformation(f, t_shift);

  NormalizeResult out;
  out.transform = t_shift;

  const Scalar& s5 = shifted.q(5)[0];  // unchanged by the shift
  auto finish_exact = [&](const Scalar& alpha) {
    Transformation t_scale{Matrix2::identity(), alpha, BinaryForm::zero(2), Scalar(1L)};
    out.surface = apply_transformation(shifted, t_scale);
    out.transform = compose(t_shift, t_scale);
    out.residual_unit = Scalar(1L);
    out.normal_form =
        NormalForm({out.surface.q(0), out.surface.q(1), out.surface.q(2), out.surface.q(3)});
  };

  if (f.mode() == Mode::exact) {
    const GaussianRational& v = s5.exact();
    if (v == GaussianRational(1)) {
      out.surface = shifted;
      out.residual_unit = Scalar(1L);
      out.normal_form = NormalForm({shifted.q(0), shifted.q(1), shifted.q(2), shifted.q(3)});
      return out;
    }
    if (v.is_rational()) {
      if (auto root = rational_fifth_root(v.re)) {
        finish_exact(Scalar(GaussianRational(Rational(1) / *root)));
        return out;
      }
    }
    if (!opts.allow_approx) {
      out.surface = shifted;
      out.partial = true;
      out.residual_unit = s5;
      return out;
    }
    // Fall through to the approximate scaling step.
  }

  mpfr_prec_t prec = opts.precision;
  SurfaceEquation approx = shifted.to_approx(prec);
  BigComplex root = complex_fifth_root(approx.q(5)[0].to_complex(prec), prec);
  Scalar alpha = Scalar(root.inverse());
  Transformation t_scale{Matrix2::identity(), alpha, BinaryForm::zero(2), Scalar(1L)};
  out.surface = apply_transformation(approx, t_scale);
  out.transform = compose(t_shift, t_scale);
  out.residual_unit = Scalar(1L);
  out.normal_form =
      NormalForm({out.surface.q(0), out.surface.q(1), out.surface.q(2), out.surface.q(3)});
  return out;
}

}  // namespace whs
