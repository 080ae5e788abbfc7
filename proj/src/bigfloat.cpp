#include "whs/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace whs {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, o.precision());
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::of(long v, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of(double v, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of(const Rational& v, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_q(r.v_, v.get_mpq_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::parse(const std::string& text, mpfr_prec_t prec) {
  BigFloat r(prec);
  if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0)
    throw DomainError("malformed decimal number: '" + text + "'");
  return r;
}

BigFloat BigFloat::pow2(long e, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

std::string BigFloat::str(int digits) const {
  if (digits <= 0)
    digits = static_cast<int>(static_cast<double>(precision()) * 0.30103) + 2;
  char* out = nullptr;
  mpfr_asprintf(&out, "%.*Rg", digits, v_);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(precision());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  BigFloat r(precision());
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::root(unsigned long k) const {
  BigFloat r(precision());
  mpfr_rootn_ui(r.v_, v_, k, MPFR_RNDN);
  return r;
}

namespace {
mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& o) { return *this = *this + o; }
BigFloat& BigFloat::operator-=(const BigFloat& o) { return *this = *this - o; }
BigFloat& BigFloat::operator*=(const BigFloat& o) { return *this = *this * o; }
BigFloat& BigFloat::operator/=(const BigFloat& o) { return *this = *this / o; }

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(join(y, x));
  mpfr_atan2(r.raw(), y.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat sin(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_sin(r.raw(), a.v_, MPFR_RNDN);
  return r;
}

BigFloat cos(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_cos(r.raw(), a.v_, MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join(a, b));
  mpfr_max(r.raw(), a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigComplex BigComplex::of(const GaussianRational& v, mpfr_prec_t prec) {
  return BigComplex(BigFloat::of(v.re, prec), BigFloat::of(v.im, prec));
}

BigComplex BigComplex::of(double r, double i, mpfr_prec_t prec) {
  return BigComplex(BigFloat::of(r, prec), BigFloat::of(i, prec));
}

mpfr_prec_t BigComplex::precision() const {
  return std::max(re.precision(), im.precision());
}

BigFloat BigComplex::abs() const {
  BigFloat r(precision());
  mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDN);
  return r;
}

BigComplex BigComplex::inverse() const {
  if (is_zero()) throw DomainError("complex division by zero");
  BigFloat n = norm();
  return BigComplex(re / n, (-im) / n);
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigFloat r = re * o.re - im * o.im;
  BigFloat i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) { return *this *= o.inverse(); }

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
  BigComplex r = a;
  return r += b;
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
  BigComplex r = a;
  return r -= b;
}

BigComplex operator-(const BigComplex& a) { return BigComplex(-a.re, -a.im); }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  BigComplex r = a;
  return r *= b;
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigComplex r = a;
  return r /= b;
}

std::string BigComplex::str(int digits) const {
  if (im.is_zero()) return re.str(digits);
  std::string i = im.str(digits);
  if (!i.empty() && i[0] == '-') return re.str(digits) + "-" + i.substr(1) + "*i";
  return re.str(digits) + "+" + i + "*i";
}

bool numerically_equal(const BigComplex& a, const BigComplex& b, const BigFloat& tol) {
  BigFloat scale = max(BigFloat::of(1L, tol.precision()), max(a.abs(), b.abs()));
  return (a - b).abs() <= tol * scale;
}

BigFloat default_tolerance(mpfr_prec_t prec) { return BigFloat::pow2(-static_cast<long>(prec / 2), prec); }

}  // namespace whs
