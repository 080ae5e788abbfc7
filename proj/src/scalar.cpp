#include "whs/scalar.hpp"

namespace whs {

const GaussianRational& Scalar::exact() const {
  if (!is_exact()) throw DomainError("scalar is not in exact mode");
  return std::get<GaussianRational>(v_);
}

const BigComplex& Scalar::approx() const {
  if (is_exact()) throw DomainError("scalar is not in approximate mode");
  return std::get<BigComplex>(v_);
}

BigComplex Scalar::to_complex(mpfr_prec_t prec) const {
  if (is_exact()) return BigComplex::of(std::get<GaussianRational>(v_), prec);
  return std::get<BigComplex>(v_);
}

Scalar Scalar::promoted(mpfr_prec_t prec) const { return Scalar(to_complex(prec)); }

bool Scalar::is_zero() const {
  if (is_exact()) return std::get<GaussianRational>(v_).is_zero();
  return std::get<BigComplex>(v_).is_zero();
}

Scalar Scalar::inverse() const {
  if (is_exact()) return Scalar(std::get<GaussianRational>(v_).inverse());
  return Scalar(std::get<BigComplex>(v_).inverse());
}

BigFloat Scalar::magnitude(mpfr_prec_t prec) const { return to_complex(prec).abs(); }

namespace {

template <typename ExactOp, typename ApproxOp>
Scalar combine(const Scalar& a, const Scalar& b, ExactOp eop, ApproxOp aop) {
  if (a.is_exact() && b.is_exact()) return Scalar(eop(a.exact(), b.exact()));
  mpfr_prec_t prec = BigFloat::kDefaultPrecision;
  if (!a.is_exact()) prec = std::max(prec, a.approx().precision());
  if (!b.is_exact()) prec = std::max(prec, b.approx().precision());
  return Scalar(aop(a.to_complex(prec), b.to_complex(prec)));
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) { return *this = *this + o; }
Scalar& Scalar::operator-=(const Scalar& o) { return *this = *this - o; }
Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }
Scalar& Scalar::operator/=(const Scalar& o) { return *this = *this / o; }

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; },
                 [](const auto& x, const auto& y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x - y; },
                 [](const auto& x, const auto& y) { return x - y; });
}

Scalar operator-(const Scalar& a) {
  if (a.is_exact()) return Scalar(-a.exact());
  return Scalar(-a.approx());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x * y; },
                 [](const auto& x, const auto& y) { return x * y; });
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x / y; },
                 [](const auto& x, const auto& y) { return x / y; });
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() != b.is_exact()) return false;
  if (a.is_exact()) return a.exact() == b.exact();
  const BigComplex& x = a.approx();
  const BigComplex& y = b.approx();
  return cmp(x.re, y.re) == 0 && cmp(x.im, y.im) == 0;
}

bool numerically_equal(const Scalar& a, const Scalar& b, const BigFloat& tol) {
  mpfr_prec_t prec = tol.precision();
  return numerically_equal(a.to_complex(prec), b.to_complex(prec), tol);
}

std::string Scalar::str() const {
  if (is_exact()) return to_string(std::get<GaussianRational>(v_));
  return std::get<BigComplex>(v_).str();
}

}  // namespace whs
