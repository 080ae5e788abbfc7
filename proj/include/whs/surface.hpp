#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "whs/binary_form.hpp"

namespace whs {

/// 2x2 matrix acting on (x, y), row-major [[a, b], [c, d]].
struct Matrix2 {
  std::array<Scalar, 4> a;

  static Matrix2 identity();
  const Scalar& operator()(int r, int c) const { return a[2 * r + c]; }
  Scalar det() const;
  Matrix2 inverse() const;  // throws DomainError when singular
};

Matrix2 operator*(const Matrix2& m, const Matrix2& n);
bool operator==(const Matrix2& m, const Matrix2& n);

/// Substitution x -> a x + b y, y -> c x + d y applied to a form.
BinaryForm apply(const Matrix2& m, const BinaryForm& f);
/// l o A: the composite linear form (u, v) * A.
LinearForm apply(const Matrix2& m, const LinearForm& l);

/// Degree-10 weighted-homogeneous equation F(x,y,z) = sum q_k(x,y) z^k in
/// P(1,1,2,5) coordinates, deg q_k = 10 - 2k. The surface is w^2 - F.
class SurfaceEquation {
 public:
  SurfaceEquation();  // all q_k zero
  explicit SurfaceEquation(std::array<BinaryForm, 6> q);

  static int block_degree(int k) { return 10 - 2 * k; }
  const BinaryForm& q(int k) const;
  SurfaceEquation with_q(int k, BinaryForm f) const;
  Mode mode() const;
  SurfaceEquation to_approx(mpfr_prec_t prec) const;

 private:
  std::array<BinaryForm, 6> q_;
};

bool operator==(const SurfaceEquation& a, const SurfaceEquation& b);

/// The constrained shape q5 = 1, q4 = 0: F = z^5 + q3 z^3 + q2 z^2 + q1 z + q0.
class NormalForm {
 public:
  NormalForm();  // all four blocks zero
  explicit NormalForm(std::array<BinaryForm, 4> q);

  const BinaryForm& q(int k) const;
  NormalForm with_q(int k, BinaryForm f) const;
  SurfaceEquation as_surface() const;
  Mode mode() const;
  bool all_zero() const;

 private:
  std::array<BinaryForm, 4> q_;
};

bool operator==(const NormalForm& a, const NormalForm& b);

/// The 32 coefficients of a NormalForm as a point of P(4^5, 6^7, 8^9, 10^11).
/// Block order k = 3,2,1,0 with x-power descending inside each block; the
/// C*-weight of every block-k entry is 10 - 2k.
class CoefficientPoint {
 public:
  static constexpr int kSize = 32;

  struct Index {
    int k;  // block 0..3
    int i;  // x-power
    int j;  // y-power, i + j = 10 - 2k
  };

  explicit CoefficientPoint(std::array<Scalar, kSize> entries);

  static Index index(int pos);
  static int position(int k, int i, int j);
  static int weight(int pos) { return 10 - 2 * index(pos).k; }

  const Scalar& operator[](int pos) const;
  const std::array<Scalar, kSize>& entries() const { return a_; }
  Mode mode() const;
  bool is_zero() const;

 private:
  std::array<Scalar, kSize> a_;
};

/// Coordinate automorphism shape: x,y -> A(x,y); z -> alpha z + r(x,y);
/// w -> beta w, with A invertible, alpha, beta nonzero, deg r = 2.
struct Transformation {
  Matrix2 A = Matrix2::identity();
  Scalar alpha{1L};
  BinaryForm r = BinaryForm::zero(2);
  Scalar beta{1L};

  static Transformation identity() { return Transformation{}; }
  bool is_identity() const;
  Transformation inverse() const;
};

/// Map composition: apply `first`, then `second` (equation-side), i.e. the
/// composite substitutes v -> first(second(v)).
Transformation compose(const Transformation& first, const Transformation& second);

/// F o T / beta^2, the equation of the transformed surface.
SurfaceEquation apply_transformation(const SurfaceEquation& f, const Transformation& t);

/// 32-vector of a nonzero NormalForm; throws "not a projective point" on zero.
CoefficientPoint to_point(const NormalForm& nf);
NormalForm from_point(const CoefficientPoint& p);

/// Parses a polynomial in x, y, z with exact rational / Gaussian-rational
/// coefficients; every monomial must have weighted degree 10 (weights 1,1,2).
SurfaceEquation parse_expression(std::string_view text);

// ---- JSON document interface ----

struct SurfaceDocument {
  SurfaceEquation surface;
  bool normal_form = false;
  Mode mode = Mode::exact;
  mpfr_prec_t precision = BigFloat::kDefaultPrecision;

  NormalForm as_normal_form() const;  // requires q5 = 1, q4 = 0
};

std::string surface_to_json(const SurfaceEquation& s, int indent = 2);
std::string normal_form_to_json(const NormalForm& nf, int indent = 2);
SurfaceDocument surface_from_json(const std::string& text);

}  // namespace whs
