#pragma once

#include <utility>
#include <vector>

#include "whs/scalar.hpp"

namespace whs {

enum class Var { x, y };

/// Homogeneous binary form of a fixed degree d in x, y. Coefficient slot t
/// holds the coefficient of x^(d-t) y^t (descending x-power). The zero form
/// is representable at every degree. Forms are immutable values; a form is
/// exact iff every coefficient is exact (mixed input promotes to approximate).
class BinaryForm {
 public:
  static BinaryForm zero(int degree);
  /// c * x^(x_power) y^(degree - x_power)
  static BinaryForm monomial(int degree, int x_power, Scalar c);
  BinaryForm(int degree, std::vector<Scalar> coeffs);

  int degree() const { return degree_; }
  Mode mode() const { return mode_; }
  bool is_exact() const { return mode_ == Mode::exact; }
  bool is_zero() const;

  /// Coefficient of x^(degree-t) y^t.
  const Scalar& operator[](int t) const;
  /// Coefficient of x^i y^(degree-i).
  const Scalar& coeff_x_power(int i) const;
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  BinaryForm to_approx(mpfr_prec_t prec) const;
  /// Largest numeric coefficient magnitude.
  BigFloat sup_norm(mpfr_prec_t prec = BigFloat::kDefaultPrecision) const;

 private:
  int degree_;
  std::vector<Scalar> coeffs_;
  Mode mode_;
};

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);  // equal degree
BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
BinaryForm operator-(const BinaryForm& a);
BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);  // degrees add
BinaryForm operator*(const Scalar& c, const BinaryForm& a);
bool operator==(const BinaryForm& a, const BinaryForm& b);
inline bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }

Scalar evaluate(const BinaryForm& f, const Scalar& x, const Scalar& y);
BinaryForm pow(const BinaryForm& f, int e);

/// Nonzero linear form u*x + v*y. Proportional forms are equivalent; the
/// canonical representative scales the leading nonzero coefficient to 1.
struct LinearForm {
  Scalar u;
  Scalar v;

  LinearForm(Scalar uu, Scalar vv);
  LinearForm canonical() const;
  BinaryForm form() const;  // as a degree-1 BinaryForm
  std::string str() const;  // "x - 2*y" style
};

bool operator==(const LinearForm& a, const LinearForm& b);

/// Formal partial derivative; degree max(d-1, 0), constants go to zero.
BinaryForm derivative(const BinaryForm& f, Var var);

/// Canonicalized gcd (leading nonzero coefficient 1). Exact mode only;
/// gcd(f, 0) = canonicalized f, both zero is an error.
BinaryForm gcd(const BinaryForm& f, const BinaryForm& g);

/// Canonicalize: scale so the leading nonzero coefficient is 1.
BinaryForm canonicalized(const BinaryForm& f);

/// Pairwise-coprime square-free factors with multiplicities, ordered by
/// multiplicity; sum of m * deg(g_m) = deg f. Exact mode, f nonzero.
std::vector<std::pair<BinaryForm, int>> squarefree_decomposition(const BinaryForm& f);

/// Number of distinct linear factors over C = degree of the square-free part.
int distinct_linear_factor_count(const BinaryForm& f);

/// Largest m with l^m dividing f (0 if l does not divide f). Exact division in
/// exact mode; repeated synthetic division against a relative tolerance in
/// approximate mode.
int multiplicity_at(const BinaryForm& f, const LinearForm& l);
int multiplicity_at(const BinaryForm& f, const LinearForm& l, const BigFloat& tol);

/// D_m(f): gcd of all order-(m-1) partial derivatives (D_1 = f canonicalized).
/// A linear form l has multiplicity >= m in f iff l divides D_m(f). Returns
/// the unit form when m exceeds deg f.
BinaryForm high_multiplicity_locus(const BinaryForm& f, int m);

/// Sylvester resultant at the forms' full (formal) degrees; zero iff the forms
/// share a nonconstant factor. Exact mode, both nonzero.
Scalar resultant(const BinaryForm& f, const BinaryForm& g);

/// Point [alpha : beta] on the projective line with a multiplicity.
struct ProjectiveRoot {
  BigComplex alpha;
  BigComplex beta;
  int multiplicity;
};

/// All roots of f with multiplicities summing to deg f. Exact input: exact
/// square-free split first, then numeric roots of the simple parts.
/// Approximate input: numeric roots clustered at the mode tolerance.
std::vector<ProjectiveRoot> complex_roots(const BinaryForm& f,
                                          mpfr_prec_t precision = BigFloat::kDefaultPrecision);

std::string to_string(const BinaryForm& f);

}  // namespace whs
