#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "whs/bigfloat.hpp"
#include "whs/rational.hpp"

// Exact univariate polynomial arithmetic over Q(i). Coefficients ascending by
// power; the empty vector is the zero polynomial. This is the substrate for
// every gcd/multiplicity/resultant computation on binary forms (which
// dehomogenize to univariate polynomials plus a tracked power of y).
namespace whs::detail {

using QPoly = std::vector<GaussianRational>;

int deg(const QPoly& p);  // -1 for the zero polynomial
void trim(QPoly& p);
bool is_zero(const QPoly& p);
const GaussianRational& lc(const QPoly& p);  // p nonzero

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const GaussianRational& c);
QPoly shift_up(const QPoly& a, int k);  // multiply by x^k
QPoly derivative(const QPoly& a);
GaussianRational eval(const QPoly& a, const GaussianRational& x);
BigComplex eval_complex(const QPoly& a, const BigComplex& z, mpfr_prec_t prec);

/// Field division with remainder; b nonzero.
std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b);
/// Division known to be exact; throws DomainError on a nonzero remainder.
QPoly exact_div(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& a);

/// Monic gcd via a primitive subresultant sequence over Z[i].
/// gcd(a, 0) = monic(a); both zero is a DomainError.
QPoly gcd(const QPoly& a, const QPoly& b);

/// Yun square-free decomposition: pairwise-coprime monic square-free factors
/// g with multiplicities, deg g >= 1, product g^m = a up to a unit.
std::vector<std::pair<QPoly, int>> squarefree(const QPoly& a);

/// Resultant at formal degrees (m, n) >= actual degrees: the determinant of
/// the (m+n) x (m+n) Sylvester matrix of the zero-padded coefficient vectors.
GaussianRational resultant_formal(const QPoly& a, const QPoly& b, int m, int n);
/// Same value by direct elimination on the Sylvester matrix (reference path).
GaussianRational sylvester_resultant(const QPoly& a, const QPoly& b, int m, int n);

/// Newton interpolation through (nodes[i], values[i]); nodes pairwise distinct.
QPoly interpolate(const std::vector<GaussianRational>& nodes,
                  const std::vector<QPoly::value_type>& values);

// ---- Gaussian integers (for the subresultant sequence and content) ----

struct GInt {
  mpz_class re;
  mpz_class im;

  bool is_zero() const { return re == 0 && im == 0; }
  mpz_class norm() const { return re * re + im * im; }
};

GInt gadd(const GInt& a, const GInt& b);
GInt gsub(const GInt& a, const GInt& b);
GInt gmul(const GInt& a, const GInt& b);
GInt gneg(const GInt& a);
/// Exact quotient a/b (b | a assumed); throws if the division is not exact.
GInt gdiv_exact(const GInt& a, const GInt& b);
/// gcd in Z[i], canonicalized into the quadrant re > 0, im >= 0 (or zero).
GInt ggcd(const GInt& a, const GInt& b);

using GPoly = std::vector<GInt>;

/// Clears denominators: returns an integer-coefficient associate of p.
GPoly to_integer(const QPoly& p);
QPoly to_rational(const GPoly& p);
GInt content(const GPoly& p);

// ---- GF(p^2) layer: fast certified coprimality of integer polynomials ----

/// Arithmetic in F_p[u]/(u^2+1) for p = 3 (mod 4), so the quotient is a field.
class Fp2Field {
 public:
  explicit Fp2Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p() const { return p_; }

  struct El {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    bool is_zero() const { return a == 0 && b == 0; }
  };

  El reduce(const GInt& v) const;
  El add(El x, El y) const;
  El sub(El x, El y) const;
  El mul(El x, El y) const;
  El inv(El x) const;

 private:
  std::uint64_t addm(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t subm(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t mulm(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t powm(std::uint64_t x, std::uint64_t e) const;
  std::uint64_t p_;
};

/// True iff gcd(A, B) over Q(i) is certifiably constant: reduces both modulo a
/// prime p = 3 (mod 4) that preserves the leading coefficients and checks the
/// gcd over GF(p^2). False means "possibly non-coprime" (caller falls back to
/// the exact gcd).
bool certified_coprime(const GPoly& A, const GPoly& B);

}  // namespace whs::detail
