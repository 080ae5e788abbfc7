#include <doctest.h>

#include <map>

#include "detail/rng.hpp"
#include "oracles.hpp"
#include "whs/binary_form.hpp"

using namespace whs;

namespace {

Scalar q(long num, long den = 1) { return Scalar(GaussianRational(Rational(num, den))); }

// Convenience: form from descending-x coefficient list.
BinaryForm form(std::vector<long> coeffs) {
  std::vector<Scalar> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.push_back(q(v));
  return BinaryForm(static_cast<int>(coeffs.size()) - 1, std::move(c));
}

const BinaryForm kX = BinaryForm::monomial(1, 1, q(1));
const BinaryForm kY = BinaryForm::monomial(1, 0, q(1));

BinaryForm x_pow_plus_y_pow(int d) {  // x^d + y^d
  BinaryForm f = BinaryForm::zero(d);
  return f + BinaryForm::monomial(d, d, q(1)) + BinaryForm::monomial(d, 0, q(1));
}

LinearForm lf(long u, long v) { return LinearForm(q(u), q(v)); }

BinaryForm random_exact_form(detail::SplitMix64& rng, int degree, int height) {
  std::vector<Scalar> c(degree + 1);
  for (auto& s : c) s = Scalar(GaussianRational(detail::random_rational(rng, height)));
  return BinaryForm(degree, std::move(c));
}

}  // namespace

TEST_CASE("derivative: power rule and constants") {
  BinaryForm x3y = BinaryForm::monomial(4, 3, q(1));  // x^3 y
  CHECK(derivative(x3y, Var::x) == Scalar(3L) * BinaryForm::monomial(3, 2, q(1)));
  BinaryForm f = x_pow_plus_y_pow(2);  // x^2 + y^2
  CHECK(derivative(f, Var::y) == Scalar(2L) * BinaryForm::monomial(1, 0, q(1)));
  BinaryForm c5 = BinaryForm::monomial(0, 0, q(5));
  CHECK(derivative(c5, Var::x).is_zero());
  CHECK(derivative(c5, Var::x).degree() == 0);
}

TEST_CASE("gcd: shared factors, coprime pair, monomials") {
  BinaryForm xmy = kX - kY;
  CHECK(gcd(xmy * xmy * kX, xmy * kY) == xmy);

  // gcd(x^10 + y^10, d/dx) is a unit: frozen from the Euclidean oracle.
  BinaryForm fermat = x_pow_plus_y_pow(10);
  oracles::Poly g =
      oracles::euclid_gcd(oracles::dehom(fermat), oracles::dehom(derivative(fermat, Var::x)));
  REQUIRE(oracles::degree(g) == 0);
  BinaryForm mine = gcd(fermat, derivative(fermat, Var::x));
  CHECK(mine.degree() == 0);
  CHECK(mine[0] == q(1));

  BinaryForm a = BinaryForm::monomial(6, 4, q(1));  // x^4 y^2
  BinaryForm b = BinaryForm::monomial(6, 3, q(1));  // x^3 y^3
  CHECK(gcd(a, b) == BinaryForm::monomial(5, 3, q(1)));  // x^3 y^2

  CHECK(gcd(fermat, BinaryForm::zero(4)) == fermat);
  CHECK_THROWS_WITH_AS(gcd(BinaryForm::zero(2), BinaryForm::zero(3)),
                       "gcd of two zero forms undefined", DomainError);
}

TEST_CASE("squarefree decomposition: factored input, Fermat, powered sum") {
  BinaryForm f = kX * kX * kY * kY * kY * (kX + kY);  // x^2 y^3 (x+y)
  auto parts = squarefree_decomposition(f);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].second == 1);
  CHECK(parts[0].first == kX + kY);
  CHECK(parts[1].second == 2);
  CHECK(parts[1].first == kX);
  CHECK(parts[2].second == 3);
  CHECK(parts[2].first == kY);

  // x^10 + y^10 is square-free (oracle: gcd with derivative is constant).
  BinaryForm fermat = x_pow_plus_y_pow(10);
  auto sf = squarefree_decomposition(fermat);
  REQUIRE(sf.size() == 1);
  CHECK(sf[0].second == 1);
  CHECK(sf[0].first == fermat);

  // (x^2 + y^2)^5: Yun-style oracle gives the base with multiplicity 5.
  BinaryForm circ = x_pow_plus_y_pow(2);
  auto p5 = squarefree_decomposition(pow(circ, 5));
  REQUIRE(p5.size() == 1);
  CHECK(p5[0].second == 5);
  CHECK(p5[0].first == circ);

  CHECK_THROWS_AS(squarefree_decomposition(BinaryForm::zero(3)), DomainError);
}

TEST_CASE("distinct linear factor counts") {
  CHECK(distinct_linear_factor_count(x_pow_plus_y_pow(10)) == 10);
  CHECK(distinct_linear_factor_count(pow(x_pow_plus_y_pow(2), 5)) == 2);
  CHECK(distinct_linear_factor_count(BinaryForm::monomial(6, 4, q(1))) == 2);  // x^4 y^2
  CHECK(distinct_linear_factor_count(BinaryForm::monomial(10, 0, q(3))) == 1);  // 3 y^10
}

TEST_CASE("multiplicity at a linear form") {
  BinaryForm f = kX * kX * kY * kY * kY * (kX + kY);
  CHECK(multiplicity_at(f, lf(0, 1)) == 3);   // y
  CHECK(multiplicity_at(f, lf(1, 0)) == 2);   // x
  CHECK(multiplicity_at(f, lf(1, 1)) == 1);   // x + y
  CHECK(multiplicity_at(f, lf(1, -1)) == 0);  // x - y

  // evaluate x^10 + y^10 at (1,1): 2 != 0, so x - y is no factor
  CHECK(multiplicity_at(x_pow_plus_y_pow(10), lf(1, -1)) == 0);

  BinaryForm g = pow(kX - kY, 4) * (kX + Scalar(4L) * kY);
  CHECK(multiplicity_at(g, lf(1, -1)) == 4);

  // scaling the direction cannot change the answer
  CHECK(multiplicity_at(g, LinearForm(q(2), q(-2))) == 4);
}

TEST_CASE("multiplicity additivity over products (property)") {
  detail::SplitMix64 rng(101);
  for (int n = 0; n < 40; ++n) {
    BinaryForm a = random_exact_form(rng, 3, 5);
    BinaryForm b = random_exact_form(rng, 4, 5);
    if (a.is_zero() || b.is_zero()) continue;
    long u = rng.int_in(-4, 4), v = rng.int_in(-4, 4);
    if (u == 0 && v == 0) continue;
    LinearForm l = lf(u, v);
    int expect = multiplicity_at(a, l) + multiplicity_at(b, l);
    // make shared factors likely
    BinaryForm extra = pow(l.form(), static_cast<int>(rng.below(3)));
    CHECK(multiplicity_at(a * b * extra, l) == expect + extra.degree());
  }
}

TEST_CASE("high multiplicity locus: spec values") {
  // order-2 partials of x^3 y^3 all keep the factor x y
  BinaryForm f = BinaryForm::monomial(6, 3, q(1));
  CHECK(high_multiplicity_locus(f, 3) == kX * kY);

  BinaryForm fermat = x_pow_plus_y_pow(10);
  BinaryForm d2 = high_multiplicity_locus(fermat, 2);
  CHECK(d2.degree() == 0);
  CHECK(d2[0] == q(1));

  BinaryForm g = Scalar(7L) * (kX - kY) * kY;
  CHECK(high_multiplicity_locus(g, 1) == canonicalized(g));
  CHECK(high_multiplicity_locus(g, 3).degree() == 0);  // beyond the degree
  CHECK_THROWS_AS(high_multiplicity_locus(g, 0), DomainError);
}

TEST_CASE("locus characterizes multiplicity (property, constructive ground truth)") {
  detail::SplitMix64 rng(113);
  for (int n = 0; n < 25; ++n) {
    // Build f as a product of known linear factors with known multiplicities.
    std::map<std::pair<long, long>, int> mults;
    BinaryForm f = BinaryForm::monomial(0, 0, q(1));
    for (int parts = 0; parts < 3; ++parts) {
      long u = rng.int_in(0, 3), v = rng.int_in(-3, 3);
      if (u == 0 && v == 0) continue;
      if (u == 0) v = 1;  // canonical-ish key
      int m = 1 + static_cast<int>(rng.below(4));
      auto key = std::make_pair(u, v);
      mults[key] += m;
      f = f * pow(lf(u, v).form(), m);
    }
    if (f.degree() == 0 || f.degree() > 10) continue;
    for (int m = 1; m <= f.degree() + 1; ++m) {
      BinaryForm locus = high_multiplicity_locus(f, m);
      for (const auto& [key, mult] : mults) {
        LinearForm l = lf(key.first, key.second);
        bool big = multiplicity_at(f, l) >= m;
        CHECK(big == (mult >= m));
        CHECK((multiplicity_at(locus, l) >= 1) == big);
      }
    }
  }
}

TEST_CASE("resultant: spec values and gcd equivalence (property)") {
  CHECK_FALSE(resultant(kX - kY, kX + kY).is_zero());
  CHECK(resultant((kX - kY) * kX, (kX - kY) * kY).is_zero());

  // (x^2 + y^2, x^2 - y^2): Sylvester-determinant oracle pins the value 4.
  BinaryForm f = x_pow_plus_y_pow(2);
  BinaryForm g = BinaryForm::monomial(2, 2, q(1)) - BinaryForm::monomial(2, 0, q(1));
  GaussianRational oracle = oracles::sylvester_oracle(f, g);
  CHECK(oracle == GaussianRational(4));
  CHECK(resultant(f, g).exact() == oracle);

  detail::SplitMix64 rng(131);
  for (int n = 0; n < 40; ++n) {
    BinaryForm a = random_exact_form(rng, 4, 4);
    BinaryForm b = random_exact_form(rng, 4, 4);
    if (a.is_zero() || b.is_zero()) continue;
    bool zero = resultant(a, b).is_zero();
    CHECK(zero == (gcd(a, b).degree() >= 1));
    CHECK(resultant(a, b).exact() == oracles::sylvester_oracle(a, b));
  }
  CHECK_THROWS_AS(resultant(kX, BinaryForm::zero(2)), DomainError);
}

TEST_CASE("complex roots: exact inputs with multiplicities") {
  BinaryForm f = kX * kX * kY * kY * kY * (kX + kY);
  auto roots = complex_roots(f);
  REQUIRE(roots.size() == 3);
  int total = 0;
  bool saw_origin = false, saw_infinity = false, saw_minus1 = false;
  for (const auto& r : roots) {
    total += r.multiplicity;
    if (r.beta.is_zero()) {
      saw_infinity = true;  // [1:0], the zero locus of y
      CHECK(r.multiplicity == 3);
    } else {
      double re = (r.alpha / r.beta).re.to_double();
      if (std::abs(re) < 1e-20) {
        saw_origin = true;  // [0:1], the zero locus of x
        CHECK(r.multiplicity == 2);
      }
      if (std::abs(re + 1.0) < 1e-20) {
        saw_minus1 = true;  // [-1:1], the zero locus of x + y
        CHECK(r.multiplicity == 1);
      }
    }
  }
  CHECK(total == f.degree());
  CHECK(saw_origin);
  CHECK(saw_infinity);
  CHECK(saw_minus1);
}

TEST_CASE("complex roots: Fermat roots match the numeric oracle") {
  BinaryForm f = x_pow_plus_y_pow(10);
  auto roots = complex_roots(f, 192);
  REQUIRE(roots.size() == 10);
  // oracle: double-precision Durand-Kerner on x^10 + 1
  std::vector<std::complex<double>> c(11);
  c[0] = 1.0;
  c[10] = 1.0;
  auto oracle = oracles::dk_roots(c);
  for (const auto& r : roots) {
    CHECK(r.multiplicity == 1);
    REQUIRE_FALSE(r.beta.is_zero());
    std::complex<double> z(r.alpha.re.to_double(), r.alpha.im.to_double());
    CHECK(std::abs(std::abs(z) - 1.0) < 1e-12);  // 10th roots of -1 sit on the circle
    double best = 1e9;
    for (const auto& w : oracle) best = std::min(best, std::abs(z - w));
    CHECK(best < 1e-9);
  }
}

TEST_CASE("complex roots: (x^2+y^2)^5 has the two imaginary roots with multiplicity 5") {
  auto roots = complex_roots(pow(x_pow_plus_y_pow(2), 5));
  REQUIRE(roots.size() == 2);
  for (const auto& r : roots) {
    CHECK(r.multiplicity == 5);
    double im = (r.alpha / r.beta).im.to_double();
    CHECK(std::abs(std::abs(im) - 1.0) < 1e-12);  // roots +-i
  }
}

TEST_CASE("distinct count agrees with root clusters (property)") {
  detail::SplitMix64 rng(149);
  for (int n = 0; n < 15; ++n) {
    BinaryForm f = random_exact_form(rng, 6, 6);
    if (f.is_zero()) continue;
    BinaryForm g = f * pow(kX - kY, static_cast<int>(rng.below(3)));
    if (g.degree() < 1) continue;
    CHECK(distinct_linear_factor_count(g) == static_cast<int>(complex_roots(g).size()));
  }
}

TEST_CASE("approximate multiplicity via synthetic division with tolerance") {
  BinaryForm g = pow(kX - kY, 4) * (kX + Scalar(4L) * kY);
  BinaryForm ga = g.to_approx(128);
  LinearForm l(Scalar(BigComplex::of(GaussianRational(1), 128)),
               Scalar(BigComplex::of(GaussianRational(-1), 128)));
  CHECK(multiplicity_at(ga, l) == 4);
  LinearForm l2(Scalar(BigComplex::of(GaussianRational(1), 128)),
                Scalar(BigComplex::of(GaussianRational(1), 128)));
  CHECK(multiplicity_at(ga, l2) == 0);
}

TEST_CASE("zero-form preconditions throw") {
  CHECK_THROWS_AS(multiplicity_at(BinaryForm::zero(4), lf(1, 0)), DomainError);
  CHECK_THROWS_AS(complex_roots(BinaryForm::zero(4)), DomainError);
  CHECK_THROWS_AS(distinct_linear_factor_count(BinaryForm::zero(2)), DomainError);
}
