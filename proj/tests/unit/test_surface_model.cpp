#include <doctest.h>

#include "detail/rng.hpp"
#include "oracles.hpp"
#include "whs/surface.hpp"

using namespace whs;

namespace {

Scalar q(long num, long den = 1) { return Scalar(GaussianRational(Rational(num, den))); }

NormalForm random_normal_form(detail::SplitMix64& rng, int height) {
  std::array<BinaryForm, 4> blocks{BinaryForm::zero(10), BinaryForm::zero(8),
                                   BinaryForm::zero(6), BinaryForm::zero(4)};
  for (int k = 0; k < 4; ++k) {
    int d = SurfaceEquation::block_degree(k);
    std::vector<Scalar> c(d + 1);
    for (auto& s : c) s = Scalar(GaussianRational(detail::random_rational(rng, height)));
    blocks[k] = BinaryForm(d, std::move(c));
  }
  return NormalForm(std::move(blocks));
}

Transformation random_transformation(detail::SplitMix64& rng) {
  while (true) {
    Matrix2 A{{q(rng.int_in(-3, 3)), q(rng.int_in(-3, 3)), q(rng.int_in(-3, 3)),
               q(rng.int_in(-3, 3))}};
    if (A.det().is_zero()) continue;
    Scalar alpha = q(rng.int_in(1, 4));
    Scalar beta = q(rng.int_in(1, 3));
    BinaryForm r(2, {q(rng.int_in(-2, 2)), q(rng.int_in(-2, 2)), q(rng.int_in(-2, 2))});
    return Transformation{A, alpha, r, beta};
  }
}

bool equal_poly(const oracles::Poly3& a, const SurfaceEquation& s) {
  return a == oracles::surface_poly(s);
}

}  // namespace

TEST_CASE("parse: direct reading of the two spec expressions") {
  SurfaceEquation s = parse_expression("z^5 + x^10 + y^10");
  CHECK(s.q(5)[0] == q(1));
  CHECK(s.q(0) == BinaryForm::monomial(10, 10, q(1)) + BinaryForm::monomial(10, 0, q(1)));
  for (int k = 1; k <= 4; ++k) CHECK(s.q(k).is_zero());

  SurfaceEquation t =
      parse_expression("z^5 - 10*y^4*z^3 + 20*y^6*z^2 - 15*y^8*z + 4*y^10");
  CHECK(t.q(5)[0] == q(1));
  CHECK(t.q(4).is_zero());
  CHECK(t.q(3) == BinaryForm::monomial(4, 0, q(-10)));
  CHECK(t.q(2) == BinaryForm::monomial(6, 0, q(20)));
  CHECK(t.q(1) == BinaryForm::monomial(8, 0, q(-15)));
  CHECK(t.q(0) == BinaryForm::monomial(10, 0, q(4)));
}

TEST_CASE("parse: weighted-degree and syntax errors carry positions") {
  CHECK_THROWS_WITH_AS(parse_expression("z^6 + x^10"),
                       "monomial z^6 has weighted degree 12, expected 10", DomainError);
  CHECK_THROWS_AS(parse_expression("z^5 + w^2"), ParseError);
  try {
    parse_expression("z^5 + ");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
  CHECK_THROWS_AS(parse_expression("z^5 + x^10/(x - x)"), ParseError);
  CHECK_THROWS_AS(parse_expression("z^5 + y^2*z^4/0"), ParseError);
}

TEST_CASE("parse: rational and Gaussian coefficients, parentheses, powers") {
  SurfaceEquation s = parse_expression("z^5 + (1/2 + 3*i)*x^10 - (x^2 - y^2)^5");
  CHECK(s.q(0).coeff_x_power(10) ==
        Scalar(GaussianRational(Rational(1, 2), Rational(3)) - GaussianRational(1)));
  // -(x^2 - y^2)^5 has -C(5,2) = -10 at x^6 y^4
  CHECK(s.q(0).coeff_x_power(6) == q(-10));
}

TEST_CASE("coefficient point: block order, index round-trip, weights") {
  CHECK(CoefficientPoint::position(3, 4, 0) == 0);
  CHECK(CoefficientPoint::position(3, 0, 4) == 4);
  CHECK(CoefficientPoint::position(2, 6, 0) == 5);
  CHECK(CoefficientPoint::position(0, 0, 10) == 31);
  for (int pos = 0; pos < CoefficientPoint::kSize; ++pos) {
    auto [k, i, j] = CoefficientPoint::index(pos);
    CHECK(CoefficientPoint::position(k, i, j) == pos);
    CHECK(i + j == 10 - 2 * k);
    CHECK(CoefficientPoint::weight(pos) == 10 - 2 * k);
  }
  // block sizes 5, 7, 9, 11 with weights 4, 6, 8, 10
  int sizes[4] = {0, 0, 0, 0};
  for (int pos = 0; pos < 32; ++pos) sizes[CoefficientPoint::index(pos).k]++;
  CHECK(sizes[3] == 5);
  CHECK(sizes[2] == 7);
  CHECK(sizes[1] == 9);
  CHECK(sizes[0] == 11);
}

TEST_CASE("to_point: documented spec examples") {
  NormalForm nf;
  nf = nf.with_q(3, BinaryForm::monomial(4, 4, q(1)));  // q3 = x^4
  CoefficientPoint p = to_point(nf);
  for (int pos = 0; pos < 32; ++pos)
    CHECK(p[pos] == (pos == CoefficientPoint::position(3, 4, 0) ? q(1) : q(0)));

  NormalForm nf2;
  nf2 = nf2.with_q(0, BinaryForm::monomial(10, 10, q(1)) + BinaryForm::monomial(10, 0, q(1)));
  CoefficientPoint p2 = to_point(nf2);
  for (int pos = 0; pos < 32; ++pos) {
    bool hit = pos == CoefficientPoint::position(0, 10, 0) ||
               pos == CoefficientPoint::position(0, 0, 10);
    CHECK(p2[pos] == (hit ? q(1) : q(0)));
  }

  CHECK_THROWS_WITH_AS(to_point(NormalForm()), "not a projective point", DomainError);
}

TEST_CASE("to_point / from_point round-trip (property)") {
  detail::SplitMix64 rng(7);
  for (int n = 0; n < 25; ++n) {
    NormalForm nf = random_normal_form(rng, 9);
    if (nf.all_zero()) continue;
    CHECK(from_point(to_point(nf)) == nf);
  }
}

TEST_CASE("apply_transformation: identity, Tschirnhaus example, swap") {
  SurfaceEquation f = parse_expression("z^5 + 5*y^2*z^4");
  CHECK(apply_transformation(f, Transformation::identity()) == f);

  Transformation shift;  // z -> z - y^2
  shift.r = BinaryForm::monomial(2, 0, q(-1));
  SurfaceEquation g = apply_transformation(f, shift);
  SurfaceEquation expect =
      parse_expression("z^5 - 10*y^4*z^3 + 20*y^6*z^2 - 15*y^8*z + 4*y^10");
  CHECK(g == expect);
  // the substitution oracle agrees
  CHECK(equal_poly(oracles::substitute_oracle(f, shift), g));

  Transformation swap;
  swap.A = Matrix2{{q(0), q(1), q(1), q(0)}};
  SurfaceEquation fermat_x = parse_expression("z^5 + x^10");
  CHECK(apply_transformation(fermat_x, swap) == parse_expression("z^5 + y^10"));
}

TEST_CASE("apply_transformation matches the substitution oracle (property)") {
  detail::SplitMix64 rng(17);
  for (int n = 0; n < 12; ++n) {
    NormalForm nf = random_normal_form(rng, 4);
    SurfaceEquation f = nf.as_surface();
    Transformation t = random_transformation(rng);
    SurfaceEquation g = apply_transformation(f, t);
    CHECK(equal_poly(oracles::substitute_oracle(f, t), g));
  }
}

TEST_CASE("transformation inverse undoes the action (property)") {
  detail::SplitMix64 rng(29);
  for (int n = 0; n < 12; ++n) {
    NormalForm nf = random_normal_form(rng, 4);
    SurfaceEquation f = nf.as_surface();
    Transformation t = random_transformation(rng);
    SurfaceEquation g = apply_transformation(apply_transformation(f, t), t.inverse());
    CHECK(g == f);
  }
}

TEST_CASE("singular matrix is rejected") {
  Transformation t;
  t.A = Matrix2{{q(1), q(2), q(2), q(4)}};
  CHECK_THROWS_AS(apply_transformation(SurfaceEquation(), t), DomainError);
}

TEST_CASE("surface JSON: round-trip, normal-form documents, absent blocks") {
  SurfaceEquation s = parse_expression("z^5 + (1/2)*x^10 + 2*x^3*y*z^3 - y^2*z^4");
  std::string js = surface_to_json(s);
  SurfaceDocument doc = surface_from_json(js);
  CHECK(doc.surface == s);
  CHECK_FALSE(doc.normal_form);

  // a normal-form document implies q5 = 1 and omits blocks 4, 5
  NormalForm nf;
  nf = nf.with_q(0, BinaryForm::monomial(10, 10, q(1)) + BinaryForm::monomial(10, 0, q(4)));
  std::string njs = normal_form_to_json(nf);
  SurfaceDocument ndoc = surface_from_json(njs);
  CHECK(ndoc.normal_form);
  CHECK(ndoc.as_normal_form() == nf);
  CHECK(ndoc.surface.q(5)[0] == q(1));

  // absent means zero, including q5
  SurfaceDocument zdoc = surface_from_json(R"({"q": {"0": [1,0,0,0,0,0,0,0,0,0,0]}})");
  CHECK(zdoc.surface.q(5).is_zero());

  // a normal-form document must not carry blocks 4 or 5
  CHECK_THROWS_AS(
      surface_from_json(R"({"normal_form": true, "q": {"5": ["1"]}})"), DomainError);
  // wrong block length
  CHECK_THROWS_AS(surface_from_json(R"({"q": {"3": ["1", "0"]}})"), DomainError);
}

TEST_CASE("JSON serialization is byte-deterministic") {
  SurfaceEquation s = parse_expression("z^5 + (2/3)*x^10 - x^5*y^5 + i*y^10");
  CHECK(surface_to_json(s) == surface_to_json(s));
  SurfaceDocument doc = surface_from_json(surface_to_json(s));
  CHECK(surface_to_json(doc.surface) == surface_to_json(s));
}

TEST_CASE("approximate-mode JSON round-trips at the stated precision") {
  SurfaceDocument doc = surface_from_json(
      R"({"mode": "approx", "precision": 160,
          "q": {"5": ["1"], "0": ["0.5", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1.25e-3+2*i"]}})");
  CHECK(doc.mode == Mode::approx);
  CHECK(doc.precision == 160);
  CHECK(doc.surface.mode() == Mode::approx);
  const BigComplex& c = doc.surface.q(0)[10].approx();
  CHECK(c.re.precision() == 160);
  CHECK((c.re - BigFloat::of(0.00125, 160)).abs() < BigFloat::pow2(-100, 160));
  CHECK((c.im - BigFloat::of(2L, 160)).abs() < BigFloat::pow2(-100, 160));
}
