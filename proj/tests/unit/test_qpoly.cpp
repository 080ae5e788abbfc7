#include <doctest.h>

#include "detail/qpoly.hpp"
#include "detail/rng.hpp"
#include "oracles.hpp"

using namespace whs;
using detail::QPoly;

namespace {

QPoly random_poly(detail::SplitMix64& rng, int max_deg, int height, bool gaussian = true) {
  int d = static_cast<int>(rng.below(max_deg + 1));
  QPoly p(d + 1);
  for (auto& c : p) {
    Rational re = detail::random_rational(rng, height);
    Rational im = gaussian ? detail::random_rational(rng, height) : Rational(0);
    c = GaussianRational(re, im);
  }
  detail::trim(p);
  return p;
}

}  // namespace

TEST_CASE("divrem reconstructs the dividend") {
  detail::SplitMix64 rng(11);
  for (int n = 0; n < 60; ++n) {
    QPoly a = random_poly(rng, 9, 6);
    QPoly b = random_poly(rng, 5, 6);
    if (detail::is_zero(b)) continue;
    auto [q, r] = detail::divrem(a, b);
    QPoly back = detail::add(detail::mul(q, b), r);
    CHECK(back == a);
    CHECK(detail::deg(r) < detail::deg(b));
  }
}

TEST_CASE("subresultant gcd agrees with textbook Euclid") {
  detail::SplitMix64 rng(23);
  int nontrivial = 0;
  for (int n = 0; n < 80; ++n) {
    QPoly a = random_poly(rng, 5, 5);
    QPoly b = random_poly(rng, 5, 5);
    QPoly common = random_poly(rng, 3, 3);
    if (detail::is_zero(a) || detail::is_zero(b)) continue;
    if (!detail::is_zero(common)) {
      a = detail::mul(a, common);
      b = detail::mul(b, common);
    }
    QPoly mine = detail::gcd(a, b);
    oracles::Poly theirs = oracles::euclid_gcd(a, b);
    CHECK(mine == theirs);
    if (detail::deg(mine) > 0) ++nontrivial;
  }
  CHECK(nontrivial > 20);
}

TEST_CASE("Yun decomposition rebuilds the polynomial") {
  detail::SplitMix64 rng(37);
  for (int n = 0; n < 40; ++n) {
    QPoly f{GaussianRational(1)};
    int total = 0;
    for (int part = 0; part < 3; ++part) {
      QPoly g = random_poly(rng, 2, 4);
      if (detail::deg(g) < 1) continue;
      int m = 1 + static_cast<int>(rng.below(3));
      for (int e = 0; e < m; ++e) f = detail::mul(f, g);
      total += m * detail::deg(g);
    }
    if (total == 0) continue;
    auto parts = detail::squarefree(f);
    QPoly rebuilt{GaussianRational(1)};
    int degsum = 0;
    for (const auto& [g, m] : parts) {
      for (int e = 0; e < m; ++e) rebuilt = detail::mul(rebuilt, g);
      degsum += m * detail::deg(g);
      for (const auto& [g2, m2] : parts) {
        if (&g2 == &g) continue;
        (void)m2;
        CHECK(detail::deg(detail::gcd(g, g2)) == 0);
      }
    }
    CHECK(degsum == detail::deg(f));
    // rebuilt and f agree up to the leading unit
    GaussianRational unit = detail::lc(f) / detail::lc(rebuilt);
    CHECK(detail::scale(rebuilt, unit) == f);
  }
}

TEST_CASE("formal resultant equals the Sylvester determinant, degree drops included") {
  detail::SplitMix64 rng(51);
  for (int n = 0; n < 120; ++n) {
    QPoly a = random_poly(rng, 4, 4);
    QPoly b = random_poly(rng, 4, 4);
    if (detail::is_zero(a) || detail::is_zero(b)) continue;
    int m = detail::deg(a) + static_cast<int>(rng.below(3));  // formal >= actual
    int nn = detail::deg(b) + static_cast<int>(rng.below(3));
    if (m == 0 && nn == 0) continue;
    GaussianRational fast = detail::resultant_formal(a, b, m, nn);
    GaussianRational slow = detail::sylvester_resultant(a, b, m, nn);
    CHECK(fast == slow);
  }
}

TEST_CASE("interpolation reproduces polynomial values") {
  detail::SplitMix64 rng(77);
  for (int n = 0; n < 20; ++n) {
    QPoly p = random_poly(rng, 8, 9);
    std::vector<GaussianRational> nodes, values;
    for (int t = 0; t <= 9; ++t) {
      nodes.emplace_back(Rational(t - 4));
      values.push_back(detail::eval(p, nodes.back()));
    }
    QPoly back = detail::interpolate(nodes, values);
    CHECK(back == p);
  }
}

TEST_CASE("Gaussian integer gcd and content") {
  using detail::GInt;
  GInt a{mpz_class(7), mpz_class(1)};   // norm 50
  GInt b{mpz_class(5), mpz_class(-5)};  // norm 50
  GInt g = detail::ggcd(a, b);
  CHECK(!g.is_zero());
  // both must be divisible by the gcd
  CHECK_NOTHROW(detail::gdiv_exact(a, g));
  CHECK_NOTHROW(detail::gdiv_exact(b, g));
  GInt one = detail::ggcd(GInt{mpz_class(3), mpz_class(0)}, GInt{mpz_class(0), mpz_class(2)});
  CHECK(one.norm() == 1);
}

TEST_CASE("certified coprimality: sound on coprime pairs, silent on shared factors") {
  detail::SplitMix64 rng(91);
  for (int n = 0; n < 30; ++n) {
    QPoly a = random_poly(rng, 6, 8);
    QPoly b = random_poly(rng, 6, 8);
    if (detail::deg(a) < 1 || detail::deg(b) < 1) continue;
    bool claim = detail::certified_coprime(detail::to_integer(a), detail::to_integer(b));
    bool truth = detail::deg(detail::gcd(a, b)) == 0;
    if (claim) CHECK(truth);  // never certify falsely
    QPoly c = detail::mul(a, b);
    CHECK_FALSE(detail::certified_coprime(detail::to_integer(c), detail::to_integer(a)));
  }
}
