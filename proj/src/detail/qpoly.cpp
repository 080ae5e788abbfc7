#include "detail/qpoly.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace whs::detail {

int deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

void trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

bool is_zero(const QPoly& p) { return p.empty(); }

const GaussianRational& lc(const QPoly& p) {
  if (p.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return p.back();
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  trim(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  trim(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly scale(const QPoly& a, const GaussianRational& c) {
  if (c.is_zero()) return {};
  QPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

QPoly shift_up(const QPoly& a, int k) {
  if (a.empty()) return {};
  QPoly r(a.size() + static_cast<std::size_t>(k));
  std::copy(a.begin(), a.end(), r.begin() + k);
  return r;
}

QPoly derivative(const QPoly& a) {
  if (a.size() <= 1) return {};
  QPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * GaussianRational(static_cast<long>(i));
  trim(r);
  return r;
}

GaussianRational eval(const QPoly& a, const GaussianRational& x) {
  GaussianRational acc;
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
  return acc;
}

BigComplex eval_complex(const QPoly& a, const BigComplex& z, mpfr_prec_t prec) {
  BigComplex acc(prec);
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * z + BigComplex::of(a[i], prec);
  return acc;
}

std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw DomainError("polynomial division by zero");
  QPoly rem = a;
  trim(rem);
  int db = deg(b);
  if (deg(rem) < db) return {QPoly{}, rem};
  QPoly quo(rem.size() - b.size() + 1);
  GaussianRational inv_lc = lc(b).inverse();
  for (int k = deg(rem); k >= db; --k) {
    if (rem[k].is_zero()) continue;
    GaussianRational q = rem[k] * inv_lc;
    quo[k - db] = q;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b[j];
  }
  trim(quo);
  trim(rem);
  return {quo, rem};
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.empty()) throw DomainError("polynomial division is not exact");
  return q;
}

QPoly monic(const QPoly& a) {
  if (a.empty()) return a;
  return scale(a, lc(a).inverse());
}

// ---- Gaussian integers ----

GInt gadd(const GInt& a, const GInt& b) { return {a.re + b.re, a.im + b.im}; }
GInt gsub(const GInt& a, const GInt& b) { return {a.re - b.re, a.im - b.im}; }
GInt gneg(const GInt& a) { return {-a.re, -a.im}; }

GInt gmul(const GInt& a, const GInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GInt gdiv_exact(const GInt& a, const GInt& b) {
  if (b.is_zero()) throw DomainError("Gaussian integer division by zero");
  mpz_class n = b.norm();
  GInt t = gmul(a, GInt{b.re, -b.im});
  GInt q;
  mpz_class r1, r2;
  mpz_fdiv_qr(q.re.get_mpz_t(), r1.get_mpz_t(), t.re.get_mpz_t(), n.get_mpz_t());
  mpz_fdiv_qr(q.im.get_mpz_t(), r2.get_mpz_t(), t.im.get_mpz_t(), n.get_mpz_t());
  if (r1 != 0 || r2 != 0) throw DomainError("Gaussian integer division is not exact");
  return q;
}

namespace {

// Nearest integer to a/n, n > 0 (ties toward +inf).
mpz_class round_div(const mpz_class& a, const mpz_class& n) {
  mpz_class t = 2 * a + n;
  mpz_class q;
  mpz_class d = 2 * n;
  mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t());
  return q;
}

// Canonical associate: re > 0 and im >= 0 (zero stays zero).
GInt canonical_unit(GInt v) {
  if (v.is_zero()) return v;
  for (int k = 0; k < 3 && !(v.re > 0 && v.im >= 0); ++k) v = GInt{-v.im, v.re};  // multiply by i
  return v;
}

}  // namespace

GInt ggcd(const GInt& a, const GInt& b) {
  GInt x = a, y = b;
  while (!y.is_zero()) {
    mpz_class n = y.norm();
    GInt t = gmul(x, GInt{y.re, -y.im});
    GInt q{round_div(t.re, n), round_div(t.im, n)};
    GInt r = gsub(x, gmul(q, y));
    x = y;
    y = r;
  }
  return canonical_unit(x);
}

GPoly to_integer(const QPoly& p) {
  mpz_class den(1);
  for (const auto& c : p) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), c.re.get_den().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), l.get_mpz_t(), c.im.get_den().get_mpz_t());
  }
  GPoly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rational re = p[i].re * den;
    Rational im = p[i].im * den;
    r[i] = GInt{re.get_num(), im.get_num()};
  }
  return r;
}

QPoly to_rational(const GPoly& p) {
  QPoly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    r[i] = GaussianRational(Rational(p[i].re), Rational(p[i].im));
  trim(r);
  return r;
}

GInt content(const GPoly& p) {
  GInt g{0, 0};
  for (const auto& c : p) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? canonical_unit(c) : ggcd(g, c);
    if (g.norm() == 1) break;
  }
  return g;
}

namespace {

void gtrim(GPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

GPoly primitive(GPoly p) {
  gtrim(p);
  if (p.empty()) return p;
  GInt c = content(p);
  for (auto& x : p) x = gdiv_exact(x, c);
  return p;
}

GInt gpow(const GInt& a, int e) {
  GInt r{1, 0};
  for (int k = 0; k < e; ++k) r = gmul(r, a);
  return r;
}

// Pseudo-remainder: exactly lc(B)^(degA - degB + 1) * A reduced by B. Degree
// can drop by more than one per step, so the missing powers of lc(B) are
// applied at the end (the subresultant divisions rely on the exact exponent).
GPoly prem(GPoly A, const GPoly& B) {
  int db = static_cast<int>(B.size()) - 1;
  GInt lb = B.back();
  int da = static_cast<int>(A.size()) - 1;
  int wanted = da - db + 1;
  int steps = 0;
  while (da >= db) {
    GInt top = A[da];
    for (auto& x : A) x = gmul(x, lb);
    for (int j = 0; j <= db; ++j)
      A[da - db + j] = gsub(A[da - db + j], gmul(top, B[j]));
    A.resize(da);  // the leading term cancels by construction
    gtrim(A);
    da = static_cast<int>(A.size()) - 1;
    ++steps;
  }
  if (!A.empty() && steps < wanted) {
    GInt f = gpow(lb, wanted - steps);
    for (auto& x : A) x = gmul(x, f);
  }
  return A;
}

}  // namespace

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (is_zero(a) && is_zero(b)) throw DomainError("gcd of two zero polynomials");
  if (is_zero(a)) return monic(b);
  if (is_zero(b)) return monic(a);
  GPoly A = primitive(to_integer(a));
  GPoly B = primitive(to_integer(b));
  if (A.size() < B.size()) std::swap(A, B);
  // Subresultant remainder sequence keeps the coefficient growth linear.
  GInt g{1, 0}, h{1, 0};
  while (true) {
    int delta = static_cast<int>(A.size() - B.size());
    GPoly R = prem(A, B);
    if (R.empty()) return monic(to_rational(primitive(B)));
    if (R.size() == 1) return QPoly{GaussianRational(1)};
    GInt divisor = gmul(g, gpow(h, delta));
    A = std::move(B);
    B = std::move(R);
    for (auto& x : B) x = gdiv_exact(x, divisor);
    g = A.back();
    if (delta > 0) {
      // h = g^delta / h^(delta-1), exact in Z[i]
      h = gdiv_exact(gpow(g, delta), gpow(h, delta - 1));
    }
  }
}

std::vector<std::pair<QPoly, int>> squarefree(const QPoly& f) {
  if (is_zero(f)) throw DomainError("square-free decomposition of zero");
  std::vector<std::pair<QPoly, int>> out;
  if (deg(f) == 0) return out;
  QPoly fp = derivative(f);
  QPoly a = gcd(f, fp);
  if (deg(a) == 0) {
    out.emplace_back(monic(f), 1);
    return out;
  }
  QPoly b = exact_div(f, a);
  QPoly c = exact_div(fp, a);
  QPoly d = sub(c, derivative(b));
  int m = 1;
  while (deg(b) > 0) {
    QPoly g = gcd(b, d);
    if (deg(g) > 0) out.emplace_back(monic(g), m);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = sub(c, derivative(b));
    ++m;
  }
  return out;
}

namespace {

// Resultant of nonzero polynomials at their actual degrees, by the Euclidean
// remainder recurrence.
GaussianRational res_actual(QPoly f, QPoly g) {
  GaussianRational acc(1);
  bool negate = false;
  while (true) {
    int df = deg(f), dg = deg(g);
    if (dg == 0) {
      GaussianRational p(1);
      for (int k = 0; k < df; ++k) p *= g[0];
      return negate ? -(acc * p) : acc * p;
    }
    auto [q, r] = divrem(f, g);
    (void)q;
    if (is_zero(r)) return GaussianRational(0);
    int dr = deg(r);
    if ((df & 1) && (dg & 1)) negate = !negate;
    GaussianRational p(1);
    for (int k = 0; k < df - dr; ++k) p *= lc(g);
    acc *= p;
    f = std::move(g);
    g = std::move(r);
  }
}

}  // namespace

GaussianRational resultant_formal(const QPoly& a, const QPoly& b, int m, int n) {
  QPoly f = a, g = b;
  trim(f);
  trim(g);
  if (deg(f) > m || deg(g) > n) throw DomainError("formal degree below actual degree");
  if (m == 0 && n == 0) return GaussianRational(1);
  if (is_zero(f) || is_zero(g)) return GaussianRational(0);
  GaussianRational factor(1);
  bool negate = false;
  if (deg(f) < m) {
    // Each dropped row of the Sylvester matrix contributes lc(g) and n sign flips.
    int drop = m - deg(f);
    if ((n * drop) & 1) negate = !negate;
    for (int k = 0; k < drop; ++k) factor *= lc(g);
    m = deg(f);
  }
  if (deg(g) < n) {
    int drop = n - deg(g);
    for (int k = 0; k < drop; ++k) factor *= lc(f);
    n = deg(g);
  }
  GaussianRational r;
  if (m == 0 && n == 0)
    r = GaussianRational(1);
  else if (m == 0) {
    r = GaussianRational(1);
    for (int k = 0; k < n; ++k) r *= f[0];
    // Res(const, g) with deg g = n: f0^n (no sign, matching the Sylvester layout)
  } else if (n == 0) {
    r = GaussianRational(1);
    for (int k = 0; k < m; ++k) r *= g[0];
  } else {
    r = res_actual(f, g);
  }
  r *= factor;
  return negate ? -r : r;
}

GaussianRational sylvester_resultant(const QPoly& a, const QPoly& b, int m, int n) {
  if (m == 0 && n == 0) return GaussianRational(1);
  int s = m + n;
  std::vector<std::vector<GaussianRational>> M(s, std::vector<GaussianRational>(s));
  auto at = [](const QPoly& p, int k) {
    return (k >= 0 && k < static_cast<int>(p.size())) ? p[k] : GaussianRational(0);
  };
  for (int r = 0; r < n; ++r)
    for (int c = 0; c <= m; ++c) M[r][r + c] = at(a, m - c);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c <= n; ++c) M[n + r][r + c] = at(b, n - c);
  // Exact Gaussian elimination; determinant = product of pivots.
  GaussianRational det(1);
  for (int col = 0; col < s; ++col) {
    int piv = -1;
    for (int r = col; r < s; ++r)
      if (!M[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return GaussianRational(0);
    if (piv != col) {
      std::swap(M[piv], M[col]);
      det = -det;
    }
    det *= M[col][col];
    GaussianRational inv = M[col][col].inverse();
    for (int r = col + 1; r < s; ++r) {
      if (M[r][col].is_zero()) continue;
      GaussianRational f = M[r][col] * inv;
      for (int c = col; c < s; ++c) M[r][c] -= f * M[col][c];
    }
  }
  return det;
}

QPoly interpolate(const std::vector<GaussianRational>& nodes,
                  const std::vector<GaussianRational>& values) {
  if (nodes.size() != values.size() || nodes.empty())
    throw DomainError("interpolation needs matching nonempty node/value lists");
  std::size_t n = nodes.size();
  // Newton divided differences.
  std::vector<GaussianRational> dd = values;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      GaussianRational den = nodes[i] - nodes[i - level];
      dd[i] = (dd[i] - dd[i - 1]) / den;
      if (i == level) break;
    }
  // Horner expansion of the Newton form.
  QPoly p{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    // p = p*(x - nodes[i]) + dd[i]
    QPoly shifted = shift_up(p, 1);
    QPoly scaled = scale(p, -nodes[i]);
    p = add(shifted, scaled);
    if (p.empty()) p = QPoly{dd[i]};
    else {
      p[0] += dd[i];
      trim(p);
    }
  }
  trim(p);
  return p;
}

// ---- GF(p^2) ----

std::uint64_t Fp2Field::addm(std::uint64_t x, std::uint64_t y) const {
  std::uint64_t s = x + y;
  if (s >= p_) s -= p_;
  return s;
}

std::uint64_t Fp2Field::subm(std::uint64_t x, std::uint64_t y) const {
  return x >= y ? x - y : x + p_ - y;
}

std::uint64_t Fp2Field::mulm(std::uint64_t x, std::uint64_t y) const {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(x) * y) % p_);
}

std::uint64_t Fp2Field::powm(std::uint64_t x, std::uint64_t e) const {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulm(r, x);
    x = mulm(x, x);
    e >>= 1;
  }
  return r;
}

Fp2Field::El Fp2Field::reduce(const GInt& v) const {
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class a = v.re % p, b = v.im % p;
  if (a < 0) a += p;
  if (b < 0) b += p;
  return El{a.get_ui(), b.get_ui()};
}

Fp2Field::El Fp2Field::add(El x, El y) const { return {addm(x.a, y.a), addm(x.b, y.b)}; }
Fp2Field::El Fp2Field::sub(El x, El y) const { return {subm(x.a, y.a), subm(x.b, y.b)}; }

Fp2Field::El Fp2Field::mul(El x, El y) const {
  return {subm(mulm(x.a, y.a), mulm(x.b, y.b)), addm(mulm(x.a, y.b), mulm(x.b, y.a))};
}

Fp2Field::El Fp2Field::inv(El x) const {
  std::uint64_t n = addm(mulm(x.a, x.a), mulm(x.b, x.b));
  if (n == 0) throw DomainError("inverse of zero in GF(p^2)");
  std::uint64_t ni = powm(n, p_ - 2);
  return {mulm(x.a, ni), mulm(subm(0, x.b), ni)};
}

namespace {

using FPoly = std::vector<Fp2Field::El>;

void ftrim(FPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

FPoly freduce(const Fp2Field& F, const GPoly& p) {
  FPoly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = F.reduce(p[i]);
  ftrim(r);
  return r;
}

FPoly fmod(const Fp2Field& F, FPoly a, const FPoly& b) {
  Fp2Field::El ilc = F.inv(b.back());
  while (a.size() >= b.size()) {
    Fp2Field::El q = F.mul(a.back(), ilc);
    std::size_t off = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j)
      a[off + j] = F.sub(a[off + j], F.mul(q, b[j]));
    a.pop_back();
    ftrim(a);
  }
  return a;
}

}  // namespace

bool certified_coprime(const GPoly& A0, const GPoly& B0) {
  GPoly A = A0, B = B0;
  gtrim(A);
  gtrim(B);
  if (A.empty() || B.empty()) return false;
  // Primes = 3 (mod 4), so u^2 + 1 stays irreducible and GF(p^2) is a field.
  static constexpr std::array<std::uint64_t, 4> kPrimes = {
      2147483647ULL, 1000000007ULL, 2147483587ULL, 4294967291ULL};
  for (std::uint64_t p : kPrimes) {
    Fp2Field F(p);
    if (F.reduce(A.back()).is_zero() || F.reduce(B.back()).is_zero())
      continue;  // a leading coefficient collapses; pick another prime
    FPoly a = freduce(F, A), b = freduce(F, B);
    while (!b.empty()) {
      FPoly r = fmod(F, a, b);
      a = std::move(b);
      b = std::move(r);
    }
    // Constant gcd mod p certifies coprimality over Q(i) (degrees preserved).
    if (a.size() == 1) return true;
  }
  return false;
}

}  // namespace whs::detail
