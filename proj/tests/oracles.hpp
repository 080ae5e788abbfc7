#pragma once

// Independent reference implementations used to pin expected values. These
// deliberately avoid the library's computational paths: plain monic Euclid
// instead of subresultants, Laplace determinants instead of elimination,
// direct trivariate substitution instead of binomial expansion, and
// double-precision Durand-Kerner for numeric cross-checks.

#include <complex>
#include <map>
#include <vector>

#include "whs/binary_form.hpp"
#include "whs/surface.hpp"

namespace oracles {

using whs::GaussianRational;
using whs::Rational;

// ---- dense univariate polynomials over Q(i), ascending coefficients ----

using Poly = std::vector<GaussianRational>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  trim(r);
  return r;
}

// Plain long division remainder.
inline Poly poly_rem(Poly a, const Poly& b) {
  trim(a);
  while (degree(a) >= degree(b)) {
    GaussianRational f = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[off + j] -= f * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

// Textbook Euclidean gcd, monic output.
inline Poly euclid_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    GaussianRational inv = a.back().inverse();
    for (auto& c : a) c *= inv;
  }
  return a;
}

inline Poly dehom(const whs::BinaryForm& f) {
  Poly p(f.degree() + 1);
  for (int t = 0; t <= f.degree(); ++t) p[f.degree() - t] = f[t].exact();
  trim(p);
  return p;
}

// ---- Laplace-expansion determinant (small matrices only) ----

inline GaussianRational laplace_det(std::vector<std::vector<GaussianRational>> m) {
  std::size_t n = m.size();
  if (n == 0) return GaussianRational(1);
  if (n == 1) return m[0][0];
  GaussianRational acc;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (!m[0][c].is_zero()) {
      std::vector<std::vector<GaussianRational>> minor(n - 1);
      for (std::size_t r = 1; r < n; ++r)
        for (std::size_t cc = 0; cc < n; ++cc)
          if (cc != c) minor[r - 1].push_back(m[r][cc]);
      GaussianRational term = m[0][c] * laplace_det(std::move(minor));
      acc += sign > 0 ? term : -term;
    }
    sign = -sign;
  }
  return acc;
}

// Sylvester resultant at formal degrees (m, n) by Laplace expansion.
inline GaussianRational sylvester_oracle(const whs::BinaryForm& f, const whs::BinaryForm& g) {
  int m = f.degree(), n = g.degree();
  std::vector<std::vector<GaussianRational>> M(m + n,
                                               std::vector<GaussianRational>(m + n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c <= m; ++c) M[r][r + c] = f[c].exact();  // descending coeffs
  for (int r = 0; r < m; ++r)
    for (int c = 0; c <= n; ++c) M[n + r][r + c] = g[c].exact();
  return laplace_det(std::move(M));
}

// ---- direct trivariate substitution (expansion oracle) ----

struct Mono {
  int i, j, k;
  bool operator<(const Mono& o) const {
    if (i != o.i) return i < o.i;
    if (j != o.j) return j < o.j;
    return k < o.k;
  }
};

using Poly3 = std::map<Mono, GaussianRational>;

inline void p3_add(Poly3& p, const Mono& m, const GaussianRational& c) {
  auto [it, fresh] = p.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

inline Poly3 p3_mul(const Poly3& a, const Poly3& b) {
  Poly3 r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) p3_add(r, Mono{ma.i + mb.i, ma.j + mb.j, ma.k + mb.k}, ca * cb);
  return r;
}

inline Poly3 p3_pow(const Poly3& a, int e) {
  Poly3 r;
  r.emplace(Mono{0, 0, 0}, GaussianRational(1));
  for (int n = 0; n < e; ++n) r = p3_mul(r, a);
  return r;
}

inline Poly3 surface_poly(const whs::SurfaceEquation& s) {
  Poly3 out;
  for (int k = 0; k <= 5; ++k) {
    const whs::BinaryForm& q = s.q(k);
    for (int t = 0; t <= q.degree(); ++t) {
      if (q[t].is_zero()) continue;
      p3_add(out, Mono{q.degree() - t, t, k}, q[t].exact());
    }
  }
  return out;
}

// F(T(x,y,z)) / beta^2 by brute substitution.
inline Poly3 substitute_oracle(const whs::SurfaceEquation& s, const whs::Transformation& t) {
  Poly3 xe, ye, ze;
  xe.emplace(Mono{1, 0, 0}, t.A(0, 0).exact());
  p3_add(xe, Mono{0, 1, 0}, t.A(0, 1).exact());
  ye.emplace(Mono{1, 0, 0}, t.A(1, 0).exact());
  p3_add(ye, Mono{0, 1, 0}, t.A(1, 1).exact());
  ze.emplace(Mono{0, 0, 1}, t.alpha.exact());
  for (int tt = 0; tt <= 2; ++tt)
    if (!t.r[tt].is_zero()) p3_add(ze, Mono{2 - tt, tt, 0}, t.r[tt].exact());

  Poly3 out;
  for (const auto& [m, c] : surface_poly(s)) {
    Poly3 term;
    term.emplace(Mono{0, 0, 0}, c);
    term = p3_mul(term, p3_pow(xe, m.i));
    term = p3_mul(term, p3_pow(ye, m.j));
    term = p3_mul(term, p3_pow(ze, m.k));
    for (const auto& [mm, cc] : term) p3_add(out, mm, cc);
  }
  GaussianRational ib2 = (t.beta.exact() * t.beta.exact()).inverse();
  for (auto& [m, c] : out) c *= ib2;
  return out;
}

// ---- double-precision Durand-Kerner (numeric cross-checks) ----

inline std::vector<std::complex<double>> dk_roots(std::vector<std::complex<double>> c) {
  while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
  int n = static_cast<int>(c.size()) - 1;
  std::vector<std::complex<double>> w(n);
  for (int k = 0; k < n; ++k) w[k] = std::polar(1.3, 6.2831853 * (k + 0.27) / n + 0.5);
  for (int iter = 0; iter < 2000; ++iter) {
    double worst = 0;
    for (int k = 0; k < n; ++k) {
      std::complex<double> p = 0;
      for (int d = n; d >= 0; --d) p = p * w[k] + c[d];
      std::complex<double> den = c[n];
      for (int j = 0; j < n; ++j)
        if (j != k) den *= (w[k] - w[j]);
      std::complex<double> corr = p / den;
      w[k] -= corr;
      worst = std::max(worst, std::abs(corr));
    }
    if (worst < 1e-13) break;
  }
  return w;
}

}  // namespace oracles
