#include "whs/binary_form.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "detail/qpoly.hpp"
#include "detail/roots.hpp"

namespace whs {

namespace {

Mode joint_mode(const std::vector<Scalar>& coeffs) {
  for (const auto& c : coeffs)
    if (!c.is_exact()) return Mode::approx;
  return Mode::exact;
}

mpfr_prec_t max_precision(const std::vector<Scalar>& coeffs) {
  mpfr_prec_t p = BigFloat::kDefaultPrecision;
  for (const auto& c : coeffs)
    if (!c.is_exact()) p = std::max(p, c.approx().precision());
  return p;
}

}  // namespace

BinaryForm BinaryForm::zero(int degree) {
  if (degree < 0) throw DomainError("negative degree");
  return BinaryForm(degree, std::vector<Scalar>(degree + 1));
}

BinaryForm BinaryForm::monomial(int degree, int x_power, Scalar c) {
  if (x_power < 0 || x_power > degree) throw DomainError("monomial power out of range");
  std::vector<Scalar> coeffs(degree + 1);
  coeffs[degree - x_power] = std::move(c);
  return BinaryForm(degree, std::move(coeffs));
}

BinaryForm::BinaryForm(int degree, std::vector<Scalar> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree_ < 0 || coeffs_.size() != static_cast<std::size_t>(degree_) + 1)
    throw DomainError("coefficient count must be degree + 1");
  mode_ = joint_mode(coeffs_);
  if (mode_ == Mode::approx) {
    mpfr_prec_t prec = max_precision(coeffs_);
    for (auto& c : coeffs_)
      if (c.is_exact()) c = c.promoted(prec);
  }
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Scalar& c) { return c.is_zero(); });
}

const Scalar& BinaryForm::operator[](int t) const {
  if (t < 0 || t > degree_) throw DomainError("coefficient index out of range");
  return coeffs_[t];
}

const Scalar& BinaryForm::coeff_x_power(int i) const { return (*this)[degree_ - i]; }

BinaryForm BinaryForm::to_approx(mpfr_prec_t prec) const {
  std::vector<Scalar> c;
  c.reserve(coeffs_.size());
  for (const auto& s : coeffs_) c.push_back(s.promoted(prec));
  return BinaryForm(degree_, std::move(c));
}

BigFloat BinaryForm::sup_norm(mpfr_prec_t prec) const {
  BigFloat m = BigFloat::of(0L, prec);
  for (const auto& c : coeffs_) m = max(m, c.magnitude(prec));
  return m;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) throw DomainError("degree mismatch in form addition");
  std::vector<Scalar> c(a.degree() + 1);
  for (int t = 0; t <= a.degree(); ++t) c[t] = a[t] + b[t];
  return BinaryForm(a.degree(), std::move(c));
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) throw DomainError("degree mismatch in form subtraction");
  std::vector<Scalar> c(a.degree() + 1);
  for (int t = 0; t <= a.degree(); ++t) c[t] = a[t] - b[t];
  return BinaryForm(a.degree(), std::move(c));
}

BinaryForm operator-(const BinaryForm& a) {
  std::vector<Scalar> c(a.degree() + 1);
  for (int t = 0; t <= a.degree(); ++t) c[t] = -a[t];
  return BinaryForm(a.degree(), std::move(c));
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  std::vector<Scalar> c(a.degree() + b.degree() + 1);
  for (int s = 0; s <= a.degree(); ++s) {
    if (a[s].is_zero()) continue;
    for (int t = 0; t <= b.degree(); ++t) c[s + t] += a[s] * b[t];
  }
  return BinaryForm(a.degree() + b.degree(), std::move(c));
}

BinaryForm operator*(const Scalar& c, const BinaryForm& a) {
  std::vector<Scalar> out(a.degree() + 1);
  for (int t = 0; t <= a.degree(); ++t) out[t] = c * a[t];
  return BinaryForm(a.degree(), std::move(out));
}

bool operator==(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) return false;
  for (int t = 0; t <= a.degree(); ++t)
    if (a[t] != b[t]) return false;
  return true;
}

Scalar evaluate(const BinaryForm& f, const Scalar& x, const Scalar& y) {
  int d = f.degree();
  std::vector<Scalar> ypow(d + 1, Scalar(1L));
  for (int k = 1; k <= d; ++k) ypow[k] = ypow[k - 1] * y;
  Scalar acc(0L);
  Scalar xp(1L);
  for (int i = 0; i <= d; ++i) {
    const Scalar& c = f.coeff_x_power(i);
    if (!c.is_zero()) acc += c * xp * ypow[d - i];
    xp *= x;
  }
  return acc;
}

BinaryForm pow(const BinaryForm& f, int e) {
  if (e < 0) throw DomainError("negative form power");
  BinaryForm r = BinaryForm::monomial(0, 0, Scalar(1L));
  for (int k = 0; k < e; ++k) r = r * f;
  return r;
}

// ---- linear forms ----

LinearForm::LinearForm(Scalar uu, Scalar vv) : u(std::move(uu)), v(std::move(vv)) {
  if (u.is_zero() && v.is_zero()) throw DomainError("linear form must be nonzero");
}

LinearForm LinearForm::canonical() const {
  if (!u.is_zero()) return LinearForm(Scalar(1L), v / u);
  return LinearForm(Scalar(0L), Scalar(1L));
}

BinaryForm LinearForm::form() const { return BinaryForm(1, {u, v}); }

std::string LinearForm::str() const { return to_string(form()); }

bool operator==(const LinearForm& a, const LinearForm& b) {
  return a.u == b.u && a.v == b.v;
}

// ---- dehomogenization helpers ----

namespace {

using detail::QPoly;

// f(x, 1): ascending coefficients p[k] = c_(d-k); trailing zeros trimmed.
QPoly dehomogenize(const BinaryForm& f) {
  QPoly p(f.degree() + 1);
  for (int t = 0; t <= f.degree(); ++t) p[f.degree() - t] = f[t].exact();
  detail::trim(p);
  return p;
}

// Multiplicity of y in f = d - deg(f(x,1)).
int order_in_y(const BinaryForm& f, const QPoly& p) {
  return f.degree() - detail::deg(p);
}

// Homogenize a univariate of degree e to a binary form of degree e + y_mult.
BinaryForm homogenize(const QPoly& p, int y_mult = 0) {
  int e = detail::deg(p);
  if (e < 0) throw DomainError("cannot homogenize the zero polynomial");
  int d = e + y_mult;
  std::vector<Scalar> c(d + 1);
  for (int k = 0; k <= e; ++k) c[e - k + y_mult] = Scalar(p[k]);
  for (int t = 0; t < y_mult; ++t) c[t] = Scalar(0L);
  return BinaryForm(d, std::move(c));
}

void require_exact(const BinaryForm& f, const char* what) {
  if (!f.is_exact()) throw DomainError(std::string(what) + " requires exact mode");
}

}  // namespace

BinaryForm canonicalized(const BinaryForm& f) {
  for (int t = 0; t <= f.degree(); ++t) {
    if (!f[t].is_zero()) {
      Scalar inv = f[t].inverse();
      return inv * f;
    }
  }
  return f;  // zero form
}

BinaryForm derivative(const BinaryForm& f, Var var) {
  int d = f.degree();
  if (d == 0) return BinaryForm::zero(0);
  std::vector<Scalar> c(d);
  if (var == Var::x) {
    // c'_t (x^(d-1-t) y^t) = (d - t) * c_t
    for (int t = 0; t < d; ++t) c[t] = Scalar(static_cast<long>(d - t)) * f[t];
  } else {
    // c'_t (x^(d-1-t) y^t) = (t + 1) * c_(t+1)
    for (int t = 0; t < d; ++t) c[t] = Scalar(static_cast<long>(t + 1)) * f[t + 1];
  }
  return BinaryForm(d - 1, std::move(c));
}

BinaryForm gcd(const BinaryForm& f, const BinaryForm& g) {
  require_exact(f, "gcd");
  require_exact(g, "gcd");
  if (f.is_zero() && g.is_zero()) throw DomainError("gcd of two zero forms undefined");
  if (g.is_zero()) return canonicalized(f);
  if (f.is_zero()) return canonicalized(g);
  QPoly pf = dehomogenize(f), pg = dehomogenize(g);
  int ym = std::min(order_in_y(f, pf), order_in_y(g, pg));
  QPoly gg = detail::gcd(pf, pg);
  return homogenize(gg, ym);
}

std::vector<std::pair<BinaryForm, int>> squarefree_decomposition(const BinaryForm& f) {
  require_exact(f, "squarefree_decomposition");
  if (f.is_zero()) throw DomainError("square-free decomposition of the zero form");
  QPoly p = dehomogenize(f);
  int ym = order_in_y(f, p);
  std::vector<std::pair<BinaryForm, int>> out;
  for (const auto& [g, m] : detail::squarefree(p)) out.emplace_back(homogenize(g), m);
  if (ym > 0) {
    BinaryForm yform = BinaryForm::monomial(1, 0, Scalar(1L));  // y
    auto hit = std::find_if(out.begin(), out.end(),
                            [&](const auto& e) { return e.second == ym; });
    if (hit != out.end())
      hit->first = hit->first * yform;
    else
      out.emplace_back(yform, ym);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

int distinct_linear_factor_count(const BinaryForm& f) {
  require_exact(f, "distinct_linear_factor_count");
  if (f.is_zero()) throw DomainError("factor count of the zero form");
  QPoly p = dehomogenize(f);
  int ym = order_in_y(f, p);
  int finite = 0;
  if (detail::deg(p) >= 1) {
    QPoly d = detail::derivative(p);
    QPoly g = detail::gcd(p, d);
    finite = detail::deg(p) - detail::deg(g);
  }
  return finite + (ym > 0 ? 1 : 0);
}

namespace {

int multiplicity_exact(const BinaryForm& f, const LinearForm& l) {
  const GaussianRational& u = l.u.exact();
  const GaussianRational& v = l.v.exact();
  QPoly p = dehomogenize(f);
  if (u.is_zero()) return order_in_y(f, p);
  GaussianRational w = -(v / u);  // l ~ x - w*y vanishes at x = w (y = 1)
  int count = 0;
  while (!p.empty() && count < f.degree()) {
    // synthetic division by (x - w); the final Horner value is p(w)
    QPoly q(p.size() > 1 ? p.size() - 1 : 0);
    GaussianRational acc;
    for (std::size_t k = p.size(); k-- > 0;) {
      acc = acc * w + p[k];
      if (k > 0) q[k - 1] = acc;
    }
    if (!acc.is_zero()) break;
    ++count;
    p = std::move(q);
    detail::trim(p);
  }
  return count;
}

int multiplicity_approx(const BinaryForm& f0, const LinearForm& l0, const BigFloat& tol) {
  mpfr_prec_t prec = std::max<mpfr_prec_t>(tol.precision(), BigFloat::kDefaultPrecision);
  BigComplex u = l0.u.to_complex(prec), v = l0.v.to_complex(prec);
  int d = f0.degree();
  // Pick the better-conditioned dehomogenization: |w| <= 1.
  bool pivot_x = !(u.abs() < v.abs());
  std::vector<BigComplex> p(d + 1, BigComplex(prec));
  BigComplex w(prec);
  if (pivot_x) {
    for (int t = 0; t <= d; ++t) p[d - t] = f0[t].to_complex(prec);  // f(x, 1)
    w = -(v / u);
  } else {
    for (int t = 0; t <= d; ++t) p[t] = f0[t].to_complex(prec);  // f(1, y)
    w = -(u / v);
  }
  BigFloat scale = max(BigFloat::of(1L, prec), f0.sup_norm(prec));
  int count = 0;
  while (count < d) {
    BigComplex acc(prec);
    std::vector<BigComplex> q(p.size() > 1 ? p.size() - 1 : 0, BigComplex(prec));
    for (std::size_t k = p.size(); k-- > 0;) {
      acc = acc * w + p[k];
      if (k > 0) q[k - 1] = acc;
    }
    if (!(acc.abs() <= tol * scale)) break;
    ++count;
    p = std::move(q);
    if (p.empty()) break;
  }
  return count;
}

}  // namespace

int multiplicity_at(const BinaryForm& f, const LinearForm& l) {
  bool exact = f.is_exact() && l.u.is_exact() && l.v.is_exact();
  if (exact) {
    if (f.is_zero()) throw DomainError("multiplicity in the zero form");
    return multiplicity_exact(f, l);
  }
  mpfr_prec_t prec = BigFloat::kDefaultPrecision;
  if (!f.is_exact())
    for (const auto& c : f.coeffs())
      if (!c.is_exact()) prec = std::max(prec, c.approx().precision());
  return multiplicity_at(f, l, default_tolerance(prec));
}

int multiplicity_at(const BinaryForm& f, const LinearForm& l, const BigFloat& tol) {
  if (f.is_zero()) throw DomainError("multiplicity in the zero form");
  if (f.is_exact() && l.u.is_exact() && l.v.is_exact()) return multiplicity_exact(f, l);
  return multiplicity_approx(f, l, tol);
}

BinaryForm high_multiplicity_locus(const BinaryForm& f, int m) {
  require_exact(f, "high_multiplicity_locus");
  if (f.is_zero()) throw DomainError("multiplicity locus of the zero form");
  if (m < 1) throw DomainError("multiplicity threshold must be >= 1");
  BinaryForm unit = BinaryForm::monomial(0, 0, Scalar(1L));
  if (m > f.degree()) return unit;
  if (m == 1) return canonicalized(f);
  BinaryForm acc = BinaryForm::zero(0);
  bool have = false;
  for (int a = 0; a <= m - 1; ++a) {
    BinaryForm g = f;
    for (int k = 0; k < a; ++k) g = derivative(g, Var::x);
    for (int k = 0; k < m - 1 - a; ++k) g = derivative(g, Var::y);
    if (g.is_zero()) continue;
    if (!have) {
      acc = canonicalized(g);
      have = true;
    } else {
      acc = gcd(acc, g);
    }
    if (acc.degree() == 0) return unit;
  }
  if (!have) return unit;  // unreachable for m <= deg f
  return acc;
}

Scalar resultant(const BinaryForm& f, const BinaryForm& g) {
  require_exact(f, "resultant");
  require_exact(g, "resultant");
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant of a zero form");
  QPoly pf = dehomogenize(f), pg = dehomogenize(g);
  return Scalar(detail::resultant_formal(pf, pg, f.degree(), g.degree()));
}

// ---- roots ----

namespace {

struct RootKey {
  bool at_infinity;
  double re;
  double im;
};

RootKey key_of(const ProjectiveRoot& r) {
  if (r.beta.is_zero()) return {true, 0.0, 0.0};
  BigComplex ratio = r.alpha / r.beta;
  return {false, ratio.re.to_double(), ratio.im.to_double()};
}

bool root_order(const ProjectiveRoot& a, const ProjectiveRoot& b) {
  RootKey ka = key_of(a), kb = key_of(b);
  if (ka.at_infinity != kb.at_infinity) return !ka.at_infinity;
  if (ka.re != kb.re) return ka.re < kb.re;
  return ka.im < kb.im;
}

std::vector<BigComplex> complex_coeffs(const QPoly& p, mpfr_prec_t prec) {
  std::vector<BigComplex> c(p.size(), BigComplex(prec));
  for (std::size_t k = 0; k < p.size(); ++k) c[k] = BigComplex::of(p[k], prec);
  return c;
}

// Chordal distance on P^1: |ad - bc| / (|(a,b)| |(c,d)|).
BigFloat chordal(const ProjectiveRoot& r, const ProjectiveRoot& s, mpfr_prec_t prec) {
  BigComplex cross = r.alpha * s.beta - r.beta * s.alpha;
  BigFloat nr = (r.alpha.norm() + r.beta.norm()).sqrt();
  BigFloat ns = (s.alpha.norm() + s.beta.norm()).sqrt();
  (void)prec;
  return cross.abs() / (nr * ns);
}

}  // namespace

std::vector<ProjectiveRoot> complex_roots(const BinaryForm& f, mpfr_prec_t prec) {
  if (f.is_zero()) throw DomainError("roots of the zero form");
  std::vector<ProjectiveRoot> out;
  BigComplex one = BigComplex::of(GaussianRational(1), prec);
  BigComplex zero_c(prec);

  if (f.is_exact()) {
    for (const auto& [g, m] : squarefree_decomposition(f)) {
      QPoly p = dehomogenize(g);
      int ym = g.degree() - detail::deg(p);
      if (ym > 0) out.push_back({one, zero_c, m});  // the factor y: root [1:0]
      if (detail::deg(p) >= 1) {
        for (const auto& z : detail::all_roots(complex_coeffs(p, prec), prec))
          out.push_back({z, one, m});
      }
    }
    std::sort(out.begin(), out.end(), root_order);
    return out;
  }

  // Approximate input: numeric roots of the dehomogenization plus exact-zero
  // leading slots as roots at infinity, clustered at the mode tolerance.
  int d = f.degree();
  std::vector<BigComplex> p(d + 1, BigComplex(prec));
  for (int t = 0; t <= d; ++t) p[d - t] = f[t].to_complex(prec);
  int ym = 0;
  while (ym < d && p[d - ym].is_zero()) ++ym;
  p.resize(d - ym + 1);
  std::vector<ProjectiveRoot> raw;
  for (int k = 0; k < ym; ++k) raw.push_back({one, zero_c, 1});
  if (p.size() > 1)
    for (const auto& z : detail::all_roots(p, prec)) raw.push_back({z, one, 1});

  BigFloat tol = default_tolerance(prec);
  std::sort(raw.begin(), raw.end(), root_order);
  for (const auto& r : raw) {
    bool merged = false;
    for (auto& c : out) {
      if (chordal(r, c, prec) <= tol) {
        c.multiplicity += 1;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(r);
  }
  return out;
}

std::string to_string(const BinaryForm& f) {
  if (f.is_zero()) return "0";
  std::string s;
  int d = f.degree();
  for (int t = 0; t <= d; ++t) {
    const Scalar& c = f[t];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool negative = !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
    std::string mag = negative ? cs.substr(1) : cs;
    bool compound = mag.find_first_of("+-") != std::string::npos;
    int i = d - t, j = t;
    std::string mono;
    if (i > 0) mono += i == 1 ? "x" : "x^" + std::to_string(i);
    if (j > 0) {
      if (!mono.empty()) mono += "*";
      mono += j == 1 ? "y" : "y^" + std::to_string(j);
    }
    std::string coef;
    if (mono.empty())
      coef = compound ? "(" + mag + ")" : mag;
    else if (mag == "1")
      coef = "";
    else
      coef = (compound ? "(" + mag + ")" : mag) + "*";
    std::string term = coef + mono;
    if (s.empty())
      s = negative ? "-" + term : term;
    else
      s += (negative ? " - " : " + ") + term;
  }
  return s;
}

}  // namespace whs
