#include "whs/surface.hpp"

#include <algorithm>

namespace whs {

Matrix2 Matrix2::identity() {
  return Matrix2{{Scalar(1L), Scalar(0L), Scalar(0L), Scalar(1L)}};
}

Scalar Matrix2::det() const { return a[0] * a[3] - a[1] * a[2]; }

Matrix2 Matrix2::inverse() const {
  Scalar d = det();
  if (d.is_zero()) throw DomainError("singular matrix");
  Scalar id = d.inverse();
  return Matrix2{{id * a[3], -(id * a[1]), -(id * a[2]), id * a[0]}};
}

Matrix2 operator*(const Matrix2& m, const Matrix2& n) {
  return Matrix2{{m.a[0] * n.a[0] + m.a[1] * n.a[2], m.a[0] * n.a[1] + m.a[1] * n.a[3],
                  m.a[2] * n.a[0] + m.a[3] * n.a[2], m.a[2] * n.a[1] + m.a[3] * n.a[3]}};
}

bool operator==(const Matrix2& m, const Matrix2& n) { return m.a == n.a; }

BinaryForm apply(const Matrix2& m, const BinaryForm& f) {
  int d = f.degree();
  BinaryForm ax_by(1, {m(0, 0), m(0, 1)});  // image of x
  BinaryForm cx_dy(1, {m(1, 0), m(1, 1)});  // image of y
  // Power tables keep this O(d^2) multiplications of small forms.
  std::vector<BinaryForm> px{BinaryForm::monomial(0, 0, Scalar(1L))};
  std::vector<BinaryForm> py{BinaryForm::monomial(0, 0, Scalar(1L))};
  for (int k = 1; k <= d; ++k) {
    px.push_back(px.back() * ax_by);
    py.push_back(py.back() * cx_dy);
  }
  BinaryForm out = BinaryForm::zero(d);
  for (int t = 0; t <= d; ++t) {
    const Scalar& c = f[t];
    if (c.is_zero()) continue;
    out = out + c * (px[d - t] * py[t]);
  }
  return out;
}

LinearForm apply(const Matrix2& m, const LinearForm& l) {
  return LinearForm(l.u * m(0, 0) + l.v * m(1, 0), l.u * m(0, 1) + l.v * m(1, 1));
}

SurfaceEquation::SurfaceEquation()
    : q_{BinaryForm::zero(10), BinaryForm::zero(8), BinaryForm::zero(6),
         BinaryForm::zero(4), BinaryForm::zero(2), BinaryForm::zero(0)} {}

SurfaceEquation::SurfaceEquation(std::array<BinaryForm, 6> q) : q_(std::move(q)) {
  for (int k = 0; k < 6; ++k)
    if (q_[k].degree() != block_degree(k))
      throw DomainError("q_" + std::to_string(k) + " must have degree " +
                        std::to_string(block_degree(k)));
}

const BinaryForm& SurfaceEquation::q(int k) const {
  if (k < 0 || k > 5) throw DomainError("block index out of range");
  return q_[k];
}

SurfaceEquation SurfaceEquation::with_q(int k, BinaryForm f) const {
  if (k < 0 || k > 5) throw DomainError("block index out of range");
  std::array<BinaryForm, 6> q = q_;
  q[k] = std::move(f);
  return SurfaceEquation(std::move(q));
}

Mode SurfaceEquation::mode() const {
  for (const auto& f : q_)
    if (!f.is_exact()) return Mode::approx;
  return Mode::exact;
}

SurfaceEquation SurfaceEquation::to_approx(mpfr_prec_t prec) const {
  std::array<BinaryForm, 6> q{q_[0].to_approx(prec), q_[1].to_approx(prec),
                              q_[2].to_approx(prec), q_[3].to_approx(prec),
                              q_[4].to_approx(prec), q_[5].to_approx(prec)};
  return SurfaceEquation(std::move(q));
}

bool operator==(const SurfaceEquation& a, const SurfaceEquation& b) {
  for (int k = 0; k < 6; ++k)
    if (!(a.q(k) == b.q(k))) return false;
  return true;
}

NormalForm::NormalForm()
    : q_{BinaryForm::zero(10), BinaryForm::zero(8), BinaryForm::zero(6),
         BinaryForm::zero(4)} {}

NormalForm::NormalForm(std::array<BinaryForm, 4> q) : q_(std::move(q)) {
  for (int k = 0; k < 4; ++k)
    if (q_[k].degree() != SurfaceEquation::block_degree(k))
      throw DomainError("q_" + std::to_string(k) + " must have degree " +
                        std::to_string(SurfaceEquation::block_degree(k)));
}

const BinaryForm& NormalForm::q(int k) const {
  if (k < 0 || k > 3) throw DomainError("block index out of range");
  return q_[k];
}

NormalForm NormalForm::with_q(int k, BinaryForm f) const {
  if (k < 0 || k > 3) throw DomainError("block index out of range");
  std::array<BinaryForm, 4> q = q_;
  q[k] = std::move(f);
  return NormalForm(std::move(q));
}

SurfaceEquation NormalForm::as_surface() const {
  std::array<BinaryForm, 6> q{q_[0], q_[1], q_[2], q_[3], BinaryForm::zero(2),
                              BinaryForm::monomial(0, 0, Scalar(1L))};
  return SurfaceEquation(std::move(q));
}

Mode NormalForm::mode() const {
  for (const auto& f : q_)
    if (!f.is_exact()) return Mode::approx;
  return Mode::exact;
}

bool NormalForm::all_zero() const {
  return std::all_of(q_.begin(), q_.end(), [](const BinaryForm& f) { return f.is_zero(); });
}

bool operator==(const NormalForm& a, const NormalForm& b) {
  for (int k = 0; k < 4; ++k)
    if (!(a.q(k) == b.q(k))) return false;
  return true;
}

CoefficientPoint::CoefficientPoint(std::array<Scalar, kSize> entries)
    : a_(std::move(entries)) {
  if (is_zero()) throw DomainError("not a projective point");
}

CoefficientPoint::Index CoefficientPoint::index(int pos) {
  if (pos < 0 || pos >= kSize) throw DomainError("coordinate position out of range");
  // blocks k = 3, 2, 1, 0 of sizes 5, 7, 9, 11
  int k = 3;
  while (pos >= SurfaceEquation::block_degree(k) + 1) {
    pos -= SurfaceEquation::block_degree(k) + 1;
    --k;
  }
  int d = SurfaceEquation::block_degree(k);
  return Index{k, d - pos, pos};
}

int CoefficientPoint::position(int k, int i, int j) {
  if (k < 0 || k > 3) throw DomainError("block index out of range");
  int d = SurfaceEquation::block_degree(k);
  if (i < 0 || j < 0 || i + j != d) throw DomainError("exponents do not match block degree");
  int base = 0;
  for (int kk = 3; kk > k; --kk) base += SurfaceEquation::block_degree(kk) + 1;
  return base + (d - i);
}

const Scalar& CoefficientPoint::operator[](int pos) const {
  if (pos < 0 || pos >= kSize) throw DomainError("coordinate position out of range");
  return a_[pos];
}

Mode CoefficientPoint::mode() const {
  for (const auto& c : a_)
    if (!c.is_exact()) return Mode::approx;
  return Mode::exact;
}

bool CoefficientPoint::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& c) { return c.is_zero(); });
}


bool Transformation::is_identity() const {
  return A == Matrix2::identity() && alpha == Scalar(1L) && r.is_zero() && beta == Scalar(1L);
}

Transformation Transformation::inverse() const {
  Matrix2 ai = A.inverse();
  if (alpha.is_zero() || beta.is_zero()) throw DomainError("degenerate transformation");
  Scalar ia = alpha.inverse();
  BinaryForm ri = -(ia * apply(ai, r));
  return Transformation{ai, ia, std::move(ri), beta.inverse()};
}

Transformation compose(const Transformation& first, const Transformation& second) {
  // v -> first(second(v)): matrices multiply, z-parts chain through second's A.
  return Transformation{first.A * second.A, first.alpha * second.alpha,
                        first.alpha * second.r + apply(second.A, first.r),
                        first.beta * second.beta};
}

SurfaceEquation apply_transformation(const SurfaceEquation& f, const Transformation& t) {
  if (t.A.det().is_zero()) throw DomainError("transformation matrix is singular");
  if (t.alpha.is_zero() || t.beta.is_zero())
    throw DomainError("transformation scales must be nonzero");
  if (t.r.degree() != 2) throw DomainError("z-shift must have degree 2");

  // q~_k = q_k o A, then expand (alpha z + r)^k and renormalize by beta^2.
  std::array<BinaryForm, 6> tilde{BinaryForm::zero(10), BinaryForm::zero(8),
                                  BinaryForm::zero(6),  BinaryForm::zero(4),
                                  BinaryForm::zero(2),  BinaryForm::zero(0)};
  for (int k = 0; k <= 5; ++k) tilde[k] = apply(t.A, f.q(k));

  std::array<BinaryForm, 6> out{BinaryForm::zero(10), BinaryForm::zero(8),
                                BinaryForm::zero(6),  BinaryForm::zero(4),
                                BinaryForm::zero(2),  BinaryForm::zero(0)};
  // binomial coefficients C(k, j) for k <= 5
  static const long kBinom[6][6] = {{1, 0, 0, 0, 0, 0},      {1, 1, 0, 0, 0, 0},
                                    {1, 2, 1, 0, 0, 0},      {1, 3, 3, 1, 0, 0},
                                    {1, 4, 6, 4, 1, 0},      {1, 5, 10, 10, 5, 1}};
  std::vector<BinaryForm> rpow{BinaryForm::monomial(0, 0, Scalar(1L))};
  for (int k = 1; k <= 5; ++k) rpow.push_back(rpow.back() * t.r);
  std::vector<Scalar> apow{Scalar(1L)};
  for (int k = 1; k <= 5; ++k) apow.push_back(apow.back() * t.alpha);

  Scalar inv_beta2 = (t.beta * t.beta).inverse();
  for (int k = 0; k <= 5; ++k) {
    if (tilde[k].is_zero()) continue;
    for (int j = 0; j <= k; ++j) {
      // contribution to the z^j block: C(k,j) alpha^j q~_k r^(k-j)
      BinaryForm term = (Scalar(kBinom[k][j]) * apow[j]) * (tilde[k] * rpow[k - j]);
      out[j] = out[j] + term;
    }
  }
  for (int j = 0; j <= 5; ++j) out[j] = inv_beta2 * out[j];
  return SurfaceEquation(std::move(out));
}

CoefficientPoint to_point(const NormalForm& nf) {
  if (nf.all_zero()) throw DomainError("not a projective point");
  std::array<Scalar, CoefficientPoint::kSize> a;
  for (int pos = 0; pos < CoefficientPoint::kSize; ++pos) {
    auto [k, i, j] = CoefficientPoint::index(pos);
    a[pos] = nf.q(k)[j];  // slot j holds x^i y^j in a degree-(i+j) form
  }
  return CoefficientPoint(std::move(a));
}

NormalForm from_point(const CoefficientPoint& p) {
  std::array<BinaryForm, 4> q{BinaryForm::zero(10), BinaryForm::zero(8),
                              BinaryForm::zero(6), BinaryForm::zero(4)};
  std::array<std::vector<Scalar>, 4> coeffs;
  for (int k = 0; k < 4; ++k)
    coeffs[k].assign(SurfaceEquation::block_degree(k) + 1, Scalar(0L));
  for (int pos = 0; pos < CoefficientPoint::kSize; ++pos) {
    auto [k, i, j] = CoefficientPoint::index(pos);
    (void)i;
    coeffs[k][j] = p[pos];
  }
  for (int k = 0; k < 4; ++k)
    q[k] = BinaryForm(SurfaceEquation::block_degree(k), std::move(coeffs[k]));
  return NormalForm(std::move(q));
}

}  // namespace whs
