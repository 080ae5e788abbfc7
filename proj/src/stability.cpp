#include "whs/stability.hpp"

#include <algorithm>
#include <vector>

#include "detail/rng.hpp"

namespace whs {

const char* to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::Stable: return "Stable";
    case StabilityClass::StrictlySemistable: return "StrictlySemistable";
    case StabilityClass::Unstable: return "Unstable";
  }
  return "?";
}

int coordinate_weight(int k, int i, int j) {
  if (k < 0 || k > 3 || i < 0 || j < 0 || i + j != 10 - 2 * k)
    throw DomainError("exponents do not match block degree");
  return 2 * j - (10 - 2 * k);  // = j - i
}

Matrix2 frame_sending_to_y(const LinearForm& l) {
  // l o A = y: columns chosen so det = 1; identity when l = y.
  if (!l.u.is_zero()) {
    Scalar inv_u = l.u.inverse();
    return Matrix2{{l.v, inv_u, -l.u, Scalar(0L)}};
  }
  Scalar inv_v = l.v.inverse();
  return Matrix2{{l.v, Scalar(0L), Scalar(0L), inv_v}};
}

NormalForm transformed(const NormalForm& nf, const Matrix2& A) {
  return NormalForm({apply(A, nf.q(0)), apply(A, nf.q(1)), apply(A, nf.q(2)),
                     apply(A, nf.q(3))});
}

std::pair<int, int> weight_span(const CoefficientPoint& p, const LinearForm& l) {
  NormalForm nf = from_point(p);
  Matrix2 A = frame_sending_to_y(l);
  NormalForm adapted = transformed(nf, A);

  // Nonzero test: exact when possible, tolerance-relative otherwise.
  BigFloat sup = BigFloat::of(0L);
  bool exact = adapted.mode() == Mode::exact;
  mpfr_prec_t prec = BigFloat::kDefaultPrecision;
  if (!exact) {
    for (int k = 0; k < 4; ++k) sup = max(sup, adapted.q(k).sup_norm(prec));
  }
  BigFloat cut = default_tolerance(prec) * max(BigFloat::of(1L, prec), sup);

  int lo = 0, hi = 0;
  bool seen = false;
  for (int k = 0; k < 4; ++k) {
    const BinaryForm& q = adapted.q(k);
    int d = q.degree();
    for (int t = 0; t <= d; ++t) {
      bool nonzero = exact ? !q[t].is_zero() : q[t].magnitude(prec) > cut;
      if (!nonzero) continue;
      int w = 2 * t - d;
      if (!seen) {
        lo = hi = w;
        seen = true;
      } else {
        lo = std::min(lo, w);
        hi = std::max(hi, w);
      }
    }
  }
  if (!seen) throw DomainError("not a projective point");
  return {lo, hi};
}

namespace {

// Best rational approximation with bounded denominator (continued fractions).
std::optional<Rational> rationalize(const BigFloat& x, const mpz_class& max_den) {
  if (x.is_nan()) return std::nullopt;
  mpq_class target;
  mpfr_get_q(target.get_mpq_t(), x.raw());
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpq_class rest = target;
  for (int iter = 0; iter < 200; ++iter) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num().get_mpz_t(), rest.get_den().get_mpz_t());
    mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    mpq_class frac = rest - Rational(a);
    if (frac == 0) break;
    rest = Rational(1) / frac;
  }
  if (q1 == 0) return std::nullopt;
  Rational cand(p1, q1);
  cand.canonicalize();
  // Sanity: the convergent must sit close to the numeric value.
  mpq_class err = abs(mpq_class(cand - target));
  mpq_class bound(mpz_class(1), mpz_class(1));
  bound /= mpz_class(1) << 40;
  if (err > bound) return std::nullopt;
  return cand;
}

LinearForm canonical_y() { return LinearForm(Scalar(0L), Scalar(1L)); }

struct WitnessCandidates {
  std::vector<LinearForm> exact;   // verified exact linear factors of G
  std::vector<LinearForm> approx;  // numeric fallbacks
};

// All linear factors of G (exact where recoverable over Q(i)).
WitnessCandidates linear_factors(const BinaryForm& G) {
  WitnessCandidates out;
  const mpz_class kDenBound = mpz_class(1) << 40;
  for (const auto& [g, mult] : squarefree_decomposition(G)) {
    (void)mult;
    if (g.degree() == 1) {
      out.exact.push_back(LinearForm(g[0], g[1]).canonical());
      continue;
    }
    // Irreducible-over-Q(i) pieces may still carry the only witnesses; recover
    // roots numerically and verify any rational-looking ones exactly.
    for (const auto& root : complex_roots(g, 192)) {
      if (root.beta.is_zero()) {
        LinearForm cand = canonical_y();
        if (multiplicity_at(g, cand) >= 1) out.exact.push_back(cand);
        continue;
      }
      BigComplex w = -(root.alpha / root.beta);  // l = x + w y
      auto re = rationalize(w.re, kDenBound);
      auto im = rationalize(w.im, kDenBound);
      bool verified = false;
      if (re && im) {
        LinearForm cand(Scalar(1L), Scalar(GaussianRational(*re, *im)));
        if (multiplicity_at(g, cand) >= 1) {
          out.exact.push_back(cand);
          verified = true;
        }
      }
      if (!verified)
        out.approx.push_back(LinearForm(Scalar(BigComplex::of(GaussianRational(1), 192)),
                                        Scalar(w)));
    }
  }
  return out;
}

bool lex_less(const LinearForm& a, const LinearForm& b) {
  int c = cmp_lex(a.u.exact(), b.u.exact());
  if (c != 0) return c < 0;
  return cmp_lex(a.v.exact(), b.v.exact()) < 0;
}

}  // namespace

std::optional<LinearForm> common_direction(const NormalForm& nf,
                                           const MultiplicityProfile& profile) {
  if (nf.mode() != Mode::exact) throw DomainError("the direction search requires exact mode");

  bool have = false;
  BinaryForm G = BinaryForm::zero(0);
  for (int k = 0; k < 4; ++k) {
    if (nf.q(k).is_zero()) continue;   // a zero block meets any threshold vacuously
    if (profile.m[k] <= 0) continue;   // threshold 0 is vacuous
    BinaryForm locus = high_multiplicity_locus(nf.q(k), profile.m[k]);
    G = have ? gcd(G, locus) : locus;
    have = true;
    if (G.degree() == 0) return std::nullopt;
  }
  if (!have) return canonical_y();  // every direction qualifies; pick the canonical least
  if (G.degree() == 0) return std::nullopt;

  WitnessCandidates cands = linear_factors(G);
  if (!cands.exact.empty()) {
    std::sort(cands.exact.begin(), cands.exact.end(), lex_less);
    return cands.exact.front();
  }
  if (!cands.approx.empty()) {
    std::sort(cands.approx.begin(), cands.approx.end(),
              [](const LinearForm& a, const LinearForm& b) {
                double ar = a.v.to_complex().re.to_double(), br = b.v.to_complex().re.to_double();
                if (ar != br) return ar < br;
                return a.v.to_complex().im.to_double() < b.v.to_complex().im.to_double();
              });
    return cands.approx.front();
  }
  return std::nullopt;  // unreachable: deg G >= 1 always yields a root
}

std::optional<LinearForm> nonstable_witness(const CoefficientPoint& p,
                                            const MultiplicityProfile& profile) {
  if (p.mode() != Mode::exact) throw DomainError("nonstable_witness requires exact mode");
  return common_direction(from_point(p), profile);
}

namespace {

Witness make_witness(LinearForm l, const MultiplicityProfile& profile) {
  OnePS ps{frame_sending_to_y(l), 1, l};
  return Witness{std::move(l), profile, std::move(ps)};
}

}  // namespace

StabilityVerdict classify(const NormalForm& nf) {
  if (nf.mode() != Mode::exact) throw DomainError("classify requires exact mode");
  CoefficientPoint p = to_point(nf);  // rejects the zero point
  if (auto w = nonstable_witness(p, MultiplicityProfile::unstable_boundary()))
    return {StabilityClass::Unstable,
            make_witness(*w, MultiplicityProfile::unstable_boundary())};
  if (auto w = nonstable_witness(p, MultiplicityProfile::semistable_boundary()))
    return {StabilityClass::StrictlySemistable,
            make_witness(*w, MultiplicityProfile::semistable_boundary())};
  return {StabilityClass::Stable, std::nullopt};
}

StabilityVerdict oracle_classify(const NormalForm& nf, const OracleOptions& opts) {
  mpfr_prec_t prec = opts.precision;
  BigFloat tol = BigFloat::of(opts.tolerance, prec);
  bool exact_input = nf.mode() == Mode::exact;

  std::array<bool, 4> zero_block{};
  bool any_nonzero = false;
  for (int k = 0; k < 4; ++k) {
    if (exact_input) {
      zero_block[k] = nf.q(k).is_zero();
    } else {
      zero_block[k] = !(nf.q(k).sup_norm(prec) > default_tolerance(prec));
    }
    any_nonzero = any_nonzero || !zero_block[k];
  }
  if (!any_nonzero) throw DomainError("not a projective point");

  // Candidate directions: every root of every nonzero block.
  std::vector<LinearForm> candidates;
  for (int k = 0; k < 4; ++k) {
    if (zero_block[k]) continue;
    for (const auto& root : complex_roots(nf.q(k), prec))
      candidates.push_back(LinearForm(Scalar(root.beta), Scalar(-root.alpha)));
  }

  auto meets = [&](const LinearForm& l, const MultiplicityProfile& profile) {
    for (int k = 0; k < 4; ++k) {
      if (zero_block[k] || profile.m[k] <= 0) continue;
      if (multiplicity_at(nf.q(k), l, tol) < profile.m[k]) return false;
    }
    return true;
  };

  StabilityClass cls = StabilityClass::Stable;
  std::optional<LinearForm> wit;
  for (const auto& l : candidates) {
    if (meets(l, MultiplicityProfile::unstable_boundary())) {
      cls = StabilityClass::Unstable;
      wit = l;
      break;
    }
  }
  if (cls == StabilityClass::Stable) {
    for (const auto& l : candidates) {
      if (meets(l, MultiplicityProfile::semistable_boundary())) {
        cls = StabilityClass::StrictlySemistable;
        wit = l;
        break;
      }
    }
  }

  // Weight-span cross-check on random determinant-1 frames (exact input only).
  if (exact_input) {
    CoefficientPoint p = to_point(nf);
    detail::SplitMix64 rng(opts.seed);
    for (int n = 0; n < opts.frame_samples; ++n) {
      Rational u = detail::random_rational(rng, 8);
      Rational v = detail::random_rational(rng, 8);
      if (u == 0 && v == 0) continue;
      LinearForm l{Scalar(GaussianRational(u)), Scalar(GaussianRational(v))};
      auto [lo, hi] = weight_span(p, l);
      if (cls == StabilityClass::Stable && !(lo < 0 && hi > 0))
        throw DomainError("oracle inconsistency: stable point with a one-sided weight span");
      if (cls == StabilityClass::StrictlySemistable && !(lo <= 0 && hi >= 0))
        throw DomainError("oracle inconsistency: semistable point with a destabilizing span");
    }
  }

  if (wit) {
    MultiplicityProfile met = cls == StabilityClass::Unstable
                                  ? MultiplicityProfile::unstable_boundary()
                                  : MultiplicityProfile::semistable_boundary();
    return {cls, make_witness(*wit, met)};
  }
  return {cls, std::nullopt};
}

}  // namespace whs
