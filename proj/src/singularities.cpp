#include "whs/singularities.hpp"

#include <algorithm>
#include <vector>

#include "detail/qpoly.hpp"
#include "detail/roots.hpp"

namespace whs {

const char* to_string(SmoothnessStatus s) {
  switch (s) {
    case SmoothnessStatus::Smooth: return "Smooth";
    case SmoothnessStatus::SingularAt: return "SingularAt";
    case SmoothnessStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

const char* to_string(ScreenOutcome o) {
  switch (o) {
    case ScreenOutcome::CanonicalScreenPassed: return "CanonicalScreenPassed";
    case ScreenOutcome::WorseThanCanonical: return "WorseThanCanonical";
    case ScreenOutcome::NotGeneralTypeForm: return "NotGeneralTypeForm";
  }
  return "?";
}

LemmaChecks lemma_conditions(const NormalForm& nf) {
  LemmaChecks out;
  out.q5_nonzero = true;  // normal form fixes q5 = 1
  out.q0_or_q1_nonzero = !nf.q(0).is_zero() || !nf.q(1).is_zero();

  // Product of the nonzero blocks (zero factors excluded by convention; q5 is
  // a unit and q4 vanishes, so only k <= 3 contribute).
  std::optional<BinaryForm> product;
  for (int k = 0; k < 4; ++k) {
    if (nf.q(k).is_zero()) continue;
    product = product ? *product * nf.q(k) : nf.q(k);
  }
  if (!product) return out;
  out.factor_count_with_multiplicity = product->degree();
  if (product->is_exact()) {
    out.distinct_factor_count = distinct_linear_factor_count(*product);
  } else {
    out.distinct_factor_count = static_cast<int>(complex_roots(*product).size());
  }
  return out;
}

MultScreen mult_screen(const NormalForm& nf) {
  if (nf.mode() != Mode::exact) throw DomainError("mult_screen requires exact mode");
  MultScreen out;
  if (auto l = common_direction(nf, MultiplicityProfile::excess_multiplicity())) {
    out.passed = false;
    out.failed_at = *l;
  }
  return out;
}

// ---- branch-curve smoothness ----

namespace {

using detail::QPoly;

struct ChartScan {
  bool smooth = false;
  bool inconclusive = false;
  bool ambiguous = false;
  std::vector<ChartPoint> singular;
};

// Interpolated Res_z of two z-polynomials with t-polynomial coefficients.
// zc_f / zc_g: ascending z-coefficients, each a QPoly in t. The caller
// supplies formal z-degrees and a t-degree bound for the result.
QPoly interp_resultant(const std::vector<QPoly>& zc_f, const std::vector<QPoly>& zc_g,
                       int formal_f, int formal_g, int t_degree_bound) {
  int nodes_needed = t_degree_bound + 2;  // one spare node cross-checks the bound
  std::vector<GaussianRational> nodes, values;
  nodes.reserve(nodes_needed);
  values.reserve(nodes_needed);
  for (int n = 0; n < nodes_needed; ++n) {
    GaussianRational t0(Rational(n % 2 == 0 ? n / 2 : -(n / 2 + 1)));
    QPoly fv(zc_f.size()), gv(zc_g.size());
    for (std::size_t k = 0; k < zc_f.size(); ++k) fv[k] = detail::eval(zc_f[k], t0);
    for (std::size_t k = 0; k < zc_g.size(); ++k) gv[k] = detail::eval(zc_g[k], t0);
    detail::trim(fv);
    detail::trim(gv);
    GaussianRational r;
    if (detail::is_zero(fv) || detail::is_zero(gv))
      r = GaussianRational(0);
    else
      r = detail::resultant_formal(fv, gv, formal_f, formal_g);
    nodes.push_back(t0);
    values.push_back(r);
  }
  GaussianRational spare_node = nodes.back(), spare_value = values.back();
  nodes.pop_back();
  values.pop_back();
  QPoly R = detail::interpolate(nodes, values);
  if (!(detail::eval(R, spare_node) == spare_value))
    throw DomainError("resultant degree bound violated (internal)");
  return R;
}

ChartScan scan_chart(char chart_id, const std::array<QPoly, 4>& a_in, mpfr_prec_t prec) {
  ChartScan out;

  // Clear denominators with one common multiplier so everything sits in Z[i].
  mpz_class den(1);
  for (const auto& p : a_in)
    for (const auto& c : p) {
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), c.re.get_den().get_mpz_t());
      mpz_lcm(den.get_mpz_t(), l.get_mpz_t(), c.im.get_den().get_mpz_t());
    }
  GaussianRational L{Rational(den)};
  std::array<QPoly, 4> A;
  for (int k = 0; k < 4; ++k) A[k] = detail::scale(a_in[k], L);

  // f = L z^5 + sum A_k z^k; f_z and f_t as z-coefficient vectors.
  std::vector<QPoly> fc{A[0], A[1], A[2], A[3], QPoly{}, QPoly{L}};
  std::vector<QPoly> fzc{A[1], detail::scale(A[2], GaussianRational(2)),
                         detail::scale(A[3], GaussianRational(3)), QPoly{},
                         QPoly{GaussianRational(Rational(5) * Rational(den))}};
  std::vector<QPoly> ftc{detail::derivative(A[0]), detail::derivative(A[1]),
                         detail::derivative(A[2]), detail::derivative(A[3])};
  while (!ftc.empty() && detail::is_zero(ftc.back())) ftc.pop_back();

  QPoly R1 = interp_resultant(fc, fzc, 5, 4, 40);
  QPoly g;
  if (detail::is_zero(R1)) {
    // f and f_z share a factor identically: the curve is non-reduced, so it is
    // singular along a component; points are not isolated. Report honestly.
    out.inconclusive = true;
    return out;
  }
  if (ftc.empty()) {
    g = R1;
  } else {
    int nt = static_cast<int>(ftc.size()) - 1;
    QPoly R2 = interp_resultant(fc, ftc, 5, nt, 45);
    if (detail::is_zero(R2)) {
      g = R1;
    } else if (detail::certified_coprime(detail::to_integer(R1), detail::to_integer(R2))) {
      out.smooth = true;
      return out;
    } else {
      g = detail::gcd(R1, R2);
      if (detail::deg(g) == 0) {
        out.smooth = true;
        return out;
      }
    }
  }

  // Candidate t-values: roots of the square-free part of g.
  QPoly sf = g;
  if (detail::deg(g) >= 1) {
    QPoly gg = detail::gcd(g, detail::derivative(g));
    if (detail::deg(gg) >= 1) sf = detail::exact_div(g, gg);
  }
  std::vector<BigComplex> coeffs(sf.size(), BigComplex(prec));
  for (std::size_t k = 0; k < sf.size(); ++k) coeffs[k] = BigComplex::of(sf[k], prec);
  std::vector<BigComplex> candidates =
      detail::deg(sf) >= 1 ? detail::all_roots(coeffs, prec) : std::vector<BigComplex>{};

  BigFloat tau = default_tolerance(prec);
  BigFloat tau_soft = tau.sqrt();
  BigFloat one = BigFloat::of(1L, prec);
  for (const auto& t0 : candidates) {
    // z-roots of f(t0, z); the z^5 coefficient L never vanishes.
    std::vector<BigComplex> fz(6, BigComplex(prec));
    for (int k = 0; k < 4; ++k) fz[k] = detail::eval_complex(A[k], t0, prec);
    fz[5] = BigComplex::of(L, prec);
    std::vector<BigComplex> zroots = detail::all_roots(fz, prec);

    std::vector<BigComplex> ft(4, BigComplex(prec));
    for (std::size_t k = 0; k < ftc.size(); ++k) ft[k] = detail::eval_complex(ftc[k], t0, prec);

    BigFloat best = BigFloat::of(1e9, prec);
    BigComplex best_z(prec);
    for (const auto& z0 : zroots) {
      // Residuals of f, f_z, f_t with magnitude-sum scales.
      BigComplex vf(prec), vfz(prec), vft(prec);
      BigFloat sf_scale(prec), sfz_scale(prec), sft_scale(prec);
      BigComplex zp = BigComplex::of(GaussianRational(1), prec);
      for (int k = 0; k <= 5; ++k) {
        vf += fz[k] * zp;
        sf_scale += fz[k].abs() * zp.abs();
        if (k <= 3) {
          vft += ft[k] * zp;
          sft_scale += ft[k].abs() * zp.abs();
        }
        zp *= z0;
      }
      zp = BigComplex::of(GaussianRational(1), prec);
      for (int k = 1; k <= 5; ++k) {
        BigComplex c = BigComplex::of(GaussianRational(Rational(k)), prec) * fz[k];
        vfz += c * zp;
        sfz_scale += c.abs() * zp.abs();
        zp *= z0;
      }
      BigFloat rel = vf.abs() / max(one, sf_scale);
      rel = max(rel, vfz.abs() / max(one, sfz_scale));
      rel = max(rel, vft.abs() / max(one, sft_scale));
      if (rel < best) {
        best = rel;
        best_z = z0;
      }
    }
    if (best <= tau) {
      out.singular.push_back(ChartPoint{chart_id, t0, best_z});
    } else if (best <= tau_soft) {
      out.ambiguous = true;
    }
  }
  if (!out.ambiguous && out.singular.empty()) out.smooth = true;
  return out;
}

// Same weighted-projective point across charts: (1, t, z) ~ (t', 1, z') iff
// t t' = 1 and z = z' / t'^2.
bool same_point(const ChartPoint& a, const ChartPoint& b, const BigFloat& tol) {
  BigFloat one = BigFloat::of(1L, tol.precision());
  if (a.chart == b.chart) {
    bool t_close = (a.t - b.t).abs() <= tol * max(one, max(a.t.abs(), b.t.abs()));
    bool z_close = (a.z - b.z).abs() <= tol * max(one, max(a.z.abs(), b.z.abs()));
    return t_close && z_close;
  }
  BigComplex prod = a.t * b.t;
  BigComplex unit = BigComplex::of(GaussianRational(1), tol.precision());
  if (!((prod - unit).abs() <= tol * max(one, prod.abs()))) return false;
  BigComplex lhs = a.z * b.t * b.t;
  if (a.chart == 'y') lhs = b.z * a.t * a.t;  // symmetric comparison
  BigComplex rhs = a.chart == 'y' ? a.z : b.z;
  return (lhs - rhs).abs() <= tol * max(one, max(lhs.abs(), rhs.abs()));
}

}  // namespace

Smoothness smoothness_certify(const NormalForm& nf, mpfr_prec_t prec) {
  Smoothness out;
  if (nf.mode() != Mode::exact) {
    out.status = SmoothnessStatus::Inconclusive;  // the certificate is exact-mode
    return out;
  }

  // Chart x = 1 (t = y): ascending t-coefficients are the y-power slots.
  std::array<QPoly, 4> ax, ay;
  for (int k = 0; k < 4; ++k) {
    int d = nf.q(k).degree();
    QPoly px(d + 1), py(d + 1);
    for (int t = 0; t <= d; ++t) {
      px[t] = nf.q(k)[t].exact();      // q_k(1, t)
      py[d - t] = nf.q(k)[t].exact();  // q_k(t, 1)
    }
    detail::trim(px);
    detail::trim(py);
    ax[k] = std::move(px);
    ay[k] = std::move(py);
  }

  ChartScan sx = scan_chart('x', ax, prec);
  ChartScan sy = scan_chart('y', ay, prec);

  BigFloat dedupe_tol = default_tolerance(prec).sqrt();
  std::vector<ChartPoint> points = sx.singular;
  for (const auto& p : sy.singular) {
    bool dup = false;
    for (const auto& q : points)
      if (same_point(p, q, dedupe_tol)) {
        dup = true;
        break;
      }
    if (!dup) points.push_back(p);
  }

  if (!points.empty()) {
    out.status = SmoothnessStatus::SingularAt;
    out.points = std::move(points);
  } else if (sx.inconclusive || sy.inconclusive || sx.ambiguous || sy.ambiguous) {
    out.status = SmoothnessStatus::Inconclusive;
  } else {
    out.status = SmoothnessStatus::Smooth;
  }
  return out;
}

ScreenOutcome overall_outcome(const LemmaChecks& lemma, const MultScreen& mult) {
  if (!lemma.q5_nonzero || !lemma.q0_or_q1_nonzero)
    return ScreenOutcome::NotGeneralTypeForm;
  if (!mult.passed) return ScreenOutcome::WorseThanCanonical;
  return ScreenOutcome::CanonicalScreenPassed;
}

ScreenReport screen(const NormalForm& nf, const ScreenOptions& opts) {
  if (nf.mode() != Mode::exact) throw DomainError("screen requires exact mode");
  ScreenReport out;
  out.lemma = lemma_conditions(nf);
  out.mult = mult_screen(nf);
  out.smoothness = smoothness_certify(nf, opts.precision);
  out.overall = overall_outcome(out.lemma, out.mult);
  return out;
}

}  // namespace whs
