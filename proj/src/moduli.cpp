#include "whs/moduli.hpp"

#include <algorithm>
#include <future>
#include <thread>
#include <vector>

#include "detail/rng.hpp"
#include "whs/singularities.hpp"
#include "whs/stability.hpp"

namespace whs {

ActionMatrix infinitesimal_action_matrix(const CoefficientPoint& p) {
  ActionMatrix m;
  for (auto& row : m) row = {Scalar(0L), Scalar(0L), Scalar(0L), Scalar(0L)};
  // Derivations act per monomial inside each block:
  //   E = x d/dy: a x^i y^j -> a j x^(i+1) y^(j-1)
  //   F = y d/dx: a x^i y^j -> a i x^(i-1) y^(j+1)
  //   H = x d/dx - y d/dy: a x^i y^j -> a (i - j) x^i y^j
  //   grading: a -> (10 - 2k) a
  for (int pos = 0; pos < CoefficientPoint::kSize; ++pos) {
    auto [k, i, j] = CoefficientPoint::index(pos);
    const Scalar& a = p[pos];
    if (a.is_zero()) continue;
    if (j >= 1)
      m[CoefficientPoint::position(k, i + 1, j - 1)][0] += Scalar(static_cast<long>(j)) * a;
    if (i >= 1)
      m[CoefficientPoint::position(k, i - 1, j + 1)][1] += Scalar(static_cast<long>(i)) * a;
    m[pos][2] += Scalar(static_cast<long>(i - j)) * a;
    m[pos][3] += Scalar(static_cast<long>(10 - 2 * k)) * a;
  }
  return m;
}

RankReport orbit_rank(const CoefficientPoint& p) {
  if (p.mode() != Mode::exact) throw DomainError("orbit_rank requires exact mode");
  ActionMatrix m = infinitesimal_action_matrix(p);
  // Exact column elimination on the 32 x 4 matrix.
  std::array<std::array<GaussianRational, 4>, CoefficientPoint::kSize> a;
  for (int r = 0; r < CoefficientPoint::kSize; ++r)
    for (int c = 0; c < 4; ++c) a[r][c] = m[r][c].exact();
  int rank = 0;
  for (int col = 0; col < 4 && rank < CoefficientPoint::kSize; ++col) {
    int piv = -1;
    for (int r = rank; r < CoefficientPoint::kSize; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    GaussianRational inv = a[rank][col].inverse();
    for (int r = rank + 1; r < CoefficientPoint::kSize; ++r) {
      if (a[r][col].is_zero()) continue;
      GaussianRational f = a[r][col] * inv;
      for (int c = col; c < 4; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  RankReport out;
  out.rank = rank;
  out.orbit_dim = rank;
  out.orbit_dim_projective = rank > 0 ? rank - 1 : 0;
  out.stabilizer_finite = rank == 4;
  out.moduli_dim_estimate = 32 - rank;
  out.moduli_dim_projective = 31 - out.orbit_dim_projective;
  return out;
}

namespace {

NormalForm sample_generic(detail::SplitMix64& rng, int height) {
  while (true) {
    std::array<BinaryForm, 4> q{BinaryForm::zero(10), BinaryForm::zero(8),
                                BinaryForm::zero(6), BinaryForm::zero(4)};
    bool nonzero = false;
    for (int k = 0; k < 4; ++k) {
      int d = SurfaceEquation::block_degree(k);
      std::vector<Scalar> coeffs(d + 1);
      for (int t = 0; t <= d; ++t) {
        Rational r = detail::random_rational(rng, height);
        if (r != 0) nonzero = true;
        coeffs[t] = Scalar(GaussianRational(r));
      }
      q[k] = BinaryForm(d, std::move(coeffs));
    }
    if (nonzero) return NormalForm(std::move(q));
  }
}

BinaryForm random_form(detail::SplitMix64& rng, int degree, int height) {
  std::vector<Scalar> coeffs(degree + 1);
  for (int t = 0; t <= degree; ++t)
    coeffs[t] = Scalar(GaussianRational(detail::random_rational(rng, height)));
  return BinaryForm(degree, std::move(coeffs));
}

bool squarefree_and_coprime(const std::array<BinaryForm, 4>& cof, const LinearForm& l) {
  for (int k = 0; k < 4; ++k) {
    if (cof[k].is_zero()) return false;
    if (multiplicity_at(cof[k], l) != 0) return false;
    if (distinct_linear_factor_count(cof[k]) != cof[k].degree()) return false;
  }
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (gcd(cof[a], cof[b]).degree() != 0) return false;
  return true;
}

// Common linear factor of multiplicity exactly 4-k per block, all other
// factors simple and pairwise distinct.
NormalForm sample_remark(detail::SplitMix64& rng, int height) {
  while (true) {
    long u = rng.int_in(-height, height);
    long v = rng.int_in(-height, height);
    if (u == 0 && v == 0) continue;
    LinearForm l{Scalar(GaussianRational(Rational(u))), Scalar(GaussianRational(Rational(v)))};
    std::array<BinaryForm, 4> cof{BinaryForm::zero(6), BinaryForm::zero(5),
                                  BinaryForm::zero(4), BinaryForm::zero(3)};
    for (int k = 0; k < 4; ++k) cof[k] = random_form(rng, 6 - k, height);
    if (!squarefree_and_coprime(cof, l)) continue;
    BinaryForm lform = l.form();
    std::array<BinaryForm, 4> q{BinaryForm::zero(10), BinaryForm::zero(8),
                                BinaryForm::zero(6), BinaryForm::zero(4)};
    for (int k = 0; k < 4; ++k) q[k] = pow(lform, 4 - k) * cof[k];
    return NormalForm(std::move(q));
  }
}

NormalForm sample_monomial(detail::SplitMix64& rng, int height) {
  std::array<BinaryForm, 4> q{BinaryForm::zero(10), BinaryForm::zero(8),
                              BinaryForm::zero(6), BinaryForm::zero(4)};
  for (int k = 0; k < 4; ++k) {
    Scalar c{GaussianRational(detail::random_nonzero_rational(rng, height))};
    q[k] = BinaryForm::monomial(SurfaceEquation::block_degree(k), 5 - k, c);
  }
  return NormalForm(std::move(q));
}

}  // namespace

NormalForm sample_normal_form(std::uint64_t seed, int coefficient_height) {
  if (coefficient_height < 1) throw DomainError("coefficient height must be >= 1");
  detail::SplitMix64 rng(seed);
  return sample_generic(rng, coefficient_height);
}

NormalForm sample_family(Family family, std::uint64_t seed, int coefficient_height) {
  if (coefficient_height < 1) throw DomainError("coefficient height must be >= 1");
  detail::SplitMix64 rng(seed);
  switch (family) {
    case Family::Generic: return sample_generic(rng, coefficient_height);
    case Family::Remark: return sample_remark(rng, coefficient_height);
    case Family::Monomial: return sample_monomial(rng, coefficient_height);
  }
  throw DomainError("unknown family");
}

StratumStats stratum_stats(int n, std::uint64_t seed, int coefficient_height,
                           Family family, int threads) {
  if (n < 1) throw DomainError("sample count must be >= 1");
  if (threads <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    threads = hw == 0 ? 1 : static_cast<int>(hw);
  }
  threads = std::min(threads, n);

  auto run_range = [&](int lo, int hi) {
    StratumStats acc;
    for (int idx = lo; idx < hi; ++idx) {
      // Sample streams keyed by index, not by thread: partitioning cannot
      // change the aggregate.
      std::uint64_t s = seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(idx);
      NormalForm nf = sample_family(family, s, coefficient_height);
      StabilityVerdict verdict = classify(nf);
      ScreenReport report = screen(nf);
      acc.n += 1;
      switch (verdict.cls) {
        case StabilityClass::Stable: acc.stable += 1; break;
        case StabilityClass::StrictlySemistable: acc.strictly_semistable += 1; break;
        case StabilityClass::Unstable: acc.unstable += 1; break;
      }
      switch (report.overall) {
        case ScreenOutcome::CanonicalScreenPassed: acc.screen_passed += 1; break;
        case ScreenOutcome::WorseThanCanonical: acc.worse_than_canonical += 1; break;
        case ScreenOutcome::NotGeneralTypeForm: acc.not_general_type += 1; break;
      }
      switch (report.smoothness.status) {
        case SmoothnessStatus::Smooth: acc.smooth += 1; break;
        case SmoothnessStatus::SingularAt: acc.singular += 1; break;
        case SmoothnessStatus::Inconclusive: acc.inconclusive += 1; break;
      }
    }
    return acc;
  };

  std::vector<std::future<StratumStats>> parts;
  int chunk = (n + threads - 1) / threads;
  for (int lo = 0; lo < n; lo += chunk)
    parts.push_back(std::async(std::launch::async, run_range, lo, std::min(n, lo + chunk)));

  StratumStats total;
  for (auto& f : parts) {
    StratumStats part = f.get();
    total.n += part.n;
    total.stable += part.stable;
    total.strictly_semistable += part.strictly_semistable;
    total.unstable += part.unstable;
    total.screen_passed += part.screen_passed;
    total.worse_than_canonical += part.worse_than_canonical;
    total.not_general_type += part.not_general_type;
    total.smooth += part.smooth;
    total.singular += part.singular;
    total.inconclusive += part.inconclusive;
  }
  return total;
}

}  // namespace whs
