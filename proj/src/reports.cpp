#include "whs/reports.hpp"

#include "whs/version.hpp"

namespace whs {

ordered_json report_envelope(Mode mode, mpfr_prec_t precision) {
  ordered_json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["mode"] = mode == Mode::exact ? "exact" : "approx";
  if (mode == Mode::approx)
    doc["precision"] = static_cast<long>(precision);
  else
    doc["precision"] = nullptr;
  return doc;
}

ordered_json json_of(const LinearForm& l) {
  ordered_json j;
  j["u"] = l.u.str();
  j["v"] = l.v.str();
  j["text"] = l.str();
  return j;
}

ordered_json json_of(const Matrix2& m) {
  return ordered_json::array(
      {ordered_json::array({m(0, 0).str(), m(0, 1).str()}),
       ordered_json::array({m(1, 0).str(), m(1, 1).str()})});
}

ordered_json json_of(const Transformation& t) {
  ordered_json j;
  j["A"] = json_of(t.A);
  j["alpha"] = t.alpha.str();
  ordered_json r = ordered_json::array();
  for (int k = 0; k <= 2; ++k) r.push_back(t.r[k].str());
  j["r"] = std::move(r);
  j["beta"] = t.beta.str();
  return j;
}

ordered_json json_of(const StabilityVerdict& v) {
  ordered_json j;
  j["class"] = to_string(v.cls);
  if (v.witness) {
    ordered_json w;
    w["direction"] = json_of(v.witness->direction);
    w["profile"] = ordered_json::array({v.witness->profile_met.m[0], v.witness->profile_met.m[1],
                                        v.witness->profile_met.m[2], v.witness->profile_met.m[3]});
    ordered_json ps;
    ps["frame"] = json_of(v.witness->one_ps.frame);
    ps["exponent"] = v.witness->one_ps.exponent;
    w["one_ps"] = std::move(ps);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

ordered_json json_of(const ScreenReport& r) {
  ordered_json j;
  ordered_json lemma;
  lemma["q5_nonzero"] = r.lemma.q5_nonzero;
  lemma["q0_or_q1_nonzero"] = r.lemma.q0_or_q1_nonzero;
  lemma["distinct_factor_count"] = r.lemma.distinct_factor_count;
  lemma["factor_count_with_multiplicity"] = r.lemma.factor_count_with_multiplicity;
  j["lemma"] = std::move(lemma);
  ordered_json mult;
  mult["passed"] = r.mult.passed;
  if (r.mult.failed_at) mult["failed_at"] = json_of(*r.mult.failed_at);
  j["mult_screen"] = std::move(mult);
  ordered_json sm;
  sm["status"] = to_string(r.smoothness.status);
  ordered_json pts = ordered_json::array();
  for (const auto& p : r.smoothness.points) {
    ordered_json pt;
    pt["chart"] = std::string(1, p.chart);
    pt["t"] = p.t.str(12);
    pt["z"] = p.z.str(12);
    pts.push_back(std::move(pt));
  }
  sm["points"] = std::move(pts);
  j["smoothness"] = std::move(sm);
  j["overall"] = to_string(r.overall);
  return j;
}

ordered_json json_of(const RankReport& r) {
  ordered_json j;
  j["rank"] = r.rank;
  j["orbit_dim"] = r.orbit_dim;
  j["orbit_dim_projective"] = r.orbit_dim_projective;
  j["stabilizer_finite"] = r.stabilizer_finite;
  j["moduli_dim_estimate"] = r.moduli_dim_estimate;
  j["moduli_dim_projective"] = r.moduli_dim_projective;
  return j;
}

ordered_json json_of(const StratumStats& s) {
  ordered_json j;
  j["n"] = s.n;
  ordered_json counts;
  counts["stable"] = s.stable;
  counts["strictly_semistable"] = s.strictly_semistable;
  counts["unstable"] = s.unstable;
  counts["screen_passed"] = s.screen_passed;
  counts["worse_than_canonical"] = s.worse_than_canonical;
  counts["not_general_type"] = s.not_general_type;
  counts["smooth"] = s.smooth;
  counts["singular"] = s.singular;
  counts["inconclusive"] = s.inconclusive;
  j["counts"] = std::move(counts);
  ordered_json fr;
  fr["stable"] = s.fraction(s.stable);
  fr["strictly_semistable"] = s.fraction(s.strictly_semistable);
  fr["unstable"] = s.fraction(s.unstable);
  fr["screen_passed"] = s.fraction(s.screen_passed);
  fr["worse_than_canonical"] = s.fraction(s.worse_than_canonical);
  fr["smooth"] = s.fraction(s.smooth);
  j["fractions"] = std::move(fr);
  return j;
}

ordered_json json_of(const NormalizeResult& r) {
  ordered_json j;
  j["partial"] = r.partial;
  if (r.partial) {
    j["residual_unit"] = r.residual_unit.str();
    j["normal_form"] = nullptr;
    j["surface"] = surface_json_object(r.surface);
  } else {
    j["normal_form"] = normal_form_json_object(*r.normal_form);
  }
  j["transformation"] = json_of(r.transform);
  return j;
}

ordered_json surface_json_object(const SurfaceEquation& s) {
  return ordered_json::parse(surface_to_json(s, -1));
}

ordered_json normal_form_json_object(const NormalForm& nf) {
  return ordered_json::parse(normal_form_to_json(nf, -1));
}

std::string surface_to_expression(const SurfaceEquation& s) {
  std::string out;
  for (int k = 5; k >= 0; --k) {
    const BinaryForm& q = s.q(k);
    if (q.is_zero()) continue;
    std::string zpart;
    if (k == 1)
      zpart = "z";
    else if (k > 1)
      zpart = "z^" + std::to_string(k);
    std::string qs = to_string(q);
    std::string term;
    bool negated = false;
    if (k == 0 || zpart.empty()) {
      term = qs;
    } else if (qs == "1") {
      term = zpart;
    } else if (qs == "-1") {
      term = zpart;
      negated = true;
    } else if (qs.find_first_of("+-", 1) == std::string::npos && qs[0] != '-') {
      term = qs + "*" + zpart;
    } else if (qs[0] == '-' && qs.find_first_of("+-", 1) == std::string::npos) {
      term = qs.substr(1) + "*" + zpart;
      negated = true;
    } else {
      term = "(" + qs + ")*" + zpart;
    }
    if (out.empty())
      out = negated ? "-" + term : term;
    else
      out += (negated ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace whs
