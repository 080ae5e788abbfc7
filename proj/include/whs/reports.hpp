#pragma once

#include <json.hpp>

#include "whs/moduli.hpp"
#include "whs/normalizer.hpp"
#include "whs/singularities.hpp"
#include "whs/stability.hpp"

// Machine-readable report documents. Key order is fixed and exact values are
// canonical "p/q" strings, so serialization is byte-deterministic for a fixed
// input, version and flag set.
namespace whs {

using ordered_json = nlohmann::ordered_json;

/// {"tool", "version", "mode", "precision"} header common to every document.
ordered_json report_envelope(Mode mode, mpfr_prec_t precision);

ordered_json json_of(const LinearForm& l);
ordered_json json_of(const Matrix2& m);
ordered_json json_of(const Transformation& t);
ordered_json json_of(const StabilityVerdict& v);
ordered_json json_of(const ScreenReport& r);
ordered_json json_of(const RankReport& r);
ordered_json json_of(const StratumStats& s);
ordered_json json_of(const NormalizeResult& r);

ordered_json surface_json_object(const SurfaceEquation& s);
ordered_json normal_form_json_object(const NormalForm& nf);

/// F as an expression string: "z^5 + (x^4 - y^4)*z^3 + ...".
std::string surface_to_expression(const SurfaceEquation& s);

}  // namespace whs
