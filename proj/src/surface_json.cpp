#include <json.hpp>

#include <algorithm>
#include <cctype>

#include "whs/surface.hpp"

namespace whs {

using ordered_json = nlohmann::ordered_json;

namespace {

// Decimal complex coefficient: "RE", "RE+IM*i", "RE-IM*i", "IM*i", "i".
BigComplex parse_complex_decimal(const std::string& text, mpfr_prec_t prec) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto float_token = [&]() -> std::string {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '.'))
      ++pos;
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
      ++pos;
      if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    return text.substr(start, pos - start);
  };
  auto parse_part = [&](int sign) -> std::pair<BigFloat, bool> {
    skip_ws();
    if (pos < text.size() && text[pos] == 'i') {
      ++pos;
      return {BigFloat::of(static_cast<long>(sign), prec), true};
    }
    std::string tok = float_token();
    if (tok.empty() || tok == "+" || tok == "-")
      throw DomainError("malformed coefficient '" + text + "'");
    BigFloat v = BigFloat::parse(tok, prec);
    if (sign < 0) v = -v;
    skip_ws();
    bool imag = false;
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws();
      if (pos >= text.size() || text[pos] != 'i')
        throw DomainError("malformed coefficient '" + text + "'");
      ++pos;
      imag = true;
    } else if (pos < text.size() && text[pos] == 'i') {
      ++pos;
      imag = true;
    }
    return {std::move(v), imag};
  };

  BigFloat re(prec), im(prec);
  auto [v1, imag1] = parse_part(1);
  (imag1 ? im : re) = v1;
  skip_ws();
  if (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+')
      ++pos;
    else if (text[pos] == '-') {
      sign = -1;
      ++pos;
    } else {
      throw DomainError("malformed coefficient '" + text + "'");
    }
    auto [v2, imag2] = parse_part(sign);
    if (imag2 == imag1) throw DomainError("malformed coefficient '" + text + "'");
    (imag2 ? im : re) = v2;
    skip_ws();
    if (pos < text.size()) throw DomainError("malformed coefficient '" + text + "'");
  }
  return BigComplex(std::move(re), std::move(im));
}

Scalar coefficient_from_json(const ordered_json& v, Mode mode, mpfr_prec_t prec) {
  if (v.is_number_integer())
    return mode == Mode::exact
               ? Scalar(GaussianRational(Rational(v.get<long>())))
               : Scalar(BigComplex::of(GaussianRational(Rational(v.get<long>())), prec));
  if (v.is_number_float()) {
    if (mode == Mode::exact)
      throw DomainError("exact documents require string or integer coefficients");
    return Scalar(BigComplex(BigFloat::of(v.get<double>(), prec), BigFloat(prec)));
  }
  if (!v.is_string()) throw DomainError("coefficient must be a string or number");
  const std::string s = v.get<std::string>();
  if (mode == Mode::exact) return Scalar(gaussian_from_string(s));
  return Scalar(parse_complex_decimal(s, prec));
}

ordered_json block_to_json(const BinaryForm& f) {
  ordered_json arr = ordered_json::array();
  for (int t = 0; t <= f.degree(); ++t) arr.push_back(f[t].str());
  return arr;
}

BinaryForm block_from_json(const ordered_json& arr, int degree, Mode mode,
                           mpfr_prec_t prec) {
  if (!arr.is_array()) throw DomainError("coefficient block must be an array");
  if (arr.size() != static_cast<std::size_t>(degree) + 1)
    throw DomainError("block of degree " + std::to_string(degree) + " needs " +
                      std::to_string(degree + 1) + " coefficients, got " +
                      std::to_string(arr.size()));
  std::vector<Scalar> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& v : arr) coeffs.push_back(coefficient_from_json(v, mode, prec));
  return BinaryForm(degree, std::move(coeffs));
}

ordered_json surface_json_impl(const SurfaceEquation& s, bool normal_form, int top_block) {
  ordered_json doc;
  Mode mode = s.mode();
  doc["mode"] = mode == Mode::exact ? "exact" : "approx";
  if (mode == Mode::approx) {
    mpfr_prec_t prec = BigFloat::kDefaultPrecision;
    for (int k = 0; k <= 5; ++k)
      for (const auto& c : s.q(k).coeffs())
        if (!c.is_exact()) prec = std::max(prec, c.approx().precision());
    doc["precision"] = static_cast<long>(prec);
  }
  if (normal_form) doc["normal_form"] = true;
  ordered_json q = ordered_json::object();
  for (int k = 0; k <= top_block; ++k) {
    if (s.q(k).is_zero()) continue;  // absent block means zero
    q[std::to_string(k)] = block_to_json(s.q(k));
  }
  doc["q"] = std::move(q);
  return doc;
}

}  // namespace

std::string surface_to_json(const SurfaceEquation& s, int indent) {
  return surface_json_impl(s, false, 5).dump(indent) + "\n";
}

std::string normal_form_to_json(const NormalForm& nf, int indent) {
  return surface_json_impl(nf.as_surface(), true, 3).dump(indent) + "\n";
}

NormalForm SurfaceDocument::as_normal_form() const {
  const BinaryForm& q5 = surface.q(5);
  const BinaryForm& q4 = surface.q(4);
  bool monic;
  if (q5[0].is_exact()) {
    monic = q5[0].exact() == GaussianRational(1);
  } else {
    const BigComplex& c = q5[0].approx();
    monic = c.im.is_zero() && cmp(c.re, BigFloat::of(1L, c.re.precision())) == 0;
  }
  if (!monic || !q4.is_zero())
    throw DomainError("document is not in normal form (q5 = 1, q4 = 0 required)");
  return NormalForm({surface.q(0), surface.q(1), surface.q(2), surface.q(3)});
}

SurfaceDocument surface_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  SurfaceDocument out;
  std::string mode_str = doc.value("mode", std::string("exact"));
  if (mode_str == "exact")
    out.mode = Mode::exact;
  else if (mode_str == "approx" || mode_str == "approximate")
    out.mode = Mode::approx;
  else
    throw DomainError("unknown mode '" + mode_str + "'");
  out.precision = doc.value("precision", static_cast<long>(BigFloat::kDefaultPrecision));
  if (out.precision < 8) throw DomainError("precision must be at least 8 bits");
  out.normal_form = doc.value("normal_form", false);

  SurfaceEquation s;
  const auto q_it = doc.find("q");
  if (q_it == doc.end() || !q_it->is_object())
    throw DomainError("document needs a 'q' object with coefficient blocks");
  for (const auto& [key, arr] : q_it->items()) {
    if (key.size() != 1 || key[0] < '0' || key[0] > '5')
      throw DomainError("unknown coefficient block '" + key + "'");
    int k = key[0] - '0';
    if (out.normal_form && k >= 4)
      throw DomainError("a normal-form document must omit blocks 4 and 5");
    s = s.with_q(k, block_from_json(arr, SurfaceEquation::block_degree(k), out.mode,
                                    out.precision));
  }
  if (out.normal_form)
    s = s.with_q(5, BinaryForm::monomial(0, 0, Scalar(1L)));
  if (out.mode == Mode::approx) s = s.to_approx(out.precision);
  out.surface = std::move(s);
  return out;
}

}  // namespace whs
