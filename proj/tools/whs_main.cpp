#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "whs/reports.hpp"
#include "whs/version.hpp"

namespace {

using namespace whs;

struct CliError {
  int code;
  std::string message;
};

struct GlobalOpts {
  std::string mode = "exact";
  long precision = 128;
  bool json = false;
  std::uint64_t seed = 1;

  Mode mode_enum() const { return mode == "approx" ? Mode::approx : Mode::exact; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{1, "cannot open input file '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SurfaceDocument load_input(const std::string& file, const std::string& expr,
                           const GlobalOpts& g) {
  if (file.empty() == expr.empty())
    throw CliError{1, "provide exactly one input: a file path or --expr"};
  std::string text = expr;
  if (!file.empty()) text = read_file(file);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw CliError{1, "empty input"};
  SurfaceDocument doc;
  if (text[first] == '{') {
    doc = surface_from_json(text);
  } else {
    doc.surface = parse_expression(text);
    doc.mode = g.mode_enum();
    doc.precision = g.precision;
    if (doc.mode == Mode::approx) doc.surface = doc.surface.to_approx(doc.precision);
  }
  return doc;
}

NormalForm require_normal_form(const SurfaceDocument& doc, bool auto_normalize,
                               const GlobalOpts& g) {
  if (doc.normal_form) return doc.as_normal_form();
  if (is_normal_form(doc.surface))
    return NormalForm({doc.surface.q(0), doc.surface.q(1), doc.surface.q(2), doc.surface.q(3)});
  if (!auto_normalize)
    throw CliError{3, "input is not in normal form; pass --auto-normalize or run `" +
                          std::string(kToolName) + " normalize` first"};
  NormalizeOptions nopts;
  nopts.allow_approx = g.mode_enum() == Mode::approx;
  nopts.precision = g.precision;
  NormalizeResult res = to_normal_form(doc.surface, nopts);
  if (!res.normal_form)
    throw CliError{3, "input normalizes only up to the unit " + res.residual_unit.str() +
                          " in exact mode; rerun with --mode approx or use `normalize`"};
  return *res.normal_form;
}

void emit(const ordered_json& doc, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

std::string witness_text(const StabilityVerdict& v) {
  if (!v.witness) return "";
  std::string s = "witness: " + v.witness->direction.str() + "\nprofile met: (";
  for (int k = 0; k < 4; ++k)
    s += std::to_string(v.witness->profile_met.m[k]) + (k < 3 ? ", " : ")");
  return s + "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"GIT stability toolkit for degree-10 hypersurface equations in P(1,1,2,5)"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--mode", g.mode, "Arithmetic mode")->check(CLI::IsMember({"exact", "approx"}));
  app.add_option("--precision", g.precision, "Working precision in bits (approx mode)")
      ->check(CLI::Range(8L, 100000L));
  app.add_flag("--json", g.json, "Emit the machine-readable JSON document");
  app.add_option("--seed", g.seed, "Seed for sampling subcommands");

  std::string in_file, in_expr;
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", in_file, "Input file (JSON document or expression text)");
    cmd->add_option("--expr", in_expr, "Inline expression, e.g. \"z^5 + x^10 + y^10\"");
  };

  auto* cmd_normalize = app.add_subcommand("normalize", "Reduce to normal form (q5 = 1, q4 = 0)");
  cmd_normalize->fallthrough();
  add_input(cmd_normalize);
  bool allow_approx = false;
  cmd_normalize->add_flag("--allow-approx", allow_approx,
                          "Scale by an approximate 5th root when exact scaling is impossible");

  bool auto_normalize = false, with_oracle = false;
  auto* cmd_classify = app.add_subcommand("classify", "Decide GIT stability of a normal form");
  cmd_classify->fallthrough();
  add_input(cmd_classify);
  cmd_classify->add_flag("--auto-normalize", auto_normalize, "Normalize the input first");
  cmd_classify->add_flag("--oracle", with_oracle, "Cross-check with the numeric oracle");

  auto* cmd_screen = app.add_subcommand("screen", "Canonical-singularity screens");
  cmd_screen->fallthrough();
  add_input(cmd_screen);
  cmd_screen->add_flag("--auto-normalize", auto_normalize, "Normalize the input first");

  auto* cmd_orbit = app.add_subcommand("orbit-dim", "Orbit rank and moduli dimension count");
  cmd_orbit->fallthrough();
  add_input(cmd_orbit);
  cmd_orbit->add_flag("--auto-normalize", auto_normalize, "Normalize the input first");

  auto* cmd_sample = app.add_subcommand("sample", "Emit a seeded random normal form");
  cmd_sample->fallthrough();
  long height = 10;
  cmd_sample->add_option("--height", height, "Coefficient height bound")->check(CLI::Range(1L, 1000000L));

  auto* cmd_stats = app.add_subcommand("stats", "Stability/screen statistics over seeded samples");
  cmd_stats->fallthrough();
  long stats_n = 100;
  std::string family = "generic";
  long stats_threads = 0;
  cmd_stats->add_option("--n", stats_n, "Sample count")->check(CLI::Range(1L, 10000000L));
  cmd_stats->add_option("--height", height, "Coefficient height bound")->check(CLI::Range(1L, 1000000L));
  cmd_stats->add_option("--family", family, "Sample family")
      ->check(CLI::IsMember({"generic", "remark", "monomial"}));
  cmd_stats->add_option("--threads", stats_threads, "Worker threads (0 = auto)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 1;
  }

  try {
    if (cmd_normalize->parsed()) {
      SurfaceDocument doc = load_input(in_file, in_expr, g);
      NormalizeOptions nopts;
      nopts.allow_approx = allow_approx || g.mode_enum() == Mode::approx;
      nopts.precision = g.precision;
      NormalizeResult res = to_normal_form(doc.surface, nopts);
      Mode mode = res.surface.mode();
      ordered_json out = report_envelope(mode, g.precision);
      out.update(json_of(res));
      std::string text = "surface: " + surface_to_expression(res.surface) + "\n";
      if (res.partial)
        text += "partial: true (residual unit " + res.residual_unit.str() + ")\n";
      emit(out, g.json, text);
      return 0;
    }

    if (cmd_classify->parsed()) {
      SurfaceDocument doc = load_input(in_file, in_expr, g);
      NormalForm nf = require_normal_form(doc, auto_normalize, g);
      StabilityVerdict v = classify(nf);
      ordered_json out = report_envelope(nf.mode(), g.precision);
      out["input"] = normal_form_json_object(nf);
      out["stability"] = json_of(v);
      std::string text = std::string("class: ") + to_string(v.cls) + "\n" + witness_text(v);
      if (with_oracle) {
        OracleOptions oo;
        oo.precision = g.precision;
        StabilityVerdict ov = oracle_classify(nf, oo);
        ordered_json oj;
        oj["class"] = to_string(ov.cls);
        oj["agrees"] = ov.cls == v.cls;
        out["oracle"] = std::move(oj);
        text += std::string("oracle: ") + to_string(ov.cls) +
                (ov.cls == v.cls ? " (agrees)" : " (DISAGREES)") + "\n";
      }
      emit(out, g.json, text);
      return 0;
    }

    if (cmd_screen->parsed()) {
      SurfaceDocument doc = load_input(in_file, in_expr, g);
      NormalForm nf = require_normal_form(doc, auto_normalize, g);
      ScreenOptions sopts;
      sopts.precision = g.precision;
      ScreenReport r = screen(nf, sopts);
      ordered_json out = report_envelope(nf.mode(), g.precision);
      out["input"] = normal_form_json_object(nf);
      out["screen"] = json_of(r);
      std::string text =
          "lemma: q0 or q1 nonzero: " + std::string(r.lemma.q0_or_q1_nonzero ? "yes" : "no") +
          ", distinct factors: " + std::to_string(r.lemma.distinct_factor_count) +
          " (with multiplicity: " + std::to_string(r.lemma.factor_count_with_multiplicity) +
          ")\n" + "multiplicity screen: " +
          (r.mult.passed ? "passed" : "failed at " + r.mult.failed_at->str()) + "\n" +
          "smoothness: " + to_string(r.smoothness.status) + "\n" +
          "overall: " + to_string(r.overall) + "\n";
      emit(out, g.json, text);
      return 0;
    }

    if (cmd_orbit->parsed()) {
      SurfaceDocument doc = load_input(in_file, in_expr, g);
      NormalForm nf = require_normal_form(doc, auto_normalize, g);
      RankReport r = orbit_rank(to_point(nf));
      ordered_json out = report_envelope(nf.mode(), g.precision);
      out["input"] = normal_form_json_object(nf);
      out["orbit"] = json_of(r);
      std::string text = "rank: " + std::to_string(r.rank) + "\norbit dimension: " +
                         std::to_string(r.orbit_dim) + " (projective " +
                         std::to_string(r.orbit_dim_projective) + ")\nmoduli dimension: " +
                         std::to_string(r.moduli_dim_estimate) + " (affine 32 - " +
                         std::to_string(r.rank) + "; projective 31 - " +
                         std::to_string(r.orbit_dim_projective) + " = " +
                         std::to_string(r.moduli_dim_projective) + ")\nstabilizer finite: " +
                         (r.stabilizer_finite ? "yes" : "no") + "\n";
      emit(out, g.json, text);
      return 0;
    }

    if (cmd_sample->parsed()) {
      NormalForm nf = sample_normal_form(g.seed, static_cast<int>(height));
      std::cout << normal_form_to_json(nf, 2);
      return 0;
    }

    if (cmd_stats->parsed()) {
      Family fam = Family::Generic;
      if (family == "remark") fam = Family::Remark;
      if (family == "monomial") fam = Family::Monomial;
      StratumStats s = stratum_stats(static_cast<int>(stats_n), g.seed,
                                     static_cast<int>(height), fam,
                                     static_cast<int>(stats_threads));
      ordered_json out = report_envelope(Mode::exact, g.precision);
      out["seed"] = g.seed;
      out["height"] = height;
      out["family"] = family;
      out.update(json_of(s));
      char buf[256];
      std::snprintf(buf, sizeof(buf),
                    "n: %d\nstable: %d  strictly_semistable: %d  unstable: %d\n"
                    "screen_passed: %d  worse_than_canonical: %d  not_general_type: %d\n"
                    "smooth: %d  singular: %d  inconclusive: %d\n",
                    s.n, s.stable, s.strictly_semistable, s.unstable, s.screen_passed,
                    s.worse_than_canonical, s.not_general_type, s.smooth, s.singular,
                    s.inconclusive);
      emit(out, g.json, buf);
      return 0;
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " (at position " << e.position() << ")\n";
    return 1;
  } catch (const DomainError& e) {
    std::string msg = e.what();
    std::cerr << "error: " << msg << "\n";
    return msg.rfind("q5 = 0", 0) == 0 ? 2 : 1;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
