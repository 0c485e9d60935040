#include "commands.hpp"

#include <filesystem>
#include <fstream>

#include "io.hpp"
#include "normgeom/corpus.hpp"
#include "normgeom/decomp.hpp"
#include "normgeom/errors.hpp"
#include "normgeom/inequalities.hpp"
#include "report.hpp"
#include "svg.hpp"

namespace normgeom::app {

namespace fs = std::filesystem;

namespace {

QuadratureConfig quadrature(const RunConfig& config) {
  QuadratureConfig q;
  if (config.rel_tol) q.rel_tol = *config.rel_tol;
  q.validate();
  return q;
}

void diagnostic(std::ostream& err, const std::string& level, const json& fields) {
  json line = fields;
  line["level"] = level;
  err << line.dump() << '\n';
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::DecompositionResidual:
    case ErrorCode::EmbeddingFailed:
    case ErrorCode::DegenerateIntersection:
      return kInternalError;
    default:
      return kInvalidInput;
  }
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidInput, "cannot write " + path.string());
  file << content;
}

// Prints the report and mirrors it into --out when given.
void emit(const RunConfig& config, const std::string& name, const json& doc, std::ostream& out) {
  const std::string text = dump_report(doc) + "\n";
  out << text;
  if (!config.out_dir.empty()) write_file(fs::path(config.out_dir) / (name + ".json"), text);
}

void emit_svg(const RunConfig& config, const std::string& name, const std::string& svg,
              std::ostream& err) {
  const fs::path dir = config.out_dir.empty() ? fs::path(".") : fs::path(config.out_dir);
  const fs::path path = dir / (name + ".svg");
  write_file(path, svg);
  diagnostic(err, "info", {{"wrote", path.string()}});
}

std::string curve_path(const RunConfig& config) {
  if (!config.curve.empty()) return config.curve;
  if (!config.input.empty()) return config.input;
  throw Error(ErrorCode::InvalidInput, "no curve given (use --curve FILE or a positional file)");
}

AdmissibleCurve load_curve(const RunConfig& config) {
  const QuadratureConfig q = quadrature(config);
  const json doc = load_json(curve_path(config));
  BallPtr ball;
  if (!config.ball.empty()) ball = ball_from_argument(config.ball, config.k, q);
  return curve_from_json(doc, q, ball);
}

}  // namespace

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const QuadratureConfig q = quadrature(config);
  json report;
  std::string path = !config.curve.empty() ? config.curve : config.input;
  if (!path.empty()) {
    const json doc = load_json(path);
    const DocumentKind kind = classify(doc);
    if (kind == DocumentKind::Curve || !config.curve.empty()) {
      BallPtr ball;
      if (!config.ball.empty()) ball = ball_from_argument(config.ball, config.k, q);
      const AdmissibleCurve curve = curve_from_json(doc, q, ball);
      const Convexity c = is_convex(curve);
      report = {{"input", path},
                {"kind", "curve"},
                {"valid", true},
                {"closure_gap", curve.closure_gap()},
                {"tol_close", curve.tol_close()},
                {"convex", c.convex}};
      if (c.convex) report["convex_sign"] = c.sign;
    } else if (kind == DocumentKind::Ball) {
      const BallPtr ball = ball_from_json(doc, q);
      report = {{"input", path}, {"kind", "ball"}, {"valid", true}, {"ball", ball_json(*ball)}};
    } else if (kind == DocumentKind::Polygon) {
      const Polygon p = polygon_from_json(doc);
      report = {{"input", path},
                {"kind", "polygon"},
                {"valid", true},
                {"vertices", p.vertices.size()},
                {"area", polygon_area(p)}};
    } else {
      throw Error(ErrorCode::InvalidInput, path + ": not a ball, curve or polygon document");
    }
  } else if (!config.ball.empty()) {
    const BallPtr ball = ball_from_argument(config.ball, config.k, q);
    report = {{"input", config.ball}, {"kind", "ball"}, {"valid", true}, {"ball", ball_json(*ball)}};
  } else {
    throw Error(ErrorCode::InvalidInput, "nothing to validate (use --ball, --curve or a file)");
  }
  diagnostic(err, "info", {{"input", report["input"]}, {"status", "valid"}});
  emit(config, "validate", report, out);
  return kOk;
}

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const AdmissibleCurve curve = load_curve(config);
  const json report = analyze_json(curve);
  emit(config, "analyze", report, out);
  if (config.svg) emit_svg(config, "analyze", curve_svg(curve), err);
  for (const auto& v : report["violations"]) {
    diagnostic(err, "violation", {{"check", v}});
  }
  return report["violations"].empty() ? kOk : kViolation;
}

int cmd_decompose(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const AdmissibleCurve curve = load_curve(config);
  const DecompositionResult parts = decompose(curve);
  emit(config, "decompose", decompose_json(curve, parts), out);
  if (config.svg) emit_svg(config, "decompose", decomposition_svg(curve, parts), err);
  return kOk;
}

int cmd_lhuilier(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::string path = !config.input.empty() ? config.input : config.curve;
  if (path.empty()) throw Error(ErrorCode::InvalidInput, "no polygon file given");
  const LhuilierReport report = lhuilier_check(polygon_from_json(load_json(path)));
  emit(config, "lhuilier", lhuilier_json(report), out);
  if (config.svg) emit_svg(config, "lhuilier", lhuilier_svg(report), err);
  if (report.violation) {
    diagnostic(err, "violation", {{"check", "lhuilier_gap"}, {"gap", report.gap}});
    return kViolation;
  }
  return kOk;
}

int cmd_corpus(const RunConfig& config, std::ostream& out, std::ostream& err) {
  CorpusConfig cc;
  cc.seed = config.seed;
  cc.n = config.n;
  cc.inject_fault = config.inject_fault;
  const CorpusReport report = run_corpus(cc);
  emit(config, "corpus", corpus_json(report), out);
  for (const auto& v : report.violations) {
    diagnostic(err, "violation",
               {{"instance", v.instance}, {"check", v.check}, {"value", v.value}, {"tol", v.tol}});
  }
  return report.violations.empty() ? kOk : kViolation;
}

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "validate") return cmd_validate(config, out, err);
    if (config.command == "analyze") return cmd_analyze(config, out, err);
    if (config.command == "decompose") return cmd_decompose(config, out, err);
    if (config.command == "lhuilier") return cmd_lhuilier(config, out, err);
    if (config.command == "corpus") return cmd_corpus(config, out, err);
    diagnostic(err, "error", {{"code", "InvalidInput"}, {"message", "unknown command " + config.command}});
    return kInvalidInput;
  } catch (const SyntaxError& e) {
    diagnostic(err, "error", {{"code", code_name(e.code())},
                              {"message", e.what()},
                              {"offset", e.offset()},
                              {"expected", e.expected()}});
    return kInvalidInput;
  } catch (const Error& e) {
    diagnostic(err, "error", {{"code", code_name(e.code())}, {"message", e.what()}});
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    diagnostic(err, "error", {{"code", "Internal"}, {"message", e.what()}});
    return kInternalError;
  }
}

}  // namespace normgeom::app
