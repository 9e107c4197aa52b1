#include "qtrefftz/cli.hpp"

#include "qtrefftz/basis.hpp"
#include "qtrefftz/json_io.hpp"
#include "qtrefftz/oracle.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace qt::cli {

namespace {

using io::json;

enum class LogLevel { Off, Info, Debug };

struct Logger {
  LogLevel level;
  std::ostream& err;

  static LogLevel from_env() {
    const char* v = std::getenv("QT_LOG");
    if (!v) return LogLevel::Off;
    const std::string s(v);
    if (s == "debug") return LogLevel::Debug;
    if (s == "info") return LogLevel::Info;
    return LogLevel::Off;
  }

  void info(const std::string& msg) const {
    if (level >= LogLevel::Info) err << "[info] " << msg << '\n';
  }
  void debug(const std::string& msg) const {
    if (level >= LogLevel::Debug) err << "[debug] " << msg << '\n';
  }
};

struct Config {
  std::string input_path;
  std::string output_path;
  std::string rhs_path;
  std::string poly_path;
  std::string basis_path;
  bool use_float = false;
  double tol = 1e-10;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io::ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw io::ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw io::ParseError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
  if (!out) throw io::ParseError("failed writing '" + path + "'");
}

template <class S>
GradedPoly<S> read_poly_for(const OperatorSpec<S>& op, const std::string& path) {
  GradedPoly<S> p = io::poly_from_json<S>(read_json(path));
  if (p.dimension() != op.dimension()) throw io::ParseError("'" + path + "': dimension mismatch");
  if (p.center() != op.center()) throw io::ParseError("'" + path + "': center differs from operator");
  return p;
}

std::string describe(const OperatorSpec<Rational>&) { return "exact"; }
std::string describe(const OperatorSpec<Complex>&) { return "float"; }

template <class S>
int cmd_basis(const Config& cfg, const Logger& log, std::ostream& out) {
  const auto op = io::operator_from_json<S>(read_json(cfg.input_path));
  log.info("basis: d=" + std::to_string(op.dimension()) + " order=" + std::to_string(op.order()) +
           " p=" + std::to_string(op.degree()) + " (" + describe(op) + ")");
  const QTBasis<S> b = quasi_trefftz_basis(op);
  std::ostringstream piv;
  piv << b.pivot.pivot;
  log.debug("pivot " + piv.str() + (b.pivot.simple_axis
                                         ? ", simple axis " + std::to_string(*b.pivot.simple_axis)
                                         : ", no simple axis"));
  write_json(cfg.output_path, io::to_json(b));
  out << "elements: " << b.elements.size() << '\n';
  return kOk;
}

int cmd_dim(const Config& cfg, std::ostream& out) {
  // Dimensions only depend on (d, order, p); the coefficients are still
  // parsed so malformed files are rejected.
  const auto op = io::operator_from_json<Rational>(read_json(cfg.input_path));
  const std::size_t full = dim_polynomials(op.dimension(), op.degree());
  const std::size_t image = dim_polynomials(op.dimension(), op.truncation_order());
  out << "dim P_p: " << full << '\n'
      << "dim P_{p-gamma}: " << image << '\n'
      << "dim QT_p: " << full - image << '\n';
  return kOk;
}

template <class S>
int cmd_solve(const Config& cfg, const Logger& log, std::ostream& err) {
  const auto op = io::operator_from_json<S>(read_json(cfg.input_path));
  const GradedPoly<S> f = read_poly_for(op, cfg.rhs_path);
  const PrincipalPart<S> lstar = principal_part(op);
  const GradedPoly<S> x = particular_solution(op, lstar, select_pivot(lstar), f);
  const GradedPoly<S> check = apply_quasi_trefftz(op, x) - f;
  const double scale = std::max(f.max_magnitude(), 1.0);
  const double miss = check.max_magnitude() / scale;
  log.debug("solve: self-check residual " + std::to_string(miss));
  if (ScalarTraits<S>::exact ? !check.is_zero() : miss > cfg.tol) {
    err << "error: solution failed self-verification (residual " << miss << ")\n";
    return kSolveCheckFailed;
  }
  write_json(cfg.output_path, io::to_json(x));
  return kOk;
}

template <class S>
int cmd_apply(const Config& cfg, std::ostream&) {
  const auto op = io::operator_from_json<S>(read_json(cfg.input_path));
  const GradedPoly<S> p = read_poly_for(op, cfg.poly_path);
  write_json(cfg.output_path, io::to_json(apply_quasi_trefftz(op, p)));
  return kOk;
}

template <class S>
int cmd_verify(const Config& cfg, const Logger& log, std::ostream& out) {
  const auto op = io::operator_from_json<S>(read_json(cfg.input_path));
  const auto elements = io::basis_elements_from_json<S>(read_json(cfg.basis_path));
  const std::size_t expected = dim_polynomials(op.dimension(), op.degree()) -
                               dim_polynomials(op.dimension(), op.truncation_order());
  bool ok = elements.size() == expected;
  json reports = json::array();
  for (const auto& e : elements) {
    if (e.dimension() != op.dimension()) throw io::ParseError("basis element dimension mismatch");
    if (e.center() != op.center()) throw io::ParseError("basis element center differs from operator");
    const VerificationReport r = verify_quasi_trefftz(op, e, cfg.tol);
    ok = ok && r.pass;
    reports.push_back(io::to_json(r));
  }
  log.info("verify: " + std::to_string(elements.size()) + " elements, expected " +
           std::to_string(expected));
  out << json{{"count", elements.size()}, {"expected", expected}, {"pass", ok}, {"elements", reports}}
             .dump(2)
      << '\n';
  return ok ? kOk : kVerifyFailed;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const DegenerateOrder& e) {
    err << "error: " << e.what() << '\n';
    if (e.reduced_order()) {
      err << "suggested order gamma~ = " << *e.reduced_order() << '\n';
    } else {
      err << "suggested order gamma~: none (operator vanishes at the center)\n";
    }
    return kDegenerateOrder;
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasi-Trefftz polynomial bases for linear PDEs with smooth coefficients"};
  app.require_subcommand(1);
  Config cfg;

  auto add_arith = [&cfg](CLI::App* sub) {
    auto* ex = sub->add_flag("--exact", "exact rational arithmetic (default)");
    auto* fl = sub->add_flag("--float", cfg.use_float, "double-precision complex arithmetic");
    ex->excludes(fl);
  };

  auto* basis = app.add_subcommand("basis", "construct a quasi-Trefftz basis");
  basis->add_option("-i", cfg.input_path, "operator JSON")->required();
  basis->add_option("-o", cfg.output_path, "output basis JSON")->required();
  add_arith(basis);

  auto* dim = app.add_subcommand("dim", "print dim P_p, dim P_{p-gamma} and dim QT_p");
  dim->add_option("-i", cfg.input_path, "operator JSON")->required();

  auto* solve = app.add_subcommand("solve", "particular solution of D_p X = f");
  solve->add_option("-i", cfg.input_path, "operator JSON")->required();
  solve->add_option("-f", cfg.rhs_path, "right-hand side polynomial JSON")->required();
  solve->add_option("-o", cfg.output_path, "output polynomial JSON")->required();
  solve->add_option("--tol", cfg.tol, "self-check tolerance in float mode");
  add_arith(solve);

  auto* apply = app.add_subcommand("apply", "apply the quasi-Trefftz operator D_p");
  apply->add_option("-i", cfg.input_path, "operator JSON")->required();
  apply->add_option("-P", cfg.poly_path, "polynomial JSON")->required();
  apply->add_option("-o", cfg.output_path, "output polynomial JSON")->required();
  add_arith(apply);

  auto* verify = app.add_subcommand("verify", "check every basis element and the element count");
  verify->add_option("-i", cfg.input_path, "operator JSON")->required();
  verify->add_option("-b", cfg.basis_path, "basis JSON")->required();
  verify->add_option("--tol", cfg.tol, "relative residual tolerance in float mode");
  add_arith(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kMalformedInput;
  }

  const Logger log{Logger::from_env(), err};
  return guarded(err, [&]() -> int {
    if (*basis) return cfg.use_float ? cmd_basis<Complex>(cfg, log, out)
                                     : cmd_basis<Rational>(cfg, log, out);
    if (*dim) return cmd_dim(cfg, out);
    if (*solve) return cfg.use_float ? cmd_solve<Complex>(cfg, log, err)
                                     : cmd_solve<Rational>(cfg, log, err);
    if (*apply) return cfg.use_float ? cmd_apply<Complex>(cfg, out) : cmd_apply<Rational>(cfg, out);
    return cfg.use_float ? cmd_verify<Complex>(cfg, log, out) : cmd_verify<Rational>(cfg, log, out);
  });
}

}  // namespace qt::cli
