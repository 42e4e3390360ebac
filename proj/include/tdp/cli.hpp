// Batch command-line front end.
//
//   tdp spectrum --family A --n 5 --a 1 --b 3
//   tdp power    --family A --n 3 --a 1 --b 3 --r 3
//   tdp det      --family A_DAGGER --n 6 --a 1 --b 0,1
//   tdp factor   --sequence fib|pell|fibpoly --n 10 [--x 1.5]
//   tdp verify   [--max-n 25]
//
// Every command writes one report to stdout ({command, inputs, outputs,
// residuals, errata_notes} in JSON mode). Exit codes: 0 success, 2 usage or
// precondition violation (with a one-line JSON reason on stderr), 3 a
// verification or cross-check failure.
#pragma once

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "tdp/errata.hpp"
#include "tdp/fibfact.hpp"
#include "tdp/numkit.hpp"
#include "tdp/powers.hpp"
#include "tdp/specmat.hpp"
#include "tdp/verify.hpp"

namespace tdp::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitVerification = 3;

inline constexpr double kSpectrumTolerance = 1e-10;
inline constexpr double kDetTolerance = 1e-9;
inline constexpr double kFactorTolerance = 1e-9;

class UsageError : public Error {
 public:
  using Error::Error;
};

/// "re" or "re,im" with no surrounding text.
inline Complex parse_complex(std::string_view text) {
  auto parse_part = [&](std::string_view part) {
    double v = 0.0;
    if (part.empty()) throw UsageError("empty component in complex value '" + std::string(text) + "'");
    if (part.front() == '+') part.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size())
      throw UsageError("cannot parse complex value '" + std::string(text) + "'");
    if (!std::isfinite(v)) throw UsageError("complex value must be finite: '" + std::string(text) + "'");
    return v;
  };
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return {parse_part(text), 0.0};
  return {parse_part(text.substr(0, comma)), parse_part(text.substr(comma + 1))};
}

inline Family parse_family(std::string text) {
  std::transform(text.begin(), text.end(), text.begin(), [](unsigned char c) { return std::toupper(c); });
  if (text == "A") return Family::A;
  if (text == "A_DAGGER" || text == "ADAGGER" || text == "A-DAGGER" || text == "DAGGER") return Family::ADagger;
  throw UsageError("unknown family '" + text + "' (expected A or A_DAGGER)");
}

inline Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

inline Json complex_list_json(const std::vector<Complex>& zs) {
  Json re = Json::array(), im = Json::array();
  for (Complex z : zs) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  return Json{{"re", std::move(re)}, {"im", std::move(im)}};
}

inline Json matrix_json(const DenseMatrix& m) {
  Json re = Json::array(), im = Json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    Json re_row = Json::array(), im_row = Json::array();
    for (Complex z : m.row(i)) {
      re_row.push_back(z.real());
      im_row.push_back(z.imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return Json{{"re", std::move(re)}, {"im", std::move(im)}};
}

inline Json spec_json(const FamilySpec& s) {
  return Json{{"family", std::string(to_string(s.family()))},
              {"n", s.n()},
              {"a", complex_json(s.a())},
              {"b", complex_json(s.b())}};
}

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  Json residuals = Json::object();
  std::vector<std::string> errata_notes;
  int exit_code = kExitOk;

  Json to_json() const {
    return Json{{"command", command},
                {"inputs", inputs},
                {"outputs", outputs},
                {"residuals", residuals},
                {"errata_notes", errata_notes}};
  }
};

// --- commands -------------------------------------------------------------

inline Report run_spectrum(const FamilySpec& spec) {
  Report rep;
  rep.command = "spectrum";
  rep.inputs = spec_json(spec);
  const std::vector<Complex> lambda = eigenvalues(spec);
  const std::vector<double> m = nodes(spec);
  std::vector<double> residuals;
  double worst = 0.0;
  for (std::size_t k = 1; k <= spec.n(); ++k) {
    residuals.push_back(eigen_residual(spec, k));
    worst = std::max(worst, residuals.back());
  }
  rep.outputs["eigenvalues"] = complex_list_json(lambda);
  rep.outputs["nodes"] = m;
  rep.residuals["eigen_residual"] = residuals;
  rep.residuals["max_eigen_residual"] = worst;
  rep.residuals["tolerance"] = kSpectrumTolerance;
  rep.errata_notes = errata::for_spectrum(spec);
  if (!(worst <= kSpectrumTolerance)) rep.exit_code = kExitVerification;
  return rep;
}

inline Report run_power(const FamilySpec& spec, long long r, std::size_t crosscheck_max_n) {
  Report rep;
  rep.command = "power";
  rep.inputs = spec_json(spec);
  rep.inputs["r"] = r;
  PowerOptions opts;
  opts.crosscheck_max_n = crosscheck_max_n;
  try {
    const PowerResult res = power({spec, r}, opts);
    rep.outputs["method"] = std::string(to_string(res.method));
    rep.outputs["matrix"] = matrix_json(res.value);
    rep.residuals["cross_check"] = res.cross_check_residual ? Json(*res.cross_check_residual) : Json(nullptr);
    rep.residuals["cross_check_tolerance"] =
        res.cross_check_tolerance ? Json(*res.cross_check_tolerance) : Json(nullptr);
    rep.errata_notes = errata::for_power(spec, r, res.method == PowerMethod::ClosedForm);
  } catch (const CrossCheckFailure& e) {
    rep.outputs["method"] = std::string(to_string(PowerMethod::ClosedForm));
    rep.outputs["failure"] = e.what();
    rep.errata_notes = errata::for_power(spec, r, true);
    rep.exit_code = kExitVerification;
  }
  return rep;
}

inline Report run_det(const FamilySpec& spec) {
  Report rep;
  rep.command = "det";
  rep.inputs = spec_json(spec);
  const Complex det = tridiag_det(build(spec));
  Complex prod{1.0};
  for (Complex l : eigenvalues(spec)) prod *= l;
  rep.outputs["recurrence"] = complex_json(det);
  rep.outputs["eigenvalue_product"] = complex_json(prod);
  const double scale = std::max(1.0, std::abs(det));
  const double rel = std::abs(det - prod) / scale;
  rep.residuals["relative_difference"] = rel;
  rep.residuals["tolerance"] = kDetTolerance;
  if (!(rel <= kDetTolerance)) rep.exit_code = kExitVerification;
  return rep;
}

enum class Sequence { Fib, Pell, FibPoly };

inline Sequence parse_sequence(std::string text) {
  std::transform(text.begin(), text.end(), text.begin(), [](unsigned char c) { return std::tolower(c); });
  if (text == "fib") return Sequence::Fib;
  if (text == "pell") return Sequence::Pell;
  if (text == "fibpoly") return Sequence::FibPoly;
  throw UsageError("unknown sequence '" + text + "' (expected fib, pell or fibpoly)");
}

inline std::optional<BigInt> exact_integer(Complex x) {
  if (x.imag() != 0.0 || x.real() != std::trunc(x.real()) || std::abs(x.real()) > 9.0e15) return std::nullopt;
  return BigInt(static_cast<long long>(x.real()));
}

inline Report run_factor(Sequence seq, std::size_t n, std::optional<Complex> x) {
  Report rep;
  rep.command = "factor";
  const auto nn = static_cast<std::uint32_t>(n);
  if (seq == Sequence::FibPoly) {
    if (!x) throw UsageError("--x is required for --sequence fibpoly");
    if (n < 3) throw PreconditionError("fibpoly factorization needs n >= 3");
    rep.inputs = Json{{"sequence", "fibpoly"}, {"n", n}, {"x", complex_json(*x)}};
    const Complex recurrence = fib_poly(nn - 1, *x);
    const Complex product = fibpoly_factor_product(n, *x);
    const IdentityCheck det = detA_fibpoly_check(n, *x);
    if (auto xi = exact_integer(*x)) rep.outputs["exact"] = fib_poly(nn - 1, *xi).str();
    rep.outputs["recurrence"] = complex_json(recurrence);
    rep.outputs["product"] = complex_json(product);
    rep.outputs["determinant"] = complex_json(det.lhs);
    rep.outputs["determinant_expected"] = complex_json(det.rhs);
    const double rel = std::abs(product - recurrence) / std::max(1.0, std::abs(recurrence));
    rep.residuals["product"] = rel;
    rep.residuals["determinant"] = det.residual;
    rep.residuals["tolerance"] = kFactorTolerance;
    if (!(rel <= kFactorTolerance) || !(det.residual <= kFactorTolerance)) rep.exit_code = kExitVerification;
    return rep;
  }

  if (n < 1) throw PreconditionError("factor needs n >= 1");
  if (x) throw UsageError("--x applies only to --sequence fibpoly");
  const bool is_fib = seq == Sequence::Fib;
  rep.inputs = Json{{"sequence", is_fib ? "fib" : "pell"}, {"n", n}};
  const BigInt exact = is_fib ? fib(nn) : pell(nn);
  const Complex product = is_fib ? fib_factor_product(n) : pell_factor_product(n);
  const double exact_d = to_double(exact);
  rep.outputs["exact"] = exact.str();
  rep.outputs["product"] = complex_json(product);
  const double rel = std::abs(product - exact_d) / std::max(1.0, std::abs(exact_d));
  rep.residuals["product"] = rel;
  bool ok = rel <= kFactorTolerance;
  if (n >= 2) {
    const IdentityCheck det = detA_dagger_check(n, is_fib ? DaggerVariant::Fib : DaggerVariant::Pell);
    rep.outputs["determinant"] = complex_json(det.lhs);
    rep.outputs["determinant_expected"] = complex_json(det.rhs);
    rep.residuals["determinant"] = det.residual;
    ok = ok && det.residual <= kFactorTolerance;
  }
  rep.residuals["tolerance"] = kFactorTolerance;
  if (!ok) rep.exit_code = kExitVerification;
  return rep;
}

inline Report run_verify(const verify::Config& config) {
  Report rep;
  rep.command = "verify";
  rep.inputs = Json{{"max_n_family_a", config.max_n_family_a}, {"max_n_dagger", config.max_n_dagger},
                    {"max_n_modal", config.max_n_modal},       {"max_n_det", config.max_n_det},
                    {"max_n_sequence", config.max_n_sequence}, {"random_trials", config.random_trials},
                    {"seed", config.seed}};
  Json checks = Json::array();
  bool all = true;
  for (const verify::CheckResult& c : verify::run_all(config)) {
    checks.push_back(Json{{"module", c.module},
                          {"name", c.name},
                          {"passed", c.passed},
                          {"worst", c.worst},
                          {"tolerance", c.tolerance},
                          {"cases", c.cases}});
    rep.residuals[c.module + ": " + c.name] = c.worst;
    all = all && c.passed;
  }
  rep.outputs["checks"] = std::move(checks);
  rep.outputs["passed"] = all;
  rep.errata_notes = {errata::kModalInverseWeights, errata::kEvenOrderEigenvectorSign};
  if (!all) rep.exit_code = kExitVerification;
  return rep;
}

// --- rendering ------------------------------------------------------------

inline void render_pretty(const Report& rep, std::ostream& out) {
  const Json j = rep.to_json();
  out << rep.command << "\n";
  auto section = [&](const char* title, const Json& body) {
    if (body.empty()) return;
    out << "  " << title << ":\n";
    for (const auto& [key, value] : body.items()) out << "    " << key << " = " << value.dump() << "\n";
  };
  section("inputs", j["inputs"]);
  if (rep.command == "verify") {
    for (const Json& c : j["outputs"]["checks"]) {
      out << "  [" << (c["passed"].get<bool>() ? "PASS" : "FAIL") << "] " << c["module"].get<std::string>()
          << ": " << c["name"].get<std::string>() << "  worst=" << c["worst"].dump()
          << " tol=" << c["tolerance"].dump() << " cases=" << c["cases"].dump() << "\n";
    }
  } else {
    section("outputs", j["outputs"]);
    section("residuals", j["residuals"]);
  }
  for (const std::string& note : rep.errata_notes) out << "  note: " << note << "\n";
}

inline void emit_error(std::ostream& err, std::string_view kind, std::string_view reason, int code) {
  err << Json{{"error", kind}, {"reason", reason}, {"exit_code", code}}.dump() << "\n";
}

/// Parses argv, runs one command, writes the report. Returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form spectra and integer powers of special complex tridiagonal matrices", "tdp"};
  app.require_subcommand(1);

  std::string output = "json";
  std::string family_text = "A";
  std::size_t n = 0;
  std::string a_text = "0";
  std::string b_text = "1";
  long long r = 1;
  std::size_t crosscheck_max_n = PowerOptions{}.crosscheck_max_n;
  std::string sequence_text;
  std::string x_text;
  std::size_t verify_max_n = 0;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", output, "Report format")->check(CLI::IsMember({"json", "pretty"}));
  };
  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--family", family_text, "A or A_DAGGER")->required();
    sub->add_option("--n", n, "Matrix order")->required();
    sub->add_option("--a", a_text, "Diagonal parameter, re[,im]")->required();
    sub->add_option("--b", b_text, "Off-diagonal parameter, re[,im]")->required();
    add_output(sub);
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "Eigenvalues, nodes and eigen residuals");
  add_spec(spectrum);
  CLI::App* pow_cmd = app.add_subcommand("power", "Integer power A^r");
  add_spec(pow_cmd);
  pow_cmd->add_option("--r", r, "Exponent (any sign)")->required();
  pow_cmd->add_option("--crosscheck-max-n", crosscheck_max_n, "Largest n cross-checked against the oracle");
  CLI::App* det_cmd = app.add_subcommand("det", "Determinant by recurrence and by eigenvalue product");
  add_spec(det_cmd);
  CLI::App* factor = app.add_subcommand("factor", "Complex factorization of Fibonacci/Pell values");
  factor->add_option("--sequence", sequence_text, "fib, pell or fibpoly")->required();
  factor->add_option("--n", n, "Index")->required();
  factor->add_option("--x", x_text, "Argument for fibpoly, re[,im]");
  add_output(factor);
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the full property sweep");
  verify_cmd->add_option("--max-n", verify_max_n, "Extend every sweep bound to at least this order");
  add_output(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "usage", e.what(), kExitPrecondition);
    return kExitPrecondition;
  }

  try {
    Report rep;
    if (*spectrum || *pow_cmd || *det_cmd) {
      const FamilySpec spec(parse_family(family_text), n, parse_complex(a_text), parse_complex(b_text));
      if (*spectrum) rep = run_spectrum(spec);
      else if (*pow_cmd) rep = run_power(spec, r, crosscheck_max_n);
      else rep = run_det(spec);
    } else if (*factor) {
      std::optional<Complex> x;
      if (!x_text.empty()) x = parse_complex(x_text);
      rep = run_factor(parse_sequence(sequence_text), n, x);
    } else {
      verify::Config config = verify::Config::from_environment();
      if (verify_max_n > 0) config = verify::Config::with_max_n(verify_max_n);
      rep = run_verify(config);
    }

    if (output == "pretty") render_pretty(rep, out);
    else out << rep.to_json().dump(2) << "\n";
    if (rep.exit_code == kExitVerification) emit_error(err, "verification", "a residual exceeded its tolerance", rep.exit_code);
    return rep.exit_code;
  } catch (const UsageError& e) {
    emit_error(err, "usage", e.what(), kExitPrecondition);
  } catch (const SingularMatrix& e) {
    emit_error(err, "singular", e.what(), kExitPrecondition);
  } catch (const PreconditionError& e) {
    emit_error(err, "precondition", e.what(), kExitPrecondition);
  } catch (const NonFiniteValue& e) {
    emit_error(err, "non_finite", e.what(), kExitPrecondition);
  }
  return kExitPrecondition;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace tdp::cli
