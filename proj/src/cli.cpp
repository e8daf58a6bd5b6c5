#include "hamflat/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hamflat/fixtures.hpp"
#include "hamflat/hierarchy.hpp"
#include "hamflat/locality.hpp"
#include "hamflat/operators.hpp"
#include "hamflat/parse.hpp"
#include "hamflat/problem.hpp"
#include "hamflat/report.hpp"
#include "hamflat/wdvv.hpp"

namespace hamflat {

namespace {

using nlohmann::ordered_json;

struct Input {
  std::string display;  // as given on the command line
  std::string text;
  Problem problem;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ProblemError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Resolution order: the path as given, the path with ".json" appended,
// then the built-in fixture matching the basename.
Input resolve_input(const std::string& arg) {
  namespace fs = std::filesystem;
  std::string text;
  if (fs::exists(arg) && fs::is_regular_file(arg)) {
    text = read_file(arg);
  } else if (fs::exists(arg + ".json") && fs::is_regular_file(arg + ".json")) {
    text = read_file(arg + ".json");
  } else {
    std::string base = fs::path(arg).filename().string();
    if (base.size() > 5 && base.ends_with(".json")) base.resize(base.size() - 5);
    if (!is_fixture(base))
      throw ProblemError("no such file or fixture: '" + arg + "'");
    text = fixture_json(base);
  }
  Problem problem = load_problem_text(text);
  return Input{arg, std::move(text), std::move(problem)};
}

class ReportBuilder {
 public:
  ReportBuilder(const std::string& command, const Input& input) : start_(Clock::now()) {
    doc_["command"] = command;
    doc_["input"]["path"] = input.display;
    doc_["input"]["digest"] = content_digest(input.text);
    doc_["checks"] = ordered_json::array();
  }

  void add_check(const CheckResult& check) {
    doc_["checks"].push_back(check_to_json(check));
    pass_ = pass_ && check.pass;
  }

  void add_checks(const VerificationReport& report) {
    for (const auto& c : report.checks) add_check(c);
  }

  void add_skipped(const std::string& name, const std::string& reason) {
    ordered_json j;
    j["name"] = name;
    j["verdict"] = "skipped";
    j["reason"] = reason;
    doc_["checks"].push_back(std::move(j));
  }

  ordered_json& doc() { return doc_; }
  bool pass() const { return pass_; }

  // Finalizes the document and writes it to `out_path` when given.
  // Returns the process exit code.
  int emit(const std::string& out_path, std::ostream& out, std::ostream& err) {
    doc_["verdict"] = pass_ ? "pass" : "fail";
    doc_["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                             Clock::now() - start_).count();
    if (!out_path.empty()) {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) {
        err << "error: cannot write '" << out_path << "'\n";
        return 2;
      }
      file << doc_.dump(2) << "\n";
    }
    summary(out);
    return pass_ ? 0 : 1;
  }

 private:
  void summary(std::ostream& out) const {
    for (const auto& check : doc_["checks"]) {
      std::string verdict = check["verdict"].get<std::string>();
      out << "  [" << (verdict == "pass" ? "pass" : verdict == "skipped" ? "skip" : "FAIL")
          << "] " << check["name"].get<std::string>();
      if (verdict == "fail") {
        out << " (" << check["failure_count"].get<size_t>() << " nonzero residuals";
        const auto& failures = check["failures"];
        if (!failures.empty()) {
          const auto& first = failures.front();
          out << "; first at (";
          bool sep = false;
          for (const auto& idx : first["indices"]) {
            if (sep) out << ",";
            out << idx.get<int>();
            sep = true;
          }
          out << ") = " << first["residual"].get<std::string>();
        }
        out << ")";
      }
      out << "\n";
    }
    out << "verdict: " << (pass_ ? "pass" : "fail") << "\n";
  }

  using Clock = std::chrono::steady_clock;
  Clock::time_point start_;
  ordered_json doc_;
  bool pass_ = true;
};

CheckResult check_from_tensor4(const std::string& name, const PolyTensor4& t) {
  CheckResult result{name, true, {}};
  for (int i = 0; i < t.size1(); ++i)
    for (int j = 0; j < t.size2(); ++j)
      for (int k = 0; k < t.size3(); ++k)
        for (int l = 0; l < t.size4(); ++l)
          if (!t.at(i, j, k, l).is_zero())
            result.record({i + 1, j + 1, k + 1, l + 1}, t.at(i, j, k, l));
  return result;
}

CheckResult check_from_tensor3(const std::string& name, const PolyTensor3& t) {
  CheckResult result{name, true, {}};
  for (int i = 0; i < t.size1(); ++i)
    for (int j = 0; j < t.size2(); ++j)
      for (int k = 0; k < t.size3(); ++k)
        if (!t.at(i, j, k).is_zero()) result.record({i + 1, j + 1, k + 1}, t.at(i, j, k));
  return result;
}

ordered_json matrix_to_json(const PolyMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(print_canonical(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_matrix(std::ostream& out, const PolyMatrix& m, const std::string& label,
                  const std::string& indent) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      out << indent << label << "[" << i + 1 << "][" << j + 1
          << "] = " << print_canonical(m.at(i, j)) << "\n";
}

int cmd_verify_wdvv(const Input& input, const std::string& out_path, std::ostream& out,
                    std::ostream& err) {
  const auto* wdvv = std::get_if<WdvvInput>(&input.problem.data);
  if (!wdvv) throw ProblemError("verify-wdvv expects a problem of kind 'wdvv'");

  ReportBuilder report("verify-wdvv", input);
  report.add_check(check_from_tensor4("wdvv-residual", wdvv_residual(wdvv->problem)));
  if (wdvv->ansatz_f) {
    CheckResult dubrovin{"dubrovin-residual", true, {}};
    Poly res = dubrovin_residual(*wdvv->ansatz_f);
    if (!res.is_zero()) dubrovin.record({1}, std::move(res));
    report.add_check(dubrovin);
  }
  report.add_checks(wdvv_involution_check(wdvv->problem));
  return report.emit(out_path, out, err);
}

int cmd_verify_operator(const Input& input, const std::string& out_path, std::ostream& out,
                        std::ostream& err) {
  if (const auto* spec = std::get_if<ConstantFormSpec>(&input.problem.data)) {
    ReportBuilder report("verify-operator", input);
    report.add_checks(verify_constant_form(*spec));
    return report.emit(out_path, out, err);
  }
  if (const auto* spec = std::get_if<GeneralFormSpec>(&input.problem.data)) {
    ReportBuilder report("verify-operator", input);
    VerificationReport relations = verify_general_form(*spec);
    report.add_checks(relations);
    if (relations.pass()) {
      report.add_checks(check_pencil(*spec));
    } else {
      report.add_skipped("pencil-curvature-zero", "coefficient relations failed");
      report.add_skipped("pencil-nonlocal-zero", "coefficient relations failed");
    }
    return report.emit(out_path, out, err);
  }
  throw ProblemError("verify-operator expects kind 'constant-form' or 'general-form'");
}

int cmd_hierarchy(const Input& input, int steps, const std::string& out_path, std::ostream& out,
                  std::ostream& err) {
  const auto* spec = std::get_if<ConstantFormSpec>(&input.problem.data);
  if (!spec) throw ProblemError("hierarchy expects a problem of kind 'constant-form'");

  ReportBuilder report("hierarchy", input);
  VerificationReport hamiltonian = verify_constant_form(*spec);
  report.add_checks(hamiltonian);
  if (!hamiltonian.pass()) {
    report.add_skipped("density-recurrence", "operator is not Hamiltonian");
    return report.emit(out_path, out, err);
  }

  HierarchyState state = hierarchy_start(*spec);
  CheckResult recurrence{"density-recurrence", true, {}};
  try {
    for (int s = 0; s < steps; ++s) state = next_step(std::move(state));
  } catch (const IntegrationFailedError& e) {
    recurrence.record({e.step, e.cause.i, e.cause.j}, e.cause.residual);
  }
  report.add_check(recurrence);

  ordered_json densities = ordered_json::array();
  for (const auto& h : state.densities) densities.push_back(print_canonical(h));
  report.doc()["densities"] = std::move(densities);
  ordered_json potentials = ordered_json::array();
  for (const auto& step : state.step_potentials) {
    ordered_json row = ordered_json::array();
    for (const auto& f : step) row.push_back(print_canonical(f));
    potentials.push_back(std::move(row));
  }
  report.doc()["step_potentials"] = std::move(potentials);
  ordered_json flows = ordered_json::array();
  for (const auto& flow : state.flows) flows.push_back(matrix_to_json(flow.a));
  report.doc()["flows"] = std::move(flows);

  for (size_t s = 0; s < state.densities.size(); ++s)
    out << "h" << s + 1 << " = " << print_canonical(state.densities[s]) << "\n";
  for (size_t s = 0; s < state.flows.size(); ++s) {
    out << "flow " << s + 1 << ":\n";
    print_matrix(out, state.flows[s].a, "A", "  ");
  }
  return report.emit(out_path, out, err);
}

int cmd_localize(const Input& input, const std::string& density_arg, const std::string& out_path,
                 std::ostream& out, std::ostream& err) {
  const auto* spec = std::get_if<ConstantFormSpec>(&input.problem.data);
  if (!spec) throw ProblemError("localize expects a problem of kind 'constant-form'");

  Functional h{Poly(spec->n)};
  if (!density_arg.empty() && density_arg.front() == '@') {
    Problem density_problem = load_problem_file(density_arg.substr(1));
    const auto* functional = std::get_if<Functional>(&density_problem.data);
    if (!functional) throw ProblemError("--density file must have kind 'density'");
    if (functional->density.dim() != spec->n)
      throw ProblemError("--density dimension does not match the operator");
    h = *functional;
  } else {
    h.density = parse_poly(density_arg, spec->n);
  }

  ReportBuilder report("localize", input);
  report.doc()["density"] = print_canonical(h.density);
  VerificationReport hamiltonian = verify_constant_form(*spec);
  report.add_checks(hamiltonian);
  CheckResult locality = check_from_tensor3("locality", locality_residual(*spec, h));
  report.add_check(locality);

  if (report.pass()) {
    LocalizedSystem system = localize(*spec, h);
    ordered_json ps = ordered_json::array();
    for (const auto& p : system.potentials) ps.push_back(print_canonical(p));
    report.doc()["potentials"] = std::move(ps);
    report.doc()["f"] = print_canonical(system.f);
    report.doc()["flow"] = matrix_to_json(system.flow.a);
    for (size_t m = 0; m < system.potentials.size(); ++m)
      out << "P" << m + 1 << " = " << print_canonical(system.potentials[m]) << "\n";
    out << "f = " << print_canonical(system.f) << "\n";
    out << "flow:\n";
    print_matrix(out, system.flow.a, "A", "  ");
  }
  return report.emit(out_path, out, err);
}

int cmd_involution(const Input& input, const std::string& out_path, std::ostream& out,
                   std::ostream& err) {
  const auto* spec = std::get_if<ConstantFormSpec>(&input.problem.data);
  if (!spec) throw ProblemError("involution expects a problem of kind 'constant-form'");

  ReportBuilder report("involution", input);
  CheckResult result{"involution", true, {}};
  for (int a = 0; a < spec->l; ++a)
    for (int b = a + 1; b < spec->l; ++b) {
      PolyMatrix res = involution_residual(spec->psis[static_cast<size_t>(a)],
                                           spec->psis[static_cast<size_t>(b)], spec->eta);
      for (int l = 0; l < spec->n; ++l)
        for (int k = 0; k < spec->n; ++k)
          if (!res.at(l, k).is_zero()) result.record({a + 1, b + 1, l + 1, k + 1}, res.at(l, k));
    }
  report.add_check(result);
  return report.emit(out_path, out, err);
}

int cmd_fixtures(const std::string& action, const std::string& name, std::ostream& out) {
  if (action == "list") {
    for (const auto& n : fixture_names()) out << n << "\n";
    return 0;
  }
  if (action == "show") {
    if (name.empty()) throw ProblemError("fixtures show requires a fixture name");
    out << fixture_json(name);
    return 0;
  }
  throw ProblemError("unknown fixtures action '" + action + "' (expected list or show)");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification and construction toolkit for nonlocal\n"
               "Hamiltonian operators of hydrodynamic type with flat metrics."};
  app.require_subcommand(1);

  std::string input_arg, out_path, density_arg, fixtures_action, fixtures_name;
  int steps = 1;

  CLI::App* verify_wdvv = app.add_subcommand(
      "verify-wdvv", "Check the associativity equations for a potential");
  verify_wdvv->add_option("input", input_arg, "problem file or fixture name")->required();
  verify_wdvv->add_option("--out", out_path, "write the JSON report here");

  CLI::App* verify_operator = app.add_subcommand(
      "verify-operator", "Check the Hamiltonian property of an operator");
  verify_operator->add_option("input", input_arg, "problem file or fixture name")->required();
  verify_operator->add_option("--out", out_path, "write the JSON report here");

  CLI::App* hierarchy = app.add_subcommand(
      "hierarchy", "Generate the bi-Hamiltonian hierarchy densities");
  hierarchy->add_option("input", input_arg, "constant-form problem file")->required();
  hierarchy->add_option("--steps", steps, "number of recurrence steps")
      ->required()
      ->check(CLI::NonNegativeNumber);
  hierarchy->add_option("--out", out_path, "write the JSON report here");

  CLI::App* localize_cmd = app.add_subcommand(
      "localize", "Localize a Hamiltonian system of hydrodynamic type");
  localize_cmd->add_option("input", input_arg, "constant-form problem file")->required();
  localize_cmd->add_option("--density", density_arg, "density expression or @file")->required();
  localize_cmd->add_option("--out", out_path, "write the JSON report here");

  CLI::App* involution = app.add_subcommand(
      "involution", "Pairwise involution of the operator's potentials");
  involution->add_option("input", input_arg, "constant-form problem file")->required();
  involution->add_option("--out", out_path, "write the JSON report here");

  CLI::App* fixtures = app.add_subcommand("fixtures", "Built-in problem corpus");
  fixtures->add_option("action", fixtures_action, "list | show")->required();
  fixtures->add_option("name", fixtures_name, "fixture name for show");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (fixtures->parsed()) return cmd_fixtures(fixtures_action, fixtures_name, out);
    Input input = resolve_input(input_arg);
    if (verify_wdvv->parsed()) return cmd_verify_wdvv(input, out_path, out, err);
    if (verify_operator->parsed()) return cmd_verify_operator(input, out_path, out, err);
    if (hierarchy->parsed()) return cmd_hierarchy(input, steps, out_path, out, err);
    if (localize_cmd->parsed()) return cmd_localize(input, density_arg, out_path, out, err);
    if (involution->parsed()) return cmd_involution(input, out_path, out, err);
    err << "error: no subcommand\n";
    return 2;
  } catch (const ProblemError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hamflat
