#include "hamflat/problem.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hamflat/parse.hpp"
#include "json.hpp"

namespace hamflat {

namespace {

using nlohmann::json;

void require_keys(const json& doc, const std::set<std::string>& allowed,
                  const std::set<std::string>& required) {
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (!allowed.contains(key)) throw ProblemError("unknown key '" + key + "'");
  }
  for (const auto& key : required)
    if (!doc.contains(key)) throw ProblemError("missing key '" + key + "'");
}

int get_dimension(const json& doc, const std::string& key) {
  const json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long>() < 1)
    throw ProblemError("'" + key + "' must be a positive integer");
  long n = v.get<long>();
  if (n > 16) throw ProblemError("'" + key + "' too large (max 16)");
  return static_cast<int>(n);
}

Rational rational_entry(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return Rational::from_string(v.get<std::string>());
  throw ProblemError("matrix entries must be integers or rational strings");
}

ConstSymMatrix load_const_matrix(const json& grid, int size, const std::string& key) {
  if (!grid.is_array() || static_cast<int>(grid.size()) != size)
    throw ProblemError("'" + key + "' must be a " + std::to_string(size) + "x" +
                       std::to_string(size) + " grid");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : grid) {
    if (!row.is_array() || static_cast<int>(row.size()) != size)
      throw ProblemError("'" + key + "' must be a " + std::to_string(size) + "x" +
                         std::to_string(size) + " grid");
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(rational_entry(v));
    rows.push_back(std::move(r));
  }
  try {
    return ConstSymMatrix(std::move(rows));
  } catch (const std::invalid_argument& err) {
    throw ProblemError("'" + key + "': " + err.what());
  }
}

Poly load_poly(const json& v, int dim, const std::string& key) {
  if (!v.is_string()) throw ProblemError("'" + key + "' must be an expression string");
  try {
    return parse_poly(v.get<std::string>(), dim);
  } catch (const ParseError& err) {
    throw ProblemError("'" + key + "': " + err.what());
  }
}

PolyMatrix load_poly_matrix(const json& grid, int rows, int cols, int dim,
                            const std::string& key) {
  if (!grid.is_array() || static_cast<int>(grid.size()) != rows)
    throw ProblemError("'" + key + "' must have " + std::to_string(rows) + " rows");
  PolyMatrix m(rows, cols, dim);
  for (int i = 0; i < rows; ++i) {
    const json& row = grid[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ProblemError("'" + key + "' row " + std::to_string(i + 1) + " must have " +
                         std::to_string(cols) + " entries");
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = load_poly(row[static_cast<size_t>(j)], dim,
                             key + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]");
  }
  return m;
}

Problem load_wdvv(const json& doc, std::string name) {
  require_keys(doc, {"kind", "name", "N", "eta", "phi", "f"}, {"kind", "N", "eta"});
  int n = get_dimension(doc, "N");
  ConstSymMatrix eta = load_const_matrix(doc.at("eta"), n, "eta");
  bool has_phi = doc.contains("phi"), has_f = doc.contains("f");
  if (has_phi == has_f) throw ProblemError("exactly one of 'phi' or 'f' is required");
  if (has_phi) {
    Poly phi = load_poly(doc.at("phi"), n, "phi");
    return Problem{"wdvv", std::move(name),
                   WdvvInput{WdvvProblem(n, std::move(eta), std::move(phi)), std::nullopt}};
  }
  if (n != 3) throw ProblemError("the 'f' ansatz requires N = 3");
  Poly f = load_poly(doc.at("f"), 3, "f");
  if (!partial(f, 1).is_zero()) throw ProblemError("'f' must not depend on u1");
  return Problem{"wdvv", std::move(name),
                 WdvvInput{WdvvProblem(3, std::move(eta), ansatz_phi(f)), f}};
}

Problem load_constant_form(const json& doc, std::string name) {
  require_keys(doc, {"kind", "name", "N", "L", "eta", "mu", "psis"},
               {"kind", "N", "L", "eta", "mu", "psis"});
  int n = get_dimension(doc, "N");
  int l = get_dimension(doc, "L");
  ConstSymMatrix eta = load_const_matrix(doc.at("eta"), n, "eta");
  ConstSymMatrix mu = load_const_matrix(doc.at("mu"), l, "mu");
  const json& psis_doc = doc.at("psis");
  if (!psis_doc.is_array() || static_cast<int>(psis_doc.size()) != l)
    throw ProblemError("'psis' must list exactly L expressions");
  std::vector<Poly> psis;
  psis.reserve(static_cast<size_t>(l));
  for (int m = 0; m < l; ++m)
    psis.push_back(load_poly(psis_doc[static_cast<size_t>(m)], n,
                             "psis[" + std::to_string(m + 1) + "]"));
  return Problem{"constant-form", std::move(name),
                 ConstantFormSpec(n, l, std::move(eta), std::move(mu), std::move(psis))};
}

Problem load_general_form(const json& doc, std::string name) {
  require_keys(doc, {"kind", "name", "N", "g", "b", "ws", "mu"},
               {"kind", "N", "g", "b", "ws", "mu"});
  int n = get_dimension(doc, "N");
  PolyMatrix g = load_poly_matrix(doc.at("g"), n, n, n, "g");
  const json& b_doc = doc.at("b");
  if (!b_doc.is_array() || static_cast<int>(b_doc.size()) != n)
    throw ProblemError("'b' must be an NxNxN array");
  PolyTensor3 b(n, n, n, n);
  for (int i = 0; i < n; ++i) {
    const json& plane = b_doc[static_cast<size_t>(i)];
    if (!plane.is_array() || static_cast<int>(plane.size()) != n)
      throw ProblemError("'b' must be an NxNxN array");
    for (int j = 0; j < n; ++j) {
      const json& row = plane[static_cast<size_t>(j)];
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw ProblemError("'b' must be an NxNxN array");
      for (int k = 0; k < n; ++k)
        b.at(i, j, k) = load_poly(row[static_cast<size_t>(k)], n,
                                  "b[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
                                      "][" + std::to_string(k + 1) + "]");
    }
  }
  const json& ws_doc = doc.at("ws");
  if (!ws_doc.is_array()) throw ProblemError("'ws' must be an array of NxN grids");
  std::vector<PolyMatrix> ws;
  for (size_t m = 0; m < ws_doc.size(); ++m)
    ws.push_back(load_poly_matrix(ws_doc[m], n, n, n, "ws[" + std::to_string(m + 1) + "]"));
  int l = static_cast<int>(ws.size());
  const json& mu_doc = doc.at("mu");
  if (!mu_doc.is_array() || static_cast<int>(mu_doc.size()) != l)
    throw ProblemError("'mu' must be an LxL grid with L = len(ws)");
  ConstSymMatrix mu = load_const_matrix(mu_doc, l, "mu");
  return Problem{"general-form", std::move(name),
                 GeneralFormSpec(n, std::move(g), std::move(b), std::move(ws), std::move(mu))};
}

Problem load_flow(const json& doc, std::string name) {
  require_keys(doc, {"kind", "name", "N", "A"}, {"kind", "N", "A"});
  int n = get_dimension(doc, "N");
  return Problem{"flow", std::move(name), FlowSpec{load_poly_matrix(doc.at("A"), n, n, n, "A")}};
}

Problem load_density(const json& doc, std::string name) {
  require_keys(doc, {"kind", "name", "N", "h"}, {"kind", "N", "h"});
  int n = get_dimension(doc, "N");
  return Problem{"density", std::move(name), Functional{load_poly(doc.at("h"), n, "h")}};
}

}  // namespace

Problem load_problem_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ProblemError(std::string("invalid JSON: ") + err.what());
  }
  if (!doc.is_object()) throw ProblemError("problem document must be a JSON object");
  if (!doc.contains("kind") || !doc.at("kind").is_string())
    throw ProblemError("missing string key 'kind'");
  std::string kind = doc.at("kind").get<std::string>();
  std::string name;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw ProblemError("'name' must be a string");
    name = doc.at("name").get<std::string>();
  }
  try {
    if (kind == "wdvv") return load_wdvv(doc, std::move(name));
    if (kind == "constant-form") return load_constant_form(doc, std::move(name));
    if (kind == "general-form") return load_general_form(doc, std::move(name));
    if (kind == "flow") return load_flow(doc, std::move(name));
    if (kind == "density") return load_density(doc, std::move(name));
  } catch (const std::invalid_argument& err) {
    throw ProblemError(err.what());
  }
  throw ProblemError("unknown kind '" + kind + "'");
}

Problem load_problem_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ProblemError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_problem_text(buffer.str());
}

}  // namespace hamflat
