#include "hamflat/jet.hpp"

namespace hamflat {

JetPoly JetPoly::from_field(const Poly& p) {
  JetPoly e(p.dim());
  for (const auto& [m, c] : p.terms()) {
    Monomial jm(3 * p.dim());
    for (int v = 1; v <= p.dim(); ++v) jm = jm.with_exponent(v, m.exponent(v));
    e.poly_.add_term(jm, c);
  }
  return e;
}

JetPoly JetPoly::field_var(int fields, int i) {
  JetPoly e(fields);
  e.poly_ = Poly::variable(3 * fields, i);
  return e;
}

JetPoly JetPoly::x_var(int fields, int i) {
  JetPoly e(fields);
  e.poly_ = Poly::variable(3 * fields, fields + i);
  return e;
}

JetPoly JetPoly::xx_var(int fields, int i) {
  JetPoly e(fields);
  e.poly_ = Poly::variable(3 * fields, 2 * fields + i);
  return e;
}

int JetPoly::order() const {
  int order = 0;
  for (const auto& [m, c] : poly_.terms()) {
    (void)c;
    for (int i = 1; i <= fields_; ++i) {
      if (m.exponent(2 * fields_ + i) > 0) return 2;
      if (m.exponent(fields_ + i) > 0) order = 1;
    }
  }
  return order;
}

JetPoly JetPoly::wrap(Poly p) const {
  JetPoly e(fields_);
  e.poly_ = std::move(p);
  return e;
}

JetPoly operator+(const JetPoly& a, const JetPoly& b) { return a.wrap(a.poly_ + b.poly_); }
JetPoly operator-(const JetPoly& a, const JetPoly& b) { return a.wrap(a.poly_ - b.poly_); }
JetPoly operator*(const JetPoly& a, const JetPoly& b) { return a.wrap(a.poly_ * b.poly_); }

std::string JetPoly::str() const {
  std::vector<std::string> names;
  names.reserve(3 * static_cast<size_t>(fields_));
  for (int i = 1; i <= fields_; ++i) names.push_back("u" + std::to_string(i));
  for (int i = 1; i <= fields_; ++i) names.push_back("u" + std::to_string(i) + "_x");
  for (int i = 1; i <= fields_; ++i) names.push_back("u" + std::to_string(i) + "_xx");
  return poly_.str_named(names);
}

JetPoly total_x_derivative(const JetPoly& e) {
  if (e.order() > 1) throw JetOrderError("total_x_derivative: jet order above 1");
  const int n = e.fields();
  JetPoly d(n);
  for (int i = 1; i <= n; ++i) {
    d = d + e.partial_field(i) * JetPoly::x_var(n, i);
    d = d + e.partial_x(i) * JetPoly::xx_var(n, i);
  }
  return d;
}

std::vector<JetPoly> flow_jets(const PolyMatrix& a) {
  if (a.rows() != a.cols() || a.rows() != a.dim())
    throw std::invalid_argument("flow_jets: flow matrix must be N x N over N fields");
  const int n = a.dim();
  std::vector<JetPoly> jets;
  jets.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    JetPoly phi(n);
    for (int j = 0; j < n; ++j)
      phi = phi + JetPoly::from_field(a.at(i, j)) * JetPoly::x_var(n, j + 1);
    jets.push_back(std::move(phi));
  }
  return jets;
}

JetPoly evolution_derivative(const JetPoly& e, const PolyMatrix& a) {
  if (e.order() > 1) throw JetOrderError("evolution_derivative: jet order above 1");
  if (a.dim() != e.fields())
    throw std::invalid_argument("evolution_derivative: field count mismatch");
  const int n = e.fields();
  std::vector<JetPoly> phi = flow_jets(a);
  JetPoly d(n);
  for (int i = 1; i <= n; ++i) {
    d = d + e.partial_field(i) * phi[static_cast<size_t>(i - 1)];
    d = d + e.partial_x(i) * total_x_derivative(phi[static_cast<size_t>(i - 1)]);
  }
  return d;
}

}  // namespace hamflat
