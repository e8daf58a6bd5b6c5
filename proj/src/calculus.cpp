#include "hamflat/calculus.hpp"

namespace hamflat {

NotClosedError::NotClosedError(int i_, int j_, Poly residual_, int stage_)
    : std::runtime_error("1-form not closed at index pair (" + std::to_string(i_) + "," +
                         std::to_string(j_) + "), stage " + std::to_string(stage_) +
                         ", residual " + residual_.str()),
      i(i_), j(j_), stage(stage_), residual(std::move(residual_)) {}

NotSymmetricError::NotSymmetricError(int i_, int j_)
    : std::runtime_error("matrix not symmetric at entry (" + std::to_string(i_) + "," +
                         std::to_string(j_) + ")"),
      i(i_), j(j_) {}

Poly partial(const Poly& p, int var) {
  if (var < 1 || var > p.dim()) throw std::out_of_range("partial: variable index out of range");
  Poly d(p.dim());
  for (const auto& [m, c] : p.terms()) {
    unsigned e = m.exponent(var);
    if (e == 0) continue;
    d.add_term(m.divided_by_var(var), c * Rational(static_cast<long>(e)));
  }
  return d;
}

std::vector<Poly> gradient(const Poly& p) {
  std::vector<Poly> g;
  g.reserve(static_cast<size_t>(p.dim()));
  for (int i = 1; i <= p.dim(); ++i) g.push_back(partial(p, i));
  return g;
}

PolyMatrix hessian(const Poly& p) {
  const int n = p.dim();
  PolyMatrix h(n, n, n);
  for (int i = 0; i < n; ++i) {
    Poly di = partial(p, i + 1);
    for (int j = i; j < n; ++j) {
      h.at(i, j) = partial(di, j + 1);
      if (j != i) h.at(j, i) = h.at(i, j);
    }
  }
  return h;
}

static void check_closed(const std::vector<Poly>& v, int stage) {
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Poly residual = partial(v[static_cast<size_t>(i)], j + 1) -
                      partial(v[static_cast<size_t>(j)], i + 1);
      if (!residual.is_zero()) throw NotClosedError(i + 1, j + 1, std::move(residual), stage);
    }
}

Poly integrate_gradient(const std::vector<Poly>& v) {
  if (v.empty()) throw std::invalid_argument("integrate_gradient: empty vector");
  const int n = v.front().dim();
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("integrate_gradient: component count != dimension");
  for (const auto& p : v) require_same_dim(p, v.front());
  check_closed(v, 1);

  // Radial homotopy: phi(u) = sum_i integral_0^1 u^i v_i(t u) dt, which for a
  // monomial m of v_i contributes coeff/(deg m + 1) * u^i * m.
  Poly phi(n);
  for (int i = 0; i < n; ++i)
    for (const auto& [m, c] : v[static_cast<size_t>(i)].terms())
      phi.add_term(m.times_var(i + 1), c / Rational(static_cast<long>(m.total_degree()) + 1));
  return phi;
}

Poly integrate_hessian(const PolyMatrix& m) {
  const int n = m.dim();
  if (m.rows() != n || m.cols() != n)
    throw std::invalid_argument("integrate_hessian: matrix must be square of size dim");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m.at(i, j) != m.at(j, i)) throw NotSymmetricError(i + 1, j + 1);

  // Stage 1: integrate each column to a potential a_k.
  std::vector<Poly> a;
  a.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    std::vector<Poly> column;
    column.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) column.push_back(m.at(j, k));
    a.push_back(integrate_gradient(column));
  }
  // Stage 2: the a_k must themselves form a closed 1-form.
  check_closed(a, 2);
  return integrate_gradient(a);
}

}  // namespace hamflat
