#include "hamflat/wdvv.hpp"

namespace hamflat {

WdvvProblem::WdvvProblem(int n_, ConstSymMatrix eta_, Poly phi_)
    : n(n_), eta(std::move(eta_)), phi(std::move(phi_)) {
  if (eta.size() != n) throw std::invalid_argument("WdvvProblem: eta size != N");
  if (phi.dim() != n) throw std::invalid_argument("WdvvProblem: phi dimension != N");
}

Poly ansatz_phi(const Poly& f) {
  if (f.dim() != 3) throw std::invalid_argument("ansatz_phi: f must have dimension 3");
  if (!partial(f, 1).is_zero()) throw std::invalid_argument("ansatz_phi: f depends on u1");
  Poly u1 = Poly::variable(3, 1), u2 = Poly::variable(3, 2), u3 = Poly::variable(3, 3);
  Rational half(1, 2);
  return half * u1 * u1 * u3 + half * u1 * u2 * u2 + f;
}

WdvvProblem ansatz_problem(const Poly& f) {
  return WdvvProblem(3, ConstSymMatrix::antidiagonal_ones(3), ansatz_phi(f));
}

PolyTensor3 third_derivatives(const Poly& phi) {
  const int n = phi.dim();
  PolyTensor3 t(n, n, n, n);
  for (int i = 0; i < n; ++i) {
    Poly di = partial(phi, i + 1);
    for (int j = i; j < n; ++j) {
      Poly dij = partial(di, j + 1);
      for (int k = j; k < n; ++k) {
        Poly dijk = partial(dij, k + 1);
        // Fully symmetric: fill all permutations of (i, j, k).
        t.at(i, j, k) = dijk;
        t.at(i, k, j) = dijk;
        t.at(j, i, k) = dijk;
        t.at(j, k, i) = dijk;
        t.at(k, i, j) = dijk;
        t.at(k, j, i) = std::move(dijk);
      }
    }
  }
  return t;
}

PolyTensor4 wdvv_residual(const WdvvProblem& prob) {
  const int n = prob.n;
  PolyTensor3 d3 = third_derivatives(prob.phi);
  PolyTensor4 res(n, n, n, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Poly sum(n);
          for (int m = 0; m < n; ++m)
            for (int s = 0; s < n; ++s) {
              const Rational& e = prob.eta.at(m, s);
              if (e.is_zero()) continue;
              sum += e * (d3.at(i, j, m) * d3.at(s, k, l) - d3.at(i, k, m) * d3.at(s, j, l));
            }
          res.at(i, j, k, l) = std::move(sum);
        }
  return res;
}

StructureConstants structure_constants(const WdvvProblem& prob) {
  const int n = prob.n;
  PolyTensor3 d3 = third_derivatives(prob.phi);
  PolyTensor3 c(n, n, n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Poly sum(n);
        for (int s = 0; s < n; ++s) {
          const Rational& e = prob.eta.at(k, s);
          if (!e.is_zero()) sum += e * d3.at(s, i, j);
        }
        c.at(k, i, j) = std::move(sum);
      }
  return StructureConstants{n, std::move(c)};
}

PolyTensor4 associativity_residual(const StructureConstants& sc) {
  const int n = sc.n;
  PolyTensor4 res(n, n, n, n, sc.c.dim());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Poly sum(sc.c.dim());
          for (int s = 0; s < n; ++s)
            sum += sc.c.at(s, i, j) * sc.c.at(l, s, k) - sc.c.at(s, j, k) * sc.c.at(l, i, s);
          res.at(i, j, k, l) = std::move(sum);
        }
  return res;
}

Poly dubrovin_residual(const Poly& f) {
  if (f.dim() != 3) throw std::invalid_argument("dubrovin_residual: f must have dimension 3");
  if (!partial(f, 1).is_zero())
    throw std::invalid_argument("dubrovin_residual: f depends on u1");
  Poly f22 = partial(partial(f, 2), 2);
  Poly f23 = partial(partial(f, 2), 3);
  Poly f222 = partial(f22, 2);
  Poly f223 = partial(f22, 3);
  Poly f233 = partial(f23, 3);
  Poly f333 = partial(partial(partial(f, 3), 3), 3);
  return f333 - f223 * f223 + f222 * f233;
}

VerificationReport abc_flow_check(const Poly& f) {
  if (!dubrovin_residual(f).is_zero())
    throw PreconditionError("abc_flow_check: f does not satisfy the scalar reduction");
  Poly a = partial(partial(partial(f, 2), 2), 2);
  Poly b = partial(partial(partial(f, 2), 2), 3);
  Poly c = partial(partial(partial(f, 2), 3), 3);

  auto d2 = [](const Poly& p) { return partial(p, 2); };
  auto d3 = [](const Poly& p) { return partial(p, 3); };
  Rational two(2);

  VerificationReport report;
  CheckResult r1{"abc-row-1", true, {}};
  Poly res1 = d3(a) - d2(b);
  if (!res1.is_zero()) r1.record({1}, res1);
  CheckResult r2{"abc-row-2", true, {}};
  Poly res2 = d3(b) - d2(c);
  if (!res2.is_zero()) r2.record({2}, res2);
  CheckResult r3{"abc-row-3", true, {}};
  Poly res3 = d3(c) - (-c * d2(a) + two * b * d2(b) - a * d2(c));
  if (!res3.is_zero()) r3.record({3}, res3);
  report.checks = {std::move(r1), std::move(r2), std::move(r3)};
  return report;
}

std::vector<PolyMatrix> affinors_from_phi(const WdvvProblem& prob) {
  const int n = prob.n;
  PolyTensor3 d3 = third_derivatives(prob.phi);
  std::vector<PolyMatrix> ws;
  ws.reserve(static_cast<size_t>(n));
  for (int m = 0; m < n; ++m) {
    PolyMatrix w(n, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Poly sum(n);
        for (int s = 0; s < n; ++s) {
          const Rational& e = prob.eta.at(i, s);
          if (!e.is_zero()) sum += e * d3.at(s, m, j);
        }
        w.at(i, j) = std::move(sum);
      }
    ws.push_back(std::move(w));
  }
  return ws;
}

}  // namespace hamflat
