#include "hamflat/locality.hpp"

namespace hamflat {

PolyTensor3 locality_residual(const ConstantFormSpec& spec, const Functional& h) {
  const int n = spec.n;
  if (h.density.dim() != n)
    throw std::invalid_argument("locality_residual: density dimension != N");
  PolyMatrix eta = spec.eta.as_poly_matrix(n);
  PolyMatrix hess_h = hessian(h.density);
  PolyTensor3 res(spec.l, n, n, n);
  for (int m = 0; m < spec.l; ++m) {
    // C = Hess(psi_m) * eta * Hess(h); the residual is C - C^T.
    PolyMatrix c = hessian(spec.psis[static_cast<size_t>(m)]) * eta * hess_h;
    PolyMatrix anti = c - c.transpose();
    for (int s = 0; s < n; ++s)
      for (int p = 0; p < n; ++p) res.at(m, s, p) = anti.at(s, p);
  }
  return res;
}

LocalizedSystem localize(const ConstantFormSpec& spec, const Functional& h) {
  const int n = spec.n;
  if (!locality_residual(spec, h).is_zero())
    throw PreconditionError("localize: Hamiltonian system is not local");
  if (!verify_constant_form(spec).pass())
    throw PreconditionError("localize: spec is not Hamiltonian");

  std::vector<PolyMatrix> hess;
  hess.reserve(static_cast<size_t>(spec.l));
  for (const auto& psi : spec.psis) hess.push_back(hessian(psi));
  std::vector<Poly> grad_h = gradient(h.density);

  std::vector<Poly> potentials;
  potentials.reserve(static_cast<size_t>(spec.l));
  for (int m = 0; m < spec.l; ++m) {
    std::vector<Poly> covector;
    covector.reserve(static_cast<size_t>(n));
    for (int s = 0; s < n; ++s) {
      Poly sum(n);
      for (int j = 0; j < n; ++j)
        for (int r = 0; r < n; ++r) {
          const Rational& e = spec.eta.at(j, r);
          if (!e.is_zero())
            sum += e * hess[static_cast<size_t>(m)].at(j, s) * grad_h[static_cast<size_t>(r)];
        }
      covector.push_back(std::move(sum));
    }
    potentials.push_back(integrate_gradient(covector));
  }

  PolyMatrix hess_f(n, n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Poly sum(n);
      for (int m = 0; m < spec.l; ++m)
        for (int nn = 0; nn < spec.l; ++nn) {
          const Rational& c = spec.mu.at(m, nn);
          if (!c.is_zero())
            sum += c * hess[static_cast<size_t>(m)].at(j, k) * potentials[static_cast<size_t>(nn)];
        }
      hess_f.at(j, k) = std::move(sum);
    }
  Poly f = integrate_hessian(hess_f);

  PolyMatrix flow(n, n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Poly sum(n);
      for (int m = 0; m < spec.l; ++m)
        for (int nn = 0; nn < spec.l; ++nn) {
          const Rational& c = spec.mu.at(m, nn);
          if (c.is_zero()) continue;
          for (int p = 0; p < n; ++p) {
            const Rational& e = spec.eta.at(i, p);
            if (!e.is_zero())
              sum += (c * e) * potentials[static_cast<size_t>(nn)] *
                     hess[static_cast<size_t>(m)].at(p, k);
          }
        }
      flow.at(i, k) = std::move(sum);
    }

  PolyMatrix dual = spec.eta.as_poly_matrix(n) * hessian(f);
  if (dual != flow) throw std::logic_error("localize: flow disagrees with eta * Hess(f)");
  return LocalizedSystem{std::move(potentials), std::move(f), FlowSpec{std::move(flow)}};
}

PolyMatrix involution_residual(const Poly& psi_a, const Poly& psi_b, const ConstSymMatrix& eta) {
  require_same_dim(psi_a, psi_b);
  const int n = psi_a.dim();
  if (eta.size() != n) throw std::invalid_argument("involution_residual: eta size mismatch");

  // v_k = psi_{a,i} eta^{ij} psi_{b,jk}; residual(l,k) = d_l v_k - d_k v_l.
  std::vector<Poly> grad_a = gradient(psi_a);
  PolyMatrix hess_b = hessian(psi_b);
  std::vector<Poly> v;
  v.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    Poly sum(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Rational& e = eta.at(i, j);
        if (!e.is_zero()) sum += e * grad_a[static_cast<size_t>(i)] * hess_b.at(j, k);
      }
    v.push_back(std::move(sum));
  }
  PolyMatrix res(n, n, n);
  for (int l = 0; l < n; ++l)
    for (int k = 0; k < n; ++k)
      res.at(l, k) = partial(v[static_cast<size_t>(k)], l + 1) -
                     partial(v[static_cast<size_t>(l)], k + 1);
  return res;
}

VerificationReport wdvv_involution_check(const WdvvProblem& prob) {
  const int n = prob.n;
  std::vector<Poly> psis = gradient(prob.phi);

  CheckResult result{"involution", true, {}};
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      PolyMatrix res = involution_residual(psis[static_cast<size_t>(a)],
                                           psis[static_cast<size_t>(b)], prob.eta);
      for (int l = 0; l < n; ++l)
        for (int k = 0; k < n; ++k)
          if (!res.at(l, k).is_zero()) result.record({a + 1, b + 1, l + 1, k + 1}, res.at(l, k));
    }

  if (result.pass != wdvv_residual(prob).is_zero())
    throw std::logic_error("wdvv_involution_check: disagreement with the associativity residual");

  VerificationReport report;
  report.checks.push_back(std::move(result));
  return report;
}

}  // namespace hamflat
