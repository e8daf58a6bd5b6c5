#include "hamflat/hierarchy.hpp"

namespace hamflat {

IntegrationFailedError::IntegrationFailedError(int step_, std::string context_,
                                               NotClosedError cause_)
    : std::runtime_error("integration failed at step " + std::to_string(step_) + " (" +
                         context_ + "): " + cause_.what()),
      step(step_), context(std::move(context_)), cause(std::move(cause_)) {}

std::vector<FlowSpec> structural_flows(const ConstantFormSpec& spec) {
  std::vector<FlowSpec> flows;
  for (auto& w : hessian_affinors(spec)) flows.push_back(FlowSpec{std::move(w)});
  return flows;
}

std::vector<JetPoly> flows_commute(const FlowSpec& a, const FlowSpec& b) {
  if (a.a.dim() != b.a.dim()) throw std::invalid_argument("flows_commute: dimension mismatch");
  const int n = a.a.dim();
  std::vector<JetPoly> jets_a = flow_jets(a.a);
  std::vector<JetPoly> jets_b = flow_jets(b.a);
  std::vector<JetPoly> residual;
  residual.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    residual.push_back(evolution_derivative(jets_b[static_cast<size_t>(i)], a.a) -
                       evolution_derivative(jets_a[static_cast<size_t>(i)], b.a));
  return residual;
}

Poly f_from_psi(const Poly& psi) {
  const int n = psi.dim();
  Poly f = -psi;
  for (int j = 1; j <= n; ++j) f += partial(psi, j) * Poly::variable(n, j);
  return f;
}

HierarchyState hierarchy_start(const ConstantFormSpec& spec) {
  const int n = spec.n;
  ConstSymMatrix eta_inv = spec.eta.inverse();
  Poly h1(n);
  Rational half(1, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational& c = eta_inv.at(i, j);
      if (c.is_zero()) continue;
      h1 += (half * c) * Poly::variable(n, i + 1) * Poly::variable(n, j + 1);
    }
  return HierarchyState{spec, std::move(eta_inv), {std::move(h1)}, {}, {}};
}

HierarchyState next_step(HierarchyState state) {
  const ConstantFormSpec& spec = state.spec;
  const int n = spec.n;
  const int step = state.steps() + 1;
  const Poly& h_s = state.densities.back();

  std::vector<PolyMatrix> hess;
  hess.reserve(static_cast<size_t>(spec.l));
  for (const auto& psi : spec.psis) hess.push_back(hessian(psi));
  std::vector<Poly> grad_h = gradient(h_s);

  // F_n^{(s)} from psi_{n,jp} eta^{jr} h_{s,r} = dF_n/du^p.
  std::vector<Poly> potentials;
  potentials.reserve(static_cast<size_t>(spec.l));
  for (int m = 0; m < spec.l; ++m) {
    std::vector<Poly> covector;
    covector.reserve(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) {
      Poly sum(n);
      for (int j = 0; j < n; ++j)
        for (int r = 0; r < n; ++r) {
          const Rational& e = spec.eta.at(j, r);
          if (!e.is_zero())
            sum += e * hess[static_cast<size_t>(m)].at(j, p) * grad_h[static_cast<size_t>(r)];
        }
      covector.push_back(std::move(sum));
    }
    try {
      potentials.push_back(integrate_gradient(covector));
    } catch (const NotClosedError& err) {
      throw IntegrationFailedError(step, "potential F_" + std::to_string(m + 1), err);
    }
  }

  // h_{s+1} from mu^{mn} psi_{m,jk} F_n^{(s)} = Hess(h_{s+1}).
  PolyMatrix hessian_next(n, n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Poly sum(n);
      for (int m = 0; m < spec.l; ++m)
        for (int nn = 0; nn < spec.l; ++nn) {
          const Rational& c = spec.mu.at(m, nn);
          if (!c.is_zero())
            sum += c * hess[static_cast<size_t>(m)].at(j, k) * potentials[static_cast<size_t>(nn)];
        }
      hessian_next.at(j, k) = std::move(sum);
    }
  Poly h_next(n);
  try {
    h_next = integrate_hessian(hessian_next);
  } catch (const NotClosedError& err) {
    throw IntegrationFailedError(step, "density h_" + std::to_string(step + 1), err);
  }

  // Local flow A^i_k = mu^{mn} eta^{ip} F_n^{(s)} psi_{m,pk}.
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

  // Bi-Hamiltonian cross-check: the same flow must equal eta * Hess(h_{s+1}).
  PolyMatrix dual = spec.eta.as_poly_matrix(n) * hessian(h_next);
  if (dual != flow)
    throw std::logic_error("next_step: flow disagrees with eta * Hess(h_{s+1})");

  state.densities.push_back(std::move(h_next));
  state.step_potentials.push_back(std::move(potentials));
  state.flows.push_back(FlowSpec{std::move(flow)});
  return state;
}

HierarchyState run_hierarchy(const ConstantFormSpec& spec, int steps) {
  if (steps < 0) throw std::invalid_argument("run_hierarchy: negative step count");
  if (!verify_constant_form(spec).pass())
    throw PreconditionError("run_hierarchy: spec is not Hamiltonian");
  HierarchyState state = hierarchy_start(spec);
  for (int s = 0; s < steps; ++s) state = next_step(std::move(state));
  return state;
}

}  // namespace hamflat
