#ifndef HAMFLAT_HIERARCHY_HPP
#define HAMFLAT_HIERARCHY_HPP

#include <vector>

#include "hamflat/jet.hpp"
#include "hamflat/operators.hpp"

namespace hamflat {

// A hydrodynamic-type system u^i_t = A^i_j(u) u^j_x.
struct FlowSpec {
  PolyMatrix a;
};

// Raised by the density recurrence when an integration step fails the
// closedness test. For a spec that passed verify_constant_form this cannot
// happen; it signals corrupted input and is reported, never swallowed.
class IntegrationFailedError : public std::runtime_error {
 public:
  IntegrationFailedError(int step, std::string context, NotClosedError cause);
  int step;
  std::string context;
  NotClosedError cause;
};

// Densities h_1..h_S with the per-step potentials F_n^{(s)} and flows.
// densities[0] = 1/2 eta_{ij} u^i u^j; each later entry satisfies the
// recurrence postconditions of next_step.
struct HierarchyState {
  ConstantFormSpec spec;
  ConstSymMatrix eta_inv;
  std::vector<Poly> densities;
  std::vector<std::vector<Poly>> step_potentials;  // [s][n] = F_n^{(s+1)}
  std::vector<FlowSpec> flows;                     // flow of step s+1

  int steps() const { return static_cast<int>(densities.size()) - 1; }
};

// The flows u^i_{t_n} = (w_n)^i_j u^j_x attached to the affinors.
std::vector<FlowSpec> structural_flows(const ConstantFormSpec& spec);

// Commutator residual of two flows; both commute iff every component is
// the zero jet polynomial.
std::vector<JetPoly> flows_commute(const FlowSpec& a, const FlowSpec& b);

// F = psi_{,j} u^j - psi; equals (d - 1) psi on homogeneous psi of degree d.
Poly f_from_psi(const Poly& psi);

// Seed state: h_1 = 1/2 eta_{ij} u^i u^j, no steps taken.
HierarchyState hierarchy_start(const ConstantFormSpec& spec);

// One rung of the density recurrence: integrates the F_n^{(s)} potentials,
// then the next density h_{s+1}, builds the local flow and cross-checks it
// against eta * Hess(h_{s+1}).
HierarchyState next_step(HierarchyState state);

// Runs `steps` rungs after verifying the spec is Hamiltonian.
HierarchyState run_hierarchy(const ConstantFormSpec& spec, int steps);

}  // namespace hamflat

#endif
