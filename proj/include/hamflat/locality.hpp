#ifndef HAMFLAT_LOCALITY_HPP
#define HAMFLAT_LOCALITY_HPP

#include "hamflat/hierarchy.hpp"
#include "hamflat/operators.hpp"
#include "hamflat/wdvv.hpp"

namespace hamflat {

// H = integral of h(u(x)) dx, a Hamiltonian of hydrodynamic type.
struct Functional {
  Poly density;
};

struct LocalizedSystem {
  std::vector<Poly> potentials;  // P_1..P_L
  Poly f;                        // second Hamiltonian density
  FlowSpec flow;
};

// psi_{n,js} eta^{jr} h_{,rp} - psi_{n,jp} eta^{jr} h_{,rs}, indexed
// (n, s, p); zero iff the Hamiltonian system for h is local.
PolyTensor3 locality_residual(const ConstantFormSpec& spec, const Functional& h);

// Constructs P_n, the density f and the local flow; requires the locality
// residual to vanish and the spec to be Hamiltonian. The flow always equals
// eta * Hess(f) exactly.
LocalizedSystem localize(const ConstantFormSpec& spec, const Functional& h);

// d_l(psi_{a,i} eta^{ij} psi_{b,jk}) - d_k(psi_{a,i} eta^{ij} psi_{b,jl}),
// indexed (l, k); zero iff the integrals of psi_a and psi_b are in
// involution under the constant bracket.
PolyMatrix involution_residual(const Poly& psi_a, const Poly& psi_b, const ConstSymMatrix& eta);

// Pairwise involution of the integrals of psi_n = dPhi/du^n. Agrees with
// the zero test of wdvv_residual; the agreement itself is asserted.
VerificationReport wdvv_involution_check(const WdvvProblem& prob);

}  // namespace hamflat

#endif
