#ifndef HAMFLAT_WDVV_HPP
#define HAMFLAT_WDVV_HPP

#include <vector>

#include "hamflat/calculus.hpp"
#include "hamflat/matrices.hpp"
#include "hamflat/verification.hpp"

namespace hamflat {

// An associativity problem: potential Phi over u^1..u^N together with the
// contravariant constant metric eta^{ij}.
struct WdvvProblem {
  int n;
  ConstSymMatrix eta;
  Poly phi;

  WdvvProblem(int n_, ConstSymMatrix eta_, Poly phi_);
};

// Structure constants c^k_{ij} of the algebra e_i * e_j = c^k_{ij} e_k,
// c^k_{ij} = eta^{ks} Phi_{sij}; symmetric in the lower pair.
struct StructureConstants {
  int n;
  PolyTensor3 c;  // indexed (k, i, j), 0-based
};

// Antidiagonal-metric three-field ansatz: Phi = 1/2 (u1)^2 u3
// + 1/2 u1 (u2)^2 + f(u2, u3). f must not depend on u1.
Poly ansatz_phi(const Poly& f);
WdvvProblem ansatz_problem(const Poly& f);

// Third-derivative tensor Phi_{ijk} (0-based indices).
PolyTensor3 third_derivatives(const Poly& phi);

// Associativity residual (LHS - RHS) per index tuple; Phi is a solution iff
// every entry vanishes.
PolyTensor4 wdvv_residual(const WdvvProblem& prob);

StructureConstants structure_constants(const WdvvProblem& prob);

// (e_i * e_j) * e_k - e_i * (e_j * e_k), expanded in the basis (index l).
PolyTensor4 associativity_residual(const StructureConstants& sc);

// Scalar reduction for the three-field ansatz:
// f_333 - (f_223)^2 + f_222 * f_233. f must be free of u1.
Poly dubrovin_residual(const Poly& f);

// Checks that a = f_222, b = f_223, c = f_233 satisfy the quasilinear
// system (a,b,c)_{u3} = [[0,1,0],[0,0,1],[-c,2b,-a]] (a,b,c)_{u2}.
// Requires dubrovin_residual(f) = 0.
VerificationReport abc_flow_check(const Poly& f);

// Affinors (w_n)^i_j = eta^{is} Phi_{snj}; w_1 is the identity for the
// three-field ansatz.
std::vector<PolyMatrix> affinors_from_phi(const WdvvProblem& prob);

}  // namespace hamflat

#endif
