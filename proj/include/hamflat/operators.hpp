#ifndef HAMFLAT_OPERATORS_HPP
#define HAMFLAT_OPERATORS_HPP

#include <vector>

#include "hamflat/calculus.hpp"
#include "hamflat/matrices.hpp"
#include "hamflat/verification.hpp"
#include "hamflat/wdvv.hpp"

namespace hamflat {

// Operator data in flat coordinates: constant contravariant metric eta,
// constant coupling mu, and the L Hessian potentials psi_n.
struct ConstantFormSpec {
  int n, l;
  ConstSymMatrix eta;  // size N
  ConstSymMatrix mu;   // size L
  std::vector<Poly> psis;

  ConstantFormSpec(int n_, int l_, ConstSymMatrix eta_, ConstSymMatrix mu_,
                   std::vector<Poly> psis_);
};

// Operator data in arbitrary coordinates: contravariant metric g^{ij},
// connection coefficients b^{ij}_k and affinors (w_n)^i_j. L = ws.size()
// may be zero (purely local operator).
struct GeneralFormSpec {
  int n, l;
  PolyMatrix g;
  PolyTensor3 b;  // b.at(i,j,k) = b^{ij}_k
  std::vector<PolyMatrix> ws;
  ConstSymMatrix mu;  // size L

  GeneralFormSpec(int n_, PolyMatrix g_, PolyTensor3 b_, std::vector<PolyMatrix> ws_,
                  ConstSymMatrix mu_);
};

// (w_n)^i_j = eta^{is} d2(psi_n)/du^s du^j. Each eta * w_n is symmetric.
std::vector<PolyMatrix> hessian_affinors(const ConstantFormSpec& spec);

// Symmetry of eta^{mn} psi_{a,im} psi_{b,nl} under swapping the two labels
// (the flat-coordinate Ricci equations).
VerificationReport check_ricci(const ConstantFormSpec& spec);

// Symmetry of mu^{mn} psi_{m,ij} psi_{n,kl} under j <-> k (the Gauss
// equations).
VerificationReport check_gauss(const ConstantFormSpec& spec);

// Both of the above; a pass certifies the operator Hamiltonian.
VerificationReport verify_constant_form(const ConstantFormSpec& spec);

// The seven coefficient relations for the general form, each reported
// separately: (01) g symmetry, (02) dg = b + b^T, (03) g-symmetry of b,
// (04) g-symmetry of w, (05) affinor commutativity, (06) the mixed
// derivative relation, (07) curvature = mu-bilinear affinor expression.
VerificationReport verify_general_form(const GeneralFormSpec& spec);

// R^{ijk}_r = g^{is}(db^{jk}_s/du^r - db^{jk}_r/du^s) + b^{ij}_s b^{sk}_r
// - b^{ik}_s b^{sj}_r. Requires relations (01)-(03) to hold.
PolyTensor4 curvature(const GeneralFormSpec& spec);

// Pencil compatibility: both sides of relation (07) vanish identically.
// Requires verify_general_form to pass.
VerificationReport check_pencil(const GeneralFormSpec& spec);

// Conversions used throughout the fixtures and tests.
ConstantFormSpec constant_form_from_wdvv(const WdvvProblem& prob);
GeneralFormSpec lower_to_general(const ConstantFormSpec& spec);

}  // namespace hamflat

#endif
