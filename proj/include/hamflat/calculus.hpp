#ifndef HAMFLAT_CALCULUS_HPP
#define HAMFLAT_CALCULUS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "hamflat/matrices.hpp"
#include "hamflat/poly.hpp"

namespace hamflat {

// Raised when a 1-form fails the closedness test during exact integration.
// `i`, `j` are 1-based variable indices; `residual` is d(v_i)/du^j - d(v_j)/du^i.
// `stage` is 1 for a direct integrate_gradient (and the column pass of
// integrate_hessian), 2 for the cross-column pass of integrate_hessian.
class NotClosedError : public std::runtime_error {
 public:
  NotClosedError(int i, int j, Poly residual, int stage);
  int i, j, stage;
  Poly residual;
};

class NotSymmetricError : public std::runtime_error {
 public:
  NotSymmetricError(int i, int j);
  int i, j;
};

// Exact partial derivative with respect to u^var (1-based).
Poly partial(const Poly& p, int var);

std::vector<Poly> gradient(const Poly& p);

PolyMatrix hessian(const Poly& p);

// Antiderivative of a closed 1-form v: the unique polynomial phi with
// gradient(phi) = v and phi(0) = 0. Throws NotClosedError otherwise.
Poly integrate_gradient(const std::vector<Poly>& v);

// Second antiderivative of an exact Hessian, done in two stages: columns
// to potentials a_k, symmetry check on (a_k), then a second integration.
// The result h has hessian(h) = m, h(0) = 0 and gradient(h)(0) = 0.
Poly integrate_hessian(const PolyMatrix& m);

}  // namespace hamflat

#endif
