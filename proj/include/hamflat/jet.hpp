#ifndef HAMFLAT_JET_HPP
#define HAMFLAT_JET_HPP

#include <string>
#include <vector>

#include "hamflat/calculus.hpp"
#include "hamflat/matrices.hpp"
#include "hamflat/poly.hpp"

namespace hamflat {

class JetOrderError : public std::domain_error {
 public:
  explicit JetOrderError(const std::string& what) : std::domain_error(what) {}
};

// Polynomial on the 2-jet space of N fields: variables are ordered
// u^1..u^N, u^1_x..u^N_x, u^1_xx..u^N_xx. The embedding of a field-space
// Poly is a ring homomorphism; jet order beyond 2 does not exist here.
class JetPoly {
 public:
  explicit JetPoly(int fields) : fields_(fields), poly_(3 * fields) {}

  static JetPoly from_field(const Poly& p);         // embed u-only polynomial
  static JetPoly field_var(int fields, int i);      // u^i
  static JetPoly x_var(int fields, int i);          // u^i_x
  static JetPoly xx_var(int fields, int i);         // u^i_xx

  int fields() const { return fields_; }
  const Poly& as_poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  // 0, 1 or 2: the highest derivative actually present.
  int order() const;

  JetPoly partial_field(int i) const { return wrap(partial(poly_, i)); }
  JetPoly partial_x(int i) const { return wrap(partial(poly_, fields_ + i)); }
  JetPoly partial_xx(int i) const { return wrap(partial(poly_, 2 * fields_ + i)); }

  JetPoly operator-() const { return wrap(-poly_); }
  friend JetPoly operator+(const JetPoly& a, const JetPoly& b);
  friend JetPoly operator-(const JetPoly& a, const JetPoly& b);
  friend JetPoly operator*(const JetPoly& a, const JetPoly& b);

  bool operator==(const JetPoly& o) const { return fields_ == o.fields_ && poly_ == o.poly_; }
  bool operator!=(const JetPoly& o) const { return !(*this == o); }

  std::string str() const;

 private:
  JetPoly wrap(Poly p) const;
  int fields_;
  Poly poly_;
};

// Total derivative d/dx, valid on jet order <= 1 (the result has order 2;
// anything higher is rejected rather than extended).
JetPoly total_x_derivative(const JetPoly& e);

// The jets (A u_x)^i of the hydrodynamic-type system u^i_t = A^i_j(u) u^j_x.
std::vector<JetPoly> flow_jets(const PolyMatrix& a);

// Evolutionary derivative of e (order <= 1) along u_t = A u_x: substitutes
// u^i -> (A u_x)^i and u^i_x -> d/dx (A u_x)^i through the chain rule.
JetPoly evolution_derivative(const JetPoly& e, const PolyMatrix& a);

}  // namespace hamflat

#endif
