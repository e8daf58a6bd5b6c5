#ifndef HAMFLAT_POLY_HPP
#define HAMFLAT_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "hamflat/monomial.hpp"
#include "hamflat/rational.hpp"

namespace hamflat {

// Sparse multivariate polynomial with exact rational coefficients.
// Canonical form: no stored zero coefficients, terms keyed by graded-lex
// monomial order. Equality is structural, which makes it semantic too.
class Poly {
 public:
  explicit Poly(int dim);

  static Poly constant(int dim, const Rational& c);
  static Poly variable(int dim, int var);  // u_var, 1 <= var <= dim

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  unsigned degree() const;  // 0 for the zero polynomial

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  // Accumulates c * m, dropping the term if the sum cancels.
  void add_term(const Monomial& m, const Rational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  Poly pow(unsigned e) const;

  bool operator==(const Poly& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Canonical text form; see print_canonical in the frontend for the format.
  std::string str() const;
  // Same format with caller-supplied variable names (names[0] is u1's name).
  std::string str_named(const std::vector<std::string>& names) const;

 private:
  int dim_;
  std::map<Monomial, Rational> terms_;
};

void require_same_dim(const Poly& a, const Poly& b);

}  // namespace hamflat

#endif
