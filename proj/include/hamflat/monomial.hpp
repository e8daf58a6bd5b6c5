#ifndef HAMFLAT_MONOMIAL_HPP
#define HAMFLAT_MONOMIAL_HPP

#include <cstdint>
#include <vector>

namespace hamflat {

// Exponent vector over a fixed set of variables. Variable indices are
// 1-based throughout the public API (variable i is printed as "u<i>").
// Ordering is graded lexicographic: total degree first, then lexicographic
// with lower variable index more significant.
class Monomial {
 public:
  explicit Monomial(int dim) : exps_(static_cast<size_t>(dim), 0) {}

  static Monomial unit(int dim, int var);  // u_var

  int dim() const { return static_cast<int>(exps_.size()); }
  unsigned exponent(int var) const { return exps_[static_cast<size_t>(var - 1)]; }
  unsigned total_degree() const;
  bool is_constant() const { return total_degree() == 0; }

  Monomial with_exponent(int var, unsigned e) const;
  Monomial times(const Monomial& o) const;
  // Lowers the exponent of `var` by one; caller guarantees it is positive.
  Monomial divided_by_var(int var) const;
  Monomial times_var(int var) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }
  bool operator<(const Monomial& o) const;  // graded lex

 private:
  std::vector<uint32_t> exps_;
};

}  // namespace hamflat

#endif
