#ifndef HAMFLAT_TESTS_RANDOM_VALUES_HPP
#define HAMFLAT_TESTS_RANDOM_VALUES_HPP

#include <random>

#include "hamflat/poly.hpp"

namespace hamflat::testing {

// Deterministic generator for property tests; seed fixed per suite.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(engine_);
  }

  Rational rational(long max_abs = 9, long max_den = 9) {
    return Rational(integer(-max_abs, max_abs), integer(1, max_den));
  }

  Monomial monomial(int dim, unsigned max_degree = 4) {
    Monomial m(dim);
    unsigned budget = static_cast<unsigned>(integer(0, static_cast<long>(max_degree)));
    for (unsigned d = 0; d < budget; ++d) {
      int var = static_cast<int>(integer(1, dim));
      m = m.times_var(var);
    }
    return m;
  }

  Poly poly(int dim, unsigned max_degree = 4, int max_terms = 6) {
    Poly p(dim);
    int terms = static_cast<int>(integer(0, max_terms));
    for (int t = 0; t < terms; ++t) p.add_term(monomial(dim, max_degree), rational());
    return p;
  }

  Poly nonzero_poly(int dim, unsigned max_degree = 4, int max_terms = 6) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      Poly p = poly(dim, max_degree, max_terms);
      if (!p.is_zero()) return p;
    }
    return Poly::variable(dim, 1);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hamflat::testing

#endif
