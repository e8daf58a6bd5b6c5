#include "hamflat/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace hamflat {

Monomial Monomial::unit(int dim, int var) {
  Monomial m(dim);
  if (var < 1 || var > dim) throw std::out_of_range("Monomial: variable index out of range");
  m.exps_[static_cast<size_t>(var - 1)] = 1;
  return m;
}

unsigned Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial Monomial::with_exponent(int var, unsigned e) const {
  Monomial m(*this);
  m.exps_[static_cast<size_t>(var - 1)] = e;
  return m;
}

Monomial Monomial::times(const Monomial& o) const {
  if (o.dim() != dim()) throw std::invalid_argument("Monomial: dimension mismatch");
  Monomial m(*this);
  for (size_t i = 0; i < exps_.size(); ++i) m.exps_[i] += o.exps_[i];
  return m;
}

Monomial Monomial::divided_by_var(int var) const {
  Monomial m(*this);
  --m.exps_[static_cast<size_t>(var - 1)];
  return m;
}

Monomial Monomial::times_var(int var) const {
  Monomial m(*this);
  ++m.exps_[static_cast<size_t>(var - 1)];
  return m;
}

bool Monomial::operator<(const Monomial& o) const {
  unsigned da = total_degree(), db = o.total_degree();
  if (da != db) return da < db;
  // Same degree: lower variable index is more significant, higher exponent
  // on the first differing variable wins.
  for (size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != o.exps_[i]) return exps_[i] < o.exps_[i];
  return false;
}

}  // namespace hamflat
