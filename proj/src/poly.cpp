#include "hamflat/poly.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace hamflat {

Poly::Poly(int dim) : dim_(dim) {
  if (dim < 0) throw std::invalid_argument("Poly: negative dimension");
}

Poly Poly::constant(int dim, const Rational& c) {
  Poly p(dim);
  p.add_term(Monomial(dim), c);
  return p;
}

Poly Poly::variable(int dim, int var) {
  Poly p(dim);
  p.add_term(Monomial::unit(dim, var), Rational(1));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

unsigned Poly::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const { return coefficient(Monomial(dim_)); }

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (m.dim() != dim_) throw std::invalid_argument("Poly: monomial dimension mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly p(dim_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_dim(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_dim(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_dim(a, b);
  Poly p(a.dim_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma.times(mb), ca * cb);
  return p;
}

Poly Poly::pow(unsigned e) const {
  Poly r = Poly::constant(dim_, Rational(1));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string Poly::str() const {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(dim_));
  for (int v = 1; v <= dim_; ++v) names.push_back("u" + std::to_string(v));
  return str_named(names);
}

std::string Poly::str_named(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending graded-lex: leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (first) {
      if (c.sign() < 0) os << '-';
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    Rational a = c.abs();
    if (m.is_constant()) {
      os << a.str();
      continue;
    }
    bool printed = false;
    if (!a.is_one()) {
      os << a.str();
      printed = true;
    }
    for (int v = 1; v <= dim_; ++v) {
      unsigned e = m.exponent(v);
      if (e == 0) continue;
      if (printed) os << '*';
      os << names[static_cast<size_t>(v - 1)];
      if (e > 1) os << '^' << e;
      printed = true;
    }
  }
  return os.str();
}

void require_same_dim(const Poly& a, const Poly& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("Poly: dimension mismatch");
}

}  // namespace hamflat
