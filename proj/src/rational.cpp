#include "hamflat/rational.hpp"

#include <ostream>

namespace hamflat {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
  if (q_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
  q_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
  q.canonicalize();
  return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hamflat
