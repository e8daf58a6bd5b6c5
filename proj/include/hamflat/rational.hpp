#ifndef HAMFLAT_RATIONAL_HPP
#define HAMFLAT_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace hamflat {

// Arbitrary-precision rational number, always kept canonical:
// gcd(|num|, den) = 1, den > 0, zero is 0/1.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // implicit, mirrors integer literals
  Rational(long num, long den);
  explicit Rational(mpq_class q);

  // Accepts "p" or "p/q" with optional leading '-'.
  static Rational from_string(const std::string& text);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class q_;  // canonicalized at every construction point
};

}  // namespace hamflat

#endif
