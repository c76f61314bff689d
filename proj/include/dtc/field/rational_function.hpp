#pragma once

#include <string>
#include <vector>

#include "dtc/field/polynomial.hpp"

namespace dtc {

// Canonical quotient num/den: gcd(num, den) = 1, den has leading coefficient 1
// in grlex, and zero is 0/1. Equality is equality of canonical forms.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(long c) : num_(Rational(c)) {}  // NOLINT: implicit integer literals
  explicit RationalFunction(const Rational& c) : num_(c) {}
  explicit RationalFunction(Polynomial p) : num_(std::move(p)) {}
  // Throws DivisionByZero if den is zero.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction variable(std::size_t index) { return RationalFunction(Polynomial::variable(index)); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && is_polynomial(); }
  bool is_polynomial() const { return den_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && is_polynomial(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  // Throws DivisionByZero when o is zero.
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction inverse() const;
  RationalFunction pow(long exponent) const;

  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  struct Canonical {};
  RationalFunction(Canonical, Polynomial num, Polynomial den);

  Polynomial num_;
  Polynomial den_;  // empty encodes the denominator 1
};

}  // namespace dtc
