#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace dtc {

using Rational = mpq_class;

// Exponent vector over indexed variables; trailing zeros are trimmed so that
// equal monomials have equal representations regardless of variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents);
  static Monomial variable(std::size_t index, std::uint32_t power = 1);

  std::uint32_t exponent(std::size_t var) const { return var < exps_.size() ? exps_[var] : 0; }
  std::size_t width() const { return exps_.size(); }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return exps_.empty(); }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // Precondition: divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial without(std::size_t var) const;

  bool operator==(const Monomial& other) const = default;

 private:
  void trim();
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

// Graded lexicographic order with x0 > x1 > ...; returns <0, 0, >0.
int compare_grlex(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Rational coeff;
};

// Sparse multivariate polynomial over Q; terms strictly decreasing in grlex,
// no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Rational& c);
  Polynomial(const Rational& c, Monomial m);
  static Polynomial variable(std::size_t index);
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const;
  Rational constant_value() const;  // precondition: is_constant()
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  std::size_t width() const;  // one past the largest variable index used

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m) const;
  Polynomial partial(std::size_t var) const;

  // Exact quotient; throws if the division leaves a remainder.
  Polynomial divide_exact(const Polynomial& divisor) const;
  // Coefficient of var^k as a polynomial free of var.
  Polynomial coefficient_in(std::size_t var, std::uint32_t k) const;

  // Scaled so the leading coefficient is 1 (zero stays zero).
  Polynomial monic() const;
  // Scaled to coprime integer coefficients with positive leading coefficient.
  Polynomial integer_primitive() const;

  bool operator==(const Polynomial& o) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<Term> terms_;
};

Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace dtc
