#include "dtc/field/rational_function.hpp"

#include "dtc/errors.hpp"

namespace dtc {

namespace {

const Polynomial& unit_polynomial() {
  static const Polynomial one(Rational(1));
  return one;
}

}  // namespace

RationalFunction::RationalFunction(Canonical, Polynomial num, Polynomial den) : num_(std::move(num)) {
  if (!den.is_one() && !num_.is_zero()) den_ = std::move(den);
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return;
  if (!den.is_constant()) {
    const Polynomial g = gcd(num, den);
    if (!g.is_one()) {
      num = num.divide_exact(g);
      den = den.divide_exact(g);
    }
  }
  const Rational lc = den.leading().coeff;
  if (lc != 1) {
    num = num.scaled(1 / lc);
    den = den.scaled(1 / lc);
  }
  num_ = std::move(num);
  if (!den.is_one()) den_ = std::move(den);
}

const Polynomial& RationalFunction::denominator() const { return den_.is_zero() ? unit_polynomial() : den_; }

RationalFunction RationalFunction::operator-() const { return {Canonical{}, -num_, den_}; }

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (is_polynomial() && o.is_polynomial()) return RationalFunction(num_ + o.num_);
  if (den_ == o.den_) return {num_ + o.num_, den_};
  const Polynomial& d1 = denominator();
  const Polynomial& d2 = o.denominator();
  const Polynomial g = gcd(d1, d2);
  const Polynomial a = d2.divide_exact(g);
  const Polynomial b = d1.divide_exact(g);
  return {num_ * a + o.num_ * b, d1 * a};
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (is_polynomial() && o.is_polynomial()) return RationalFunction(num_ * o.num_);
  const Polynomial g1 = gcd(num_, o.denominator());
  const Polynomial g2 = gcd(o.num_, denominator());
  Polynomial num = num_.divide_exact(g1) * o.num_.divide_exact(g2);
  Polynomial den = denominator().divide_exact(g2) * o.denominator().divide_exact(g1);
  const Rational lc = den.leading().coeff;
  if (lc != 1) {
    num = num.scaled(1 / lc);
    den = den.scaled(1 / lc);
  }
  return {Canonical{}, std::move(num), std::move(den)};
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const Rational lc = num_.leading().coeff;
  return {Canonical{}, denominator().scaled(1 / lc), num_.scaled(1 / lc)};
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const { return *this * o.inverse(); }

RationalFunction RationalFunction::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  RationalFunction result(1);
  RationalFunction base(*this);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string RationalFunction::to_string(const std::vector<std::string>& names) const {
  if (is_polynomial()) return num_.to_string(names);
  const std::string num = num_.terms().size() == 1 ? num_.to_string(names) : "(" + num_.to_string(names) + ")";
  const auto& lead = den_.leading().mono;
  const bool bare_power = den_.terms().size() == 1 && lead.degree() == lead.exponent(lead.width() - 1);
  const std::string den = bare_power ? den_.to_string(names) : "(" + den_.to_string(names) + ")";
  return num + "/" + den;
}

}  // namespace dtc
