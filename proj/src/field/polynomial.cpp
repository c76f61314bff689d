#include "dtc/field/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "dtc/errors.hpp"

namespace dtc {

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {
  trim();
}

Monomial Monomial::variable(std::size_t index, std::uint32_t power) {
  std::vector<std::uint32_t> e(index + 1, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<std::uint32_t> e(std::max(exps_.size(), other.exps_.size()), 0);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exponent(i) + other.exponent(i);
  Monomial m;
  m.exps_ = std::move(e);
  m.degree_ = degree_ + other.degree_;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (exps_.size() > other.exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  std::vector<std::uint32_t> e(other.exps_);
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] -= exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::without(std::size_t var) const {
  if (var >= exps_.size()) return *this;
  std::vector<std::uint32_t> e(exps_);
  e[var] = 0;
  return Monomial(std::move(e));
}

int compare_grlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  const std::size_t w = std::max(a.width(), b.width());
  for (std::size_t i = 0; i < w; ++i) {
    const auto ea = a.exponent(i);
    const auto eb = b.exponent(i);
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  return 0;
}

namespace {

bool term_before(const Term& a, const Term& b) { return compare_grlex(a.mono, b.mono) > 0; }

// Sorts, merges equal monomials and drops zeros.
std::vector<Term> canonical_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

Polynomial::Polynomial(const Rational& c, Monomial m) {
  if (c != 0) terms_.push_back({std::move(m), c});
}

Polynomial Polynomial::variable(std::size_t index) { return Polynomial(Rational(1), Monomial::variable(index)); }

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = canonical_terms(std::move(terms));
  return p;
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

Rational Polynomial::constant_value() const { return terms_.empty() ? Rational(0) : terms_[0].coeff; }

std::uint32_t Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_[0].mono.degree(); }

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(var));
  return d;
}

std::size_t Polynomial::width() const {
  std::size_t w = 0;
  for (const auto& t : terms_) w = std::max(w, t.mono.width());
  return w;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  Polynomial r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c;
    if (i == terms_.size()) {
      c = -1;
    } else if (j == o.terms_.size()) {
      c = 1;
    } else {
      c = compare_grlex(terms_[i].mono, o.terms_[j].mono);
    }
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.is_constant()) return scaled(o.terms_[0].coeff);
  if (is_constant()) return o.scaled(terms_[0].coeff);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
  }
  return from_terms(std::move(prod));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return {};
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

Polynomial Polynomial::partial(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const auto e = t.mono.exponent(var);
    if (e == 0) continue;
    std::vector<std::uint32_t> exps(t.mono.width());
    for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = t.mono.exponent(i);
    exps[var] -= 1;
    out.push_back({Monomial(std::move(exps)), t.coeff * e});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  if (divisor.is_constant()) return scaled(1 / divisor.terms_[0].coeff);
  Polynomial rem(*this);
  std::vector<Term> quot;
  const Term& lead = divisor.leading();
  while (!rem.is_zero()) {
    const Term& lt = rem.leading();
    if (!lead.mono.divides(lt.mono)) throw Error("inexact polynomial division");
    Term q{lead.mono.quotient_of(lt.mono), lt.coeff / lead.coeff};
    rem = rem - divisor.times_monomial(q.mono).scaled(q.coeff);
    quot.push_back(std::move(q));
  }
  return from_terms(std::move(quot));
}

Polynomial Polynomial::coefficient_in(std::size_t var, std::uint32_t k) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono.exponent(var) == k) out.push_back({t.mono.without(var), t.coeff});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero() || terms_[0].coeff == 1) return *this;
  return scaled(1 / terms_[0].coeff);
}

Polynomial Polynomial::integer_primitive() const {
  if (is_zero()) return *this;
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (terms_[0].coeff < 0) factor = -factor;
  return scaled(factor);
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff != o.terms_[i].coeff || !(terms_[i].mono == o.terms_[i].mono)) return false;
  }
  return true;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(t.coeff);
    std::string mono;
    for (std::size_t v = 0; v < t.mono.width(); ++v) {
      const auto e = t.mono.exponent(v);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += v < names.size() ? names[v] : "v" + std::to_string(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

namespace {

std::size_t first_variable(const Polynomial& a, const Polynomial& b) {
  std::size_t best = SIZE_MAX;
  for (const Polynomial* p : {&a, &b}) {
    for (const auto& t : p->terms()) {
      for (std::size_t v = 0; v < t.mono.width() && v < best; ++v) {
        if (t.mono.exponent(v) != 0) {
          best = v;
          break;
        }
      }
    }
  }
  return best;
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g;
  const auto deg = p.degree_in(var);
  for (std::uint32_t k = 0; k <= deg; ++k) {
    Polynomial c = p.coefficient_in(var, k);
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Polynomial primitive_in(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return p;
  return p.divide_exact(content_in(p, var)).integer_primitive();
}

Polynomial leading_in(const Polynomial& p, std::size_t var) { return p.coefficient_in(var, p.degree_in(var)); }

// Pseudo-remainder of a by b viewed as univariate polynomials in var.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  const auto db = b.degree_in(var);
  const Polynomial lb = leading_in(b, var);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const auto shift = a.degree_in(var) - db;
    const Polynomial la = leading_in(a, var);
    a = (lb * a - la * b.times_monomial(Monomial::variable(var, shift))).integer_primitive();
  }
  return a;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(Rational(1));
  if (a == b) return a.monic();
  const std::size_t var = first_variable(a, b);
  if (a.degree_in(var) == 0) return gcd(a, content_in(b, var));
  if (b.degree_in(var) == 0) return gcd(content_in(a, var), b);
  const Polynomial content = gcd(content_in(a, var), content_in(b, var));
  Polynomial p = primitive_in(a, var);
  Polynomial q = primitive_in(b, var);
  if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
  while (!q.is_zero()) {
    Polynomial r = primitive_in(pseudo_remainder(p, q, var), var);
    p = std::move(q);
    q = std::move(r);
  }
  return (content * primitive_in(p, var)).monic();
}

}  // namespace dtc
