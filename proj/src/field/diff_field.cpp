#include "dtc/field/diff_field.hpp"

#include <cctype>

#include "dtc/errors.hpp"

namespace dtc {

std::shared_ptr<const DiffField> DiffField::create(std::vector<std::string> variables,
                                                   std::vector<DerivationSpec> derivations,
                                                   const std::string& principal,
                                                   const std::optional<std::string>& parameter) {
  std::shared_ptr<DiffField> f(new DiffField());
  for (std::size_t i = 0; i < variables.size(); ++i) {
    const auto& v = variables[i];
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_')) {
      throw Error("invalid variable name '" + v + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (variables[j] == v) throw Error("duplicate variable '" + v + "'");
    }
  }
  for (const auto& d : derivations) {
    if (d.on_generators.size() != variables.size()) {
      throw Error("derivation '" + d.name + "' must give a value for every generator");
    }
    for (const auto& value : d.on_generators) {
      if (value.numerator().width() > variables.size() || value.denominator().width() > variables.size()) {
        throw Error("derivation '" + d.name + "' uses an undeclared variable");
      }
    }
  }
  f->variables_ = std::move(variables);
  f->derivations_ = std::move(derivations);
  f->principal_ = f->derivation_index(principal);
  if (parameter) {
    f->parameter_ = f->derivation_index(*parameter);
    if (*f->parameter_ == f->principal_) throw Error("principal and parameter derivations must differ");
  }
  for (std::size_t a = 0; a < f->derivations_.size(); ++a) {
    for (std::size_t b = a + 1; b < f->derivations_.size(); ++b) {
      for (std::size_t v = 0; v < f->variables_.size(); ++v) {
        const auto ab = f->derive(f->derivations_[b].on_generators[v], a);
        const auto ba = f->derive(f->derivations_[a].on_generators[v], b);
        if (!(ab == ba)) {
          throw Error("derivations '" + f->derivations_[a].name + "' and '" + f->derivations_[b].name +
                      "' do not commute on '" + f->variables_[v] + "'");
        }
      }
    }
  }
  return f;
}

std::shared_ptr<const DiffField> DiffField::standard_xt() {
  return create({"x", "t"}, {{"dx", {RationalFunction(1), RationalFunction(0)}}, {"dt", {RationalFunction(0), RationalFunction(1)}}},
                "dx", std::string("dt"));
}

std::size_t DiffField::parameter() const {
  if (!parameter_) throw Error("field has no parameter derivation");
  return *parameter_;
}

std::size_t DiffField::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  throw UnknownName("unknown variable '" + std::string(name) + "'");
}

std::size_t DiffField::derivation_index(std::string_view name) const {
  for (std::size_t i = 0; i < derivations_.size(); ++i) {
    if (derivations_[i].name == name) return i;
  }
  throw UnknownName("unknown derivation '" + std::string(name) + "'");
}

RationalFunction DiffField::variable(std::string_view name) const {
  return RationalFunction::variable(variable_index(name));
}

RationalFunction DiffField::derive(const Polynomial& p, std::size_t derivation) const {
  const auto& values = derivations_.at(derivation).on_generators;
  RationalFunction out;
  const std::size_t w = p.width();
  for (std::size_t v = 0; v < w; ++v) {
    if (values[v].is_zero()) continue;
    const Polynomial dp = p.partial(v);
    if (dp.is_zero()) continue;
    out += RationalFunction(dp) * values[v];
  }
  return out;
}

RationalFunction DiffField::derive(const RationalFunction& a, std::size_t derivation) const {
  const RationalFunction dn = derive(a.numerator(), derivation);
  if (a.is_polynomial()) return dn;
  const RationalFunction dd = derive(a.denominator(), derivation);
  const RationalFunction den(a.denominator());
  return (dn * den - RationalFunction(a.numerator()) * dd) / (den * den);
}

RationalFunction DiffField::derive(const RationalFunction& a, std::string_view derivation) const {
  return derive(a, derivation_index(derivation));
}

namespace {

class Parser {
 public:
  Parser(const DiffField& field, std::string_view text) : field_(field), text_(text) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("parse error at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\": " + msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    while (true) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        const RationalFunction d = unary();
        if (d.is_zero()) throw DivisionByZero("division by zero in \"" + std::string(text_) + "\"");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (!accept('^')) return base;
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    skip_space();
    const mpz_class e = integer();
    if (!e.fits_slong_p()) fail("exponent too large");
    const long k = e.get_si();
    if (negative && base.is_zero()) throw DivisionByZero("zero raised to a negative power");
    return base.pow(negative ? -k : k);
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  RationalFunction atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RationalFunction(Rational(integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return field_.variable(text_.substr(start, pos_ - start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const DiffField& field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction DiffField::parse(std::string_view text) const { return Parser(*this, text).parse(); }

}  // namespace dtc
