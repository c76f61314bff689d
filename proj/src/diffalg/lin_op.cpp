#include "dtc/diffalg/lin_op.hpp"

#include "dtc/errors.hpp"

namespace dtc {

LinOp::LinOp(FieldPtr field, std::size_t derivation, std::vector<RationalFunction> coeffs)
    : field_(std::move(field)), derivation_(derivation), coeffs_(std::move(coeffs)) {
  if (!field_) throw Error("operator requires a field");
  if (derivation_ >= field_->derivation_count()) throw UnknownName("derivation index out of range");
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

LinOp LinOp::derivation_op(FieldPtr field, std::size_t derivation) {
  return LinOp(std::move(field), derivation, {RationalFunction(0), RationalFunction(1)});
}

LinOp LinOp::scalar(FieldPtr field, std::size_t derivation, RationalFunction a) {
  return LinOp(std::move(field), derivation, {std::move(a)});
}

std::optional<std::size_t> LinOp::order() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

void LinOp::require_compatible(const LinOp& o) const {
  if (field_ != o.field_) throw FieldMismatch();
  if (derivation_ != o.derivation_) throw Error("operators use different derivations");
}

LinOp LinOp::operator+(const LinOp& o) const {
  require_compatible(o);
  std::vector<RationalFunction> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < coeffs_.size()) c[i] += coeffs_[i];
    if (i < o.coeffs_.size()) c[i] += o.coeffs_[i];
  }
  return LinOp(field_, derivation_, std::move(c));
}

LinOp LinOp::left_derive() const {
  std::vector<RationalFunction> c(coeffs_.size() + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    c[k + 1] += coeffs_[k];
    c[k] += field_->derive(coeffs_[k], derivation_);
  }
  return LinOp(field_, derivation_, std::move(c));
}

LinOp LinOp::operator*(const LinOp& o) const {
  require_compatible(o);
  LinOp result(field_, derivation_);
  LinOp power = o;  // d^i * o
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) power = power.left_derive();
    if (coeffs_[i].is_zero()) continue;
    std::vector<RationalFunction> scaled;
    scaled.reserve(power.coeffs_.size());
    for (const auto& c : power.coeffs_) scaled.push_back(coeffs_[i] * c);
    result = result + LinOp(field_, derivation_, std::move(scaled));
  }
  return result;
}

RationalFunction LinOp::apply(const RationalFunction& a) const {
  RationalFunction out;
  RationalFunction current = a;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) current = field_->derive(current, derivation_);
    if (!coeffs_[i].is_zero()) out += coeffs_[i] * current;
  }
  return out;
}

LinOp LinOp::truncate(std::size_t p) const {
  if (coeffs_.size() <= p + 1) return *this;
  return LinOp(field_, derivation_, std::vector<RationalFunction>(coeffs_.begin(), coeffs_.begin() + p + 1));
}

bool LinOp::operator==(const LinOp& o) const {
  return field_ == o.field_ && derivation_ == o.derivation_ && coeffs_ == o.coeffs_;
}

std::string LinOp::to_string() const {
  if (coeffs_.empty()) return "0";
  const std::string& d = field_->derivation(derivation_).name;
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string c = "(" + field_->print(coeffs_[i]) + ")";
    if (i == 0) {
      out += c;
    } else {
      out += c + "*" + d + (i > 1 ? "^" + std::to_string(i) : "");
    }
  }
  return out;
}

}  // namespace dtc
