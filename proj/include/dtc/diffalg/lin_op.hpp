#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dtc/field/diff_field.hpp"

namespace dtc {

// Element of K[d] stored with left coefficients: sum_i coeffs[i] * d^i.
// Trailing zero coefficients are trimmed.
class LinOp {
 public:
  LinOp(FieldPtr field, std::size_t derivation, std::vector<RationalFunction> coeffs = {});
  static LinOp derivation_op(FieldPtr field, std::size_t derivation);
  static LinOp scalar(FieldPtr field, std::size_t derivation, RationalFunction a);

  const FieldPtr& field() const { return field_; }
  std::size_t derivation() const { return derivation_; }
  const std::vector<RationalFunction>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // nullopt for the zero operator.
  std::optional<std::size_t> order() const;

  LinOp operator+(const LinOp& o) const;
  // Product in K[d] by rewriting d*a -> a*d + d(a). Throws FieldMismatch or
  // Error on a derivation mismatch.
  LinOp operator*(const LinOp& o) const;
  RationalFunction apply(const RationalFunction& a) const;
  LinOp truncate(std::size_t p) const;

  bool operator==(const LinOp& o) const;
  std::string to_string() const;

 private:
  void require_compatible(const LinOp& o) const;
  // d * (this)
  LinOp left_derive() const;

  FieldPtr field_;
  std::size_t derivation_;
  std::vector<RationalFunction> coeffs_;
};

}  // namespace dtc
