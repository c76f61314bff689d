#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dtc/field/rational_function.hpp"

namespace dtc {

struct DerivationSpec {
  std::string name;
  // Value on each generator, indexed like the field's variables.
  std::vector<RationalFunction> on_generators;
};

// Q(x_1, ..., x_r) with commuting derivations given on generators.
// Immutable; shared by pointer and compared by identity.
class DiffField {
 public:
  // Throws Error if derivations fail to commute on a generator or names are
  // invalid.
  static std::shared_ptr<const DiffField> create(std::vector<std::string> variables,
                                                 std::vector<DerivationSpec> derivations,
                                                 const std::string& principal,
                                                 const std::optional<std::string>& parameter);
  // Q(x, t) with dx(x) = 1, dx(t) = 0, dt(x) = 0, dt(t) = 1.
  static std::shared_ptr<const DiffField> standard_xt();

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t derivation_count() const { return derivations_.size(); }
  const DerivationSpec& derivation(std::size_t index) const { return derivations_.at(index); }
  std::size_t principal() const { return principal_; }
  // Throws Error when the field has no parameter derivation.
  std::size_t parameter() const;
  bool has_parameter() const { return parameter_.has_value(); }

  std::size_t variable_index(std::string_view name) const;    // throws UnknownName
  std::size_t derivation_index(std::string_view name) const;  // throws UnknownName
  RationalFunction variable(std::string_view name) const;

  RationalFunction derive(const RationalFunction& a, std::size_t derivation) const;
  RationalFunction derive(const RationalFunction& a, std::string_view derivation) const;
  RationalFunction derive(const Polynomial& p, std::size_t derivation) const;

  // Throws ParseError, DivisionByZero or UnknownName.
  RationalFunction parse(std::string_view text) const;
  std::string print(const RationalFunction& a) const { return a.to_string(variables_); }

 private:
  DiffField() = default;
  std::vector<std::string> variables_;
  std::vector<DerivationSpec> derivations_;
  std::size_t principal_ = 0;
  std::optional<std::size_t> parameter_;
};

using FieldPtr = std::shared_ptr<const DiffField>;

}  // namespace dtc
