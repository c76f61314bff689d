#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dtc/field/diff_field.hpp"

namespace dtc {

// The indeterminate d^order(y_generator) in tensor factor `slot`.
struct Indet {
  std::uint32_t slot = 0;
  std::uint32_t generator = 0;
  std::uint32_t order = 0;
  auto operator<=>(const Indet&) const = default;
};

// Monomial in indeterminates: factors sorted by Indet, positive exponents.
class DiffMonomial {
 public:
  DiffMonomial() = default;
  explicit DiffMonomial(Indet x, std::uint32_t power = 1);

  const std::vector<std::pair<Indet, std::uint32_t>>& factors() const { return factors_; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t exponent(const Indet& x) const;

  DiffMonomial operator*(const DiffMonomial& o) const;
  bool divides(const DiffMonomial& o) const;
  DiffMonomial quotient_of(const DiffMonomial& o) const;  // precondition: divides(o)
  // Drops one power of x; precondition: exponent(x) > 0.
  DiffMonomial without_one(const Indet& x) const;

  bool operator==(const DiffMonomial& o) const = default;

 private:
  static DiffMonomial from_factors(std::vector<std::pair<Indet, std::uint32_t>> f);
  std::vector<std::pair<Indet, std::uint32_t>> factors_;
  std::uint32_t degree_ = 0;
};

// Graded order, ties broken lexicographically with larger indeterminates first.
struct DiffMonomialOrder {
  bool operator()(const DiffMonomial& a, const DiffMonomial& b) const;
};

// K{y_1, ..., y_m} for one distinguished derivation of K.
class DiffPolyRing {
 public:
  static std::shared_ptr<const DiffPolyRing> create(FieldPtr field, std::vector<std::string> generators,
                                                    std::size_t derivation);
  const FieldPtr& field() const { return field_; }
  std::size_t derivation() const { return derivation_; }
  const std::vector<std::string>& generators() const { return generators_; }
  std::uint32_t generator_index(std::string_view name) const;  // throws UnknownName
  std::string indet_name(const Indet& x) const;

 private:
  DiffPolyRing() = default;
  FieldPtr field_;
  std::vector<std::string> generators_;
  std::size_t derivation_ = 0;
};

using RingPtr = std::shared_ptr<const DiffPolyRing>;

// Polynomial with rational-function coefficients in the indeterminates of a
// DiffPolyRing. The default value is a ring-agnostic zero.
class DiffPoly {
 public:
  using TermMap = std::map<DiffMonomial, RationalFunction, DiffMonomialOrder>;

  DiffPoly() = default;
  DiffPoly(RingPtr ring, RationalFunction constant);
  static DiffPoly indeterminate(RingPtr ring, Indet x);
  static DiffPoly from_terms(RingPtr ring, TermMap terms);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  RationalFunction constant_value() const;  // precondition: is_constant()
  std::uint32_t max_order() const;
  std::uint32_t max_slot() const;

  DiffPoly operator-() const;
  DiffPoly operator+(const DiffPoly& o) const;
  DiffPoly operator-(const DiffPoly& o) const;
  DiffPoly operator*(const DiffPoly& o) const;
  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly scaled(const RationalFunction& c) const;
  DiffPoly pow(std::uint32_t k) const;

  // Extension of the ring derivation: d(d^i y) = d^(i+1) y, coefficients via K.
  DiffPoly derive() const;
  DiffPoly derive(std::string_view derivation) const;  // throws UnknownName unless it names the ring derivation

  // K-algebra homomorphism determined by the images of indeterminates. The
  // result lives in `target`, by default this polynomial's ring.
  DiffPoly map_indets(const std::function<DiffPoly(const Indet&)>& image, RingPtr target = nullptr) const;

  // Evaluates with d^i y_j -> d^i(values(y_j)) in K; slot-0 only.
  // Throws Error when a generator lacks a value.
  RationalFunction substitute(const std::map<std::uint32_t, RationalFunction>& values) const;

  bool operator==(const DiffPoly& o) const { return terms_ == o.terms_; }
  std::string to_string() const;

 private:
  static const RingPtr& common_ring(const DiffPoly& a, const DiffPoly& b);
  void add_term(const DiffMonomial& m, const RationalFunction& c);

  RingPtr ring_;
  TermMap terms_;
};

}  // namespace dtc
