#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "dtc/diffalg/diff_poly.hpp"
#include "dtc/linalg/matrix.hpp"

namespace dtc {

using PolyMatrix = Matrix<DiffPoly>;

// The relation inverse * base = 1, with `inverse` a generator absent from
// `base`; `base` is written in slot 0.
struct UnitRelation {
  std::uint32_t inverse = 0;
  DiffPoly base;
};

// A differential polynomial ring, optionally localized at one element through
// a unit relation, truncated at derivative order `order`. Elements carry slot
// tags so that tensor powers share the representation; the relation holds in
// every slot.
//
// Normal form: no derivative of the inverse generator, and no monomial
// divisible by the leading monomial of inverse * base in any slot. Per-slot
// relations have coprime leading monomials, so normal forms are canonical.
class DiffAlgebra {
 public:
  DiffAlgebra(RingPtr ring, std::optional<UnitRelation> unit, std::uint32_t order);

  // Accepts relations only of the form c * (g * P - 1) with g absent from P;
  // throws RelationReductionError otherwise.
  static DiffAlgebra from_relations(RingPtr ring, const std::vector<DiffPoly>& relations, std::uint32_t order);

  // K itself, with no generators.
  static DiffAlgebra constants(FieldPtr field, std::size_t derivation);

  const RingPtr& ring() const { return ring_; }
  std::uint32_t order() const { return order_; }
  const std::optional<UnitRelation>& unit_relation() const { return unit_; }
  std::vector<DiffPoly> relations() const;

  DiffPoly generator(std::string_view name, std::uint32_t order = 0, std::uint32_t slot = 0) const;
  DiffPoly constant(const RationalFunction& c) const { return DiffPoly(ring_, c); }
  DiffPoly one() const { return constant(RationalFunction(1)); }

  // Throws TruncationExhausted when an indeterminate exceeds the order.
  DiffPoly normalize(const DiffPoly& p) const;
  DiffPoly derive(const DiffPoly& p) const { return normalize(p.derive()); }
  bool equal(const DiffPoly& a, const DiffPoly& b) const { return normalize(a - b).is_zero(); }

 private:
  void check_orders(const DiffPoly& p) const;
  DiffPoly eliminate_inverse_derivatives(const DiffPoly& p) const;
  DiffPoly reduce(const DiffPoly& p) const;
  DiffPoly relation_in_slot(std::uint32_t slot) const;

  RingPtr ring_;
  std::optional<UnitRelation> unit_;
  std::uint32_t order_ = 0;
  DiffPoly relation_;                         // inverse * base - 1 in slot 0
  std::vector<DiffPoly> inverse_derivatives_;  // [k] = d^k(inverse) with no derivative of inverse, k >= 1
};

// Moves every indeterminate of slot `from` to slot `to`.
DiffPoly move_slot(const DiffPoly& p, std::uint32_t from, std::uint32_t to);

}  // namespace dtc
