#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dtc/hopf/diff_algebra.hpp"
#include "dtc/report.hpp"

namespace dtc {

// A truncated differential Hopf algebra presented by generators and a unit
// relation. Elements of the k-th tensor power use slots 0..k-1. Structure
// maps are tabulated on every generator derivative d^k(g), k <= order: the
// comultiplication in slots 0 and 1, the counit as constants, the coinverse
// in slot 0.
class DiffHopfAlgebra {
 public:
  // Values on the generators themselves; derivatives are filled in by
  // formal differentiation.
  DiffHopfAlgebra(DiffAlgebra algebra, std::vector<DiffPoly> comult, std::vector<RationalFunction> counit,
                  std::vector<DiffPoly> coinverse);

  const DiffAlgebra& algebra() const { return algebra_; }
  const RingPtr& ring() const { return algebra_.ring(); }
  std::uint32_t order() const { return algebra_.order(); }
  std::size_t generator_count() const { return comult_.size(); }

  const DiffPoly& comult(std::uint32_t generator, std::uint32_t order) const;
  const RationalFunction& counit(std::uint32_t generator, std::uint32_t order) const;
  const DiffPoly& coinverse(std::uint32_t generator, std::uint32_t order) const;

  // Copies with one table entry replaced, for negative controls.
  DiffHopfAlgebra with_comult(std::uint32_t generator, std::uint32_t order, DiffPoly value) const;
  DiffHopfAlgebra with_counit(std::uint32_t generator, std::uint32_t order, RationalFunction value) const;
  DiffHopfAlgebra with_coinverse(std::uint32_t generator, std::uint32_t order, DiffPoly value) const;

  // The structure maps applied in tensor factor `slot`; later factors shift.
  DiffPoly apply_comult(const DiffPoly& x, std::uint32_t slot = 0) const;
  DiffPoly apply_counit(const DiffPoly& x, std::uint32_t slot = 0) const;
  DiffPoly apply_coinverse(const DiffPoly& x, std::uint32_t slot = 0) const;
  // Multiplies factors `slot` and `slot + 1`.
  DiffPoly multiply_slots(const DiffPoly& x, std::uint32_t slot = 0) const;

  // Size n when built by gl_hopf.
  std::optional<std::size_t> matrix_size() const { return matrix_size_; }

 private:
  friend DiffHopfAlgebra gl_hopf(FieldPtr field, std::size_t n, std::uint32_t order);
  void check_table_index(std::uint32_t generator, std::uint32_t order) const;

  DiffAlgebra algebra_;
  std::vector<std::vector<DiffPoly>> comult_;
  std::vector<std::vector<RationalFunction>> counit_;
  std::vector<std::vector<DiffPoly>> coinverse_;
  std::optional<std::size_t> matrix_size_;
};

using HopfPtr = std::shared_ptr<const DiffHopfAlgebra>;

// K{X_11, ..., X_nn, d} / (d det X - 1) over the parameter derivation, with
// the matrix group structure. Generators are X<i><j> (1-based) followed by d.
DiffHopfAlgebra gl_hopf(FieldPtr field, std::size_t n, std::uint32_t order);

// Laplace expansion; the 0 x 0 determinant is not defined.
DiffPoly determinant(const PolyMatrix& m);

// Generator X_ij (0-based indices) of a gl_hopf algebra, in `slot`.
DiffPoly gl_entry(const DiffHopfAlgebra& h, std::size_t i, std::size_t j, std::uint32_t order = 0,
                  std::uint32_t slot = 0);

// Checks coassociativity, both counit laws, both antipode laws, compatibility
// of the tables with the derivation and preservation of the relations, on
// every generator derivative of order <= p. The failing generator is named.
AxiomReport hopf_check(const DiffHopfAlgebra& h, std::uint32_t p);

// rho(e_j) = sum_i e_i (x) R_ij.
struct Comodule {
  PolyMatrix coaction;
  std::size_t dim() const { return coaction.rows(); }
};

Comodule standard_comodule(const DiffHopfAlgebra& h);
// Coaction [[R, dR], [0, R]] on the basis (1 (x) e, d (x) e). Throws
// TruncationExhausted when dR needs derivatives beyond the order.
Comodule comodule_prolong(const DiffHopfAlgebra& h, const Comodule& v);
// Delta(R) = R (x). R entrywise and eps(R) = I.
AxiomReport comodule_check(const DiffHopfAlgebra& h, const Comodule& v);

}  // namespace dtc
