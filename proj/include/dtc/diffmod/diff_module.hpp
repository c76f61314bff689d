#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dtc/field/diff_field.hpp"
#include "dtc/linalg/matrix.hpp"

namespace dtc {

// How the prolongation functor acts: the parametrized structure
// [[A, dt A], [0, A]] or the trivial structure X -> X + X.
enum class ProlongMode { differential, trivial };

struct BasisTag {
  std::vector<std::string> labels;
};

// System dx Y = A Y over a field with principal dx and parameter dt.
class DiffModule {
 public:
  // Throws ShapeMismatch unless sys is square; Error unless the field has a
  // parameter derivation.
  DiffModule(FieldPtr field, RFMatrix sys);
  DiffModule(FieldPtr field, RFMatrix sys, BasisTag basis);
  static DiffModule unit(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  std::size_t dim() const { return sys_.rows(); }
  const RFMatrix& sys() const { return sys_; }
  const BasisTag& basis() const { return basis_; }

 private:
  FieldPtr field_;
  RFMatrix sys_;
  BasisTag basis_;
};

using ModulePtr = std::shared_ptr<const DiffModule>;

// Matrix from src coordinates to dst coordinates. Shapes are checked at
// construction; the morphism law is checked by is_morphism.
class ModuleMorphism {
 public:
  ModuleMorphism(ModulePtr src, ModulePtr dst, RFMatrix mat);

  const DiffModule& src() const { return *src_; }
  const DiffModule& dst() const { return *dst_; }
  const ModulePtr& src_ptr() const { return src_; }
  const ModulePtr& dst_ptr() const { return dst_; }
  const RFMatrix& mat() const { return mat_; }

  // g.after(f) = g o f; throws ShapeMismatch when dims differ.
  ModuleMorphism after(const ModuleMorphism& f) const;

 private:
  ModulePtr src_;
  ModulePtr dst_;
  RFMatrix mat_;
};

// dt applied entrywise.
RFMatrix derive_entries(const DiffField& field, const RFMatrix& m, std::size_t derivation);
// The image of a matrix of a morphism (or of a scalar) under the prolongation
// functor: [[m, dt m], [0, m]] or diag(m, m).
RFMatrix prolong_matrix(const DiffField& field, const RFMatrix& m, ProlongMode mode = ProlongMode::differential);

DiffModule prolong(const DiffModule& m, ProlongMode mode = ProlongMode::differential);
DiffModule trivial_prolong(const DiffModule& m);
// Throws NotAMorphism when f fails the morphism law.
ModuleMorphism prolong_morphism(const ModuleMorphism& f, ProlongMode mode = ProlongMode::differential);

DiffModule tensor(const DiffModule& m, const DiffModule& n);
DiffModule dual(const DiffModule& m);
DiffModule dsum(const DiffModule& m, const DiffModule& n);

ModuleMorphism identity_morphism(const DiffModule& m);
// i: M -> M^(1), matrix [I; 0].
ModuleMorphism inclusion(const DiffModule& m, ProlongMode mode = ProlongMode::differential);
// phi: M^(1) -> M, matrix [0 I].
ModuleMorphism projection(const DiffModule& m, ProlongMode mode = ProlongMode::differential);

// dx(mat) = B mat - mat A with A = src.sys, B = dst.sys.
bool is_morphism(const ModuleMorphism& f);

// The scalar D(a) obtained by factoring F(a) - a*id on 1^(1) through
// 1^(1) / i(1) and back through i.
RationalFunction induced_derivation(const FieldPtr& field, const RationalFunction& a,
                                    ProlongMode mode = ProlongMode::differential);

}  // namespace dtc
