#pragma once

#include <map>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dtc/diffmod/diff_module.hpp"
#include "dtc/hopf/hopf.hpp"
#include "dtc/report.hpp"

namespace dtc {

using Vector = std::vector<RationalFunction>;
using PolyVector = std::vector<DiffPoly>;

enum class NodeKind { base, unit, tensor, dual, dsum, prolong };

class DerivedObject;
using ObjectPtr = std::shared_ptr<const DerivedObject>;

// An object built from a base object X by tensor, dual, direct sum and
// prolongation. The representation matrix R_V has entries in the GL_n Hopf
// algebra: R_X = (X_ij), R_{V(x)W} = R_V (x) R_W, R_{V*} = S(R_V)^T,
// R_{V+W} = diag(R_V, R_W), R_{F(V)} = [[R_V, dR_V], [0, R_V]].
class DerivedObject {
 public:
  // Throws ShapeMismatch unless dim(module) equals the size of the GL_n algebra.
  static ObjectPtr base(HopfPtr hopf, DiffModule module);
  static ObjectPtr unit(HopfPtr hopf, FieldPtr field);
  static ObjectPtr tensor(ObjectPtr a, ObjectPtr b);
  static ObjectPtr dual(ObjectPtr a);
  static ObjectPtr dsum(ObjectPtr a, ObjectPtr b);
  static ObjectPtr prolong(ObjectPtr a);

  NodeKind kind() const { return kind_; }
  const ObjectPtr& first() const { return first_; }
  const ObjectPtr& second() const { return second_; }
  const DiffModule& module() const { return module_; }
  const HopfPtr& hopf() const { return hopf_; }
  std::size_t dim() const { return module_.dim(); }
  std::size_t depth() const;
  std::string to_string() const;

  // R_V v and R_V^T v for v with entries in K, normalized.
  PolyVector apply(const Vector& v) const;
  PolyVector apply_transpose(const Vector& v) const;
  PolyMatrix representation() const;

 private:
  DerivedObject(NodeKind kind, HopfPtr hopf, DiffModule module, ObjectPtr first, ObjectPtr second);

  NodeKind kind_;
  HopfPtr hopf_;
  DiffModule module_;
  ObjectPtr first_;
  ObjectPtr second_;
};

bool same_object(const DerivedObject& a, const DerivedObject& b);

// All objects of tree depth <= depth over `base`, in a fixed order. Binary
// nodes pair objects of smaller depth; the unit object is included.
std::vector<ObjectPtr> enumerate_objects(const ObjectPtr& base, std::size_t depth);

// The symbol a_V(v (x) u).
struct MatrixCoefficient {
  ObjectPtr object;
  Vector v;
  Vector u;
};

// Throws ShapeMismatch unless v and u have length dim(V).
MatrixCoefficient coefficient(ObjectPtr object, Vector v, Vector u);

// K-linear combination of symbols; scalars are absorbed into v.
struct FormalSum {
  std::vector<MatrixCoefficient> terms;
};

// u^T R_V v.
DiffPoly realize(const MatrixCoefficient& a);
DiffPoly realize(const FormalSum& s);

// u(v).
RationalFunction coeff_counit(const MatrixCoefficient& a);
RationalFunction coeff_counit(const FormalSum& s);

// sum_i a_V(v_i (x) u) (x) a_V(v (x) u_i).
std::vector<std::pair<MatrixCoefficient, MatrixCoefficient>> coeff_comult(const MatrixCoefficient& a);
// sum realize(first) (x) realize(second), in slots 0 and 1.
DiffPoly realize_pairs(const std::vector<std::pair<MatrixCoefficient, MatrixCoefficient>>& pairs);

// a_{V*}(u (x) v).
MatrixCoefficient coeff_coinverse(const MatrixCoefficient& a);
// a_{V(x)W}((v (x) w) (x) (u (x) t)).
MatrixCoefficient coeff_mult(const MatrixCoefficient& a, const MatrixCoefficient& b);
// a_{F(V)}(S_V(d (x) (v (x) u))), split as sum_i a_{F(V)}(e_i (x) row_i).
FormalSum coeff_derive(const MatrixCoefficient& a);

// ev_{F(V)} o S_V applied to d (x) (v (x) u).
RationalFunction differential_evaluation(const MatrixCoefficient& a);

// f: V -> W. Requires f to be a module morphism intertwining R_V and R_W;
// throws NotAMorphism otherwise. Compares a_V(v (x) f^T u) with a_W(f v (x) u).
AxiomReport check_relation(const ObjectPtr& source, const ObjectPtr& target, const RFMatrix& f, const Vector& v,
                           const Vector& u);
AxiomReport check_product_rule(const MatrixCoefficient& a, const MatrixCoefficient& b);
// S(d(realize a)) against realize(coeff_derive(coeff_coinverse a)) and d(S(realize a)).
AxiomReport check_diffdual(const MatrixCoefficient& a);
AxiomReport check_differential_evaluation(const MatrixCoefficient& a);

// A point g of GL_n with values in a differential algebra over K.
struct GroupPoint {
  std::shared_ptr<const DiffAlgebra> algebra;
  PolyMatrix g;
  DiffPoly det_inverse;
};

// A point with entries in K over the parameter derivation. Throws Error when g
// is singular.
GroupPoint group_point(const FieldPtr& field, const RFMatrix& g);
// Throws Error unless det(g) * det_inverse normalizes to 1.
GroupPoint group_point(std::shared_ptr<const DiffAlgebra> algebra, PolyMatrix g, DiffPoly det_inverse);

// lambda_V = R_V evaluated at g.
PolyMatrix evaluate_at(const GroupPoint& point, const ObjectPtr& object);

// Verifies tensor spreading on tensor nodes, equivariance under the
// structural morphisms ev, Delta, psi, i, phi, T, D available among the
// listed objects, and F(lambda_V) = lambda_{F(V)} on prolongation nodes.
// `overrides` replaces lambda for objects keyed by to_string().
AxiomReport check_group_point(const GroupPoint& point, const std::vector<ObjectPtr>& objects,
                              const std::map<std::string, PolyMatrix>& overrides = {});

}  // namespace dtc
