#include "dtc/reconstruct/reconstruct.hpp"

#include <algorithm>

#include "dtc/errors.hpp"
#include "dtc/structmaps/struct_maps.hpp"

namespace dtc {

namespace {

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const RationalFunction& a) { return a.is_zero(); });
}

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector e(n);
  e[i] = 1;
  return e;
}

Vector slice(const Vector& v, std::size_t from, std::size_t len) {
  return Vector(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(from + len));
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

Vector derive_vector(const DiffField& field, const Vector& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& a : v) out.push_back(a.is_constant() ? RationalFunction() : field.derive(a, field.parameter()));
  return out;
}

Vector times(const RFMatrix& f, const Vector& v) {
  Vector out(f.rows());
  for (std::size_t r = 0; r < f.rows(); ++r) {
    for (std::size_t c = 0; c < f.cols(); ++c) {
      if (!f(r, c).is_zero() && !v[c].is_zero()) out[r] += f(r, c) * v[c];
    }
  }
  return out;
}

void require_same_hopf(const ObjectPtr& a, const ObjectPtr& b) {
  if (a->hopf() != b->hopf()) throw Error("derived objects over different Hopf algebras");
}

}  // namespace

DerivedObject::DerivedObject(NodeKind kind, HopfPtr hopf, DiffModule module, ObjectPtr first, ObjectPtr second)
    : kind_(kind), hopf_(std::move(hopf)), module_(std::move(module)), first_(std::move(first)), second_(std::move(second)) {}

ObjectPtr DerivedObject::base(HopfPtr hopf, DiffModule module) {
  if (!hopf || !hopf->matrix_size()) throw Error("base object needs a GL_n Hopf algebra");
  if (*hopf->matrix_size() != module.dim()) {
    throw ShapeMismatch("base module of dim " + std::to_string(module.dim()) + " over GL_" +
                        std::to_string(*hopf->matrix_size()));
  }
  return ObjectPtr(new DerivedObject(NodeKind::base, std::move(hopf), std::move(module), nullptr, nullptr));
}

ObjectPtr DerivedObject::unit(HopfPtr hopf, FieldPtr field) {
  return ObjectPtr(new DerivedObject(NodeKind::unit, std::move(hopf), DiffModule::unit(std::move(field)), nullptr, nullptr));
}

ObjectPtr DerivedObject::tensor(ObjectPtr a, ObjectPtr b) {
  require_same_hopf(a, b);
  DiffModule m = dtc::tensor(a->module(), b->module());
  return ObjectPtr(new DerivedObject(NodeKind::tensor, a->hopf(), std::move(m), std::move(a), std::move(b)));
}

ObjectPtr DerivedObject::dual(ObjectPtr a) {
  DiffModule m = dtc::dual(a->module());
  return ObjectPtr(new DerivedObject(NodeKind::dual, a->hopf(), std::move(m), std::move(a), nullptr));
}

ObjectPtr DerivedObject::dsum(ObjectPtr a, ObjectPtr b) {
  require_same_hopf(a, b);
  DiffModule m = dtc::dsum(a->module(), b->module());
  return ObjectPtr(new DerivedObject(NodeKind::dsum, a->hopf(), std::move(m), std::move(a), std::move(b)));
}

ObjectPtr DerivedObject::prolong(ObjectPtr a) {
  DiffModule m = dtc::prolong(a->module());
  return ObjectPtr(new DerivedObject(NodeKind::prolong, a->hopf(), std::move(m), std::move(a), nullptr));
}

std::size_t DerivedObject::depth() const {
  std::size_t d = 0;
  if (first_) d = first_->depth();
  if (second_) d = std::max(d, second_->depth());
  return d + 1;
}

std::string DerivedObject::to_string() const {
  switch (kind_) {
    case NodeKind::base:
      return "X";
    case NodeKind::unit:
      return "1";
    case NodeKind::tensor:
      return "(" + first_->to_string() + "⊗" + second_->to_string() + ")";
    case NodeKind::dual:
      return first_->to_string() + "*";
    case NodeKind::dsum:
      return "(" + first_->to_string() + "⊕" + second_->to_string() + ")";
    case NodeKind::prolong:
      return "F(" + first_->to_string() + ")";
  }
  return {};
}

bool same_object(const DerivedObject& a, const DerivedObject& b) {
  return a.hopf() == b.hopf() && a.to_string() == b.to_string() && a.module().sys() == b.module().sys();
}

PolyVector DerivedObject::apply(const Vector& v) const {
  if (v.size() != dim()) throw ShapeMismatch("vector length differs from dim " + std::to_string(dim()));
  const DiffAlgebra& alg = hopf_->algebra();
  PolyVector out(dim(), alg.constant(RationalFunction()));
  if (is_zero_vector(v)) return out;
  switch (kind_) {
    case NodeKind::base:
      for (std::size_t i = 0; i < dim(); ++i) {
        for (std::size_t j = 0; j < dim(); ++j) {
          if (!v[j].is_zero()) out[i] += gl_entry(*hopf_, i, j).scaled(v[j]);
        }
      }
      return out;
    case NodeKind::unit:
      out[0] = alg.constant(v[0]);
      return out;
    case NodeKind::tensor: {
      const std::size_t a = first_->dim();
      const std::size_t b = second_->dim();
      for (std::size_t i = 0; i < a; ++i) {
        const Vector m = slice(v, i * b, b);
        if (is_zero_vector(m)) continue;
        const PolyVector ra = first_->apply(unit_vector(a, i));
        const PolyVector rb = second_->apply(m);
        for (std::size_t p = 0; p < a; ++p) {
          if (ra[p].is_zero()) continue;
          for (std::size_t q = 0; q < b; ++q) out[p * b + q] += ra[p] * rb[q];
        }
      }
      for (auto& x : out) x = alg.normalize(x);
      return out;
    }
    case NodeKind::dual: {
      const PolyVector t = first_->apply_transpose(v);
      for (std::size_t i = 0; i < dim(); ++i) out[i] = hopf_->apply_coinverse(t[i]);
      return out;
    }
    case NodeKind::dsum: {
      const std::size_t a = first_->dim();
      const PolyVector top = first_->apply(slice(v, 0, a));
      const PolyVector bottom = second_->apply(slice(v, a, second_->dim()));
      std::copy(top.begin(), top.end(), out.begin());
      std::copy(bottom.begin(), bottom.end(), out.begin() + static_cast<std::ptrdiff_t>(a));
      return out;
    }
    case NodeKind::prolong: {
      // [[R, dR], [0, R]] (p; q) = (R p + d(R q) - R d(q); R q)
      const std::size_t a = first_->dim();
      const Vector p = slice(v, 0, a);
      const Vector q = slice(v, a, a);
      const PolyVector rp = first_->apply(p);
      const PolyVector rq = first_->apply(q);
      const PolyVector rdq = first_->apply(derive_vector(*module_.field(), q));
      for (std::size_t i = 0; i < a; ++i) {
        out[i] = alg.normalize(rp[i] + alg.derive(rq[i]) - rdq[i]);
        out[a + i] = rq[i];
      }
      return out;
    }
  }
  return out;
}

PolyVector DerivedObject::apply_transpose(const Vector& v) const {
  if (v.size() != dim()) throw ShapeMismatch("vector length differs from dim " + std::to_string(dim()));
  const DiffAlgebra& alg = hopf_->algebra();
  PolyVector out(dim(), alg.constant(RationalFunction()));
  if (is_zero_vector(v)) return out;
  switch (kind_) {
    case NodeKind::base:
      for (std::size_t j = 0; j < dim(); ++j) {
        for (std::size_t i = 0; i < dim(); ++i) {
          if (!v[i].is_zero()) out[j] += gl_entry(*hopf_, i, j).scaled(v[i]);
        }
      }
      return out;
    case NodeKind::unit:
      out[0] = alg.constant(v[0]);
      return out;
    case NodeKind::tensor: {
      const std::size_t a = first_->dim();
      const std::size_t b = second_->dim();
      for (std::size_t i = 0; i < a; ++i) {
        const Vector m = slice(v, i * b, b);
        if (is_zero_vector(m)) continue;
        const PolyVector ra = first_->apply_transpose(unit_vector(a, i));
        const PolyVector rb = second_->apply_transpose(m);
        for (std::size_t p = 0; p < a; ++p) {
          if (ra[p].is_zero()) continue;
          for (std::size_t q = 0; q < b; ++q) out[p * b + q] += ra[p] * rb[q];
        }
      }
      for (auto& x : out) x = alg.normalize(x);
      return out;
    }
    case NodeKind::dual: {
      // R_{V*}^T = S(R_V), and S is K-linear.
      const PolyVector t = first_->apply(v);
      for (std::size_t i = 0; i < dim(); ++i) out[i] = hopf_->apply_coinverse(t[i]);
      return out;
    }
    case NodeKind::dsum: {
      const std::size_t a = first_->dim();
      const PolyVector top = first_->apply_transpose(slice(v, 0, a));
      const PolyVector bottom = second_->apply_transpose(slice(v, a, second_->dim()));
      std::copy(top.begin(), top.end(), out.begin());
      std::copy(bottom.begin(), bottom.end(), out.begin() + static_cast<std::ptrdiff_t>(a));
      return out;
    }
    case NodeKind::prolong: {
      // [[R^T, 0], [dR^T, R^T]] (p; q) = (R^T p; d(R^T p) - R^T d(p) + R^T q)
      const std::size_t a = first_->dim();
      const Vector p = slice(v, 0, a);
      const Vector q = slice(v, a, a);
      const PolyVector rp = first_->apply_transpose(p);
      const PolyVector rq = first_->apply_transpose(q);
      const PolyVector rdp = first_->apply_transpose(derive_vector(*module_.field(), p));
      for (std::size_t i = 0; i < a; ++i) {
        out[i] = rp[i];
        out[a + i] = alg.normalize(alg.derive(rp[i]) - rdp[i] + rq[i]);
      }
      return out;
    }
  }
  return out;
}

PolyMatrix DerivedObject::representation() const {
  PolyMatrix r(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    const PolyVector col = apply(unit_vector(dim(), j));
    for (std::size_t i = 0; i < dim(); ++i) r(i, j) = col[i];
  }
  return r;
}

std::vector<ObjectPtr> enumerate_objects(const ObjectPtr& base, std::size_t depth) {
  std::vector<std::vector<ObjectPtr>> by_depth(depth + 1);
  if (depth == 0) return {};
  by_depth[1] = {base, DerivedObject::unit(base->hopf(), base->module().field())};
  std::vector<ObjectPtr> all = by_depth[1];
  for (std::size_t d = 2; d <= depth; ++d) {
    auto& level = by_depth[d];
    for (const auto& a : by_depth[d - 1]) {
      level.push_back(DerivedObject::dual(a));
      level.push_back(DerivedObject::prolong(a));
    }
    for (const auto& a : all) {
      for (const auto& b : all) {
        if (std::max(a->depth(), b->depth()) != d - 1) continue;
        level.push_back(DerivedObject::tensor(a, b));
        level.push_back(DerivedObject::dsum(a, b));
      }
    }
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

MatrixCoefficient coefficient(ObjectPtr object, Vector v, Vector u) {
  if (v.size() != object->dim() || u.size() != object->dim()) {
    throw ShapeMismatch("coefficient vectors must have length " + std::to_string(object->dim()));
  }
  return MatrixCoefficient{std::move(object), std::move(v), std::move(u)};
}

DiffPoly realize(const MatrixCoefficient& a) {
  const DiffAlgebra& alg = a.object->hopf()->algebra();
  const PolyVector w = a.object->apply(a.v);
  DiffPoly out = alg.constant(RationalFunction());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!a.u[i].is_zero()) out += w[i].scaled(a.u[i]);
  }
  return alg.normalize(out);
}

DiffPoly realize(const FormalSum& s) {
  if (s.terms.empty()) return {};
  DiffPoly out = s.terms.front().object->hopf()->algebra().constant(RationalFunction());
  for (const auto& t : s.terms) out += realize(t);
  return out;
}

RationalFunction coeff_counit(const MatrixCoefficient& a) {
  RationalFunction out;
  for (std::size_t i = 0; i < a.v.size(); ++i) out += a.u[i] * a.v[i];
  return out;
}

RationalFunction coeff_counit(const FormalSum& s) {
  RationalFunction out;
  for (const auto& t : s.terms) out += coeff_counit(t);
  return out;
}

std::vector<std::pair<MatrixCoefficient, MatrixCoefficient>> coeff_comult(const MatrixCoefficient& a) {
  std::vector<std::pair<MatrixCoefficient, MatrixCoefficient>> out;
  const std::size_t n = a.object->dim();
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace_back(coefficient(a.object, unit_vector(n, i), a.u), coefficient(a.object, a.v, unit_vector(n, i)));
  }
  return out;
}

DiffPoly realize_pairs(const std::vector<std::pair<MatrixCoefficient, MatrixCoefficient>>& pairs) {
  if (pairs.empty()) return {};
  const DiffAlgebra& alg = pairs.front().first.object->hopf()->algebra();
  DiffPoly out = alg.constant(RationalFunction());
  for (const auto& [first, second] : pairs) out += realize(first) * move_slot(realize(second), 0, 1);
  return alg.normalize(out);
}

MatrixCoefficient coeff_coinverse(const MatrixCoefficient& a) {
  return coefficient(DerivedObject::dual(a.object), a.u, a.v);
}

MatrixCoefficient coeff_mult(const MatrixCoefficient& a, const MatrixCoefficient& b) {
  return coefficient(DerivedObject::tensor(a.object, b.object), kron(a.v, b.v), kron(a.u, b.u));
}

namespace {

// S_V(d (x) (v (x) u)) as a 2n x 2n coordinate array in F(V) (x) F(V)*.
Vector lifted_derivative(const MatrixCoefficient& a) {
  const std::size_t n = a.object->dim();
  const Vector plain = kron(a.v, a.u);
  // d (x) w = w' in the 1-slot plus w in the d-slot.
  Vector element = derive_vector(*a.object->module().field(), plain);
  element.insert(element.end(), plain.begin(), plain.end());
  return structure::apply_coefficient_lift(n, ProlongMode::differential, element);
}

}  // namespace

FormalSum coeff_derive(const MatrixCoefficient& a) {
  const std::size_t wide = 2 * a.object->dim();
  const Vector w = lifted_derivative(a);
  const ObjectPtr target = DerivedObject::prolong(a.object);
  FormalSum out;
  for (std::size_t r = 0; r < wide; ++r) {
    const Vector row = slice(w, r * wide, wide);
    if (is_zero_vector(row)) continue;
    out.terms.push_back(coefficient(target, unit_vector(wide, r), row));
  }
  return out;
}

RationalFunction differential_evaluation(const MatrixCoefficient& a) {
  const std::size_t wide = 2 * a.object->dim();
  const Vector w = lifted_derivative(a);
  RationalFunction out;
  for (std::size_t r = 0; r < wide; ++r) out += w[r * wide + r];
  return out;
}

namespace {

AxiomReport compare(std::string axiom, std::string objects, const DiffPoly& lhs, const DiffPoly& rhs,
                    std::string detail) {
  AxiomReport r{std::move(axiom), std::move(objects), lhs == rhs, std::nullopt, {}};
  if (!r.passed) {
    r.mismatch = Mismatch{0, 0, lhs.to_string(), rhs.to_string()};
    r.detail = std::move(detail);
  }
  return r;
}

}  // namespace

AxiomReport check_relation(const ObjectPtr& source, const ObjectPtr& target, const RFMatrix& f, const Vector& v,
                           const Vector& u) {
  require_same_hopf(source, target);
  const ModuleMorphism morphism(std::make_shared<const DiffModule>(source->module()),
                                std::make_shared<const DiffModule>(target->module()), f);
  if (!is_morphism(morphism)) throw NotAMorphism("map is not a morphism of the underlying modules");
  const DiffAlgebra& alg = source->hopf()->algebra();
  for (std::size_t j = 0; j < source->dim(); ++j) {
    const PolyVector lhs = target->apply(times(f, unit_vector(source->dim(), j)));
    const PolyVector col = source->apply(unit_vector(source->dim(), j));
    for (std::size_t i = 0; i < target->dim(); ++i) {
      DiffPoly rhs = alg.constant(RationalFunction());
      for (std::size_t k = 0; k < source->dim(); ++k) {
        if (!f(i, k).is_zero()) rhs += col[k].scaled(f(i, k));
      }
      if (!(lhs[i] == alg.normalize(rhs))) throw NotAMorphism("map does not intertwine the representations");
    }
  }
  const DiffPoly lhs = realize(coefficient(source, v, times(f.transpose(), u)));
  const DiffPoly rhs = realize(coefficient(target, times(f, v), u));
  return compare("relation", source->to_string() + " -> " + target->to_string(), lhs, rhs,
                 "a_V(v (x) f*u) differs from a_W(fv (x) u)");
}

AxiomReport check_product_rule(const MatrixCoefficient& a, const MatrixCoefficient& b) {
  const DiffAlgebra& alg = a.object->hopf()->algebra();
  const DiffPoly lhs = realize(coeff_derive(coeff_mult(a, b)));
  const DiffPoly rhs = alg.normalize(realize(coeff_derive(a)) * realize(b) + realize(a) * realize(coeff_derive(b)));
  return compare("product-rule", a.object->to_string() + ", " + b.object->to_string(), lhs, rhs,
                 "d(ab) differs from d(a) b + a d(b)");
}

AxiomReport check_diffdual(const MatrixCoefficient& a) {
  const DiffHopfAlgebra& h = *a.object->hopf();
  const DiffPoly s_of_d = h.apply_coinverse(realize(coeff_derive(a)));
  const DiffPoly d_of_s = realize(coeff_derive(coeff_coinverse(a)));
  const std::string objects = a.object->to_string();
  if (!(s_of_d == d_of_s)) {
    return compare("diffdual", objects, s_of_d, d_of_s, "S(d(a)) differs from d(S-image of a)");
  }
  return compare("diffdual", objects, s_of_d, h.algebra().derive(h.apply_coinverse(realize(a))),
                 "S(d(a)) differs from d(S(a)) in the Hopf algebra");
}

AxiomReport check_differential_evaluation(const MatrixCoefficient& a) {
  const DiffField& field = *a.object->module().field();
  const RationalFunction value = differential_evaluation(a);
  const RationalFunction expected = field.derive(coeff_counit(a), field.parameter());
  AxiomReport r{"differential-evaluation", a.object->to_string(), value == expected, std::nullopt, {}};
  if (!r.passed) {
    r.mismatch = Mismatch{0, 0, field.print(value), field.print(expected)};
    r.detail = "ev o S on d (x) (v (x) u) differs from d(u(v))";
  }
  return r;
}

GroupPoint group_point(const FieldPtr& field, const RFMatrix& g) {
  if (!g.is_square() || g.rows() == 0) throw ShapeMismatch("group point must be a nonempty square matrix");
  auto algebra = std::make_shared<const DiffAlgebra>(DiffAlgebra::constants(field, field->parameter()));
  if (rank(g) != g.rows()) throw Error("group point is not invertible");
  PolyMatrix pg = g.map([&](const RationalFunction& a) { return algebra->constant(a); });
  const RationalFunction det = determinant(pg).constant_value();
  return GroupPoint{algebra, std::move(pg), algebra->constant(det.inverse())};
}

GroupPoint group_point(std::shared_ptr<const DiffAlgebra> algebra, PolyMatrix g, DiffPoly det_inverse) {
  if (!g.is_square() || g.rows() == 0) throw ShapeMismatch("group point must be a nonempty square matrix");
  if (!(algebra->normalize(determinant(g) * det_inverse) == algebra->one())) {
    throw Error("group point is not invertible: det(g) times the given inverse is not 1");
  }
  return GroupPoint{std::move(algebra), std::move(g), std::move(det_inverse)};
}

namespace {

// Substitution X_ij^(k) -> d^k(g_ij), d^(k) -> d^k(det(g)^-1).
class PointEvaluator {
 public:
  PointEvaluator(const GroupPoint& point, const DiffHopfAlgebra& hopf) : point_(point) {
    const auto n = hopf.matrix_size();
    if (!n || *n != point.g.rows()) throw ShapeMismatch("group point size differs from the GL_n algebra");
    const auto& pr = point.algebra->ring();
    const auto& hr = hopf.ring();
    if (pr->field() != hr->field() || pr->derivation() != hr->derivation()) {
      throw Error("derivation mismatch between the point algebra and the Hopf algebra");
    }
    for (std::size_t i = 0; i < *n; ++i) {
      for (std::size_t j = 0; j < *n; ++j) tables_.push_back({point.algebra->normalize(point.g(i, j))});
    }
    tables_.push_back({point.algebra->normalize(point.det_inverse)});
  }

  DiffPoly operator()(const DiffPoly& p) {
    const DiffAlgebra& alg = *point_.algebra;
    return alg.normalize(p.map_indets([&](const Indet& x) { return value(x.generator, x.order); }, alg.ring()));
  }

  PolyVector operator()(const PolyVector& v) {
    PolyVector out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back((*this)(p));
    return out;
  }

 private:
  const DiffPoly& value(std::uint32_t generator, std::uint32_t order) {
    auto& t = tables_.at(generator);
    while (t.size() <= order) t.push_back(point_.algebra->derive(t.back()));
    return t[order];
  }

  const GroupPoint& point_;
  std::vector<std::vector<DiffPoly>> tables_;
};

PolyMatrix from_columns(const std::vector<PolyVector>& columns, std::size_t rows) {
  PolyMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

PolyMatrix constant_matrix(const DiffAlgebra& alg, const RFMatrix& f) {
  return f.map([&](const RationalFunction& a) { return alg.constant(a); });
}

PolyMatrix normalized(const DiffAlgebra& alg, const PolyMatrix& m) {
  return m.map([&](const DiffPoly& p) { return alg.normalize(p); });
}

struct CatalogEntry {
  std::string name;
  ObjectPtr source;
  ObjectPtr target;
  RFMatrix map;
};

std::vector<CatalogEntry> structural_catalog(const ObjectPtr& v) {
  using namespace structure;
  std::vector<CatalogEntry> out;
  const FieldPtr& field = v->module().field();
  switch (v->kind()) {
    case NodeKind::tensor: {
      const auto& a = v->first();
      const auto& b = v->second();
      out.push_back({"psi", v, DerivedObject::tensor(b, a), braiding(a->dim(), b->dim())});
      if (b->kind() == NodeKind::dual && same_object(*a, *b->first())) {
        out.push_back({"ev", v, DerivedObject::unit(v->hopf(), field), evaluation(a->dim())});
        out.push_back({"Delta", v, DerivedObject::tensor(v, v), delta(a->dim())});
      }
      break;
    }
    case NodeKind::prolong: {
      const auto& a = v->first();
      const std::size_t n = a->dim();
      out.push_back({"i", a, v, vstack(rf_identity(n), RFMatrix(n, n))});
      out.push_back({"phi", v, a, hstack(RFMatrix(n, n), rf_identity(n))});
      if (a->kind() == NodeKind::tensor) {
        const auto& x = a->first();
        const auto& y = a->second();
        out.push_back({"T", v, DerivedObject::tensor(DerivedObject::prolong(x), DerivedObject::prolong(y)),
                       leibniz(x->dim(), y->dim())});
      }
      break;
    }
    case NodeKind::dual:
      if (v->first()->kind() == NodeKind::prolong) {
        const auto& a = v->first()->first();
        out.push_back({"D", v, DerivedObject::prolong(DerivedObject::dual(a)),
                       dual_swap(a->dim(), ProlongMode::differential)});
      }
      break;
    default:
      break;
  }
  return out;
}

class PointReport {
 public:
  explicit PointReport(std::string objects) {
    report_.axiom = "group-point";
    report_.objects = std::move(objects);
    report_.passed = true;
  }

  void equal(const std::string& what, const PolyMatrix& lhs, const PolyMatrix& rhs) {
    if (!report_.passed) return;
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
      report_.passed = false;
      report_.detail = what + ": shapes " + lhs.shape() + " and " + rhs.shape() + " differ";
      return;
    }
    const auto diff = lhs.first_difference(rhs);
    if (!diff) return;
    const auto [r, c] = *diff;
    report_.passed = false;
    report_.mismatch = Mismatch{r, c, lhs(r, c).to_string(), rhs(r, c).to_string()};
    report_.detail = what;
  }

  AxiomReport finish() && { return std::move(report_); }

 private:
  AxiomReport report_;
};

}  // namespace

PolyMatrix evaluate_at(const GroupPoint& point, const ObjectPtr& object) {
  PointEvaluator eval(point, *object->hopf());
  return object->representation().map([&](const DiffPoly& p) { return eval(p); });
}

AxiomReport check_group_point(const GroupPoint& point, const std::vector<ObjectPtr>& objects,
                              const std::map<std::string, PolyMatrix>& overrides) {
  std::string names;
  for (const auto& o : objects) names += (names.empty() ? "" : ", ") + o->to_string();
  PointReport report(names);
  if (objects.empty()) return std::move(report).finish();
  PointEvaluator eval(point, *objects.front()->hopf());
  const DiffAlgebra& alg = *point.algebra;
  std::map<std::string, PolyMatrix> cache;
  auto lambda = [&](const ObjectPtr& v) -> const PolyMatrix& {
    const std::string key = v->to_string();
    if (auto it = overrides.find(key); it != overrides.end()) return it->second;
    auto it = cache.find(key);
    if (it == cache.end()) {
      std::vector<PolyVector> cols;
      for (std::size_t j = 0; j < v->dim(); ++j) cols.push_back(eval(v->apply(unit_vector(v->dim(), j))));
      it = cache.emplace(key, from_columns(cols, v->dim())).first;
    }
    return it->second;
  };
  for (const auto& v : objects) {
    const std::string name = v->to_string();
    if (v->kind() == NodeKind::tensor) {
      report.equal("TensorSpreading fails on " + name, lambda(v),
                   normalized(alg, kronecker(lambda(v->first()), lambda(v->second()))));
    }
    if (v->kind() == NodeKind::prolong) {
      const PolyMatrix& inner = lambda(v->first());
      const PolyMatrix derived = inner.map([&](const DiffPoly& p) { return alg.derive(p); });
      const PolyMatrix zero(inner.rows(), inner.cols());
      report.equal("CommuteWithD fails on " + name, lambda(v), block2x2(inner, derived, zero, inner));
    }
    for (const auto& entry : structural_catalog(v)) {
      const std::string what = "Equivariance fails for " + entry.name + ": " + entry.source->to_string() + " -> " +
                               entry.target->to_string();
      const PolyMatrix f = constant_matrix(alg, entry.map);
      // lambda_W f, column by column unless lambda_W is overridden.
      PolyMatrix lhs;
      if (overrides.count(entry.target->to_string()) != 0) {
        lhs = normalized(alg, lambda(entry.target) * f);
      } else {
        std::vector<PolyVector> cols;
        for (std::size_t j = 0; j < entry.source->dim(); ++j) {
          Vector column(entry.map.rows());
          for (std::size_t i = 0; i < entry.map.rows(); ++i) column[i] = entry.map(i, j);
          cols.push_back(eval(entry.target->apply(column)));
        }
        lhs = from_columns(cols, entry.target->dim());
      }
      report.equal(what, lhs, normalized(alg, f * lambda(entry.source)));
    }
  }
  return std::move(report).finish();
}

}  // namespace dtc
