#include "dtc/diffmod/diff_module.hpp"

#include "dtc/errors.hpp"

namespace dtc {

namespace {

BasisTag standard_basis(std::size_t n) {
  BasisTag b;
  for (std::size_t i = 0; i < n; ++i) b.labels.push_back("e" + std::to_string(i + 1));
  return b;
}

std::string grouped(const std::string& label) {
  return label.find("⊗") == std::string::npos && label.find(',') == std::string::npos ? label : "(" + label + ")";
}

void require_same_field(const DiffModule& a, const DiffModule& b) {
  if (a.field() != b.field()) throw FieldMismatch();
}

}  // namespace

DiffModule::DiffModule(FieldPtr field, RFMatrix sys) : DiffModule(field, sys, standard_basis(sys.rows())) {}

DiffModule::DiffModule(FieldPtr field, RFMatrix sys, BasisTag basis)
    : field_(std::move(field)), sys_(std::move(sys)), basis_(std::move(basis)) {
  if (!field_) throw Error("module requires a field");
  if (!field_->has_parameter()) throw Error("module field needs a parameter derivation");
  if (!sys_.is_square()) throw ShapeMismatch("system matrix must be square, got " + sys_.shape());
  if (basis_.labels.size() != sys_.rows()) throw ShapeMismatch("basis tag size differs from dimension");
}

DiffModule DiffModule::unit(FieldPtr field) { return DiffModule(std::move(field), RFMatrix(1, 1), BasisTag{{"1"}}); }

ModuleMorphism::ModuleMorphism(ModulePtr src, ModulePtr dst, RFMatrix mat)
    : src_(std::move(src)), dst_(std::move(dst)), mat_(std::move(mat)) {
  if (src_->field() != dst_->field()) throw FieldMismatch();
  if (mat_.rows() != dst_->dim() || mat_.cols() != src_->dim()) {
    throw ShapeMismatch("morphism matrix " + mat_.shape() + " does not map dim " + std::to_string(src_->dim()) +
                        " to dim " + std::to_string(dst_->dim()));
  }
}

ModuleMorphism ModuleMorphism::after(const ModuleMorphism& f) const {
  if (f.dst().dim() != src().dim()) throw ShapeMismatch("morphisms are not composable");
  return ModuleMorphism(f.src_, dst_, mat_ * f.mat_);
}

RFMatrix derive_entries(const DiffField& field, const RFMatrix& m, std::size_t derivation) {
  return m.map([&](const RationalFunction& a) { return a.is_constant() ? RationalFunction() : field.derive(a, derivation); });
}

RFMatrix prolong_matrix(const DiffField& field, const RFMatrix& m, ProlongMode mode) {
  if (mode == ProlongMode::trivial) return block_diagonal(m, m);
  return block2x2(m, derive_entries(field, m, field.parameter()), RFMatrix(m.rows(), m.cols()), m);
}

DiffModule prolong(const DiffModule& m, ProlongMode mode) {
  BasisTag tag;
  for (const auto& l : m.basis().labels) {
    tag.labels.push_back(mode == ProlongMode::trivial ? "(" + l + ",0)" : "1⊗" + grouped(l));
  }
  for (const auto& l : m.basis().labels) {
    tag.labels.push_back(mode == ProlongMode::trivial ? "(0," + l + ")" : "∂⊗" + grouped(l));
  }
  return DiffModule(m.field(), prolong_matrix(*m.field(), m.sys(), mode), std::move(tag));
}

DiffModule trivial_prolong(const DiffModule& m) { return prolong(m, ProlongMode::trivial); }

ModuleMorphism prolong_morphism(const ModuleMorphism& f, ProlongMode mode) {
  if (!is_morphism(f)) throw NotAMorphism("cannot prolong a matrix that fails the morphism law");
  return ModuleMorphism(std::make_shared<const DiffModule>(prolong(f.src(), mode)),
                        std::make_shared<const DiffModule>(prolong(f.dst(), mode)),
                        prolong_matrix(*f.src().field(), f.mat(), mode));
}

DiffModule tensor(const DiffModule& m, const DiffModule& n) {
  require_same_field(m, n);
  BasisTag tag;
  for (const auto& a : m.basis().labels) {
    for (const auto& b : n.basis().labels) tag.labels.push_back(grouped(a) + "⊗" + grouped(b));
  }
  const RFMatrix sys = kronecker(m.sys(), rf_identity(n.dim())) + kronecker(rf_identity(m.dim()), n.sys());
  return DiffModule(m.field(), sys, std::move(tag));
}

DiffModule dual(const DiffModule& m) {
  BasisTag tag;
  for (const auto& a : m.basis().labels) {
    tag.labels.push_back(a.size() > 1 && a.back() == '*' ? a.substr(0, a.size() - 1) : grouped(a) + "*");
  }
  return DiffModule(m.field(), -m.sys().transpose(), std::move(tag));
}

DiffModule dsum(const DiffModule& m, const DiffModule& n) {
  require_same_field(m, n);
  BasisTag tag;
  for (const auto& a : m.basis().labels) tag.labels.push_back("(" + a + ",0)");
  for (const auto& b : n.basis().labels) tag.labels.push_back("(0," + b + ")");
  return DiffModule(m.field(), block_diagonal(m.sys(), n.sys()), std::move(tag));
}

ModuleMorphism identity_morphism(const DiffModule& m) {
  auto p = std::make_shared<const DiffModule>(m);
  return ModuleMorphism(p, p, rf_identity(m.dim()));
}

ModuleMorphism inclusion(const DiffModule& m, ProlongMode mode) {
  const std::size_t n = m.dim();
  return ModuleMorphism(std::make_shared<const DiffModule>(m), std::make_shared<const DiffModule>(prolong(m, mode)),
                        vstack(rf_identity(n), RFMatrix(n, n)));
}

ModuleMorphism projection(const DiffModule& m, ProlongMode mode) {
  const std::size_t n = m.dim();
  return ModuleMorphism(std::make_shared<const DiffModule>(prolong(m, mode)), std::make_shared<const DiffModule>(m),
                        hstack(RFMatrix(n, n), rf_identity(n)));
}

bool is_morphism(const ModuleMorphism& f) {
  const DiffField& field = *f.src().field();
  const RFMatrix lhs = derive_entries(field, f.mat(), field.principal());
  const RFMatrix rhs = f.dst().sys() * f.mat() - f.mat() * f.src().sys();
  return lhs == rhs;
}

RationalFunction induced_derivation(const FieldPtr& field, const RationalFunction& a, ProlongMode mode) {
  const RFMatrix scalar(1, 1, a);
  const RFMatrix f_of_a = prolong_matrix(*field, scalar, mode);
  const RFMatrix g_of_a = RFMatrix::identity(2, a);
  const RFMatrix h = f_of_a - g_of_a;
  const RFMatrix incl = vstack(rf_identity(1), RFMatrix(1, 1));
  const RFMatrix proj = hstack(RFMatrix(1, 1), rf_identity(1));
  const RFMatrix section = vstack(RFMatrix(1, 1), rf_identity(1));
  // h kills i(1), so h = h' o phi with h' = h o section.
  if (!(h * incl).is_zero()) throw Error("F(a) - G(a) does not vanish on the image of i");
  const RFMatrix h_prime = h * section;
  // h' lands in i(1) = ker phi, so h' = i o D.
  if (!(proj * h_prime).is_zero()) throw Error("F(a) - G(a) does not land in the image of i");
  return h_prime(0, 0);
}

}  // namespace dtc
