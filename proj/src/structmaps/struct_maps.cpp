#include "dtc/structmaps/struct_maps.hpp"

#include <algorithm>

#include "dtc/errors.hpp"
#include "sparse.hpp"

namespace dtc {

namespace detail {

Sparse braiding(std::size_t n, std::size_t m) {
  Sparse p(n * m, n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) p.add(j * n + i, i * m + j, 1);
  }
  return p;
}

Sparse evaluation(std::size_t n) {
  Sparse e(1, n * n);
  for (std::size_t i = 0; i < n; ++i) e.add(0, i * n + i, 1);
  return e;
}

Sparse delta(std::size_t n) {
  const std::size_t sq = n * n;
  Sparse d(sq * sq, sq);
  // e_i (x) e^j -> sum_k (e_k (x) e^j) (x) (e_i (x) e^k)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) d.add((k * n + j) * sq + (i * n + k), i * n + j, 1);
    }
  }
  return d;
}

Sparse leibniz(std::size_t n, std::size_t m) {
  const std::size_t nm = n * m;
  Sparse t(4 * nm, 2 * nm);
  auto target = [&](std::size_t s, std::size_t i, std::size_t u, std::size_t j) {
    return (s * n + i) * (2 * m) + (u * m + j);
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t plain = i * m + j;
      // 1 (x) (x (x) y) -> (1 (x) x) (x) (1 (x) y)
      t.add(target(0, i, 0, j), plain, 1);
      // d (x) (x (x) y) -> (d (x) x) (x) (1 (x) y) + (1 (x) x) (x) (d (x) y)
      t.add(target(1, i, 0, j), nm + plain, 1);
      t.add(target(0, i, 1, j), nm + plain, 1);
    }
  }
  return t;
}

Sparse dual_swap(std::size_t n, ProlongMode mode) {
  if (mode == ProlongMode::trivial) return Sparse::identity(2 * n);
  // (1 (x) v_j)* <-> d (x) v^j and (d (x) v_j)* <-> 1 (x) v^j; self-inverse.
  Sparse d(2 * n, 2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    d.add(n + j, j, 1);
    d.add(j, n + j, 1);
  }
  return d;
}

Sparse coefficient_lift(std::size_t n, ProlongMode mode) {
  const std::size_t sq = n * n;
  const std::size_t wide = 2 * n;
  Sparse s(wide * wide, 2 * sq);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // theta (x) (v_i (x) v^j) -> (theta (x) v_i) (x) F(v^j), F(v^j) = (1 (x) v_j)*
      s.add(i * wide + j, i * n + j, 1);
      if (mode == ProlongMode::differential) s.add((n + i) * wide + j, sq + i * n + j, 1);
    }
  }
  return s;
}

Sparse unit_left_inverse() {
  Sparse l(1, 2);
  l.add(0, 0, 1);
  return l;
}

Sparse inclusion(std::size_t n) { return vstack(Sparse::identity(n), Sparse(n, n)); }

Sparse projection(std::size_t n) { return hstack(Sparse(n, n), Sparse::identity(n)); }

}  // namespace detail

namespace structure {

RFMatrix braiding(std::size_t n, std::size_t m) { return detail::braiding(n, m).to_dense(); }
RFMatrix evaluation(std::size_t n) { return detail::evaluation(n).to_dense(); }
RFMatrix delta(std::size_t n) { return detail::delta(n).to_dense(); }
RFMatrix leibniz(std::size_t n, std::size_t m) { return detail::leibniz(n, m).to_dense(); }
RFMatrix dual_swap(std::size_t n, ProlongMode mode) { return detail::dual_swap(n, mode).to_dense(); }
RFMatrix dual_swap_inverse(std::size_t n, ProlongMode mode) { return detail::dual_swap(n, mode).to_dense(); }
RFMatrix coefficient_lift(std::size_t n, ProlongMode mode) { return detail::coefficient_lift(n, mode).to_dense(); }
RFMatrix unit_left_inverse() { return detail::unit_left_inverse().to_dense(); }

std::vector<RationalFunction> apply_coefficient_lift(std::size_t n, ProlongMode mode,
                                                     const std::vector<RationalFunction>& x) {
  const detail::Sparse s = detail::coefficient_lift(n, mode);
  if (x.size() != s.cols()) throw ShapeMismatch("lift input has the wrong length");
  std::vector<RationalFunction> y(s.rows());
  for (std::size_t c = 0; c < s.cols(); ++c) {
    if (x[c].is_zero()) continue;
    for (const auto& [r, v] : s.column(c)) y[r] += v * x[c];
  }
  return y;
}

}  // namespace structure

namespace {

ModulePtr share(DiffModule m) { return std::make_shared<const DiffModule>(std::move(m)); }

}  // namespace

ModuleMorphism braiding(const DiffModule& m, const DiffModule& n) {
  return ModuleMorphism(share(tensor(m, n)), share(tensor(n, m)), structure::braiding(m.dim(), n.dim()));
}

ModuleMorphism evaluation(const DiffModule& m) {
  return ModuleMorphism(share(tensor(m, dual(m))), share(DiffModule::unit(m.field())), structure::evaluation(m.dim()));
}

ModuleMorphism delta_map(const DiffModule& m) {
  const DiffModule end = tensor(m, dual(m));
  return ModuleMorphism(share(end), share(tensor(end, end)), structure::delta(m.dim()));
}

ModuleMorphism map_T(const DiffModule& m, const DiffModule& n, ProlongMode mode) {
  return ModuleMorphism(share(prolong(tensor(m, n), mode)), share(tensor(prolong(m, mode), prolong(n, mode))),
                        structure::leibniz(m.dim(), n.dim()));
}

ModuleMorphism map_D(const DiffModule& m, ProlongMode mode) {
  return ModuleMorphism(share(dual(prolong(m, mode))), share(prolong(dual(m), mode)),
                        structure::dual_swap(m.dim(), mode));
}

ModuleMorphism map_S(const DiffModule& m, ProlongMode mode) {
  const DiffModule m1 = prolong(m, mode);
  return ModuleMorphism(share(prolong(tensor(m, dual(m)), mode)), share(tensor(m1, dual(m1))),
                        structure::coefficient_lift(m.dim(), mode));
}

namespace {

using detail::Sparse;

class DiagramCheck {
 public:
  DiagramCheck(std::string axiom, std::string objects, const DiffField& field) : field_(field) {
    report_.axiom = std::move(axiom);
    report_.objects = std::move(objects);
    report_.passed = true;
  }

  // Keeps the first failure only.
  void equal(const std::string& what, const Sparse& lhs, const Sparse& rhs) {
    const auto diff = lhs.first_difference(rhs);
    if (!diff || !report_.passed) return;
    const auto [r, c] = *diff;
    report_.passed = false;
    report_.mismatch = Mismatch{r, c, field_.print(lhs.at(r, c)), field_.print(rhs.at(r, c))};
    report_.detail = what;
  }

  void require(const std::string& what, bool ok) {
    if (ok || !report_.passed) return;
    report_.passed = false;
    report_.detail = what;
  }

  AxiomReport finish() && { return std::move(report_); }

 private:
  const DiffField& field_;
  AxiomReport report_;
};

std::string describe(const DiffModule& m, const std::optional<DiffModule>& n) {
  std::string s = "M(dim " + std::to_string(m.dim()) + ")";
  if (n) s += ", N(dim " + std::to_string(n->dim()) + ")";
  return s;
}

Sparse id(std::size_t n) { return Sparse::identity(n); }

void check_morphism_s(DiagramCheck& c, const DiffField& f, std::size_t n, ProlongMode mode) {
  // ev_{M^(1)} o S_M = i_1^-1 o F(ev_M)
  const Sparse lhs = detail::evaluation(2 * n) * detail::coefficient_lift(n, mode);
  const Sparse rhs = detail::unit_left_inverse() * detail::prolong(f, detail::evaluation(n), mode);
  c.equal("ev o S versus i^-1 o F(ev)", lhs, rhs);
}

void check_leibniz(DiagramCheck& c, std::size_t n, std::size_t m) {
  using detail::inclusion;
  using detail::projection;
  const Sparse t = detail::leibniz(n, m);
  // Left square: T o i_{M(x)N} = i_M (x) i_N.
  c.equal("T o i versus i (x) i", t * inclusion(n * m), kronecker(inclusion(n), inclusion(m)));
  // Right square: (id (x) phi_N ; phi_M (x) id) o T = (i_M (x) id ; id (x) i_N) o phi_{M(x)N}.
  const Sparse split = vstack(kronecker(id(2 * n), projection(m)), kronecker(projection(n), id(2 * m)));
  const Sparse spread = vstack(kronecker(inclusion(n), id(m)), kronecker(id(n), inclusion(m)));
  c.equal("split o T versus spread o phi", split * t, spread * projection(n * m));
}

void check_comult(DiagramCheck& c, const DiffField& f, std::size_t n, ProlongMode mode) {
  // (S (x) S) o T_{E,E} o F(Delta_M) = Delta_{M^(1)} o S_M, E = M (x) M*
  const std::size_t sq = n * n;
  const Sparse s = detail::coefficient_lift(n, mode);
  const Sparse lhs = kronecker(s, s) * (detail::leibniz(sq, sq) * detail::prolong(f, detail::delta(n), mode));
  const Sparse rhs = detail::delta(2 * n) * s;
  c.equal("(S (x) S) o T o F(Delta) versus Delta o S", lhs, rhs);
}

void check_tensor_compat(DiagramCheck& c, const DiffField& f, std::size_t n, std::size_t m, ProlongMode mode) {
  using detail::braiding;
  using detail::coefficient_lift;
  const std::size_t nm = n * m;
  const Sparse t = detail::leibniz(n, m);
  // alpha o S_{M(x)N}, alpha = T (x) id
  const Sparse lhs = kronecker(t, id(2 * nm)) * coefficient_lift(nm, mode);
  // (id (x) T*) o beta o (S_M (x) S_N) o T_{M(x)M*, N(x)N*} o F(id (x) psi_{N,M*} (x) id)
  const Sparse regroup = kronecker(kronecker(id(n), braiding(m, n)), id(m));
  const Sparse beta = kronecker(kronecker(id(2 * n), braiding(2 * n, 2 * m)), id(2 * m));
  Sparse rhs = detail::leibniz(n * n, m * m) * detail::prolong(f, regroup, mode);
  rhs = kronecker(coefficient_lift(n, mode), coefficient_lift(m, mode)) * rhs;
  rhs = beta * rhs;
  rhs = kronecker(id(4 * nm), t.transpose()) * rhs;
  c.equal("alpha o S versus (id (x) T*) o beta o (S (x) S) o T o F(id (x) psi (x) id)", lhs, rhs);
}

void check_dual_compat(DiagramCheck& c, const DiffField& f, std::size_t n, ProlongMode mode) {
  // (D (x) id) o psi o S_M = (id (x) D*) o S_{M*} o F(psi_{M,M*})
  const Sparse d = detail::dual_swap(n, mode);
  const Sparse s = detail::coefficient_lift(n, mode);
  const Sparse lhs = kronecker(d, id(2 * n)) * (detail::braiding(2 * n, 2 * n) * s);
  const Sparse rhs = kronecker(id(2 * n), d.transpose()) * (s * detail::prolong(f, detail::braiding(n, n), mode));
  c.equal("(D (x) id) o psi o S versus (id (x) D*) o S o F(psi)", lhs, rhs);
}

void check_exactness(DiagramCheck& c, const DiffModule& m, ProlongMode mode) {
  const std::size_t n = m.dim();
  const ModuleMorphism i = inclusion(m, mode);
  const ModuleMorphism phi = projection(m, mode);
  c.require("i is a morphism", is_morphism(i));
  c.require("phi is a morphism", is_morphism(phi));
  c.equal("phi o i = 0", Sparse::from_dense(phi.mat() * i.mat()), Sparse(n, n));
  const std::size_t ri = rank(i.mat());
  const std::size_t rp = rank(phi.mat());
  c.require("rank(i) = " + std::to_string(ri) + " but dim is " + std::to_string(n), ri == n);
  c.require("rank(phi) = " + std::to_string(rp) + " but dim is " + std::to_string(n), rp == n);
  c.require("rank(i) + rank(phi) differs from dim M^(1)", ri + rp == 2 * n);
}

void check_unit_splitting(DiagramCheck& c, const FieldPtr& field, ProlongMode mode) {
  const DiffModule one = DiffModule::unit(field);
  const ModuleMorphism i = inclusion(one, mode);
  const ModuleMorphism phi = projection(one, mode);
  const ModuleMorphism left(std::make_shared<const DiffModule>(prolong(one, mode)),
                            std::make_shared<const DiffModule>(one), structure::unit_left_inverse());
  c.require("i_1 is a morphism", is_morphism(i));
  c.require("phi_1 is a morphism", is_morphism(phi));
  c.require("i_1^-1 is a morphism", is_morphism(left));
  const Sparse l = Sparse::from_dense(left.mat());
  const Sparse in = Sparse::from_dense(i.mat());
  const Sparse pr = Sparse::from_dense(phi.mat());
  c.equal("i_1^-1 o i_1 = id", l * in, id(1));
  c.equal("phi_1 o i_1 = 0", pr * in, Sparse(1, 1));
  // a (x) 1 + b d (x) 1 -> (a, b) is the identity on coordinates.
  c.equal("(i_1^-1, phi_1) is an isomorphism onto 1 + 1", vstack(l, pr), id(2));
}

}  // namespace

AxiomReport verify_axiom(const std::string& name, const DiffModule& m, const std::optional<DiffModule>& n,
                         const VerifyOptions& options) {
  if (std::find(std::begin(kAxiomNames), std::end(kAxiomNames), name) == std::end(kAxiomNames)) {
    throw Error("unknown axiom '" + name + "'");
  }
  const bool two_objects = name == "leibniz" || name == "tensor-compat";
  if (two_objects && !n) throw Error("axiom '" + name + "' needs a second module");
  if (n && n->field() != m.field()) throw FieldMismatch();
  const std::size_t size = two_objects ? m.dim() * n->dim() : m.dim();
  if (size > options.cap) {
    throw DimensionCapExceeded("axiom '" + name + "' on dimension " + std::to_string(size) + " exceeds cap " +
                               std::to_string(options.cap));
  }
  const DiffField& f = *m.field();
  DiagramCheck c(name, describe(m, two_objects ? n : std::nullopt), f);
  if (name == "morphismS") {
    check_morphism_s(c, f, m.dim(), options.mode);
  } else if (name == "leibniz") {
    check_leibniz(c, m.dim(), n->dim());
  } else if (name == "comult") {
    check_comult(c, f, m.dim(), options.mode);
  } else if (name == "tensor-compat") {
    check_tensor_compat(c, f, m.dim(), n->dim(), options.mode);
  } else if (name == "dual-compat") {
    check_dual_compat(c, f, m.dim(), options.mode);
  } else if (name == "exactness") {
    check_exactness(c, m, options.mode);
  } else {
    check_unit_splitting(c, m.field(), options.mode);
  }
  return std::move(c).finish();
}

std::pair<RFMatrix, RFMatrix> witness_composites(std::size_t n) {
  const ProlongMode mode = ProlongMode::differential;
  const Sparse ev = detail::evaluation(2 * n);
  const Sparse via_s = ev * detail::coefficient_lift(n, mode);
  const Sparse via_t = ev * (kronecker(Sparse::identity(2 * n), detail::dual_swap(n, mode)) * detail::leibniz(n, n));
  return {via_s.to_dense(), via_t.to_dense()};
}

WitnessValues witness(std::size_t n, std::size_t i) {
  if (i >= n) throw ShapeMismatch("witness index out of range");
  const auto [via_s, via_t] = witness_composites(n);
  const std::size_t col = n * n + i * n + i;  // d (x) (v_i (x) v^i)
  return {via_s(0, col), via_t(0, col)};
}

}  // namespace dtc
