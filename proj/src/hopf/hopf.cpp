#include "dtc/hopf/hopf.hpp"

#include "dtc/errors.hpp"

namespace dtc {

DiffHopfAlgebra::DiffHopfAlgebra(DiffAlgebra algebra, std::vector<DiffPoly> comult,
                                 std::vector<RationalFunction> counit, std::vector<DiffPoly> coinverse)
    : algebra_(std::move(algebra)) {
  const std::size_t g = algebra_.ring()->generators().size();
  if (comult.size() != g || counit.size() != g || coinverse.size() != g) {
    throw ShapeMismatch("structure maps must give one value per generator");
  }
  const DiffField& field = *ring()->field();
  const std::size_t dt = ring()->derivation();
  for (std::size_t i = 0; i < g; ++i) {
    std::vector<DiffPoly> c{algebra_.normalize(comult[i])};
    std::vector<RationalFunction> e{counit[i]};
    std::vector<DiffPoly> s{algebra_.normalize(coinverse[i])};
    for (std::uint32_t k = 1; k <= order(); ++k) {
      c.push_back(algebra_.derive(c.back()));
      e.push_back(field.derive(e.back(), dt));
      s.push_back(algebra_.derive(s.back()));
    }
    comult_.push_back(std::move(c));
    counit_.push_back(std::move(e));
    coinverse_.push_back(std::move(s));
  }
}

void DiffHopfAlgebra::check_table_index(std::uint32_t generator, std::uint32_t k) const {
  if (generator >= comult_.size()) throw UnknownName("generator index out of range");
  if (k > order()) {
    throw TruncationExhausted(ring()->indet_name(Indet{0, generator, k}) + " exceeds truncation order " +
                              std::to_string(order()));
  }
}

const DiffPoly& DiffHopfAlgebra::comult(std::uint32_t generator, std::uint32_t k) const {
  check_table_index(generator, k);
  return comult_[generator][k];
}

const RationalFunction& DiffHopfAlgebra::counit(std::uint32_t generator, std::uint32_t k) const {
  check_table_index(generator, k);
  return counit_[generator][k];
}

const DiffPoly& DiffHopfAlgebra::coinverse(std::uint32_t generator, std::uint32_t k) const {
  check_table_index(generator, k);
  return coinverse_[generator][k];
}

DiffHopfAlgebra DiffHopfAlgebra::with_comult(std::uint32_t generator, std::uint32_t k, DiffPoly value) const {
  check_table_index(generator, k);
  DiffHopfAlgebra h(*this);
  h.comult_[generator][k] = algebra_.normalize(value);
  return h;
}

DiffHopfAlgebra DiffHopfAlgebra::with_counit(std::uint32_t generator, std::uint32_t k, RationalFunction value) const {
  check_table_index(generator, k);
  DiffHopfAlgebra h(*this);
  h.counit_[generator][k] = std::move(value);
  return h;
}

DiffHopfAlgebra DiffHopfAlgebra::with_coinverse(std::uint32_t generator, std::uint32_t k, DiffPoly value) const {
  check_table_index(generator, k);
  DiffHopfAlgebra h(*this);
  h.coinverse_[generator][k] = algebra_.normalize(value);
  return h;
}

DiffPoly DiffHopfAlgebra::apply_comult(const DiffPoly& x, std::uint32_t slot) const {
  const RingPtr& r = ring();
  return algebra_.normalize(x.map_indets(
      [&](const Indet& y) {
        if (y.slot < slot) return DiffPoly::indeterminate(r, y);
        if (y.slot > slot) return DiffPoly::indeterminate(r, Indet{y.slot + 1, y.generator, y.order});
        return move_slot(move_slot(comult(y.generator, y.order), 1, slot + 1), 0, slot);
      },
      r));
}

DiffPoly DiffHopfAlgebra::apply_counit(const DiffPoly& x, std::uint32_t slot) const {
  const RingPtr& r = ring();
  return algebra_.normalize(x.map_indets(
      [&](const Indet& y) {
        if (y.slot < slot) return DiffPoly::indeterminate(r, y);
        if (y.slot > slot) return DiffPoly::indeterminate(r, Indet{y.slot - 1, y.generator, y.order});
        return DiffPoly(r, counit(y.generator, y.order));
      },
      r));
}

DiffPoly DiffHopfAlgebra::apply_coinverse(const DiffPoly& x, std::uint32_t slot) const {
  const RingPtr& r = ring();
  return algebra_.normalize(x.map_indets(
      [&](const Indet& y) {
        if (y.slot != slot) return DiffPoly::indeterminate(r, y);
        return move_slot(coinverse(y.generator, y.order), 0, slot);
      },
      r));
}

DiffPoly DiffHopfAlgebra::multiply_slots(const DiffPoly& x, std::uint32_t slot) const {
  const RingPtr& r = ring();
  return algebra_.normalize(x.map_indets(
      [&](const Indet& y) {
        if (y.slot <= slot) return DiffPoly::indeterminate(r, y);
        return DiffPoly::indeterminate(r, Indet{y.slot - 1, y.generator, y.order});
      },
      r));
}

namespace {

std::string entry_name(std::size_t i, std::size_t j) { return "X" + std::to_string(i + 1) + std::to_string(j + 1); }

}  // namespace

DiffPoly determinant(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0 || !m.is_square()) throw ShapeMismatch("determinant needs a nonempty square matrix");
  if (n == 1) return m(0, 0);
  DiffPoly det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    PolyMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t k = 0, mc = 0; k < n; ++k) {
        if (k != c) minor(r - 1, mc++) = m(r, k);
      }
    }
    const DiffPoly term = m(0, c) * determinant(minor);
    det += c % 2 == 0 ? term : -term;
  }
  return det;
}

namespace {

PolyMatrix adjugate(const PolyMatrix& m, const RingPtr& ring) {
  const std::size_t n = m.rows();
  PolyMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = DiffPoly(ring, RationalFunction(1));
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      PolyMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c != j) minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      const DiffPoly cofactor = determinant(minor);
      adj(j, i) = (i + j) % 2 == 0 ? cofactor : -cofactor;
    }
  }
  return adj;
}

}  // namespace

DiffHopfAlgebra gl_hopf(FieldPtr field, std::size_t n, std::uint32_t order) {
  if (n == 0) throw Error("matrix size must be positive");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) names.push_back(entry_name(i, j));
  }
  names.emplace_back("d");
  const std::size_t dt = field->parameter();
  const RingPtr ring = DiffPolyRing::create(field, names, dt);
  const auto inv = static_cast<std::uint32_t>(n * n);
  auto x = [&](std::size_t i, std::size_t j, std::uint32_t slot) {
    return DiffPoly::indeterminate(ring, Indet{slot, static_cast<std::uint32_t>(i * n + j), 0});
  };
  PolyMatrix xm(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) xm(i, j) = x(i, j, 0);
  }
  const DiffPoly det = determinant(xm);
  const PolyMatrix adj = adjugate(xm, ring);
  const DiffPoly d0 = DiffPoly::indeterminate(ring, Indet{0, inv, 0});
  const DiffPoly d1 = DiffPoly::indeterminate(ring, Indet{1, inv, 0});

  std::vector<DiffPoly> comult;
  std::vector<RationalFunction> counit;
  std::vector<DiffPoly> coinverse;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      DiffPoly c;
      for (std::size_t k = 0; k < n; ++k) c += x(i, k, 0) * x(k, j, 1);
      comult.push_back(c);
      counit.emplace_back(i == j ? 1 : 0);
      coinverse.push_back(d0 * adj(i, j));
    }
  }
  comult.push_back(d0 * d1);
  counit.emplace_back(1);
  coinverse.push_back(det);

  DiffHopfAlgebra h(DiffAlgebra(ring, UnitRelation{inv, det}, order), std::move(comult), std::move(counit),
                    std::move(coinverse));
  h.matrix_size_ = n;
  return h;
}

DiffPoly gl_entry(const DiffHopfAlgebra& h, std::size_t i, std::size_t j, std::uint32_t order, std::uint32_t slot) {
  const auto n = h.matrix_size();
  if (!n) throw Error("algebra was not built by gl_hopf");
  if (i >= *n || j >= *n) throw ShapeMismatch("matrix entry out of range");
  return h.algebra().generator(entry_name(i, j), order, slot);
}

namespace {

class HopfReport {
 public:
  HopfReport(std::string axiom, std::string objects, const RingPtr& ring) : ring_(ring) {
    report_.axiom = std::move(axiom);
    report_.objects = std::move(objects);
    report_.passed = true;
  }

  bool ok() const { return report_.passed; }

  void equal(const std::string& law, const Indet& at, const DiffPoly& lhs, const DiffPoly& rhs) {
    if (!report_.passed || lhs == rhs) return;
    report_.passed = false;
    report_.mismatch = Mismatch{at.generator, at.order, lhs.to_string(), rhs.to_string()};
    report_.detail = law + " fails on " + ring_->indet_name(at);
  }

  void equal_entry(const std::string& law, std::size_t row, std::size_t col, const DiffPoly& lhs,
                   const DiffPoly& rhs) {
    if (!report_.passed || lhs == rhs) return;
    report_.passed = false;
    report_.mismatch = Mismatch{row, col, lhs.to_string(), rhs.to_string()};
    report_.detail = law + " fails on entry (" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ")";
  }

  void fail(const std::string& detail) {
    if (!report_.passed) return;
    report_.passed = false;
    report_.detail = detail;
  }

  AxiomReport finish() && { return std::move(report_); }

 private:
  RingPtr ring_;
  AxiomReport report_;
};

std::string describe(const DiffHopfAlgebra& h) {
  if (h.matrix_size()) return "GL_" + std::to_string(*h.matrix_size()) + " (order " + std::to_string(h.order()) + ")";
  return "Hopf algebra on " + std::to_string(h.generator_count()) + " generators (order " +
         std::to_string(h.order()) + ")";
}

}  // namespace

AxiomReport hopf_check(const DiffHopfAlgebra& h, std::uint32_t p) {
  if (p > h.order()) {
    throw TruncationExhausted("check order " + std::to_string(p) + " exceeds truncation order " +
                              std::to_string(h.order()));
  }
  const DiffAlgebra& a = h.algebra();
  const RingPtr& ring = h.ring();
  const DiffField& field = *ring->field();
  HopfReport report("hopf", describe(h), ring);
  // Laws reading only the tables of the generator under test run first, so a
  // corrupted entry is attributed to its own generator where possible.
  for (std::uint32_t k = 0; k <= p && report.ok(); ++k) {
    for (std::uint32_t g = 0; g < h.generator_count() && report.ok(); ++g) {
      const Indet at{0, g, k};
      const DiffPoly x = a.normalize(DiffPoly::indeterminate(ring, at));
      const DiffPoly& dx = h.comult(g, k);
      report.equal("left counit law", at, h.apply_counit(dx, 0), x);
      report.equal("right counit law", at, h.apply_counit(dx, 1), x);
      if (k < p) {
        const Indet next{0, g, k + 1};
        report.equal("comultiplication commutes with the derivation", next, h.comult(g, k + 1), a.derive(dx));
        report.equal("counit commutes with the derivation", next, a.constant(h.counit(g, k + 1)),
                     a.constant(field.derive(h.counit(g, k), ring->derivation())));
        report.equal("coinverse commutes with the derivation", next, h.coinverse(g, k + 1),
                     a.derive(h.coinverse(g, k)));
      }
    }
  }
  for (std::uint32_t k = 0; k <= p && report.ok(); ++k) {
    for (std::uint32_t g = 0; g < h.generator_count() && report.ok(); ++g) {
      const Indet at{0, g, k};
      const DiffPoly& dx = h.comult(g, k);
      const DiffPoly unit_of_counit = a.constant(h.counit(g, k));
      report.equal("left antipode law", at, h.multiply_slots(h.apply_coinverse(dx, 0)), unit_of_counit);
      report.equal("right antipode law", at, h.multiply_slots(h.apply_coinverse(dx, 1)), unit_of_counit);
    }
  }
  for (std::uint32_t k = 0; k <= p && report.ok(); ++k) {
    for (std::uint32_t g = 0; g < h.generator_count() && report.ok(); ++g) {
      const Indet at{0, g, k};
      const DiffPoly& dx = h.comult(g, k);
      report.equal("coassociativity", at, h.apply_comult(dx, 0), h.apply_comult(dx, 1));
    }
  }
  // The structure maps must kill the relations and their derivatives.
  for (const DiffPoly& relation : a.relations()) {
    DiffPoly r = relation;
    for (std::uint32_t k = 0; k <= p && report.ok(); ++k, r = r.derive()) {
      const std::string which = "derivative " + std::to_string(k) + " of relation " + relation.to_string();
      if (!h.apply_comult(r).is_zero()) report.fail("comultiplication does not preserve " + which);
      if (!h.apply_counit(r).is_zero()) report.fail("counit does not preserve " + which);
      if (!h.apply_coinverse(r).is_zero()) report.fail("coinverse does not preserve " + which);
    }
  }
  return std::move(report).finish();
}

Comodule standard_comodule(const DiffHopfAlgebra& h) {
  const auto n = h.matrix_size();
  if (!n) throw Error("standard comodule needs an algebra built by gl_hopf");
  Comodule v{PolyMatrix(*n, *n)};
  for (std::size_t i = 0; i < *n; ++i) {
    for (std::size_t j = 0; j < *n; ++j) v.coaction(i, j) = gl_entry(h, i, j);
  }
  return v;
}

Comodule comodule_prolong(const DiffHopfAlgebra& h, const Comodule& v) {
  const std::size_t n = v.dim();
  const PolyMatrix derived = v.coaction.map([&](const DiffPoly& e) { return h.algebra().derive(e); });
  return Comodule{block2x2(v.coaction, derived, PolyMatrix(n, n), v.coaction)};
}

AxiomReport comodule_check(const DiffHopfAlgebra& h, const Comodule& v) {
  const std::size_t n = v.dim();
  HopfReport report("comodule", "comodule of dim " + std::to_string(n) + " over " + describe(h), h.ring());
  const DiffAlgebra& a = h.algebra();
  for (std::size_t i = 0; i < n && report.ok(); ++i) {
    for (std::size_t j = 0; j < n && report.ok(); ++j) {
      DiffPoly expected;
      for (std::size_t k = 0; k < n; ++k) expected += v.coaction(i, k) * move_slot(v.coaction(k, j), 0, 1);
      report.equal_entry("coassociativity", i, j, h.apply_comult(v.coaction(i, j)), a.normalize(expected));
      report.equal_entry("counit law", i, j, h.apply_counit(v.coaction(i, j)),
                         a.constant(RationalFunction(i == j ? 1 : 0)));
    }
  }
  return std::move(report).finish();
}

}  // namespace dtc
