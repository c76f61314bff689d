#include <gtest/gtest.h>

#include <random>

#include "dtc/errors.hpp"
#include "dtc/structmaps/struct_maps.hpp"
#include "support/generators.hpp"

namespace dtc {
namespace {

using namespace structure;

class StructMapsTest : public ::testing::Test {
 protected:
  FieldPtr k = DiffField::standard_xt();
  RationalFunction p(const char* s) const { return k->parse(s); }
  RFMatrix m(std::size_t r, std::size_t c, std::vector<const char*> entries) const {
    std::vector<RationalFunction> d;
    for (auto* e : entries) d.push_back(p(e));
    return RFMatrix(r, c, std::move(d));
  }
  DiffModule mod(RFMatrix a) const { return DiffModule(k, std::move(a)); }
  ModulePtr ptr(const DiffModule& x) const { return std::make_shared<const DiffModule>(x); }
};

TEST_F(StructMapsTest, BraidingOracle) {
  EXPECT_EQ(braiding(2, 2), m(4, 4, {"1", "0", "0", "0", "0", "0", "1", "0", "0", "1", "0", "0", "0", "0", "0", "1"}));
  EXPECT_EQ(braiding(1, 3), rf_identity(3));
}

TEST_F(StructMapsTest, EvaluationOracle) { EXPECT_EQ(evaluation(2), m(1, 4, {"1", "0", "0", "1"})); }

TEST_F(StructMapsTest, DeltaOracles) {
  EXPECT_EQ(delta(1), rf_identity(1));
  const RFMatrix d = delta(2);
  // e_1 (x) e^1 -> (e_1 (x) e^1) (x) (e_1 (x) e^1) + (e_2 (x) e^1) (x) (e_1 (x) e^2)
  for (std::size_t r = 0; r < 16; ++r) EXPECT_EQ(d(r, 0), RationalFunction(r == 0 || r == 9 ? 1 : 0)) << r;
}

TEST_F(StructMapsTest, DeltaIsCounital) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::size_t sq = n * n;
    EXPECT_EQ(kronecker(evaluation(n), rf_identity(sq)) * delta(n), rf_identity(sq));
    EXPECT_EQ(kronecker(rf_identity(sq), evaluation(n)) * delta(n), rf_identity(sq));
  }
}

TEST_F(StructMapsTest, LeibnizOracle) {
  EXPECT_EQ(leibniz(1, 1), m(4, 2, {"1", "0", "0", "1", "0", "1", "0", "0"}));
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t k2 = 1; k2 <= 2; ++k2) EXPECT_EQ(rank(leibniz(n, k2)), 2 * n * k2);
  }
}

TEST_F(StructMapsTest, DualSwapOracles) {
  EXPECT_EQ(dual_swap(1, ProlongMode::differential), m(2, 2, {"0", "1", "1", "0"}));
  for (std::size_t n = 1; n <= 3; ++n) {
    EXPECT_EQ(dual_swap(n, ProlongMode::differential) * dual_swap_inverse(n, ProlongMode::differential),
              rf_identity(2 * n));
    EXPECT_EQ(rank(dual_swap(n, ProlongMode::differential)), 2 * n);
    EXPECT_EQ(dual_swap(n, ProlongMode::trivial), rf_identity(2 * n));
  }
}

TEST_F(StructMapsTest, CoefficientLiftOracles) {
  EXPECT_EQ(coefficient_lift(1, ProlongMode::differential), m(4, 2, {"1", "0", "0", "0", "0", "1", "0", "0"}));
  EXPECT_EQ(coefficient_lift(1, ProlongMode::trivial), m(4, 2, {"1", "0", "0", "0", "0", "0", "0", "0"}));
}

TEST_F(StructMapsTest, EvaluationThroughLift) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const RFMatrix ev_s = evaluation(2 * n) * coefficient_lift(n, ProlongMode::differential);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(ev_s(0, i * n + j), RationalFunction(i == j ? 1 : 0));
        EXPECT_TRUE(ev_s(0, n * n + i * n + j).is_zero());
      }
    }
  }
}

TEST_F(StructMapsTest, WitnessDiffersByTwo) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto w = witness(n, i);
      EXPECT_TRUE(w.via_s.is_zero());
      EXPECT_EQ(w.via_t, RationalFunction(2));
    }
    const auto [via_s, via_t] = witness_composites(n);
    EXPECT_NE(via_s, via_t);
  }
  EXPECT_THROW(witness(2, 2), ShapeMismatch);
}

TEST_F(StructMapsTest, LeibnizExample) {
  const auto a = mod(m(2, 2, {"0", "1", "t", "0"}));
  const auto b = mod(m(1, 1, {"x"}));
  const auto r = verify_axiom("leibniz", a, b);
  EXPECT_TRUE(r.passed) << r.detail;
  EXPECT_EQ(r.axiom, "leibniz");
  EXPECT_EQ(r.objects, "M(dim 2), N(dim 1)");
}

TEST_F(StructMapsTest, ExactnessExample) { EXPECT_TRUE(verify_axiom("exactness", mod(m(1, 1, {"t*x"})), std::nullopt).passed); }

TEST_F(StructMapsTest, UnitObjectPassesAllChecks) {
  const auto one = DiffModule::unit(k);
  for (const char* name : kAxiomNames) {
    for (auto mode : {ProlongMode::differential, ProlongMode::trivial}) {
      const auto r = verify_axiom(name, one, one, {mode, 6});
      EXPECT_TRUE(r.passed) << name << ": " << r.detail;
    }
  }
}

TEST_F(StructMapsTest, ZeroObjectPassesAllChecks) {
  const auto zero = mod(RFMatrix(0, 0));
  for (const char* name : kAxiomNames) {
    const auto r = verify_axiom(name, zero, zero);
    EXPECT_TRUE(r.passed) << name << ": " << r.detail;
  }
}

TEST_F(StructMapsTest, VerifyErrors) {
  const auto a = mod(m(1, 1, {"t"}));
  EXPECT_THROW(verify_axiom("leibniz", a, std::nullopt), Error);
  EXPECT_THROW(verify_axiom("tensor-compat", a, std::nullopt), Error);
  EXPECT_THROW(verify_axiom("pentagon", a, std::nullopt), Error);
  const auto big = mod(RFMatrix(3, 3));
  EXPECT_THROW(verify_axiom("tensor-compat", big, big), DimensionCapExceeded);
  EXPECT_NO_THROW(verify_axiom("tensor-compat", big, big, {ProlongMode::differential, 9}));
  EXPECT_THROW(verify_axiom("leibniz", a, DiffModule::unit(DiffField::standard_xt())), FieldMismatch);
}

TEST_F(StructMapsTest, MismatchReportsFirstEntry) {
  const auto r = verify_axiom("comult", mod(m(1, 1, {"t"})), std::nullopt);
  ASSERT_FALSE(r.passed);
  ASSERT_TRUE(r.mismatch.has_value());
  EXPECT_NE(r.mismatch->lhs, r.mismatch->rhs);
  EXPECT_FALSE(r.detail.empty());
}

TEST_F(StructMapsTest, ModuleLevelMapsHaveExpectedEnds) {
  const auto x = mod(m(2, 2, {"t", "1", "0", "x"}));
  const auto y = mod(m(1, 1, {"x*t"}));
  EXPECT_EQ(map_T(x, y).src().sys(), prolong(tensor(x, y)).sys());
  EXPECT_EQ(map_T(x, y).dst().sys(), tensor(prolong(x), prolong(y)).sys());
  EXPECT_EQ(map_D(x).src().sys(), dual(prolong(x)).sys());
  EXPECT_EQ(map_D(x).dst().sys(), prolong(dual(x)).sys());
  EXPECT_EQ(map_S(x).dst().sys(), tensor(prolong(x), dual(prolong(x))).sys());
  EXPECT_EQ(evaluation(x).dst().dim(), 1u);
  EXPECT_EQ(delta_map(x).dst().dim(), 16u);
}

class StructMapsProperties : public StructMapsTest {
 protected:
  std::mt19937_64 rng{2024};

  DiffModule random_module(std::size_t n) { return mod(testing::random_system(rng, n)); }

  // B = f A f^-1 + dx(f) f^-1 makes f: A -> B a morphism.
  ModuleMorphism gauge(const DiffModule& src, const RFMatrix& f) {
    const RFMatrix finv = testing::inverse(f);
    const RFMatrix b = f * src.sys() * finv + derive_entries(*k, f, k->principal()) * finv;
    return ModuleMorphism(ptr(src), ptr(mod(b)), f);
  }
};

TEST_F(StructMapsProperties, BraidingIsInvolutive) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t q = 1; q <= 3; ++q) EXPECT_EQ(braiding(q, n) * braiding(n, q), rf_identity(n * q));
  }
}

TEST_F(StructMapsProperties, StructuralMapsAreMorphisms) {
  for (int trial = 0; trial < 12; ++trial) {
    const auto x = random_module(1 + trial % 3);
    const auto y = random_module(1 + (trial / 3) % 2);
    EXPECT_TRUE(is_morphism(braiding(x, y)));
    EXPECT_TRUE(is_morphism(evaluation(x)));
    EXPECT_TRUE(is_morphism(delta_map(x)));
    EXPECT_TRUE(is_morphism(map_T(x, y)));
    EXPECT_TRUE(is_morphism(map_D(x)));
    EXPECT_TRUE(is_morphism(map_T(x, y, ProlongMode::trivial)));
    EXPECT_TRUE(is_morphism(map_D(x, ProlongMode::trivial)));
    EXPECT_TRUE(is_morphism(map_S(x, ProlongMode::trivial)));
  }
}

TEST_F(StructMapsProperties, LiftIsMorphismForRandomModules) {
  for (int trial = 0; trial < 12; ++trial) {
    const auto x = random_module(1 + trial % 3);
    EXPECT_TRUE(is_morphism(map_S(x))) << "trial " << trial;
  }
}

TEST_F(StructMapsProperties, LiftIsMorphismForParameterFreeSystems) {
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const auto x = mod(testing::random_poly_matrix(rng, n, n, 1, 2));  // entries in x only
    EXPECT_TRUE(is_morphism(map_S(x)));
  }
}

TEST_F(StructMapsProperties, LeibnizIsInjectiveAndSwapInvertible) {
  for (int trial = 0; trial < 6; ++trial) {
    const auto x = random_module(1 + trial % 3);
    const auto y = random_module(1 + trial % 2);
    EXPECT_EQ(rank(map_T(x, y).mat()), 2 * x.dim() * y.dim());
    EXPECT_EQ(rank(map_D(x).mat()), 2 * x.dim());
  }
}

TEST_F(StructMapsProperties, LeibnizIsNaturalInBothArguments) {
  for (int trial = 0; trial < 6; ++trial) {
    const auto x = random_module(1 + trial % 2);
    const auto y = random_module(1 + (trial + 1) % 2);
    const auto f = gauge(x, testing::random_invertible(rng, x.dim()));
    const auto g = gauge(y, testing::random_invertible(rng, y.dim()));
    ASSERT_TRUE(is_morphism(f));
    ASSERT_TRUE(is_morphism(g));
    const auto fx = prolong_morphism(f).mat();
    const auto gy = prolong_morphism(g).mat();
    const auto id_y = rf_identity(2 * y.dim());
    const auto id_x = rf_identity(2 * x.dim());
    // First argument.
    EXPECT_EQ(map_T(f.dst(), y).mat() * prolong_matrix(*k, kronecker(f.mat(), rf_identity(y.dim()))),
              kronecker(fx, id_y) * map_T(x, y).mat());
    // Second argument.
    EXPECT_EQ(map_T(x, g.dst()).mat() * prolong_matrix(*k, kronecker(rf_identity(x.dim()), g.mat())),
              kronecker(id_x, gy) * map_T(x, y).mat());
  }
}

TEST_F(StructMapsProperties, DualSwapIsNatural) {
  for (int trial = 0; trial < 6; ++trial) {
    const auto x = random_module(1 + trial % 3);
    const auto f = gauge(x, testing::random_invertible(rng, x.dim()));
    // D_M o (F f)^T = F(f^T) o D_{M'}
    EXPECT_EQ(map_D(x).mat() * prolong_morphism(f).mat().transpose(),
              prolong_matrix(*k, f.mat().transpose()) * map_D(f.dst()).mat());
  }
}

TEST_F(StructMapsProperties, LiftIsNatural) {
  for (int trial = 0; trial < 6; ++trial) {
    const auto x = random_module(1 + trial % 2);
    const auto f = gauge(x, testing::random_invertible(rng, x.dim()));
    const RFMatrix finv_t = testing::inverse(f.mat()).transpose();
    const RFMatrix ff = prolong_morphism(f).mat();
    const RFMatrix ff_inv_t = testing::inverse(ff).transpose();
    // S_{M'} o F(f (x) f^-T) = (F f (x) (F f)^-T) o S_M
    EXPECT_EQ(map_S(f.dst()).mat() * prolong_matrix(*k, kronecker(f.mat(), finv_t)),
              kronecker(ff, ff_inv_t) * map_S(x).mat());
  }
}

TEST_F(StructMapsProperties, LiftIsNaturalForParameterFreeData) {
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t n = 1 + trial % 2;
    const auto x = mod(testing::random_poly_matrix(rng, n, n, 1, 2));
    const auto f = gauge(x, testing::random_invertible(rng, n, 1));
    const RFMatrix ff = prolong_morphism(f).mat();
    EXPECT_EQ(map_S(f.dst()).mat() * prolong_matrix(*k, kronecker(f.mat(), testing::inverse(f.mat()).transpose())),
              kronecker(ff, testing::inverse(ff).transpose()) * map_S(x).mat());
  }
}

struct SuiteCase {
  std::size_t n;
  std::size_t m;
};

class DiagramSuite : public StructMapsProperties, public ::testing::WithParamInterface<const char*> {};

TEST_P(DiagramSuite, PassesOnRandomModules) {
  const std::string name = GetParam();
  for (const SuiteCase dims : {SuiteCase{1, 1}, SuiteCase{2, 1}, SuiteCase{2, 2}, SuiteCase{3, 2}}) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto x = random_module(dims.n);
      const auto y = random_module(dims.m);
      for (auto mode : {ProlongMode::differential, ProlongMode::trivial}) {
        const auto r = verify_axiom(name, x, y, {mode, 6});
        EXPECT_TRUE(r.passed) << name << " dims (" << dims.n << "," << dims.m << ") "
                              << (mode == ProlongMode::trivial ? "trivial" : "differential") << ": " << r.detail;
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllAxioms, DiagramSuite, ::testing::ValuesIn(kAxiomNames),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (auto& c : s) {
                             if (c == '-') c = '_';
                           }
                           return s;
                         });

}  // namespace
}  // namespace dtc
