#include <gtest/gtest.h>

#include <random>

#include "dtc/diffmod/diff_module.hpp"
#include "dtc/errors.hpp"
#include "support/generators.hpp"

namespace dtc {
namespace {

class DiffModTest : public ::testing::Test {
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

TEST_F(DiffModTest, ProlongOracle) {
  const auto x1 = prolong(mod(m(1, 1, {"t*x"})));
  EXPECT_EQ(x1.sys(), m(2, 2, {"t*x", "x", "0", "t*x"}));
}

TEST_F(DiffModTest, ProlongZeroAndConstantSystems) {
  EXPECT_TRUE(prolong(mod(RFMatrix(3, 3))).sys().is_zero());
  const auto a = m(2, 2, {"x", "1", "x^2", "0"});
  EXPECT_EQ(prolong(mod(a)).sys(), block_diagonal(a, a));
}

TEST_F(DiffModTest, ProlongBasisLabels) {
  const auto x1 = prolong(mod(m(1, 1, {"t"})));
  EXPECT_EQ(x1.basis().labels, (std::vector<std::string>{"1⊗e1", "∂⊗e1"}));
}

TEST_F(DiffModTest, ProlongMorphismOracles) {
  const auto x = mod(m(2, 2, {"t*x", "1", "0", "t"}));
  EXPECT_EQ(prolong_morphism(identity_morphism(x)).mat(), rf_identity(4));
  const auto c = m(2, 2, {"2", "0", "0", "2"});
  const auto scaled = ModuleMorphism(ptr(x), ptr(x), c);
  EXPECT_EQ(prolong_morphism(scaled).mat(), block_diagonal(c, c));
  // F(i) o i = i o i as maps M -> M^(1)(1).
  const auto i = inclusion(x);
  const auto ii = inclusion(prolong(x));
  EXPECT_EQ(prolong_morphism(i).mat() * i.mat(), ii.mat() * i.mat());
}

TEST_F(DiffModTest, ProlongMorphismRejectsNonMorphism) {
  const auto bad = ModuleMorphism(ptr(mod(m(1, 1, {"0"}))), ptr(mod(m(1, 1, {"1"}))), m(1, 1, {"1"}));
  EXPECT_THROW(prolong_morphism(bad), NotAMorphism);
}

TEST_F(DiffModTest, ConstructionOracles) {
  const auto x = mod(m(2, 2, {"t*x", "1", "x", "t"}));
  EXPECT_EQ(tensor(DiffModule::unit(k), x).sys(), x.sys());
  EXPECT_EQ(dual(dual(x)).sys(), x.sys());
  EXPECT_EQ(tensor(mod(m(1, 1, {"x"})), mod(m(1, 1, {"t^2"}))).sys(), m(1, 1, {"x+t^2"}));
  EXPECT_EQ(dsum(x, mod(m(1, 1, {"x"}))).sys(), block_diagonal(x.sys(), m(1, 1, {"x"})));
  EXPECT_EQ(dual(x).sys(), -x.sys().transpose());
  EXPECT_THROW(tensor(x, DiffModule::unit(DiffField::standard_xt())), FieldMismatch);
}

TEST_F(DiffModTest, InclusionProjectionOracles) {
  const auto x = mod(m(1, 1, {"t*x"}));
  const auto i = inclusion(x);
  const auto phi = projection(x);
  EXPECT_EQ(i.mat(), m(2, 1, {"1", "0"}));
  EXPECT_EQ(phi.mat(), m(1, 2, {"0", "1"}));
  EXPECT_TRUE(is_morphism(i));
  EXPECT_TRUE(is_morphism(phi));
  EXPECT_TRUE((phi.mat() * i.mat()).is_zero());
}

TEST_F(DiffModTest, UnitSequenceSplits) {
  const auto one = DiffModule::unit(k);
  EXPECT_TRUE(prolong(one).sys().is_zero());
  EXPECT_EQ(vstack(hstack(rf_identity(1), RFMatrix(1, 1)), projection(one).mat()), rf_identity(2));
}

TEST_F(DiffModTest, IsMorphismOracles) {
  const auto x = mod(m(2, 2, {"0", "1", "t", "0"}));
  EXPECT_TRUE(is_morphism(identity_morphism(x)));
  EXPECT_FALSE(is_morphism(ModuleMorphism(ptr(mod(m(1, 1, {"0"}))), ptr(mod(m(1, 1, {"1"}))), m(1, 1, {"1"}))));
  EXPECT_THROW(ModuleMorphism(ptr(x), ptr(x), RFMatrix(1, 2)), ShapeMismatch);
}

TEST_F(DiffModTest, InducedDerivationOracles) {
  EXPECT_EQ(induced_derivation(k, p("t")), p("1"));
  EXPECT_TRUE(induced_derivation(k, p("5/7")).is_zero());
  EXPECT_EQ(induced_derivation(k, p("t^2")), p("2*t"));
  EXPECT_TRUE(induced_derivation(k, p("t^2*x"), ProlongMode::trivial).is_zero());
}

TEST_F(DiffModTest, TrivialProlongIsDirectSum) {
  const auto a = m(2, 2, {"t*x", "1", "x", "t"});
  EXPECT_EQ(trivial_prolong(mod(a)).sys(), block_diagonal(a, a));
  const auto x = mod(a);
  EXPECT_TRUE((projection(x, ProlongMode::trivial).mat() * inclusion(x, ProlongMode::trivial).mat()).is_zero());
  EXPECT_TRUE(is_morphism(inclusion(x, ProlongMode::trivial)));
  EXPECT_TRUE(is_morphism(projection(x, ProlongMode::trivial)));
}

TEST_F(DiffModTest, ZeroObjectDegenerates) {
  const auto z = mod(RFMatrix(0, 0));
  EXPECT_EQ(prolong(z).dim(), 0u);
  EXPECT_EQ(tensor(z, mod(m(1, 1, {"x"}))).dim(), 0u);
  EXPECT_TRUE(is_morphism(inclusion(z)));
}

class DiffModProperties : public DiffModTest {
 protected:
  std::mt19937_64 rng{1234};

  // f: A -> B with B = f A f^-1 + dx(f) f^-1, so f satisfies the morphism law.
  ModuleMorphism gauge(const DiffModule& src, const RFMatrix& f) {
    const RFMatrix finv = testing::inverse(f);
    const RFMatrix b = f * src.sys() * finv + derive_entries(*k, f, k->principal()) * finv;
    return ModuleMorphism(ptr(src), ptr(mod(b)), f);
  }
};

TEST_F(DiffModProperties, DimensionsAndExactness) {
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const auto x = mod(testing::random_system(rng, n));
    const auto y = mod(testing::random_system(rng, 1 + (trial + 1) % 3));
    EXPECT_EQ(prolong(x).dim(), 2 * n);
    EXPECT_EQ(tensor(x, y).dim(), n * y.dim());
    EXPECT_EQ(dual(x).dim(), n);
    const auto i = inclusion(x);
    const auto phi = projection(x);
    EXPECT_TRUE(is_morphism(i));
    EXPECT_TRUE(is_morphism(phi));
    EXPECT_TRUE((phi.mat() * i.mat()).is_zero());
    EXPECT_EQ(rank(i.mat()), n);
    EXPECT_EQ(rank(phi.mat()), n);
  }
}

TEST_F(DiffModProperties, FunctorialityAndNaturality) {
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 1 + trial % 2;
    const auto x = mod(testing::random_system(rng, n));
    const auto f = gauge(x, testing::random_invertible(rng, n));
    const auto g = gauge(f.dst(), testing::random_invertible(rng, n));
    ASSERT_TRUE(is_morphism(f));
    ASSERT_TRUE(is_morphism(g));
    const auto ff = prolong_morphism(f);
    EXPECT_TRUE(is_morphism(ff));
    EXPECT_EQ(prolong_morphism(g.after(f)).mat(), prolong_morphism(g).mat() * ff.mat());
    EXPECT_EQ(ff.mat() * inclusion(x).mat(), inclusion(f.dst()).mat() * f.mat());
    EXPECT_EQ(f.mat() * projection(x).mat(), projection(f.dst()).mat() * ff.mat());
  }
}

TEST_F(DiffModProperties, InducedDerivationMatchesParameterDerivation) {
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = testing::random_rational(rng, 2, 2);
    EXPECT_EQ(induced_derivation(k, a), k->derive(a, k->parameter()));
    EXPECT_TRUE(induced_derivation(k, a, ProlongMode::trivial).is_zero());
  }
}

}  // namespace
}  // namespace dtc
