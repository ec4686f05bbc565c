#include "fermat/cohomology.hpp"

#include <gtest/gtest.h>

#include "../oracles/bar_complex.hpp"
#include "fermat/bsigma.hpp"
#include "fermat/error.hpp"
#include "fermat/reference_tables.hpp"

using namespace fermat;

namespace {

oracle::Matrix to_oracle(const FpMatrix& m) {
  oracle::Matrix out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(oracle::as_ints(m.row(r)));
  return out;
}

std::array<int, 3> bar_dims(const GModule& m) {
  return oracle::BarComplex(static_cast<int>(m.p()), to_oracle(m.sigma()), to_oracle(m.tau())).dims();
}

std::array<int, 3> dims(const GModule& m) {
  const auto h = h_groups(m);
  return {static_cast<int>(h.h0.dim()), static_cast<int>(h.h1.dim()), static_cast<int>(h.h2.dim())};
}

std::vector<FpVector> ideal_span(const std::vector<GroupRingElement>& gens) {
  std::vector<FpVector> vs;
  for (const auto& g : gens)
    for (std::uint32_t i = 0; i < 3; ++i)
      for (std::uint32_t j = 0; j < 3; ++j) vs.push_back(to_vector(g * GroupRingElement::monomial(3, {i, j})));
  return span_basis(3, 9, vs);
}

}  // namespace

TEST(Cohomology, TrivialModuleMapsVanish) {
  const auto c = build_complex(trivial_module(3, 1));
  EXPECT_TRUE(c.x.is_zero());
  EXPECT_TRUE(c.y.is_zero());
  EXPECT_TRUE(c.z.is_zero());
}

TEST(Cohomology, TrivialModuleDimensions) {
  EXPECT_EQ(dims(trivial_module(3, 1)), (std::array<int, 3>{1, 2, 3}));
  EXPECT_EQ(bar_dims(trivial_module(3, 1)), (std::array<int, 3>{1, 2, 3}));
  EXPECT_EQ(dims(trivial_module(5, 1)), (std::array<int, 3>{1, 2, 3}));
  EXPECT_EQ(dims(trivial_module(3, 6)), (std::array<int, 3>{6, 12, 18}));
}

TEST(Cohomology, GroupRingModuleMatrices) {
  const auto c = build_complex(lambda1_module());
  EXPECT_EQ(c.s.transpose(), reference_matrix(reference_tables(), "S"));
  EXPECT_EQ(c.t.transpose(), reference_matrix(reference_tables(), "T"));
  // column j of S is the coefficient vector of (1 - B_σ) times monomial j
  const auto one_minus = GroupRingElement::one(3, 1) - bsigma_p3(1, 0);
  for (std::size_t j = 0; j < 9; ++j) {
    auto mono = GroupRingElement::zero(3, 1);
    mono.set_flat(j, 1);
    EXPECT_EQ(c.s.column(j), to_vector(one_minus * mono));
  }
  EXPECT_TRUE(c.v.is_zero());
  for (auto x : c.u.entries()) EXPECT_EQ(x, 1u);
  EXPECT_TRUE((c.y * c.x).is_zero());
  EXPECT_TRUE((c.z * c.y).is_zero());
}

TEST(Cohomology, GroupRingModuleDimensions) {
  EXPECT_EQ(dims(lambda1_module()), (std::array<int, 3>{5, 9, 13}));
  const auto h = h_groups(lambda1_module());
  EXPECT_EQ(h.h1.kernel_dim(), 13u);
  EXPECT_EQ(h.h1.image_dim(), 4u);
}

TEST(Cohomology, AffineHomologyDimensions) {
  const auto m = h1u_module();
  EXPECT_EQ(dims(m), (std::array<int, 3>{3, 6, 9}));
  EXPECT_EQ(bar_dims(m), dims(m));
  const auto c = build_complex(m);
  EXPECT_TRUE(c.t.is_zero());
  EXPECT_TRUE(c.u.is_zero());
  EXPECT_TRUE(c.v.is_zero());
}

TEST(Cohomology, ProjectiveHomologyAgreesWithBarComplex) {
  const auto m = h1x_module();
  EXPECT_EQ(m.dim(), 2u);
  EXPECT_EQ(bar_dims(m), dims(m));
}

TEST(Cohomology, WedgeWithDiagonalAction) {
  const auto w = wedge_module();
  EXPECT_EQ(w.dim(), 6u);
  // The linearised map ∧²(1-σ) vanishes, but 1 - ∧²σ does not.
  const auto s1 = FpMatrix::identity(3, 4) - h1u_module().sigma();
  EXPECT_TRUE(exterior_square(s1).is_zero());
  EXPECT_EQ(rank(FpMatrix::identity(3, 6) - w.sigma()), 2u);
  EXPECT_EQ(dims(w), (std::array<int, 3>{4, 8, 12}));
  EXPECT_EQ(bar_dims(w), (std::array<int, 3>{4, 8, 12}));
}

TEST(Cohomology, WedgeWithVanishingLinearisedActionIsTrivial) {
  // Taking σ - 1 on the wedge to be ∧²(σ - 1) = 0 makes the module trivial.
  const auto s1 = FpMatrix::identity(3, 4) - h1u_module().sigma();
  const auto sigma = FpMatrix::identity(3, 6) - exterior_square(s1);
  const GModule linearised("linearised", sigma, FpMatrix::identity(3, 6));
  EXPECT_EQ(dims(linearised), (std::array<int, 3>{6, 12, 18}));
}

TEST(Cohomology, RegularRepresentationIsAcyclic) {
  const GModule regular("regular", multiplication_matrix(GroupRingElement::generator(3, 1, 0)),
                        multiplication_matrix(GroupRingElement::generator(3, 1, 1)));
  EXPECT_EQ(dims(regular), (std::array<int, 3>{1, 0, 0}));
}

TEST(Cohomology, InvalidActionsRejected) {
  const auto a = FpMatrix::from_rows(3, {{1, 1}, {0, 1}});
  const auto b = FpMatrix::from_rows(3, {{1, 0}, {1, 1}});
  EXPECT_THROW(GModule("noncommuting", a, b), InvalidAction);
  const auto order_two = FpMatrix::from_rows(3, {{2, 0}, {0, 1}});
  EXPECT_THROW(GModule("order two", order_two, FpMatrix::identity(3, 2)), InvalidAction);
  EXPECT_THROW(GModule("sizes", a, FpMatrix::identity(3, 3)), InvalidAction);
}

TEST(Cohomology, Annihilators) {
  const auto one = GroupRingElement::one(3, 1);
  const auto bs = bsigma_p3(1, 0), bt = bsigma_p3(0, 1);
  EXPECT_EQ(annihilator(one + bt + bt * bt).size(), 9u);
  EXPECT_EQ(annihilator(one + bs + bs * bs).size(), 8u);

  const auto fixed_sigma = annihilator(one - bs);
  EXPECT_EQ(fixed_sigma.size(), 5u);
  EXPECT_EQ(span_basis(3, 9, fixed_sigma),
            ideal_span({parse_lambda1(3, "1+e+e^2"), parse_lambda1(3, "1+f+f^2")}));

  // 1 - B_τ has rank 2, so its annihilator has dimension 7.
  const auto fixed_tau = annihilator(one - bt);
  EXPECT_EQ(fixed_tau.size(), 7u);
  EXPECT_EQ(fixed_tau.size(), kernel_basis(build_complex(lambda1_module()).t).size());
  EXPECT_EQ(span_basis(3, 9, fixed_tau), ideal_span({parse_lambda1(3, "e-f"), parse_lambda1(3, "1+f+f^2")}));
}

TEST(Cohomology, SumZeroHyperplane) {
  const auto one = GroupRingElement::one(3, 1);
  const auto bs = bsigma_p3(1, 0);
  for (const auto& v : annihilator(one + bs + bs * bs)) {
    Coeff s = 0;
    for (auto x : v) s = (s + x) % 3;
    EXPECT_EQ(s, 0u);
  }
}

TEST(Cohomology, ValidateBasisReportsFailures) {
  const auto c = build_complex(trivial_module(3, 1));
  const auto ok = validate_basis(c, 1, {{1, 0}, {0, 1}});
  EXPECT_TRUE(ok.valid());
  const auto dependent = validate_basis(c, 1, {{1, 0}, {2, 0}});
  EXPECT_FALSE(dependent.independent());
  EXPECT_FALSE(dependent.valid());
  EXPECT_THROW(validate_basis(c, 3, {}), Error);
}

TEST(Cohomology, NamedModules) {
  EXPECT_EQ(named_module("lambda1").dim(), 9u);
  EXPECT_EQ(named_module("h1u").dim(), 4u);
  EXPECT_EQ(named_module("h1x").dim(), 2u);
  EXPECT_EQ(named_module("wedge").dim(), 6u);
  EXPECT_THROW(named_module("nope"), Error);
}
