#include "fermat/group_ring.hpp"

#include <gtest/gtest.h>

#include "../oracles/grid_ring.hpp"
#include "../support/generators.hpp"
#include "fermat/error.hpp"

using namespace fermat;

namespace {

oracle::Grid to_grid(const GroupRingElement& a) {
  oracle::Grid g = oracle::zero_grid(static_cast<int>(a.n()));
  for (std::uint32_t i = 0; i < a.n(); ++i)
    for (std::uint32_t j = 0; j < a.n(); ++j) g[i][j] = static_cast<int>(a.at(i, j));
  return g;
}

GroupRingElement e0(std::uint32_t n, std::uint32_t m = 0) { return GroupRingElement::generator(n, m, 0); }

}  // namespace

TEST(GroupRing, GeneratorHasOrderN) {
  for (std::uint32_t n : {3u, 4u, 5u, 6u}) {
    EXPECT_TRUE((e0(n, 1) * e0(n, 1).pow(n - 1)).is_one());
    EXPECT_TRUE(e0(n, 2).pow(n).is_one());
  }
}

TEST(GroupRing, MultiplicationMatchesNaiveConvolution) {
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t n = trial % 2 ? 3 : 4;
    auto a = testgen::element(n, 1);
    auto b = testgen::element(n, 1);
    EXPECT_EQ(to_grid(a * b), oracle::mul(to_grid(a), to_grid(b), static_cast<int>(n)));
  }
}

TEST(GroupRing, RingAxiomsOnRandomElements) {
  for (int trial = 0; trial < 30; ++trial) {
    auto a = testgen::element(5, 1), b = testgen::element(5, 1), c = testgen::element(5, 1);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(GroupRing, ArityMismatchIsRejected) {
  EXPECT_THROW(e0(3, 1) * e0(3, 2), ArityMismatch);
  EXPECT_THROW(e0(3, 1) * e0(5, 1), ArityMismatch);
}

TEST(GroupRing, InvertTrivialCases) {
  EXPECT_TRUE(invert(GroupRingElement::one(3, 1)).is_one());
  for (std::uint32_t n : {3u, 4u, 6u, 7u}) EXPECT_EQ(invert(e0(n)), e0(n).pow(n - 1));
}

TEST(GroupRing, InvertAgreesWithExhaustiveSearch) {
  for (int trial = 0; trial < 25; ++trial) {
    auto a = testgen::element(3, 1);
    const auto brute = oracle::brute_inverse3(to_grid(a));
    if (brute) {
      EXPECT_EQ(to_grid(invert(a)), *brute);
    } else {
      EXPECT_THROW(invert(a), NotAUnit);
    }
  }
}

TEST(GroupRing, InvertOverCompositeModulus) {
  for (std::uint32_t n : {4u, 6u, 8u, 9u, 12u}) {
    for (int trial = 0; trial < 5; ++trial) {
      auto u = testgen::unit(n, 1);
      EXPECT_TRUE((u * invert(u)).is_one()) << "n = " << n;
    }
  }
  // 1 + 2ε over Z/4 is a unit (its inverse is 1 - 2ε ... since 4 = 0).
  auto u = GroupRingElement::one(4, 0) + e0(4).scaled(2);
  EXPECT_TRUE((u * invert(u)).is_one());
  EXPECT_THROW(invert(GroupRingElement::one(4, 0).scaled(2)), NotAUnit);
}

TEST(GroupRing, InvertOverExtensionField) {
  const auto f = f27();
  GroupRingElement u(f, 3, 0);
  u.set({0}, 5);
  u.set({1}, 11);
  u.set({2}, 1);
  if (is_unit(u)) {
    EXPECT_TRUE((u * invert(u)).is_one());
  }
  // ε_0 - 1 is never a unit: it has augmentation zero.
  auto nonunit = GroupRingElement::generator(f, 3, 0, 0) - GroupRingElement::one(f, 3, 0);
  EXPECT_THROW(invert(nonunit), NotAUnit);
}

TEST(GroupRing, Augmentation) {
  EXPECT_EQ(augmentation(GroupRingElement::one(3, 1)), 1u);
  auto one = GroupRingElement::one(3, 1);
  auto e = e0(3, 1), f = GroupRingElement::generator(3, 1, 1);
  EXPECT_EQ(augmentation((one - e) * (one - f)), 0u);
}

TEST(GroupRing, AugmentationIsMultiplicative) {
  const auto ring = CoefficientRing::integers_mod(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = testgen::element(5, 1), b = testgen::element(5, 1);
    EXPECT_EQ(augmentation(a * b), ring.mul(augmentation(a), augmentation(b)));
  }
}

TEST(GroupRing, SwapW) {
  auto f = GroupRingElement::generator(3, 1, 1);
  EXPECT_EQ(swap_w(e0(3, 1)), f);
  EXPECT_EQ(swap_w(GroupRingElement::monomial(3, {2, 1})), GroupRingElement::monomial(3, {1, 2}));
  EXPECT_THROW(swap_w(e0(3, 0)), ArityMismatch);
}

TEST(GroupRing, DPrimeTrivialCases) {
  EXPECT_TRUE(d_prime(e0(3)).is_one());
  EXPECT_TRUE(d_prime(e0(5)).is_one());
  EXPECT_TRUE(d_prime(GroupRingElement::one(3, 0)).is_one());
  EXPECT_TRUE(d_prime_prime(GroupRingElement::one(3, 1)).is_one());
}

TEST(GroupRing, DPrimeImageIsSymmetric) {
  for (int trial = 0; trial < 30; ++trial) {
    auto g = testgen::unit(trial % 2 ? 3 : 5, 0);
    const auto b = d_prime(g);
    EXPECT_EQ(swap_w(b), b);
  }
}

TEST(GroupRing, DPrimePrimeRejectsAsymmetric) {
  EXPECT_THROW(d_prime_prime(e0(3, 1)), NotSymmetric);
}

TEST(GroupRing, DPrimeMatchesDirectSubstitution) {
  // d'(g)(ε0, ε1) · g(ε0 ε1) = g(ε0) g(ε1), checked on grids
  for (int trial = 0; trial < 10; ++trial) {
    auto g = testgen::unit(3, 0);
    oracle::Grid g0 = oracle::zero_grid(3), g1 = oracle::zero_grid(3), g01 = oracle::zero_grid(3);
    for (int i = 0; i < 3; ++i) {
      g0[i][0] = static_cast<int>(g[i]);
      g1[0][i] = static_cast<int>(g[i]);
      g01[i][i] = static_cast<int>(g[i]);
    }
    EXPECT_EQ(oracle::mul(to_grid(d_prime(g)), g01, 3), oracle::mul(g0, g1, 3));
  }
}

TEST(GroupRing, DlogOfGenerator) {
  const auto d = dlog(e0(5));
  EXPECT_TRUE(d.component(0).is_one());
}

TEST(GroupRing, DlogKernelIsConstantsForPrimeExponent) {
  for (std::uint32_t n : {3u, 5u}) {
    const auto ring = CoefficientRing::integers_mod(n);
    std::size_t total = 1;
    for (std::uint32_t k = 0; k < n; ++k) total *= n;
    for (std::size_t code = 0; code < total; ++code) {
      GroupRingElement u(ring, n, 0);
      std::size_t c = code;
      for (std::uint32_t k = 0; k < n; ++k) {
        u.set_flat(k, static_cast<Coeff>(c % n));
        c /= n;
      }
      if (!is_unit(u)) continue;
      bool constant = true;
      for (std::uint32_t k = 1; k < n; ++k) constant = constant && u[k] == 0;
      EXPECT_EQ(dlog(u).is_zero(), constant);
    }
  }
}

TEST(GroupRing, DlogIsAHomomorphism) {
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint32_t n = trial % 2 ? 3 : 7;
    auto u = testgen::unit(n, 0), v = testgen::unit(n, 0);
    EXPECT_EQ(dlog(u * v), dlog(u) + dlog(v));
  }
}

TEST(GroupRing, DlogKernelIsLargerForCompositeExponent) {
  const auto u = GroupRingElement::monomial(6, {2}, 3) + GroupRingElement::monomial(6, {3}, 2);
  EXPECT_TRUE(differential(u).is_zero());
  EXPECT_TRUE(is_unit(u));
  EXPECT_TRUE(dlog(u).is_zero());
}

TEST(GroupRing, ParseAndFormatRoundTrip) {
  const auto a = parse_lambda1(3, "1-(e+f)(1-e)(1-f)");
  EXPECT_EQ(a, parse_lambda1(3, format_lambda1(a)));
  EXPECT_EQ(parse_lambda1(3, "ffe^2"), parse_lambda1(3, "e^2f^2"));
  EXPECT_EQ(parse_lambda1(3, "-1 + e"), parse_lambda1(3, "2+e"));
  EXPECT_EQ(format_lambda1(parse_lambda1(3, "0")), "0");
  EXPECT_THROW(parse_lambda1(3, "1+"), ParseError);
  EXPECT_THROW(parse_lambda1(3, "1+x"), ParseError);
  for (int trial = 0; trial < 30; ++trial) {
    auto r = testgen::element(4, 1);
    EXPECT_EQ(parse_lambda1(4, format_lambda1(r)), r);
  }
}

TEST(GroupRing, FormatGridUsesSignedResidues) {
  EXPECT_EQ(format_grid(parse_lambda1(3, "1-e^2")), "  1   0   0\n  0   0   0\n -1   0   0\n");
}
