#include "fermat/coefficient_ring.hpp"

#include <gtest/gtest.h>

#include "fermat/error.hpp"

using namespace fermat;

TEST(CoefficientRing, IntegersModArithmetic) {
  auto r = CoefficientRing::integers_mod(6);
  EXPECT_EQ(r.add(4, 5), 3u);
  EXPECT_EQ(r.sub(1, 4), 3u);
  EXPECT_EQ(r.mul(4, 5), 2u);
  EXPECT_EQ(r.from_int(-1), 5u);
  EXPECT_FALSE(r.is_field());
  EXPECT_FALSE(r.inverse(3).has_value());
  EXPECT_EQ(*r.inverse(5), 5u);
}

TEST(CoefficientRing, Factorize) {
  using F = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
  EXPECT_EQ(factorize(12), (F{{2, 2}, {3, 1}}));
  EXPECT_EQ(factorize(7), (F{{7, 1}}));
  EXPECT_TRUE(is_prime(13));
  EXPECT_FALSE(is_prime(1));
}

TEST(CoefficientRing, F27IsAField) {
  auto f = f27();
  EXPECT_EQ(f.size(), 27u);
  EXPECT_TRUE(f.is_field());
  for (Coeff a = 1; a < 27; ++a) {
    auto inv = f.inverse(a);
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(f.mul(a, *inv), 1u);
  }
  // t^3 = t + 1
  const Coeff t = 3;
  EXPECT_EQ(f.pow(t, 3), f.add(t, 1));
  // Frobenius is additive
  for (Coeff a = 0; a < 27; ++a)
    for (Coeff b = 0; b < 27; ++b) EXPECT_EQ(f.pow(f.add(a, b), 3), f.add(f.pow(a, 3), f.pow(b, 3)));
}

TEST(CoefficientRing, RejectsReducibleModulus) {
  // t^2 - 1 = (t-1)(t+1) over F_3
  EXPECT_THROW(CoefficientRing::galois_field(3, {2, 0, 1}), Error);
}
