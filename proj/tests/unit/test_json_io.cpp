#include "fermat/json_io.hpp"

#include <gtest/gtest.h>

#include "../support/generators.hpp"
#include "fermat/error.hpp"

using namespace fermat;

TEST(JsonIo, MatrixRoundTrip) {
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = testgen::matrix(5, testgen::uniform(1, 6), testgen::uniform(1, 6));
    EXPECT_EQ(fp_matrix_from_json(to_json(m)), m);
  }
  const auto j = to_json(FpMatrix::identity(3, 2));
  EXPECT_EQ(j.dump(), R"j({"p":3,"rows":2,"cols":2,"entries":[[1,0],[0,1]]})j");
}

TEST(JsonIo, MatrixShapeErrors) {
  EXPECT_THROW(fp_matrix_from_json(Json::parse(R"j({"p":3,"rows":2,"cols":2,"entries":[[1,0]]})j")), ParseError);
  EXPECT_THROW(fp_matrix_from_json(Json::parse(R"j({"p":3,"rows":1,"cols":2,"entries":[[1]]})j")), ParseError);
  EXPECT_THROW(fp_matrix_from_json(Json::parse(R"j({"rows":1})j")), ParseError);
}

TEST(JsonIo, GroupRingRoundTrip) {
  for (std::uint32_t n : {3u, 5u, 6u}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = testgen::element(n, 1);
      EXPECT_EQ(group_ring_from_json(to_json(a)), a);
    }
  }
  const auto e = parse_lambda1(3, "1-e^2f");
  EXPECT_EQ(to_json(e).dump(), R"j({"n":3,"m":1,"coeffs":{"(0,0)":1,"(2,1)":2}})j");
}

TEST(JsonIo, GroupRingKeyErrors) {
  EXPECT_THROW(group_ring_from_json(Json::parse(R"j({"n":3,"m":1,"coeffs":{"(0,0,0)":1}})j")), ParseError);
  EXPECT_THROW(group_ring_from_json(Json::parse(R"j({"n":3,"m":1,"coeffs":{"(3,0)":1}})j")), ParseError);
  EXPECT_THROW(group_ring_from_json(Json::parse(R"j({"n":3,"m":1,"coeffs":{"junk":1}})j")), ParseError);
}

TEST(JsonIo, KummerAndPsiRoundTrip) {
  const auto k = KummerCoordinates::make(3, {1, -1});
  EXPECT_EQ(kummer_from_json(to_json(k)), k);
  EXPECT_EQ(to_json(k).dump(), R"j({"p":3,"c":[1,2]})j");
  const PsiVector psi{5, {1, 2, 3, 4}};
  EXPECT_EQ(psi_from_json(to_json(psi)), psi);
  EXPECT_THROW(psi_from_json(Json::parse(R"j({"p":5,"entries":[1,2]})j")), ParseError);
  EXPECT_THROW(psi_from_json(Json::parse(R"j({"p":3,"entries":[1,3]})j")), ParseError);
}

TEST(JsonIo, SubquotientRoundTrip) {
  const auto m = testgen::matrix(3, 4, 6);
  const auto r = subquotient(3, 6, kernel_basis(m), {});
  const auto back = subquotient_from_json(to_json(r));
  EXPECT_EQ(back.kernel_basis, r.kernel_basis);
  EXPECT_EQ(back.image_basis, r.image_basis);
  EXPECT_EQ(back.coset_basis, r.coset_basis);
  EXPECT_EQ(back.ambient_dim, r.ambient_dim);
  EXPECT_EQ(back.modulus, r.modulus);
}

TEST(JsonIo, ReportsSerialise) {
  const auto v = to_json(verify_bsigma(bsigma_p3(1, 0)));
  EXPECT_TRUE(v.at("all").get<bool>());
  const auto c = to_json(verify_cyclotomic_identities(5));
  EXPECT_EQ(c.at("p"), 5);
  EXPECT_TRUE(c.at("all_passed").get<bool>());
}
