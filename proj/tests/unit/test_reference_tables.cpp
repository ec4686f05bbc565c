#include "fermat/reference_tables.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "../oracles/mod_elimination.hpp"
#include "fermat/bsigma.hpp"
#include "fermat/cohomology.hpp"
#include "fermat/error.hpp"
#include "fermat/homology.hpp"

using namespace fermat;

namespace {

const Json& tables() { return reference_tables(); }

// Independent kernel/image check: v in ker M and rank([im | list]) - rank(im).
struct OracleValidation {
  std::vector<bool> in_kernel;
  int rank_modulo_image;
};

OracleValidation oracle_validate(const FpMatrix& next, const FpMatrix& prev, const std::vector<FpVector>& list) {
  OracleValidation out;
  oracle::Rows next_rows;
  for (std::size_t r = 0; r < next.rows(); ++r) next_rows.push_back(oracle::as_ints(next.row(r)));
  for (const auto& v : list) {
    bool zero = true;
    for (const auto& row : next_rows) {
      long long s = 0;
      for (std::size_t k = 0; k < v.size(); ++k) s += static_cast<long long>(row[k]) * v[k];
      if (s % 3 != 0) zero = false;
    }
    out.in_kernel.push_back(zero);
  }
  oracle::Rows image;
  for (std::size_t c = 0; c < prev.cols(); ++c) image.push_back(oracle::as_ints(prev.column(c)));
  auto both = image;
  for (const auto& v : list) both.push_back(oracle::as_ints(v));
  out.rank_modulo_image = oracle::rank_mod(both, 3) - oracle::rank_mod(image, 3);
  return out;
}

std::size_t count_true(const std::vector<bool>& v) {
  return static_cast<std::size_t>(std::count(v.begin(), v.end(), true));
}

}  // namespace

TEST(ReferenceTables, MatricesMatchComputedActions) {
  const auto c = build_complex(lambda1_module());
  EXPECT_EQ(c.s.transpose(), reference_matrix(tables(), "S"));
  EXPECT_EQ(c.t.transpose(), reference_matrix(tables(), "T"));
  const auto s1 = FpMatrix::identity(3, 4) - h1u_module().sigma();
  EXPECT_EQ(s1.transpose(), reference_matrix(tables(), "S1"));
  EXPECT_TRUE((FpMatrix::identity(3, 4) - h1u_module().tau()).is_zero());
}

TEST(ReferenceTables, BValuesExpand) {
  for (const auto& entry : tables().at("b_values")) {
    const auto c = entry.at("c").get<std::vector<std::int64_t>>();
    const auto b = bsigma_p3(c[0], c[1]);
    for (const auto& text : entry.at("expansions")) EXPECT_EQ(parse_lambda1(3, text.get<std::string>()), b) << text;
  }
}

TEST(ReferenceTables, MonomialOrderMatchesFlatIndex) {
  const auto& order = tables().at("monomial_order");
  ASSERT_EQ(order.size(), 9u);
  for (std::size_t x = 0; x < 9; ++x) {
    auto mono = GroupRingElement::zero(3, 1);
    mono.set_flat(x, 1);
    EXPECT_EQ(parse_lambda1(3, order[x].get<std::string>()), mono);
  }
}

TEST(ReferenceTables, AffineBasisMatchesPattern) {
  const auto basis = reference_h1u_basis(tables());
  const auto computed = h1U_basis(3);
  ASSERT_EQ(basis.size(), computed.size());
  for (std::size_t i = 0; i < basis.size(); ++i) EXPECT_EQ(basis[i], computed[i].w) << "v" << i + 1;
}

TEST(ReferenceTables, KernelListForGroupRing) {
  const auto c = build_complex(lambda1_module());
  const auto vs = lambda1_vectors(tables().at("lambda1").at("ker_y").at("vectors"));
  ASSERT_EQ(vs.size(), 13u);
  for (const auto& v : vs) EXPECT_EQ(c.y * v, FpVector(27, 0));
  EXPECT_EQ(span_basis(3, 18, vs).size(), 13u);
  EXPECT_EQ(span_basis(3, 18, vs), span_basis(3, 18, kernel_basis(c.y)));
}

TEST(ReferenceTables, ImageListIsNotTheImage) {
  // None of the listed generators of the first coboundary space is a
  // coboundary, and the second is not even a cocycle.
  const auto c = build_complex(lambda1_module());
  const auto vs = lambda1_vectors(tables().at("lambda1").at("im_x").at("vectors"));
  ASSERT_EQ(vs.size(), 4u);
  const auto image = image_basis(c.x);
  EXPECT_EQ(image.size(), 4u);
  std::size_t inside = 0;
  for (const auto& v : vs) inside += in_span(3, 18, image, v) ? 1 : 0;
  EXPECT_EQ(inside, 0u);
  EXPECT_NE(c.y * vs[1], FpVector(27, 0));
  EXPECT_EQ(c.y * vs[0], FpVector(27, 0));
}

TEST(ReferenceTables, GroupRingFirstCohomologyList) {
  const auto c = build_complex(lambda1_module());
  const auto& h1 = tables().at("lambda1").at("h1");
  auto vs = lambda1_vectors(h1.at("vectors"));
  ASSERT_EQ(vs.size(), 9u);

  const auto literal = validate_basis(c, 1, vs);
  const auto literal_oracle = oracle_validate(c.y, c.x, vs);
  EXPECT_EQ(literal.in_kernel, literal_oracle.in_kernel);
  EXPECT_FALSE(literal.in_kernel[1]);
  EXPECT_FALSE(literal.valid());

  const auto& reading = h1.at("readings").at(0);
  vs[reading.at("index").get<std::size_t>()] = lambda1_vector(reading.at("vector"));
  const auto fixed = validate_basis(c, 1, vs);
  const auto fixed_oracle = oracle_validate(c.y, c.x, vs);
  EXPECT_TRUE(fixed.valid());
  EXPECT_EQ(count_true(fixed_oracle.in_kernel), 9u);
  EXPECT_EQ(fixed_oracle.rank_modulo_image, 9);
}

TEST(ReferenceTables, GroupRingSecondCohomologyList) {
  const auto c = build_complex(lambda1_module());
  const auto vs = lambda1_vectors(tables().at("lambda1").at("h2").at("vectors"));
  const auto r = validate_basis(c, 2, vs);
  EXPECT_EQ(r.expected, 13u);
  EXPECT_TRUE(r.valid());
  const auto o = oracle_validate(c.z, c.y, vs);
  EXPECT_EQ(count_true(o.in_kernel), 13u);
  EXPECT_EQ(o.rank_modulo_image, 13);
}

TEST(ReferenceTables, AffineFirstCohomologyListHasSignErrors) {
  const auto c = build_complex(h1u_module());
  auto vs = h1u_vectors(tables().at("h1u").at("h1").at("vectors"));
  ASSERT_EQ(vs.size(), 6u);
  const auto literal = validate_basis(c, 1, vs);
  EXPECT_EQ(literal.expected, 6u);
  EXPECT_EQ(literal.in_kernel, (std::vector<bool>{true, true, true, true, false, false}));
  EXPECT_EQ(oracle_validate(c.y, c.x, vs).in_kernel, literal.in_kernel);
  // v_2 + v_4 and v_3 + v_4 in the second summand are cocycles.
  vs[4] = {0, 0, 0, 0, 0, 1, 0, 1};
  vs[5] = {0, 0, 0, 0, 0, 0, 1, 1};
  EXPECT_TRUE(validate_basis(c, 1, vs).valid());
  const auto o = oracle_validate(c.y, c.x, vs);
  EXPECT_EQ(count_true(o.in_kernel), 6u);
  EXPECT_EQ(o.rank_modulo_image, 6);
}

TEST(ReferenceTables, AffineSecondCohomologyList) {
  const auto c = build_complex(h1u_module());
  const auto vs = h1u_vectors(tables().at("h1u").at("h2").at("vectors"));
  const auto r = validate_basis(c, 2, vs);
  EXPECT_EQ(r.expected, 9u);
  EXPECT_TRUE(r.valid());
  EXPECT_EQ(oracle_validate(c.z, c.y, vs).rank_modulo_image, 9);
}

TEST(ReferenceTables, WedgeDimensionsDisagreeWithDiagonalAction) {
  const auto& w = tables().at("wedge");
  const auto h = h_groups(wedge_module());
  EXPECT_EQ(wedge_module().dim(), w.at("dim").get<std::size_t>());
  EXPECT_EQ(h.h1.dim(), 8u);
  EXPECT_EQ(h.h2.dim(), 12u);
  EXPECT_NE(h.h1.dim(), w.at("h1").get<std::size_t>());
  EXPECT_NE(h.h2.dim(), w.at("h2").get<std::size_t>());
}

TEST(ReferenceTables, AnnihilatorDimensions) {
  for (const auto& entry : tables().at("annihilators")) {
    auto h = GroupRingElement::zero(3, 1);
    for (const auto& term : entry.at("terms")) {
      const auto ab = term.at(1).get<std::vector<std::int64_t>>();
      h = h + bsigma_p3(ab[0], ab[1]).scaled(term.at(0).get<std::int64_t>());
    }
    EXPECT_EQ(annihilator(h).size(), entry.at("dim").get<std::size_t>()) << entry.at("name");
  }
}

TEST(ReferenceTables, LoadFromFileAndErrors) {
  const auto loaded = load_reference_tables(FERMAT_REFERENCE_DATA);
  EXPECT_EQ(loaded, tables());
  EXPECT_THROW(load_reference_tables("/nonexistent/tables.json"), ParseError);
  EXPECT_THROW(reference_matrix(tables(), "missing"), Error);
}
