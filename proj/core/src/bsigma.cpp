#include "fermat/bsigma.hpp"

#include "fermat/error.hpp"

namespace fermat {

namespace {

GroupRingElement from_top_entries(std::int64_t b00, std::int64_t b01, std::int64_t b11) {
  // b02 from row 0, b12 from row 1, b22 from row 2 (b20 = b02, b21 = b12)
  const std::int64_t b02 = 1 - b00 - b01;
  const std::int64_t b12 = -b01 - b11;
  const std::int64_t b22 = -b02 - b12;
  return GroupRingElement::from_grid(3, {{b00, b01, b02}, {b01, b11, b12}, {b02, b12, b22}});
}

}  // namespace

GroupRingElement bsigma_p3(std::int64_t c0, std::int64_t c1) {
  c0 %= 3;
  c1 %= 3;
  return from_top_entries(1 + c0 - c0 * c0, c1 - c0 * c0, -c1 - c0 * c0);
}

GroupRingElement bsigma_from_psi_p3(std::int64_t psi1, std::int64_t psi2) {
  const std::int64_t d = (psi2 - psi1) % 3;
  return from_top_entries(1 + d - d * d, psi1 - d * d, -psi1 - d * d);
}

GroupRingElement bsigma(const KummerCoordinates& k) {
  if (k.p != 3) throw UnsupportedExponent("B is only available in closed form for p = 3");
  return bsigma_p3(k.c.at(0), k.c.at(1));
}

std::vector<GammaSolution> gamma_oracle_p3(std::int64_t psi1, std::int64_t psi2) {
  const auto field = f27();
  const Coeff c1 = field.from_int(psi1);
  const Coeff c2 = field.from_int(psi2);
  const Coeff c = field.add(c1, c2);
  const Coeff c_cubed = field.pow(c, 3);

  std::vector<GammaSolution> out;
  for (Coeff alpha = 0; alpha < field.size(); ++alpha) {
    const Coeff value = field.add(field.sub(field.pow(alpha, 3), alpha), c_cubed);
    if (value != 0) continue;
    const Coeff shift_sq = field.pow(field.add(c, alpha), 2);
    const Coeff d1 = field.sub(field.sub(c1, alpha), shift_sq);
    const Coeff d2 = field.sub(field.sub(alpha, c2), shift_sq);
    const Coeff d0 = field.sub(field.sub(field.one(), d1), d2);
    GroupRingElement gamma(field, 3, 0);
    gamma.set({0}, d0);
    gamma.set({1}, d1);
    gamma.set({2}, d2);
    out.push_back({alpha, gamma});
  }
  return out;
}

VerificationReport verify_bsigma(const GroupRingElement& b) {
  if (b.m() != 1) throw ArityMismatch("verify_bsigma: needs an element of Λ_1");
  const std::uint32_t n = b.n();
  const auto& ring = b.ring();
  VerificationReport r;
  r.symmetric = is_symmetric(b);

  r.zero_line_sums = true;
  for (std::uint32_t k = 1; k < n; ++k) {
    Coeff row = 0, col = 0;
    for (std::uint32_t j = 0; j < n; ++j) {
      row = ring.add(row, b.at(k, j));
      col = ring.add(col, b.at(j, k));
    }
    if (row != 0 || col != 0) r.zero_line_sums = false;
  }

  const auto one = GroupRingElement::one(ring, n, 1);
  const auto e = GroupRingElement::generator(ring, n, 1, 0);
  const auto f = GroupRingElement::generator(ring, n, 1, 1);
  const auto generator = (one - e) * (one - f);
  r.augmentation_ideal = solve(multiplication_matrix(generator), to_vector(b - one)).has_value();

  try {
    r.d2_trivial = d_prime_prime(b).is_one();
  } catch (const NotSymmetric&) {
    r.d2_trivial = false;
  } catch (const NotAUnit&) {
    r.d2_trivial = false;
  }
  return r;
}

std::vector<BRelation> standard_b_relations() {
  return {
      {"B(t^2) + B(t) + B(1)", {{1, {0, 2}}, {1, {0, 1}}, {1, {0, 0}}}},
      {"B(s^2 t) - B(s^2) - B(t) + B(1)", {{1, {2, 1}}, {-1, {2, 0}}, {-1, {0, 1}}, {1, {0, 0}}}},
      {"B(s t) - B(s) - B(t) + B(1)", {{1, {1, 1}}, {-1, {1, 0}}, {-1, {0, 1}}, {1, {0, 0}}}},
      {"B(s^2 t^2) - B(s^2) - B(t^2) + B(1)", {{1, {2, 2}}, {-1, {2, 0}}, {-1, {0, 2}}, {1, {0, 0}}}},
      {"B(s t^2) - B(s) - B(t^2) + B(1)", {{1, {1, 2}}, {-1, {1, 0}}, {-1, {0, 2}}, {1, {0, 0}}}},
  };
}

GroupRingElement evaluate_relation(const BRelation& r) {
  auto acc = GroupRingElement::zero(3, 1);
  const auto ring = acc.ring();
  for (const auto& [coeff, exps] : r.terms)
    acc = acc + bsigma_p3(exps.first, exps.second).scaled(ring.from_int(coeff));
  return acc;
}

BMapAnalysis b_map_analysis() {
  constexpr std::uint32_t p = 3;
  BMapAnalysis a;
  std::vector<FpVector> columns;
  for (const auto& g : group_elements(p)) columns.push_back(to_vector(bsigma(g)));
  a.matrix = FpMatrix::from_columns(p, 9, columns);
  a.kernel = kernel_basis(a.matrix);
  a.kernel_dim = a.kernel.size();
  const auto image = image_basis(a.matrix);
  a.image_dim = image.size();

  std::vector<FpVector> relation_vectors;
  const auto ring = CoefficientRing::integers_mod(p);
  for (const auto& rel : standard_b_relations()) {
    a.relation_checks.emplace_back(rel.label, evaluate_relation(rel).is_zero());
    FpVector v(9, 0);
    for (const auto& [coeff, exps] : rel.terms) {
      const std::size_t idx = exps.first * p + exps.second;
      v[idx] = ring.add(v[idx], ring.from_int(coeff));
    }
    relation_vectors.push_back(v);
  }
  const auto rel_span = span_basis(p, 9, relation_vectors);
  bool all_in_kernel = true;
  for (const auto& v : relation_vectors)
    if (a.matrix * v != FpVector(9, 0)) all_in_kernel = false;
  a.relations_span_kernel = all_in_kernel && rel_span.size() == relation_vectors.size() &&
                            rel_span.size() == a.kernel_dim;

  // Constraint space: symmetric, rows e^1 and e^2 summing to zero.
  std::vector<std::vector<std::int64_t>> constraints;
  for (std::uint32_t i = 0; i < p; ++i)
    for (std::uint32_t j = i + 1; j < p; ++j) {
      std::vector<std::int64_t> row(9, 0);
      row[i * p + j] = 1;
      row[j * p + i] = -1;
      constraints.push_back(row);
    }
  for (std::uint32_t i = 1; i < p; ++i) {
    std::vector<std::int64_t> row(9, 0);
    for (std::uint32_t j = 0; j < p; ++j) row[i * p + j] = 1;
    constraints.push_back(row);
  }
  const auto shape = kernel_basis(FpMatrix::from_rows(p, constraints));
  auto same_span = [&](const std::vector<FpVector>& x, const std::vector<FpVector>& y) {
    return span_basis(p, 9, x) == span_basis(p, 9, y);
  };
  a.image_shape = same_span(image, shape);

  std::vector<FpVector> family;
  for (const char* text : {"1", "e+f-e^2f-ef^2+e^2f^2", "e^2+f^2-e^2f^2", "ef-e^2f-ef^2+e^2f^2"})
    family.push_back(to_vector(parse_lambda1(3, text)));
  a.image_parametrisation = same_span(image, family);
  return a;
}

}  // namespace fermat
