#include "fermat/homology.hpp"

#include <numeric>
#include <optional>

#include "fermat/error.hpp"

namespace fermat {

namespace {

GroupRingElement zn_grid(std::uint32_t n) { return GroupRingElement(CoefficientRing::integers_mod(n), n, 1); }

void check_exponent(std::uint32_t n) {
  if (n < 3) throw Error("homology needs n >= 3");
}

// Coordinates of `v` in span(basis), or nullopt.
std::optional<FpVector> coordinates(std::uint32_t p, const std::vector<FpVector>& basis, const FpVector& v) {
  return solve(FpMatrix::from_columns(p, v.size(), basis), v);
}

}  // namespace

BoundaryClass boundary_delta(const RelativeClass& c) {
  const auto& w = c.w;
  if (w.m() != 1) throw ArityMismatch("boundary_delta: needs an element of Λ_1");
  const auto& ring = w.ring();
  GroupRingElement r(ring, w.n(), 0), q(ring, w.n(), 0);
  for (std::uint32_t i = 0; i < w.n(); ++i)
    for (std::uint32_t j = 0; j < w.n(); ++j) {
      const Coeff a = w.at(i, j);
      r.set({i}, ring.add(r.coeff({i}), a));
      q.set({j}, ring.sub(q.coeff({j}), a));
    }
  return {r, q};
}

bool h1U_contains(const RelativeClass& c) {
  const auto d = boundary_delta(c);
  return d.r.is_zero() && d.q.is_zero();
}

std::vector<RelativeClass> h1U_basis(std::uint32_t n) {
  check_exponent(n);
  const auto ring = CoefficientRing::integers_mod(n);
  const Coeff minus_one = ring.from_int(-1);
  std::vector<RelativeClass> out;
  for (std::uint32_t j = 0; j + 1 < n; ++j)
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
      auto w = zn_grid(n);
      w.set({i, j}, 1);
      w.set({i, n - 1}, minus_one);
      w.set({n - 1, j}, minus_one);
      w.set({n - 1, n - 1}, 1);
      out.push_back({w});
    }
  return out;
}

std::vector<RelativeClass> stab_basis(std::uint32_t n) {
  check_exponent(n);
  const auto ring = CoefficientRing::integers_mod(n);
  auto diagonal = [&](std::uint32_t k) {
    auto w = zn_grid(n);
    for (std::uint32_t i = 0; i < n; ++i) w.set({i, (i + k) % n}, 1);
    return w;
  };
  const auto d0 = diagonal(0);
  std::vector<RelativeClass> out;
  for (std::uint32_t k = 1; k < n; ++k) out.push_back({diagonal(k) - d0});
  return out;
}

IntMatrix delta_matrix(std::uint32_t n) {
  check_exponent(n);
  IntMatrix d(2 * std::size_t{n}, std::size_t{n} * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      const std::size_t col = std::size_t{i} * n + j;
      d(i, col) = 1;
      d(n + j, col) = -1;
    }
  return d;
}

HomologyRanks homology_ranks(std::uint32_t n) {
  HomologyRanks r;
  r.n = n;
  r.relative = std::size_t{n} * n;
  const auto delta = delta_matrix(n);
  const auto delta_shape = zn_map_shape(delta, n);

  // Stab = ker δ ∩ ker(shift - 1), where shift moves a_ij to a_{i+1,j+1}.
  const std::size_t cols = r.relative;
  IntMatrix stacked(delta.rows() + cols, cols);
  for (std::size_t a = 0; a < delta.rows(); ++a)
    for (std::size_t b = 0; b < cols; ++b) stacked(a, b) = delta(a, b);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      const std::size_t src = std::size_t{i} * n + j;
      const std::size_t dst = std::size_t{(i + 1) % n} * n + (j + 1) % n;
      stacked(delta.rows() + dst, src) += 1;
      stacked(delta.rows() + src, src) -= 1;
    }
  const auto stab_shape = zn_map_shape(stacked, n);

  r.free = delta_shape.free && stab_shape.free;
  r.kernel_delta = delta_shape.kernel_rank;
  r.image_delta = delta_shape.image_rank;
  r.stab = stab_shape.kernel_rank;
  r.projective = r.kernel_delta - r.stab;
  return r;
}

std::vector<FpVector> to_vectors(const std::vector<RelativeClass>& classes) {
  std::vector<FpVector> out;
  for (const auto& c : classes) out.emplace_back(c.w.coeffs().begin(), c.w.coeffs().end());
  return out;
}

SubquotientReport h1X_subquotient(std::uint32_t n) {
  check_exponent(n);
  const auto kernel = to_vectors(h1U_basis(n));
  const auto image = to_vectors(stab_basis(n));
  if (is_prime(n)) return subquotient(n, std::size_t{n} * n, kernel, image);

  // Write Stab in the coordinates of the H_1(U) basis: the basis element
  // (i, j), i, j < n-1, is the only one with a nonzero (i, j) entry.
  const std::size_t k = kernel.size();
  IntMatrix stab_coords(k, image.size());
  for (std::size_t c = 0; c < image.size(); ++c)
    for (std::uint32_t j = 0; j + 1 < n; ++j)
      for (std::uint32_t i = 0; i + 1 < n; ++i) {
        const std::int64_t v = image[c][std::size_t{i} * n + j];
        stab_coords(std::size_t{j} * (n - 1) + i, c) = v > static_cast<std::int64_t>(n / 2) ? v - n : v;
      }
  const auto snf = smith_normal_form(stab_coords);
  for (auto inv : snf.invariants)
    if (std::gcd(inv, static_cast<std::int64_t>(n)) != 1)
      throw Error("Stab(ε_0 ε_1) is not a direct summand over Z/" + std::to_string(n));

  SubquotientReport report;
  report.modulus = n;
  report.ambient_dim = std::size_t{n} * n;
  report.kernel_basis = kernel;
  report.image_basis = image;
  const auto ring = CoefficientRing::integers_mod(n);
  for (std::size_t col = snf.invariants.size(); col < k; ++col) {
    FpVector rep(report.ambient_dim, 0);
    for (std::size_t row = 0; row < k; ++row) {
      const Coeff coeff = ring.from_int(snf.left_inverse(row, col));
      for (std::size_t x = 0; x < rep.size(); ++x) rep[x] = ring.add(rep[x], ring.mul(coeff, kernel[row][x]));
    }
    report.coset_basis.push_back(rep);
  }
  return report;
}

FpMatrix action_matrix(const GroupRingElement& b, const std::vector<RelativeClass>& basis) {
  const std::uint32_t p = b.n();
  const auto vectors = to_vectors(basis);
  FpMatrix out(p, basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto image = to_vector(b * basis[j].w);
    const auto x = coordinates(p, vectors, image);
    if (!x) throw NotInvariant("action_matrix: image of basis vector " + std::to_string(j) + " leaves the span");
    for (std::size_t i = 0; i < basis.size(); ++i) out.set(i, j, (*x)[i]);
  }
  return out;
}

FpMatrix quotient_action_matrix(const GroupRingElement& b, const std::vector<RelativeClass>& reps,
                                const std::vector<RelativeClass>& modulus) {
  const std::uint32_t p = b.n();
  const auto modulus_vectors = to_vectors(modulus);
  for (const auto& m : modulus)
    if (!coordinates(p, modulus_vectors, to_vector(b * m.w)))
      throw NotInvariant("quotient_action_matrix: the submodule is not preserved");
  auto vectors = to_vectors(reps);
  for (const auto& v : modulus_vectors) vectors.push_back(v);
  FpMatrix out(p, reps.size(), reps.size());
  for (std::size_t j = 0; j < reps.size(); ++j) {
    const auto x = coordinates(p, vectors, to_vector(b * reps[j].w));
    if (!x) throw NotInvariant("quotient_action_matrix: image leaves the ambient span");
    for (std::size_t i = 0; i < reps.size(); ++i) out.set(i, j, (*x)[i]);
  }
  return out;
}

}  // namespace fermat
