#pragma once

// Gal(L/K) in Kummer coordinates and the differential it induces on Λ_0.

#include <cstdint>
#include <vector>

#include "fermat/group_ring.hpp"

namespace fermat {

/// (c_0, c_1, ..., c_h) mod p with h = (p-1)/2: c_0 is the Kummer value of
/// the root of unity, c_i that of 1 - ζ^{-i}. Addition models composition.
struct KummerCoordinates {
  std::uint32_t p = 3;
  std::vector<Coeff> c;

  /// Reduces the given integers mod p; throws ArityMismatch unless there
  /// are (p+1)/2 of them and Error unless p is an odd prime.
  static KummerCoordinates make(std::uint32_t p, const std::vector<std::int64_t>& values);

  KummerCoordinates operator+(const KummerCoordinates& o) const;
  bool operator==(const KummerCoordinates& o) const = default;
};

/// Coefficients (c_1, ..., c_{p-1}) of Σ c_i ε^i dlog ε.
struct PsiVector {
  std::uint32_t p = 3;
  std::vector<Coeff> entries;

  PsiVector operator+(const PsiVector& o) const;
  bool operator==(const PsiVector& o) const = default;
};

PsiVector psi_from_kummer(const KummerCoordinates& k);

/// Σ entries mod p.
Coeff coordinate_sum(const PsiVector& psi);

/// The closed linear form 2 Σ_{i>=1} c_i + c_0 (p^2-1)/8 mod p that
/// coordinate_sum(psi_from_kummer(k)) should equal.
Coeff coordinate_sum_form(const KummerCoordinates& k);

/// All p^{(p+1)/2} coordinate tuples, lexicographic with c_0 most significant.
std::vector<KummerCoordinates> group_elements(std::uint32_t p);

/// Ψ as an element of Ω(Λ_0) over Z/p (the constant coefficient is 0).
DifferentialElement psi_differential(const PsiVector& psi);

}  // namespace fermat
