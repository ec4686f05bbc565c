#pragma once

// The unit B_σ of Λ_1 through which an automorphism acts on relative
// homology, for exponent 3, together with an independent reconstruction
// through the gamma element over F_27.

#include <string>
#include <vector>

#include "fermat/fp_linalg.hpp"
#include "fermat/galois_kummer.hpp"
#include "fermat/group_ring.hpp"

namespace fermat {

/// Closed form in Kummer coordinates (c_0, c_1):
/// b00 = 1 + c0 - c0^2, b01 = c1 - c0^2, b11 = -c1 - c0^2, the rest by
/// symmetry and the row sums (1, 0, 0).
GroupRingElement bsigma_p3(std::int64_t c0, std::int64_t c1);

/// The same element from the Ψ coefficients (c_1, c_2):
/// b00 = 1 + c2 - c1 - (c2-c1)^2, b01 = c1 - (c2-c1)^2, b11 = -c1 - (c2-c1)^2.
GroupRingElement bsigma_from_psi_p3(std::int64_t psi1, std::int64_t psi2);

/// Dispatch on the exponent; only p = 3 is available.
GroupRingElement bsigma(const KummerCoordinates& k);

struct GammaSolution {
  Coeff alpha;             // root of a^3 - a + c^3 in F_27
  GroupRingElement gamma;  // d0 + d1 ε + d2 ε^2 in Λ_0 over F_27
};

/// One solution per root of α^3 - α + c^3 = 0 with c = psi1 + psi2.
std::vector<GammaSolution> gamma_oracle_p3(std::int64_t psi1, std::int64_t psi2);

struct VerificationReport {
  bool symmetric = false;
  bool zero_line_sums = false;      // rows and columns 1..n-1 sum to 0
  bool augmentation_ideal = false;  // B - 1 in (1-ε_0)(1-ε_1)Λ_1
  bool d2_trivial = false;          // d''(B) = 1

  bool all() const { return symmetric && zero_line_sums && augmentation_ideal && d2_trivial; }
};

/// Needs a prime exponent (membership is decided by a linear solve over Z/p).
VerificationReport verify_bsigma(const GroupRingElement& b);

/// Σ coeff · B(σ^a τ^b) over terms (coeff, (a, b)).
struct BRelation {
  std::string label;
  std::vector<std::pair<std::int64_t, std::pair<std::uint32_t, std::uint32_t>>> terms;
};

/// The five relations generating the kernel of F_3[G] -> Λ_1.
std::vector<BRelation> standard_b_relations();

/// Σ coeff · B(σ^a τ^b), with σ = (1,0) and τ = (0,1).
GroupRingElement evaluate_relation(const BRelation& r);

struct BMapAnalysis {
  /// 9×9, column k = coefficients of B at group_elements(3)[k].
  FpMatrix matrix;
  std::size_t image_dim = 0;
  std::size_t kernel_dim = 0;
  std::vector<FpVector> kernel;
  std::vector<std::pair<std::string, bool>> relation_checks;
  /// The relations are independent and span the kernel.
  bool relations_span_kernel = false;
  /// Image = symmetric elements whose rows e^1 and e^2 sum to 0.
  bool image_shape = false;
  /// Image = span of the four-parameter family
  /// a00 + a01(e+f) + a02(e^2+f^2) + a11 ef - (a01+a11)(e^2f+ef^2) + (a01+a11-a02)e^2f^2.
  bool image_parametrisation = false;
};

BMapAnalysis b_map_analysis();

}  // namespace fermat
