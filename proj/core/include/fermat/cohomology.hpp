#pragma once

// H^0, H^1, H^2 of G = <σ, τ> ≅ (Z/p)^2 with coefficients in a finite
// F_p[G]-module, computed from the total complex of the tensor product of
// the periodic resolutions of the two cyclic factors.
//
// With S = 1-σ, T = 1-τ, U = 1+σ+...+σ^{p-1}, V = 1+τ+...+τ^{p-1} the
// cochain maps are, acting on column vectors,
//
//   X = [S; T]                            M   -> M^2
//   Y = [U 0; T -S; 0 V]                  M^2 -> M^3
//   Z = [S 0 0; T -U 0; 0 V S; 0 0 T]     M^3 -> M^4

#include <cstdint>
#include <string>
#include <vector>

#include "fermat/fp_linalg.hpp"
#include "fermat/group_ring.hpp"

namespace fermat {

class GModule {
 public:
  /// Throws InvalidAction unless the matrices are square of the same size,
  /// commute, and satisfy σ^p = τ^p = 1.
  GModule(std::string name, FpMatrix sigma, FpMatrix tau);

  const std::string& name() const { return name_; }
  std::uint32_t p() const { return sigma_.p(); }
  std::size_t dim() const { return sigma_.rows(); }
  const FpMatrix& sigma() const { return sigma_; }
  const FpMatrix& tau() const { return tau_; }

 private:
  std::string name_;
  FpMatrix sigma_;
  FpMatrix tau_;
};

/// Λ_1 over F_3 with σ, τ acting by multiplication by B_σ, B_τ.
GModule lambda1_module();
/// H_1(U) ⊂ Λ_1 for n = 3 in the basis v_1..v_4.
GModule h1u_module();
/// H_1(X) = H_1(U) / Stab(ε_0 ε_1) for n = 3 on canonical coset representatives.
GModule h1x_module();
/// ∧^2 of a module with the diagonal action g(a ∧ b) = ga ∧ gb.
GModule exterior_square_module(const GModule& m);
/// H_1(U) ∧ H_1(U).
GModule wedge_module();
GModule trivial_module(std::uint32_t p, std::size_t dim);

/// Named module lookup for "lambda1", "h1u", "h1x", "wedge". Throws Error.
GModule named_module(const std::string& name);

struct CochainComplex {
  FpMatrix s, t, u, v;
  FpMatrix x, y, z;
};

CochainComplex build_complex(const GModule& m);

struct CohomologyGroups {
  SubquotientReport h0;
  SubquotientReport h1;
  SubquotientReport h2;
};

CohomologyGroups h_groups(const GModule& m);
CohomologyGroups h_groups(const CochainComplex& c);

/// Kernel of multiplication by h on Λ_m over a prime field.
std::vector<FpVector> annihilator(const GroupRingElement& h);

/// Result of checking a proposed list of cohomology representatives.
struct BasisValidation {
  std::size_t count = 0;
  std::size_t expected = 0;          // dimension of the cohomology group
  std::vector<bool> in_kernel;       // per vector
  std::size_t rank_modulo_image = 0; // rank of the list modulo the image

  bool all_in_kernel() const;
  bool independent() const { return rank_modulo_image == count; }
  bool valid() const { return all_in_kernel() && independent() && count == expected; }
};

/// degree 1: against ker Y / im X; degree 2: against ker Z / im Y.
BasisValidation validate_basis(const CochainComplex& c, int degree, const std::vector<FpVector>& vectors);

}  // namespace fermat
