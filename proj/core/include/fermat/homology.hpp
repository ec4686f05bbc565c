#pragma once

// Homology of the affine Fermat curve U relative to its 2n boundary points
// Y, of U itself and of the projective curve X, all as Λ_1-modules over Z/n.
//
// H_1(U,Y) is free of rank one on a class β, so a relative class is the
// element W of Λ_1 with class W β.

#include <cstdint>
#include <vector>

#include "fermat/fp_linalg.hpp"
#include "fermat/group_ring.hpp"
#include "fermat/smith.hpp"

namespace fermat {

struct RelativeClass {
  GroupRingElement w;
};

/// A point of H_0(Y) = Λ_0 ⊕ Λ_0 (the R-points and the Q-points).
struct BoundaryClass {
  GroupRingElement r;
  GroupRingElement q;
  bool operator==(const BoundaryClass&) const = default;
};

/// δ(Σ a_ij ε_0^i ε_1^j β) = Σ a_ij (ε_0^i ⊕ 0 - 0 ⊕ ε_1^j).
BoundaryClass boundary_delta(const RelativeClass& c);

/// True iff every row sum and column sum of the coefficient grid vanishes.
bool h1U_contains(const RelativeClass& c);

/// (n-1)^2 classes E_ij - E_{i,n-1} - E_{n-1,j} + E_{n-1,n-1} for
/// i, j < n-1, ordered with j outer and i inner. For n = 3 this is
/// v_1, v_2, v_3, v_4 in the usual order.
std::vector<RelativeClass> h1U_basis(std::uint32_t n);

/// Classes in H_1(U) fixed by ε_0 ε_1: D_k - D_0 for k = 1..n-1 with
/// D_k = Σ_i ε_0^i ε_1^{i+k}.
std::vector<RelativeClass> stab_basis(std::uint32_t n);

/// δ as a 2n × n^2 integer matrix: rows 0..n-1 are the R-components,
/// rows n..2n-1 the Q-components, columns are flat Λ_1 indices.
IntMatrix delta_matrix(std::uint32_t n);

/// Ranks over Z/n, read off Smith normal forms.
struct HomologyRanks {
  std::uint32_t n = 0;
  std::size_t relative = 0;     // n^2
  std::size_t kernel_delta = 0;
  std::size_t image_delta = 0;
  std::size_t stab = 0;
  std::size_t projective = 0;   // kernel_delta - stab
  bool free = false;            // every module above is free over Z/n
};

HomologyRanks homology_ranks(std::uint32_t n);

/// H_1(X) = H_1(U) / Stab(ε_0 ε_1) in flat Λ_1 coordinates over Z/n. For
/// composite n the complement comes from a Smith normal form.
SubquotientReport h1X_subquotient(std::uint32_t n);

/// Matrix (over prime Z/n) of W -> B W on span(basis). Throws NotInvariant
/// if some image leaves the span.
FpMatrix action_matrix(const GroupRingElement& b, const std::vector<RelativeClass>& basis);

/// Induced matrix of W -> B W on span(reps + modulus) / span(modulus),
/// in the basis given by the coset representatives.
FpMatrix quotient_action_matrix(const GroupRingElement& b, const std::vector<RelativeClass>& reps,
                                const std::vector<RelativeClass>& modulus);

std::vector<FpVector> to_vectors(const std::vector<RelativeClass>& classes);

}  // namespace fermat
