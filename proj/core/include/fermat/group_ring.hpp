#pragma once

// Group rings Λ_m = R[ε_0, ..., ε_m] / (ε_i^n - 1) over a finite coefficient
// ring R, their Kähler differentials, and the maps d', d'', w and dlog.
//
// Coefficients are stored densely. The flat index of ε_0^{i_0} ... ε_m^{i_m}
// is i_0 n^m + i_1 n^{m-1} + ... + i_m, so for m = 1 the order is
// 1, ε_1, ε_1^2, ..., ε_0, ε_0 ε_1, ... (ε_0 is the most significant digit).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fermat/coefficient_ring.hpp"
#include "fermat/fp_linalg.hpp"

namespace fermat {

using Exponents = std::vector<std::uint32_t>;

class GroupRingElement {
 public:
  /// The zero element of Λ_m with ε_i^n = 1 over `ring`.
  GroupRingElement(CoefficientRing ring, std::uint32_t n, std::uint32_t m);

  /// Shorthand for the common Z/n coefficient case.
  static GroupRingElement zero(std::uint32_t n, std::uint32_t m);
  static GroupRingElement one(const CoefficientRing& ring, std::uint32_t n, std::uint32_t m);
  static GroupRingElement one(std::uint32_t n, std::uint32_t m);
  static GroupRingElement monomial(const CoefficientRing& ring, std::uint32_t n, const Exponents& exps,
                                   Coeff c = 1);
  static GroupRingElement monomial(std::uint32_t n, const Exponents& exps, std::int64_t c = 1);
  /// ε_var in Λ_m.
  static GroupRingElement generator(const CoefficientRing& ring, std::uint32_t n, std::uint32_t m,
                                    std::uint32_t var);
  static GroupRingElement generator(std::uint32_t n, std::uint32_t m, std::uint32_t var);
  /// Coefficients in flat-index order (length n^(m+1)), values taken mod the ring.
  static GroupRingElement from_coeffs(const CoefficientRing& ring, std::uint32_t n, std::uint32_t m,
                                      std::span<const Coeff> coeffs);
  /// Λ_1 element from an n×n grid: grid[i][j] is the coefficient of ε_0^i ε_1^j.
  static GroupRingElement from_grid(std::uint32_t n, const std::vector<std::vector<std::int64_t>>& grid);

  const CoefficientRing& ring() const { return ring_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t num_vars() const { return m_ + 1; }
  std::size_t size() const { return coeffs_.size(); }

  std::span<const Coeff> coeffs() const { return coeffs_; }
  Coeff coeff(const Exponents& exps) const { return coeffs_[index_of(exps)]; }
  Coeff operator[](std::size_t flat) const { return coeffs_[flat]; }
  /// Grid access for m = 1: coefficient of ε_0^i ε_1^j.
  Coeff at(std::uint32_t i, std::uint32_t j) const;
  void set(const Exponents& exps, Coeff c);
  void set_flat(std::size_t flat, Coeff c);

  std::size_t index_of(const Exponents& exps) const;
  Exponents exponents_of(std::size_t flat) const;

  bool is_zero() const;
  bool is_one() const;
  /// All coefficients lie in the prime subring of the coefficient ring.
  bool in_prime_field() const;
  /// Re-express over another ring whose prime subring contains these
  /// coefficients (e.g. move an F_27 element with F_3 coefficients to Z/3).
  GroupRingElement with_ring(const CoefficientRing& ring) const;

  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator-() const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  GroupRingElement scaled(Coeff c) const;
  GroupRingElement pow(std::uint64_t e) const;

  bool operator==(const GroupRingElement& o) const;

 private:
  void check_compatible(const GroupRingElement& o) const;

  CoefficientRing ring_;
  std::uint32_t n_;
  std::uint32_t m_;
  std::vector<Coeff> coeffs_;
};

/// Element of Ω(Λ_m): components[k] is the coefficient of dlog ε_k.
class DifferentialElement {
 public:
  explicit DifferentialElement(std::vector<GroupRingElement> components);
  static DifferentialElement zero(const CoefficientRing& ring, std::uint32_t n, std::uint32_t m);

  std::uint32_t n() const { return components_.front().n(); }
  std::uint32_t m() const { return components_.front().m(); }
  const std::vector<GroupRingElement>& components() const { return components_; }
  const GroupRingElement& component(std::size_t k) const { return components_.at(k); }

  bool is_zero() const;
  DifferentialElement operator+(const DifferentialElement& o) const;
  DifferentialElement operator-(const DifferentialElement& o) const;
  /// Λ_m-module action.
  DifferentialElement operator*(const GroupRingElement& a) const;
  bool operator==(const DifferentialElement& o) const = default;

 private:
  std::vector<GroupRingElement> components_;
};

GroupRingElement multiply(const GroupRingElement& a, const GroupRingElement& b);

/// Multiplicative inverse; throws NotAUnit.
GroupRingElement invert(const GroupRingElement& u);
bool is_unit(const GroupRingElement& u);

/// Sum of all coefficients.
Coeff augmentation(const GroupRingElement& a);

/// The involution ε_0 <-> ε_1 on Λ_1; throws ArityMismatch for m != 1.
GroupRingElement swap_w(const GroupRingElement& a);
bool is_symmetric(const GroupRingElement& a);

/// Ring map Λ_m -> Λ_{target_m} sending ε_i to the monomial images[i]
/// (an exponent vector of length target_m + 1).
GroupRingElement substitute(const GroupRingElement& a, std::uint32_t target_m, const std::vector<Exponents>& images);

/// d'(g) = g(ε_0) g(ε_1) / g(ε_0 ε_1) for a unit g of Λ_0.
GroupRingElement d_prime(const GroupRingElement& g);

/// d''(F) = F(ε_1, ε_0 ε_2) F(ε_0, ε_2) / (F(ε_0, ε_1 ε_2) F(ε_1, ε_2)) for a
/// symmetric unit F of Λ_1. Throws NotSymmetric or NotAUnit.
GroupRingElement d_prime_prime(const GroupRingElement& f);

/// Exterior derivative: d(ε^I) = ε^I Σ_k I_k dlog ε_k.
DifferentialElement differential(const GroupRingElement& a);

/// dlog(u) = u^{-1} du. Throws NotAUnit.
DifferentialElement dlog(const GroupRingElement& u);

/// Matrix of x -> a x in the flat monomial basis (prime-field coefficients
/// only). Column j holds the coefficients of a times monomial j.
FpMatrix multiplication_matrix(const GroupRingElement& a);

/// Coefficient vector of a prime-field element.
FpVector to_vector(const GroupRingElement& a);
GroupRingElement from_vector(std::uint32_t n, std::uint32_t m, const FpVector& v);

/// Λ_1 over Z/n in the letters e = ε_0, f = ε_1, e.g. "1-e^2f^2+ef".
/// Products of letters are multiplied out, so "ffe^2" reads as e^2 f^2.
GroupRingElement parse_lambda1(std::uint32_t n, std::string_view text);
std::string format_lambda1(const GroupRingElement& a);
/// n×n grid, one row per power of e.
std::string format_grid(const GroupRingElement& a);

}  // namespace fermat
