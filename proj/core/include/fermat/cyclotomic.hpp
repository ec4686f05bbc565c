#pragma once

// Exact arithmetic in Z[ζ_p] = Z[x]/Φ_p(x).

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace fermat {

using BigInt = boost::multiprecision::cpp_int;

class CyclotomicInt {
 public:
  /// Zero of Z[ζ_p]; throws Error unless p is an odd prime.
  explicit CyclotomicInt(std::uint32_t p);
  /// Reduces an arbitrary-length coefficient list (coefficient of x^i at i).
  CyclotomicInt(std::uint32_t p, std::vector<BigInt> coeffs);

  static CyclotomicInt integer(std::uint32_t p, const BigInt& v);
  /// ζ^k for any integer k.
  static CyclotomicInt zeta_power(std::uint32_t p, std::int64_t k);

  std::uint32_t p() const { return p_; }
  /// Exactly p - 1 coefficients.
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  CyclotomicInt operator+(const CyclotomicInt& o) const;
  CyclotomicInt operator-(const CyclotomicInt& o) const;
  CyclotomicInt operator-() const;
  CyclotomicInt operator*(const CyclotomicInt& o) const;
  CyclotomicInt pow(std::uint64_t e) const;
  bool operator==(const CyclotomicInt& o) const = default;

  bool is_integer() const;
  std::string to_string() const;

 private:
  std::uint32_t p_;
  std::vector<BigInt> coeffs_;
};

/// Product of all conjugates, as the determinant of multiplication by `a`.
BigInt norm(const CyclotomicInt& a);

/// ζ^{(1-a)/2} (1 + ζ + ... + ζ^{a-1}), the exponent taken mod p.
CyclotomicInt cyclotomic_unit(std::uint32_t p, std::uint32_t a);

struct IdentityCheck {
  std::string name;
  bool passed = false;
};

struct CyclotomicReport {
  std::uint32_t p = 0;
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
};

inline constexpr std::uint32_t kDefaultCyclotomicBound = 23;

/// Checks, by multiplication only:
///   Π_{i=1}^{p-1} (1 - ζ^i) = p;
///   1 - ζ^i = -ζ^i (1 - ζ^{-i}) for every i;
///   b^2 = (-1)^{(p-1)/2} ζ^{(p^2-1)/8} p with b = Π_{i<=(p-1)/2} (1 - ζ^i);
///   norm of each unit ζ^{(1-a)/2}(1-ζ^a)/(1-ζ), 1 < a < p/2, is ±1.
/// Throws Error if p is not an odd prime or exceeds `bound`.
CyclotomicReport verify_cyclotomic_identities(std::uint32_t p, std::uint32_t bound = kDefaultCyclotomicBound);

}  // namespace fermat
