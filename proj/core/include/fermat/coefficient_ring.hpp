#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fermat {

/// A coefficient value. Interpretation depends on the owning CoefficientRing:
/// a residue in [0, n) for Z/n, or the base-p digit encoding of a polynomial
/// for F_{p^k} (digit i is the coefficient of t^i).
using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Prime factorisation as (prime, exponent) pairs in increasing order.
std::vector<std::pair<std::uint32_t, std::uint32_t>> factorize(std::uint32_t n);

/// Runtime description of a finite coefficient ring: either Z/n or a finite
/// field F_p[t]/(m(t)) for a fixed monic irreducible m of degree k >= 2.
///
/// Values are plain Coeff integers, so group-ring elements over either kind
/// of ring share one storage layout.
class CoefficientRing {
 public:
  /// Z/n, n >= 2.
  static CoefficientRing integers_mod(std::uint32_t n);

  /// F_p[t]/(modulus). `modulus` lists coefficients low-to-high and must be
  /// monic; irreducibility is checked by exhaustive root/factor search, so
  /// keep p^k small.
  static CoefficientRing galois_field(std::uint32_t p, std::vector<Coeff> modulus);

  std::uint32_t characteristic() const { return p_; }
  /// Extension degree k (1 for Z/n).
  std::uint32_t degree() const { return k_; }
  /// Number of elements.
  std::uint32_t size() const { return size_; }
  bool is_field() const { return field_; }
  bool is_extension() const { return k_ > 1; }
  const std::vector<Coeff>& modulus() const { return modulus_; }

  Coeff zero() const { return 0; }
  Coeff one() const { return 1; }
  /// Image of an integer under Z -> ring.
  Coeff from_int(std::int64_t v) const;

  Coeff add(Coeff a, Coeff b) const;
  Coeff sub(Coeff a, Coeff b) const;
  Coeff neg(Coeff a) const;
  Coeff mul(Coeff a, Coeff b) const;
  Coeff pow(Coeff a, std::uint64_t e) const;
  std::optional<Coeff> inverse(Coeff a) const;
  bool is_unit(Coeff a) const { return inverse(a).has_value(); }

  /// True when `a` lies in the prime subring (Z/n itself, or F_p inside F_{p^k}).
  bool in_prime_field(Coeff a) const { return a < p_; }

  /// "3", "2t^2+t+1", ...
  std::string to_string(Coeff a) const;
  std::string describe() const;

  bool operator==(const CoefficientRing& other) const;

 private:
  CoefficientRing() = default;

  std::uint32_t p_ = 2;  // n for Z/n, characteristic for fields
  std::uint32_t k_ = 1;
  std::uint32_t size_ = 2;
  bool field_ = false;
  std::vector<Coeff> modulus_;       // monic, low-to-high; empty for Z/n
  std::vector<Coeff> mul_table_;     // size_^2 entries for small extension fields
};

/// F_27 = F_3[t]/(t^3 - t - 1), the extension used for the gamma-element oracle.
CoefficientRing f27();

}  // namespace fermat
