#include "fermat/cyclotomic.hpp"

#include <algorithm>
#include <sstream>

#include "fermat/coefficient_ring.hpp"
#include "fermat/error.hpp"

namespace fermat {

namespace {

std::uint32_t mod_exponent(std::int64_t k, std::uint32_t p) {
  const auto m = static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(((k % m) + m) % m);
}

// Fraction-free Gaussian elimination.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

CyclotomicInt::CyclotomicInt(std::uint32_t p) : p_(p), coeffs_(p - 1, 0) {
  if (p < 3 || !is_prime(p)) throw Error("Z[ζ_p] needs an odd prime p");
}

CyclotomicInt::CyclotomicInt(std::uint32_t p, std::vector<BigInt> coeffs) : CyclotomicInt(p) {
  // Fold x^k into x^{k mod p}, then use x^{p-1} = -(1 + ... + x^{p-2}).
  std::vector<BigInt> folded(p, 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) folded[k % p] += coeffs[k];
  for (std::uint32_t k = 0; k + 1 < p; ++k) coeffs_[k] = folded[k] - folded[p - 1];
}

CyclotomicInt CyclotomicInt::integer(std::uint32_t p, const BigInt& v) { return CyclotomicInt(p, {v}); }

CyclotomicInt CyclotomicInt::zeta_power(std::uint32_t p, std::int64_t k) {
  std::vector<BigInt> c(p, 0);
  c[mod_exponent(k, p)] = 1;
  return CyclotomicInt(p, std::move(c));
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
  if (p_ != o.p_) throw ModulusMismatch("cyclotomic integers for different primes");
  CyclotomicInt r = *this;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] += o.coeffs_[k];
  return r;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const { return *this + (-o); }

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
  if (p_ != o.p_) throw ModulusMismatch("cyclotomic integers for different primes");
  std::vector<BigInt> prod(p_, 0);  // product mod x^p - 1
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) prod[(i + j) % p_] += coeffs_[i] * o.coeffs_[j];
  }
  return CyclotomicInt(p_, std::move(prod));
}

CyclotomicInt CyclotomicInt::pow(std::uint64_t e) const {
  CyclotomicInt result = integer(p_, 1);
  CyclotomicInt base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool CyclotomicInt::is_integer() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

std::string CyclotomicInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const auto& c = coeffs_[k];
    if (c == 0) continue;
    if (c < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (k == 0 || mag != 1) os << mag;
    if (k > 0) os << "z" << (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  return first ? "0" : os.str();
}

BigInt norm(const CyclotomicInt& a) {
  const std::uint32_t n = a.p() - 1;
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
  for (std::uint32_t j = 0; j < n; ++j) {
    const auto col = a * CyclotomicInt::zeta_power(a.p(), j);
    for (std::uint32_t i = 0; i < n; ++i) m[i][j] = col.coeffs()[i];
  }
  return bareiss_determinant(std::move(m));
}

CyclotomicInt cyclotomic_unit(std::uint32_t p, std::uint32_t a) {
  const auto ring = CoefficientRing::integers_mod(p);
  const Coeff half = *ring.inverse(2);
  const Coeff exponent = ring.mul(ring.from_int(1 - static_cast<std::int64_t>(a)), half);
  std::vector<BigInt> partial(p, 0);
  for (std::uint32_t k = 0; k < a; ++k) partial[k] = 1;
  return CyclotomicInt::zeta_power(p, exponent) * CyclotomicInt(p, std::move(partial));
}

bool CyclotomicReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

CyclotomicReport verify_cyclotomic_identities(std::uint32_t p, std::uint32_t bound) {
  if (p < 3 || !is_prime(p)) throw Error("verify_cyclotomic_identities: p must be an odd prime");
  if (p > bound) throw Error("verify_cyclotomic_identities: p exceeds the configured bound " + std::to_string(bound));
  CyclotomicReport report;
  report.p = p;
  const auto one = CyclotomicInt::integer(p, 1);
  auto one_minus_zeta = [&](std::int64_t i) { return one - CyclotomicInt::zeta_power(p, i); };

  auto product = one;
  for (std::uint32_t i = 1; i < p; ++i) product = product * one_minus_zeta(i);
  report.checks.push_back({"prod (1 - z^i) = p", product == CyclotomicInt::integer(p, p)});

  bool reflection = true;
  for (std::uint32_t i = 1; i < p; ++i) {
    const auto rhs = -(CyclotomicInt::zeta_power(p, i) * one_minus_zeta(-static_cast<std::int64_t>(i)));
    reflection = reflection && one_minus_zeta(i) == rhs;
  }
  report.checks.push_back({"1 - z^i = -z^i (1 - z^-i)", reflection});

  const std::uint32_t h = (p - 1) / 2;
  auto b = one;
  for (std::uint32_t i = 1; i <= h; ++i) b = b * one_minus_zeta(i);
  const std::uint64_t j8 = ((std::uint64_t{p} * p - 1) / 8) % p;
  auto rhs = CyclotomicInt::zeta_power(p, static_cast<std::int64_t>(j8)) * CyclotomicInt::integer(p, p);
  if (h % 2 == 1) rhs = -rhs;
  report.checks.push_back({"b^2 = (-1)^h z^((p^2-1)/8) p", b * b == rhs});

  bool units = true;
  for (std::uint32_t a = 2; 2 * a < p; ++a) {
    const auto n = norm(cyclotomic_unit(p, a));
    units = units && (n == 1 || n == -1);
  }
  report.checks.push_back({"norm of each cyclotomic unit is +-1", units});
  return report;
}

}  // namespace fermat
