#include "fermat/galois_kummer.hpp"

#include "fermat/error.hpp"

namespace fermat {

namespace {

void check_odd_prime(std::uint32_t p) {
  if (p < 3 || !is_prime(p)) throw Error("Kummer coordinates need an odd prime, got " + std::to_string(p));
}

}  // namespace

KummerCoordinates KummerCoordinates::make(std::uint32_t p, const std::vector<std::int64_t>& values) {
  check_odd_prime(p);
  if (values.size() != (p + 1) / 2)
    throw ArityMismatch("expected " + std::to_string((p + 1) / 2) + " Kummer coordinates for p = " +
                        std::to_string(p));
  const auto ring = CoefficientRing::integers_mod(p);
  KummerCoordinates k{p, {}};
  for (auto v : values) k.c.push_back(ring.from_int(v));
  return k;
}

KummerCoordinates KummerCoordinates::operator+(const KummerCoordinates& o) const {
  if (p != o.p || c.size() != o.c.size()) throw ModulusMismatch("Kummer coordinates for different primes");
  KummerCoordinates r = *this;
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = (c[i] + o.c[i]) % p;
  return r;
}

PsiVector PsiVector::operator+(const PsiVector& o) const {
  if (p != o.p || entries.size() != o.entries.size()) throw ModulusMismatch("Psi vectors for different primes");
  PsiVector r = *this;
  for (std::size_t i = 0; i < entries.size(); ++i) r.entries[i] = (entries[i] + o.entries[i]) % p;
  return r;
}

PsiVector psi_from_kummer(const KummerCoordinates& k) {
  check_odd_prime(k.p);
  const std::uint32_t p = k.p;
  const std::uint32_t h = (p - 1) / 2;
  if (k.c.size() != h + 1) throw ArityMismatch("psi_from_kummer: wrong number of coordinates");
  PsiVector psi{p, std::vector<Coeff>(p - 1, 0)};
  for (std::uint32_t i = 1; i <= p - 1; ++i) {
    if (i <= h) {
      psi.entries[i - 1] = k.c[i];
    } else {
      // entry i = c_{p-i} + (p-i) c_0
      const std::uint32_t j = p - i;
      psi.entries[i - 1] = static_cast<Coeff>((k.c[j] + std::uint64_t{j} * k.c[0]) % p);
    }
  }
  return psi;
}

Coeff coordinate_sum(const PsiVector& psi) {
  std::uint64_t s = 0;
  for (auto e : psi.entries) s += e;
  return static_cast<Coeff>(s % psi.p);
}

Coeff coordinate_sum_form(const KummerCoordinates& k) {
  const std::uint64_t p = k.p;
  std::uint64_t s = 0;
  for (std::size_t i = 1; i < k.c.size(); ++i) s += 2 * k.c[i];
  s += k.c[0] * (((p * p - 1) / 8) % p);
  return static_cast<Coeff>(s % p);
}

std::vector<KummerCoordinates> group_elements(std::uint32_t p) {
  check_odd_prime(p);
  const std::uint32_t len = (p + 1) / 2;
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < len; ++i) {
    count *= p;
    if (count > 10'000'000) throw UnsupportedExponent("group_elements: too many elements to enumerate");
  }
  std::vector<KummerCoordinates> out;
  out.reserve(count);
  for (std::uint64_t x = 0; x < count; ++x) {
    KummerCoordinates k{p, std::vector<Coeff>(len, 0)};
    std::uint64_t y = x;
    for (std::uint32_t i = len; i-- > 0;) {
      k.c[i] = static_cast<Coeff>(y % p);
      y /= p;
    }
    out.push_back(std::move(k));
  }
  return out;
}

DifferentialElement psi_differential(const PsiVector& psi) {
  const auto ring = CoefficientRing::integers_mod(psi.p);
  GroupRingElement coeff(ring, psi.p, 0);
  for (std::uint32_t i = 1; i < psi.p; ++i) coeff.set({i}, psi.entries[i - 1]);
  return DifferentialElement({coeff});
}

}  // namespace fermat
