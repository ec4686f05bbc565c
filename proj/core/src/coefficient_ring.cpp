#include "fermat/coefficient_ring.hpp"

#include <sstream>

#include "fermat/error.hpp"

namespace fermat {

namespace {

constexpr std::uint32_t kTableLimit = 256;

std::vector<Coeff> digits(Coeff a, std::uint32_t p, std::uint32_t k) {
  std::vector<Coeff> d(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

Coeff undigits(const std::vector<Coeff>& d, std::uint32_t p) {
  Coeff a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

// Product of two residues of degree < k, reduced modulo a monic polynomial.
Coeff poly_mulmod(Coeff a, Coeff b, std::uint32_t p, const std::vector<Coeff>& modulus) {
  const std::uint32_t k = static_cast<std::uint32_t>(modulus.size() - 1);
  auto da = digits(a, p, k);
  auto db = digits(b, p, k);
  std::vector<std::uint64_t> prod(2 * k - 1, 0);
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p;
  for (std::size_t deg = prod.size(); deg-- > k;) {
    const std::uint64_t lead = prod[deg];
    if (lead == 0) continue;
    for (std::uint32_t i = 0; i <= k; ++i) {
      const std::size_t at = deg - k + i;
      prod[at] = (prod[at] + (p - lead) * modulus[i]) % p;
    }
  }
  std::vector<Coeff> out(k);
  for (std::uint32_t i = 0; i < k; ++i) out[i] = static_cast<Coeff>(prod[i]);
  return undigits(out, p);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> factorize(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t d = 2; std::uint64_t{d} * d <= n; ++d) {
    std::uint32_t e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

CoefficientRing CoefficientRing::integers_mod(std::uint32_t n) {
  if (n < 2) throw Error("integers_mod: modulus must be at least 2");
  CoefficientRing r;
  r.p_ = n;
  r.k_ = 1;
  r.size_ = n;
  r.field_ = is_prime(n);
  return r;
}

CoefficientRing CoefficientRing::galois_field(std::uint32_t p, std::vector<Coeff> modulus) {
  if (!is_prime(p)) throw Error("galois_field: characteristic must be prime");
  if (modulus.size() < 3) throw Error("galois_field: modulus must have degree >= 2");
  if (modulus.back() != 1) throw Error("galois_field: modulus must be monic");
  for (auto& c : modulus) c %= p;
  const auto k = static_cast<std::uint32_t>(modulus.size() - 1);
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    size *= p;
    if (size > (1u << 24)) throw Error("galois_field: field too large");
  }

  CoefficientRing r;
  r.p_ = p;
  r.k_ = k;
  r.size_ = static_cast<std::uint32_t>(size);
  r.field_ = true;
  r.modulus_ = std::move(modulus);

  // Irreducible iff no nonzero element has a zero product partner, i.e. the
  // quotient ring has no zero divisors.
  for (Coeff a = 1; a < r.size_; ++a) {
    for (Coeff b = a; b < r.size_; ++b) {
      if (poly_mulmod(a, b, p, r.modulus_) == 0) throw Error("galois_field: modulus is reducible");
    }
    if (r.size_ > 729) break;  // quadratic scan is only affordable for small fields
  }

  if (r.size_ <= kTableLimit) {
    r.mul_table_.resize(std::size_t{r.size_} * r.size_);
    for (Coeff a = 0; a < r.size_; ++a)
      for (Coeff b = 0; b < r.size_; ++b) r.mul_table_[std::size_t{a} * r.size_ + b] = poly_mulmod(a, b, p, r.modulus_);
  }
  return r;
}

Coeff CoefficientRing::from_int(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return static_cast<Coeff>(m);
}

Coeff CoefficientRing::add(Coeff a, Coeff b) const {
  if (k_ == 1) return static_cast<Coeff>((std::uint64_t{a} + b) % p_);
  auto da = digits(a, p_, k_);
  auto db = digits(b, p_, k_);
  for (std::uint32_t i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
  return undigits(da, p_);
}

Coeff CoefficientRing::neg(Coeff a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  auto da = digits(a, p_, k_);
  for (auto& d : da) d = d == 0 ? 0 : p_ - d;
  return undigits(da, p_);
}

Coeff CoefficientRing::sub(Coeff a, Coeff b) const { return add(a, neg(b)); }

Coeff CoefficientRing::mul(Coeff a, Coeff b) const {
  if (k_ == 1) return static_cast<Coeff>((std::uint64_t{a} * b) % p_);
  if (!mul_table_.empty()) return mul_table_[std::size_t{a} * size_ + b];
  return poly_mulmod(a, b, p_, modulus_);
}

Coeff CoefficientRing::pow(Coeff a, std::uint64_t e) const {
  Coeff result = one();
  Coeff base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::optional<Coeff> CoefficientRing::inverse(Coeff a) const {
  if (k_ == 1) {
    // extended Euclid on (a, n)
    std::int64_t old_r = a, r = p_, old_s = 1, s = 0;
    while (r != 0) {
      const std::int64_t q = old_r / r;
      std::int64_t t = old_r - q * r;
      old_r = r;
      r = t;
      t = old_s - q * s;
      old_s = s;
      s = t;
    }
    if (old_r != 1) return std::nullopt;
    return from_int(old_s);
  }
  if (a == 0) return std::nullopt;
  // a^(q-2) in the multiplicative group of order q-1
  return pow(a, size_ - 2);
}

std::string CoefficientRing::to_string(Coeff a) const {
  if (k_ == 1) return std::to_string(a);
  const auto d = digits(a, p_, k_);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || d[i] != 1) os << d[i];
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

std::string CoefficientRing::describe() const {
  if (k_ == 1) return "Z/" + std::to_string(p_);
  std::ostringstream os;
  os << "F_" << p_ << "[t]/(";
  bool first = true;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    const Coeff c = modulus_[i];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  os << ')';
  return os.str();
}

bool CoefficientRing::operator==(const CoefficientRing& other) const {
  return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
}

CoefficientRing f27() {
  // t^3 - t - 1  ->  [-1, -1, 0, 1] mod 3
  static const CoefficientRing field = CoefficientRing::galois_field(3, {2, 2, 0, 1});
  return field;
}

}  // namespace fermat
