#include "fermat/group_ring.hpp"

#include <algorithm>
#include <optional>

#include "fermat/error.hpp"

namespace fermat {

namespace {

constexpr std::size_t kMaxTerms = std::size_t{1} << 22;

std::size_t ipow(std::uint32_t base, std::uint32_t e) {
  std::size_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    r *= base;
    if (r > kMaxTerms) throw Error("group ring too large to store densely");
  }
  return r;
}

// Digit-wise sum of two flat indices (exponent addition mod n).
std::size_t add_index(std::size_t x, std::size_t y, std::uint32_t n, std::uint32_t vars) {
  std::size_t out = 0, place = 1;
  for (std::uint32_t v = 0; v < vars; ++v) {
    out += ((x % n + y % n) % n) * place;
    x /= n;
    y /= n;
    place *= n;
  }
  return out;
}

// Gaussian elimination over a coefficient field: solve A x = b, A square.
std::optional<std::vector<Coeff>> solve_over_field(const CoefficientRing& ring, std::vector<Coeff> a,
                                                   std::vector<Coeff> b) {
  const std::size_t n = b.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) continue;
    if (piv != r) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[piv * n + k], a[r * n + k]);
      std::swap(b[piv], b[r]);
    }
    const Coeff inv = *ring.inverse(a[r * n + c]);
    for (std::size_t k = 0; k < n; ++k) a[r * n + k] = ring.mul(a[r * n + k], inv);
    b[r] = ring.mul(b[r], inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i * n + c] == 0) continue;
      const Coeff f = a[i * n + c];
      for (std::size_t k = 0; k < n; ++k) a[i * n + k] = ring.sub(a[i * n + k], ring.mul(f, a[r * n + k]));
      b[i] = ring.sub(b[i], ring.mul(f, b[r]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r < n) return std::nullopt;
  std::vector<Coeff> x(n, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

GroupRingElement invert_over_field(const GroupRingElement& u) {
  const auto& ring = u.ring();
  const std::size_t size = u.size();
  std::vector<Coeff> unit_rhs(size, 0);
  unit_rhs[0] = 1;

  if (!ring.is_extension()) {
    const auto x = solve(multiplication_matrix(u), unit_rhs);
    if (!x) throw NotAUnit("invert: element is not a unit");
    return GroupRingElement::from_coeffs(ring, u.n(), u.m(), *x);
  }

  // column j = u * (monomial j)
  std::vector<Coeff> a(size * size, 0);
  const std::uint32_t vars = u.num_vars();
  for (std::size_t j = 0; j < size; ++j)
    for (std::size_t x = 0; x < size; ++x) {
      if (u[x] == 0) continue;
      a[add_index(x, j, u.n(), vars) * size + j] = u[x];
    }
  const auto x = solve_over_field(ring, std::move(a), std::move(unit_rhs));
  if (!x) throw NotAUnit("invert: element is not a unit");
  return GroupRingElement::from_coeffs(ring, u.n(), u.m(), *x);
}

// Inverse over Z/q^e from the inverse over Z/q by Newton iteration v <- v(2 - uv).
GroupRingElement invert_prime_power(const GroupRingElement& u, std::uint32_t q, std::uint32_t e) {
  std::uint32_t qe = 1;
  for (std::uint32_t i = 0; i < e; ++i) qe *= q;
  const auto ring_q = CoefficientRing::integers_mod(q);
  const auto ring_qe = CoefficientRing::integers_mod(qe);

  std::vector<Coeff> low(u.size());
  std::vector<Coeff> full(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    low[i] = u[i] % q;
    full[i] = u[i] % qe;
  }
  const auto u_q = GroupRingElement::from_coeffs(ring_q, u.n(), u.m(), low);
  const auto u_qe = GroupRingElement::from_coeffs(ring_qe, u.n(), u.m(), full);
  const auto v_q = invert_over_field(u_q);

  auto v = GroupRingElement::from_coeffs(ring_qe, u.n(), u.m(), v_q.coeffs());
  const auto two = GroupRingElement::one(ring_qe, u.n(), u.m()).scaled(2);
  for (std::uint32_t precision = 1; precision < e; precision *= 2) v = v * (two - u_qe * v);
  if (!(u_qe * v).is_one()) throw NotAUnit("invert: Newton lift failed");
  return v;
}

}  // namespace

GroupRingElement::GroupRingElement(CoefficientRing ring, std::uint32_t n, std::uint32_t m)
    : ring_(std::move(ring)), n_(n), m_(m) {
  if (n < 1) throw Error("group ring exponent n must be positive");
  coeffs_.assign(ipow(n, m + 1), 0);
}

GroupRingElement GroupRingElement::zero(std::uint32_t n, std::uint32_t m) {
  return GroupRingElement(CoefficientRing::integers_mod(n), n, m);
}

GroupRingElement GroupRingElement::one(const CoefficientRing& ring, std::uint32_t n, std::uint32_t m) {
  GroupRingElement a(ring, n, m);
  a.coeffs_[0] = ring.one();
  return a;
}

GroupRingElement GroupRingElement::one(std::uint32_t n, std::uint32_t m) {
  return one(CoefficientRing::integers_mod(n), n, m);
}

GroupRingElement GroupRingElement::monomial(const CoefficientRing& ring, std::uint32_t n, const Exponents& exps,
                                            Coeff c) {
  if (exps.empty()) throw ArityMismatch("monomial: need at least one exponent");
  GroupRingElement a(ring, n, static_cast<std::uint32_t>(exps.size() - 1));
  a.set(exps, c);
  return a;
}

GroupRingElement GroupRingElement::monomial(std::uint32_t n, const Exponents& exps, std::int64_t c) {
  const auto ring = CoefficientRing::integers_mod(n);
  return monomial(ring, n, exps, ring.from_int(c));
}

GroupRingElement GroupRingElement::generator(const CoefficientRing& ring, std::uint32_t n, std::uint32_t m,
                                             std::uint32_t var) {
  if (var > m) throw ArityMismatch("generator: variable index out of range");
  Exponents e(m + 1, 0);
  e[var] = 1;
  return monomial(ring, n, e);
}

GroupRingElement GroupRingElement::generator(std::uint32_t n, std::uint32_t m, std::uint32_t var) {
  return generator(CoefficientRing::integers_mod(n), n, m, var);
}

GroupRingElement GroupRingElement::from_coeffs(const CoefficientRing& ring, std::uint32_t n, std::uint32_t m,
                                               std::span<const Coeff> coeffs) {
  GroupRingElement a(ring, n, m);
  if (coeffs.size() != a.coeffs_.size()) throw ArityMismatch("from_coeffs: wrong number of coefficients");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= ring.size()) throw Error("from_coeffs: coefficient out of range");
    a.coeffs_[i] = coeffs[i];
  }
  return a;
}

GroupRingElement GroupRingElement::from_grid(std::uint32_t n, const std::vector<std::vector<std::int64_t>>& grid) {
  const auto ring = CoefficientRing::integers_mod(n);
  GroupRingElement a(ring, n, 1);
  if (grid.size() != n) throw ArityMismatch("from_grid: expected n rows");
  for (std::uint32_t i = 0; i < n; ++i) {
    if (grid[i].size() != n) throw ArityMismatch("from_grid: expected n columns");
    for (std::uint32_t j = 0; j < n; ++j) a.coeffs_[std::size_t{i} * n + j] = ring.from_int(grid[i][j]);
  }
  return a;
}

Coeff GroupRingElement::at(std::uint32_t i, std::uint32_t j) const {
  if (m_ != 1) throw ArityMismatch("at: grid access needs m = 1");
  return coeffs_[std::size_t{i % n_} * n_ + j % n_];
}

void GroupRingElement::set(const Exponents& exps, Coeff c) { coeffs_[index_of(exps)] = c; }

void GroupRingElement::set_flat(std::size_t flat, Coeff c) { coeffs_.at(flat) = c; }

std::size_t GroupRingElement::index_of(const Exponents& exps) const {
  if (exps.size() != num_vars()) throw ArityMismatch("index_of: exponent vector has wrong length");
  std::size_t idx = 0;
  for (auto e : exps) idx = idx * n_ + e % n_;
  return idx;
}

Exponents GroupRingElement::exponents_of(std::size_t flat) const {
  Exponents e(num_vars());
  for (std::size_t k = e.size(); k-- > 0;) {
    e[k] = static_cast<std::uint32_t>(flat % n_);
    flat /= n_;
  }
  return e;
}

bool GroupRingElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c == 0; });
}

bool GroupRingElement::is_one() const {
  if (coeffs_[0] != ring_.one()) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](Coeff c) { return c == 0; });
}

bool GroupRingElement::in_prime_field() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [this](Coeff c) { return ring_.in_prime_field(c); });
}

GroupRingElement GroupRingElement::with_ring(const CoefficientRing& ring) const {
  if (!in_prime_field()) throw ModulusMismatch("with_ring: coefficients outside the prime subring");
  if (ring.characteristic() != ring_.characteristic())
    throw ModulusMismatch("with_ring: characteristic mismatch");
  return from_coeffs(ring, n_, m_, coeffs_);
}

void GroupRingElement::check_compatible(const GroupRingElement& o) const {
  if (n_ != o.n_ || m_ != o.m_) throw ArityMismatch("group ring elements live in different rings");
  if (!(ring_ == o.ring_)) throw ModulusMismatch("group ring elements have different coefficient rings");
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  check_compatible(o);
  GroupRingElement r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = ring_.add(coeffs_[i], o.coeffs_[i]);
  return r;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r = *this;
  for (auto& c : r.coeffs_) c = ring_.neg(c);
  return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const { return *this + (-o); }

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  check_compatible(o);
  GroupRingElement r(ring_, n_, m_);
  const std::uint32_t vars = num_vars();
  for (std::size_t x = 0; x < coeffs_.size(); ++x) {
    if (coeffs_[x] == 0) continue;
    for (std::size_t y = 0; y < o.coeffs_.size(); ++y) {
      if (o.coeffs_[y] == 0) continue;
      const std::size_t z = add_index(x, y, n_, vars);
      r.coeffs_[z] = ring_.add(r.coeffs_[z], ring_.mul(coeffs_[x], o.coeffs_[y]));
    }
  }
  return r;
}

GroupRingElement GroupRingElement::scaled(Coeff c) const {
  GroupRingElement r = *this;
  for (auto& v : r.coeffs_) v = ring_.mul(v, c);
  return r;
}

GroupRingElement GroupRingElement::pow(std::uint64_t e) const {
  GroupRingElement result = one(ring_, n_, m_);
  GroupRingElement base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool GroupRingElement::operator==(const GroupRingElement& o) const {
  return n_ == o.n_ && m_ == o.m_ && ring_ == o.ring_ && coeffs_ == o.coeffs_;
}

DifferentialElement::DifferentialElement(std::vector<GroupRingElement> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw ArityMismatch("DifferentialElement: no components");
  const auto& first = components_.front();
  if (components_.size() != first.num_vars())
    throw ArityMismatch("DifferentialElement: need one component per variable");
  for (const auto& c : components_)
    if (c.n() != first.n() || c.m() != first.m() || !(c.ring() == first.ring()))
      throw ArityMismatch("DifferentialElement: components from different rings");
}

DifferentialElement DifferentialElement::zero(const CoefficientRing& ring, std::uint32_t n, std::uint32_t m) {
  return DifferentialElement(std::vector<GroupRingElement>(m + 1, GroupRingElement(ring, n, m)));
}

bool DifferentialElement::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const auto& c) { return c.is_zero(); });
}

DifferentialElement DifferentialElement::operator+(const DifferentialElement& o) const {
  if (components_.size() != o.components_.size()) throw ArityMismatch("DifferentialElement: arity mismatch");
  auto out = components_;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = out[k] + o.components_[k];
  return DifferentialElement(std::move(out));
}

DifferentialElement DifferentialElement::operator-(const DifferentialElement& o) const {
  if (components_.size() != o.components_.size()) throw ArityMismatch("DifferentialElement: arity mismatch");
  auto out = components_;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = out[k] - o.components_[k];
  return DifferentialElement(std::move(out));
}

DifferentialElement DifferentialElement::operator*(const GroupRingElement& a) const {
  auto out = components_;
  for (auto& c : out) c = c * a;
  return DifferentialElement(std::move(out));
}

GroupRingElement multiply(const GroupRingElement& a, const GroupRingElement& b) { return a * b; }

GroupRingElement invert(const GroupRingElement& u) {
  const auto& ring = u.ring();
  if (ring.is_field()) return invert_over_field(u);

  // Z/n with n composite: invert modulo each prime power, then recombine.
  const std::uint32_t n = ring.characteristic();
  std::vector<Coeff> result(u.size(), 0);
  std::uint64_t modulus_so_far = 1;
  for (const auto& [q, e] : factorize(n)) {
    const auto v = invert_prime_power(u, q, e);
    std::uint64_t qe = 1;
    for (std::uint32_t i = 0; i < e; ++i) qe *= q;
    // x = r (mod modulus_so_far), x = v (mod qe)
    const auto ring_qe = CoefficientRing::integers_mod(static_cast<std::uint32_t>(qe));
    const Coeff m_inv = *ring_qe.inverse(static_cast<Coeff>(modulus_so_far % qe));
    for (std::size_t i = 0; i < u.size(); ++i) {
      const std::uint64_t r = result[i];
      const std::uint64_t diff = (v[i] + qe - r % qe) % qe;
      const std::uint64_t t = diff * m_inv % qe;
      result[i] = static_cast<Coeff>(r + modulus_so_far * t);
    }
    modulus_so_far *= qe;
  }
  auto inv = GroupRingElement::from_coeffs(ring, u.n(), u.m(), result);
  if (!(u * inv).is_one()) throw NotAUnit("invert: element is not a unit");
  return inv;
}

bool is_unit(const GroupRingElement& u) {
  try {
    invert(u);
    return true;
  } catch (const NotAUnit&) {
    return false;
  }
}

Coeff augmentation(const GroupRingElement& a) {
  Coeff s = 0;
  for (auto c : a.coeffs()) s = a.ring().add(s, c);
  return s;
}

GroupRingElement swap_w(const GroupRingElement& a) {
  if (a.m() != 1) throw ArityMismatch("swap_w: needs an element of Λ_1");
  return substitute(a, 1, {{0, 1}, {1, 0}});
}

bool is_symmetric(const GroupRingElement& a) { return swap_w(a) == a; }

GroupRingElement substitute(const GroupRingElement& a, std::uint32_t target_m, const std::vector<Exponents>& images) {
  if (images.size() != a.num_vars()) throw ArityMismatch("substitute: need one image per variable");
  for (const auto& img : images)
    if (img.size() != target_m + 1) throw ArityMismatch("substitute: image has wrong arity");
  GroupRingElement out(a.ring(), a.n(), target_m);
  const std::uint32_t n = a.n();
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x] == 0) continue;
    const auto src = a.exponents_of(x);
    Exponents dst(target_m + 1, 0);
    for (std::size_t v = 0; v < src.size(); ++v)
      for (std::size_t k = 0; k < dst.size(); ++k)
        dst[k] = static_cast<std::uint32_t>((dst[k] + std::uint64_t{src[v]} * images[v][k]) % n);
    const std::size_t idx = out.index_of(dst);
    out.set_flat(idx, a.ring().add(out[idx], a[x]));
  }
  return out;
}

GroupRingElement d_prime(const GroupRingElement& g) {
  if (g.m() != 0) throw ArityMismatch("d_prime: needs an element of Λ_0");
  const auto g0 = substitute(g, 1, {{1, 0}});
  const auto g1 = substitute(g, 1, {{0, 1}});
  const auto g01 = substitute(g, 1, {{1, 1}});
  return g0 * g1 * invert(g01);
}

GroupRingElement d_prime_prime(const GroupRingElement& f) {
  if (f.m() != 1) throw ArityMismatch("d_prime_prime: needs an element of Λ_1");
  if (!is_symmetric(f)) throw NotSymmetric("d_prime_prime: argument is not w-symmetric");
  const auto num1 = substitute(f, 2, {{0, 1, 0}, {1, 0, 1}});
  const auto num2 = substitute(f, 2, {{1, 0, 0}, {0, 0, 1}});
  const auto den1 = substitute(f, 2, {{1, 0, 0}, {0, 1, 1}});
  const auto den2 = substitute(f, 2, {{0, 1, 0}, {0, 0, 1}});
  return num1 * num2 * invert(den1 * den2);
}

DifferentialElement differential(const GroupRingElement& a) {
  std::vector<GroupRingElement> comps(a.num_vars(), GroupRingElement(a.ring(), a.n(), a.m()));
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x] == 0) continue;
    const auto e = a.exponents_of(x);
    for (std::size_t k = 0; k < e.size(); ++k)
      comps[k].set_flat(x, a.ring().mul(a[x], a.ring().from_int(e[k])));
  }
  return DifferentialElement(std::move(comps));
}

DifferentialElement dlog(const GroupRingElement& u) { return differential(u) * invert(u); }

FpMatrix multiplication_matrix(const GroupRingElement& a) {
  const auto& ring = a.ring();
  if (ring.is_extension() || !ring.is_field())
    throw ModulusMismatch("multiplication_matrix: needs prime-field coefficients");
  const std::size_t size = a.size();
  FpMatrix m(ring.characteristic(), size, size);
  const std::uint32_t vars = a.num_vars();
  for (std::size_t j = 0; j < size; ++j)
    for (std::size_t x = 0; x < size; ++x) {
      if (a[x] == 0) continue;
      const std::size_t row = add_index(x, j, a.n(), vars);
      m.set(row, j, std::int64_t{m(row, j)} + a[x]);
    }
  return m;
}

FpVector to_vector(const GroupRingElement& a) {
  if (a.ring().is_extension()) throw ModulusMismatch("to_vector: needs prime-field coefficients");
  return FpVector(a.coeffs().begin(), a.coeffs().end());
}

GroupRingElement from_vector(std::uint32_t n, std::uint32_t m, const FpVector& v) {
  return GroupRingElement::from_coeffs(CoefficientRing::integers_mod(n), n, m, v);
}

}  // namespace fermat
