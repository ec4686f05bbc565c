#include "fermat/fp_linalg.hpp"

#include <string>

#include "fermat/error.hpp"

namespace fermat {

namespace {

Coeff reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t m = v % static_cast<std::int64_t>(p);
  return static_cast<Coeff>(m < 0 ? m + p : m);
}

Coeff inv_mod(Coeff a, std::uint32_t p) {
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Coeff>(result);
}

void check_same_p(const FpMatrix& a, const FpMatrix& b) {
  if (a.p() != b.p()) throw ModulusMismatch("FpMatrix: mixed moduli");
}

}  // namespace

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (!is_prime(p)) throw Error("FpMatrix: modulus " + std::to_string(p) + " is not prime");
}

FpMatrix FpMatrix::from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FpMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("FpMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

FpMatrix FpMatrix::from_columns(std::uint32_t p, std::size_t rows, std::span<const FpVector> columns) {
  FpMatrix m(p, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error("FpMatrix::from_columns: wrong vector length");
    for (std::size_t r = 0; r < rows; ++r) m.data_[r * m.cols_ + c] = columns[c][r] % p;
  }
  return m;
}

FpMatrix FpMatrix::block(std::uint32_t p, const std::vector<std::vector<FpMatrix>>& blocks) {
  if (blocks.empty()) return FpMatrix(p, 0, 0);
  const std::size_t bcols = blocks.front().size();
  std::vector<std::size_t> heights, widths(bcols, 0);
  for (const auto& brow : blocks) {
    if (brow.size() != bcols) throw Error("FpMatrix::block: ragged block rows");
    heights.push_back(brow.front().rows());
  }
  for (std::size_t j = 0; j < bcols; ++j) widths[j] = blocks.front()[j].cols();
  std::size_t total_rows = 0, total_cols = 0;
  for (auto h : heights) total_rows += h;
  for (auto w : widths) total_cols += w;

  FpMatrix m(p, total_rows, total_cols);
  std::size_t r0 = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::size_t c0 = 0;
    for (std::size_t j = 0; j < bcols; ++j) {
      const FpMatrix& b = blocks[i][j];
      if (b.rows() != heights[i] || b.cols() != widths[j]) throw Error("FpMatrix::block: block size mismatch");
      if (b.p() != p) throw ModulusMismatch("FpMatrix::block: mixed moduli");
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m.data_[(r0 + r) * total_cols + c0 + c] = b(r, c);
      c0 += widths[j];
    }
    r0 += heights[i];
  }
  return m;
}

void FpMatrix::set(std::size_t r, std::size_t c, std::int64_t v) { data_[r * cols_ + c] = reduce(v, p_); }

FpVector FpMatrix::row(std::size_t r) const {
  return FpVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

FpVector FpMatrix::column(std::size_t c) const {
  FpVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = data_[r * cols_ + c];
  return v;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
  return t;
}

bool FpMatrix::is_zero() const {
  for (auto v : data_)
    if (v) return false;
  return true;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  check_same_p(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("FpMatrix: shape mismatch in +");
  FpMatrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = (data_[i] + o.data_[i]) % p_;
  return m;
}

FpMatrix FpMatrix::operator-() const {
  FpMatrix m = *this;
  for (auto& v : m.data_) v = v == 0 ? 0 : p_ - v;
  return m;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const { return *this + (-o); }

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  check_same_p(*this, o);
  if (cols_ != o.rows_) throw Error("FpMatrix: shape mismatch in *");
  FpMatrix m(p_, rows_, o.cols_);
  std::vector<std::uint64_t> acc(o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = data_[r * cols_ + k];
      if (!a) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) acc[c] += a * o.data_[k * o.cols_ + c];
      if (k % 1024 == 1023)
        for (auto& x : acc) x %= p_;
    }
    for (std::size_t c = 0; c < o.cols_; ++c) m.data_[r * o.cols_ + c] = static_cast<Coeff>(acc[c] % p_);
  }
  return m;
}

FpVector FpMatrix::operator*(const FpVector& v) const {
  if (v.size() != cols_) throw Error("FpMatrix: vector length mismatch");
  FpVector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += std::uint64_t{data_[r * cols_ + c]} * v[c];
    out[r] = static_cast<Coeff>(acc % p_);
  }
  return out;
}

FpMatrix FpMatrix::scaled(std::int64_t s) const {
  FpMatrix m = *this;
  const std::uint64_t k = reduce(s, p_);
  for (auto& v : m.data_) v = static_cast<Coeff>(v * k % p_);
  return m;
}

FpMatrix FpMatrix::power(std::uint64_t e) const {
  if (!square()) throw NotSquare("FpMatrix::power: matrix is not square");
  FpMatrix result = identity(p_, rows_);
  FpMatrix base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

EchelonForm row_reduce(const FpMatrix& m) {
  const std::uint32_t p = m.p();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Coeff> a(m.entries().begin(), m.entries().end());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[piv * cols + k], a[r * cols + k]);
    const std::uint64_t inv = inv_mod(a[r * cols + c], p);
    for (std::size_t k = c; k < cols; ++k) a[r * cols + k] = static_cast<Coeff>(a[r * cols + k] * inv % p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const std::uint64_t f = a[i * cols + c];
      if (!f) continue;
      const std::uint64_t nf = p - f;
      for (std::size_t k = c; k < cols; ++k)
        a[i * cols + k] = static_cast<Coeff>((a[i * cols + k] + nf * a[r * cols + k]) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  EchelonForm out{FpMatrix(p, rows, cols), std::move(pivots)};
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) out.rref.set(i, k, a[i * cols + k]);
  return out;
}

std::size_t rank(const FpMatrix& m) { return row_reduce(m).pivots.size(); }

std::vector<FpVector> kernel_basis(const FpMatrix& m) {
  const auto ef = row_reduce(m);
  const std::uint32_t p = m.p();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ef.pivots) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    FpVector v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < ef.pivots.size(); ++i) {
      const Coeff x = ef.rref(i, f);
      v[ef.pivots[i]] = x == 0 ? 0 : p - x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<FpVector> image_basis(const FpMatrix& m) {
  const auto ef = row_reduce(m.transpose());
  std::vector<FpVector> basis;
  for (std::size_t i = 0; i < ef.pivots.size(); ++i) basis.push_back(ef.rref.row(i));
  return basis;
}

std::vector<FpVector> span_basis(std::uint32_t p, std::size_t dim, std::span<const FpVector> vectors) {
  if (vectors.empty()) return {};
  return image_basis(FpMatrix::from_columns(p, dim, vectors));
}

std::optional<FpVector> solve(const FpMatrix& m, const FpVector& b) {
  if (b.size() != m.rows()) throw Error("solve: right-hand side has wrong length");
  FpMatrix aug = FpMatrix::block(m.p(), {{m, FpMatrix::from_columns(m.p(), m.rows(), std::span(&b, 1))}});
  const auto ef = row_reduce(aug);
  if (!ef.pivots.empty() && ef.pivots.back() == m.cols()) return std::nullopt;
  FpVector x(m.cols(), 0);
  for (std::size_t i = 0; i < ef.pivots.size(); ++i) x[ef.pivots[i]] = ef.rref(i, m.cols());
  return x;
}

bool in_span(std::uint32_t p, std::size_t dim, std::span<const FpVector> basis, const FpVector& v) {
  if (basis.empty()) {
    for (auto x : v)
      if (x % p) return false;
    return true;
  }
  return solve(FpMatrix::from_columns(p, dim, basis), v).has_value();
}

bool independent_modulo(std::uint32_t p, std::size_t dim, std::span<const FpVector> vectors,
                        std::span<const FpVector> modulo) {
  std::vector<FpVector> all(modulo.begin(), modulo.end());
  const std::size_t base = all.empty() ? 0 : rank(FpMatrix::from_columns(p, dim, all));
  all.insert(all.end(), vectors.begin(), vectors.end());
  if (all.empty()) return true;
  return rank(FpMatrix::from_columns(p, dim, all)) == base + vectors.size();
}

SubquotientReport subquotient(std::uint32_t p, std::size_t ambient_dim, std::span<const FpVector> kernel_gens,
                              std::span<const FpVector> image_gens) {
  SubquotientReport report;
  report.modulus = p;
  report.ambient_dim = ambient_dim;
  report.kernel_basis = span_basis(p, ambient_dim, kernel_gens);
  report.image_basis = span_basis(p, ambient_dim, image_gens);
  for (const auto& v : report.image_basis)
    if (!in_span(p, ambient_dim, report.kernel_basis, v))
      throw ContainmentViolation("subquotient: image generator outside the kernel span");

  // Greedily extend the image basis by kernel basis vectors.
  std::vector<FpVector> current = report.image_basis;
  std::size_t current_rank = current.size();
  for (const auto& v : report.kernel_basis) {
    current.push_back(v);
    const std::size_t r = rank(FpMatrix::from_columns(p, ambient_dim, current));
    if (r > current_rank) {
      current_rank = r;
      report.coset_basis.push_back(v);
    } else {
      current.pop_back();
    }
  }
  return report;
}

FpMatrix exterior_square(const FpMatrix& m) {
  if (!m.square()) throw NotSquare("exterior_square: matrix is not square");
  const std::size_t n = m.rows();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  FpMatrix out(m.p(), pairs.size(), pairs.size());
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    const auto [i, j] = pairs[a];
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      const auto [k, l] = pairs[b];
      const std::int64_t v = std::int64_t{m(i, k)} * m(j, l) - std::int64_t{m(i, l)} * m(j, k);
      out.set(a, b, v);
    }
  }
  return out;
}

}  // namespace fermat
