#include "fermat/smith.hpp"

#include <numeric>
#include <utility>

#include "fermat/error.hpp"

namespace fermat {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("smith_normal_form: integer overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error("smith_normal_form: integer overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("smith_normal_form: integer overflow");
  return r;
}

// Work state: D = L * A * R, with Linv = L^{-1}.
struct State {
  IntMatrix d, l, linv, r;

  // row_i -= q * row_j  (and the matching inverse column op on Linv)
  void row_axpy(std::size_t i, std::size_t j, std::int64_t q) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(i, c) = checked_sub(d(i, c), checked_mul(q, d(j, c)));
    for (std::size_t c = 0; c < l.cols(); ++c) l(i, c) = checked_sub(l(i, c), checked_mul(q, l(j, c)));
    // L' = E L with E = I - q e_ij, so L'^{-1} = Linv E^{-1}: col_j += q * col_i
    for (std::size_t r0 = 0; r0 < linv.rows(); ++r0) linv(r0, j) = checked_add(linv(r0, j), checked_mul(q, linv(r0, i)));
  }
  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d(i, c), d(j, c));
    for (std::size_t c = 0; c < l.cols(); ++c) std::swap(l(i, c), l(j, c));
    for (std::size_t r0 = 0; r0 < linv.rows(); ++r0) std::swap(linv(r0, i), linv(r0, j));
  }
  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(i, c) = -d(i, c);
    for (std::size_t c = 0; c < l.cols(); ++c) l(i, c) = -l(i, c);
    for (std::size_t r0 = 0; r0 < linv.rows(); ++r0) linv(r0, i) = -linv(r0, i);
  }
  // col_i -= q * col_j
  void col_axpy(std::size_t i, std::size_t j, std::int64_t q) {
    for (std::size_t r0 = 0; r0 < d.rows(); ++r0) d(r0, i) = checked_sub(d(r0, i), checked_mul(q, d(r0, j)));
    for (std::size_t r0 = 0; r0 < r.rows(); ++r0) r(r0, i) = checked_sub(r(r0, i), checked_mul(q, r(r0, j)));
  }
  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r0 = 0; r0 < d.rows(); ++r0) std::swap(d(r0, i), d(r0, j));
    for (std::size_t r0 = 0; r0 < r.rows(); ++r0) std::swap(r(r0, i), r(r0, j));
  }
};

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw Error("IntMatrix: shape mismatch in *");
  IntMatrix m(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::int64_t a = (*this)(r, k);
      if (!a) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) m(r, c) = checked_add(m(r, c), checked_mul(a, o(k, c)));
    }
  return m;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  State s{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pick the nonzero entry of least absolute value in the trailing block
    std::size_t pr = rows, pc = cols;
    std::int64_t best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        const std::int64_t v = s.d(i, j) < 0 ? -s.d(i, j) : s.d(i, j);
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    if (best == 0) break;
    s.row_swap(t, pr);
    s.col_swap(t, pc);

    bool done = false;
    while (!done) {
      done = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s.d(i, t) == 0) continue;
        s.row_axpy(i, t, floor_div(s.d(i, t), s.d(t, t)));
        if (s.d(i, t) != 0) {
          s.row_swap(t, i);
          done = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s.d(t, j) == 0) continue;
        s.col_axpy(j, t, floor_div(s.d(t, j), s.d(t, t)));
        if (s.d(t, j) != 0) {
          s.col_swap(t, j);
          done = false;
        }
      }
      if (!done) continue;
      // divisibility: pivot must divide the whole trailing block
      for (std::size_t i = t + 1; i < rows && done; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s.d(i, j) % s.d(t, t) != 0) {
            s.row_axpy(t, i, -1);  // row_t += row_i
            done = false;
            break;
          }
    }
    if (s.d(t, t) < 0) s.row_negate(t);
    ++t;
  }

  SmithForm out;
  for (std::size_t i = 0; i < t; ++i) out.invariants.push_back(s.d(i, i));
  out.left = std::move(s.l);
  out.left_inverse = std::move(s.linv);
  out.right = std::move(s.r);
  out.diagonal = std::move(s.d);
  return out;
}

ZnMapShape zn_map_shape(const IntMatrix& a, std::uint32_t n) {
  const auto snf = smith_normal_form(a);
  ZnMapShape shape;
  shape.domain_rank = a.cols();
  bool all_units_or_zero = true;
  for (auto d : snf.invariants) {
    const auto g = std::gcd(d, static_cast<std::int64_t>(n));
    if (g == 1)
      ++shape.unit_invariants;
    else if (g != static_cast<std::int64_t>(n))
      all_units_or_zero = false;
  }
  shape.free = all_units_or_zero;
  if (shape.free) {
    shape.image_rank = shape.unit_invariants;
    shape.kernel_rank = a.cols() - shape.unit_invariants;
  }
  return shape;
}

}  // namespace fermat
