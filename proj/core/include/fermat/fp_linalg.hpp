#pragma once

// Exact dense linear algebra over the prime field Z/p.
//
// Conventions: vectors are columns and matrices act on the left, so column j
// of a map's matrix holds the image of basis vector j. Canonical bases are
// read off the reduced row echelon form with pivots in increasing column
// order, which makes every result deterministic.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "fermat/coefficient_ring.hpp"

namespace fermat {

using FpVector = std::vector<Coeff>;

class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);

  /// Rows given as signed integers; entries are reduced into [0, p).
  static FpMatrix from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows);
  static FpMatrix identity(std::uint32_t p, std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static FpMatrix from_columns(std::uint32_t p, std::size_t rows, std::span<const FpVector> columns);
  /// Block matrix; every block row must agree on height and every block
  /// column on width.
  static FpMatrix block(std::uint32_t p, const std::vector<std::vector<FpMatrix>>& blocks);

  std::uint32_t p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Coeff operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v);

  FpVector row(std::size_t r) const;
  FpVector column(std::size_t c) const;
  std::span<const Coeff> entries() const { return data_; }

  FpMatrix transpose() const;
  bool is_zero() const;

  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  FpMatrix operator-() const;
  FpMatrix operator*(const FpMatrix& o) const;
  FpVector operator*(const FpVector& v) const;
  FpMatrix scaled(std::int64_t s) const;
  FpMatrix power(std::uint64_t e) const;

  bool operator==(const FpMatrix& o) const = default;

 private:
  std::uint32_t p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Coeff> data_;
};

struct EchelonForm {
  FpMatrix rref;
  std::vector<std::size_t> pivots;  // pivot column of row i
};

EchelonForm row_reduce(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);

/// Canonical basis of {v : Mv = 0}: one vector per free column, in
/// increasing order of that column.
std::vector<FpVector> kernel_basis(const FpMatrix& m);

/// Canonical basis of the column span (nonzero rows of rref(M^T)).
std::vector<FpVector> image_basis(const FpMatrix& m);

/// Canonical basis of the span of the given vectors.
std::vector<FpVector> span_basis(std::uint32_t p, std::size_t dim, std::span<const FpVector> vectors);

/// Some x with Mx = b, if one exists.
std::optional<FpVector> solve(const FpMatrix& m, const FpVector& b);

bool in_span(std::uint32_t p, std::size_t dim, std::span<const FpVector> basis, const FpVector& v);

/// True when `vectors` stay linearly independent after passing to the
/// quotient by span(`modulo`).
bool independent_modulo(std::uint32_t p, std::size_t dim, std::span<const FpVector> vectors,
                        std::span<const FpVector> modulo);

/// ker/im data for a subquotient span(K)/span(I).
struct SubquotientReport {
  std::uint32_t modulus = 0;
  std::size_t ambient_dim = 0;
  std::vector<FpVector> kernel_basis;
  std::vector<FpVector> image_basis;
  /// Representatives of a basis of span(K)/span(I).
  std::vector<FpVector> coset_basis;

  std::size_t kernel_dim() const { return kernel_basis.size(); }
  std::size_t image_dim() const { return image_basis.size(); }
  std::size_t dim() const { return coset_basis.size(); }
};

/// Throws ContainmentViolation if span(image_gens) is not inside span(kernel_gens).
SubquotientReport subquotient(std::uint32_t p, std::size_t ambient_dim, std::span<const FpVector> kernel_gens,
                              std::span<const FpVector> image_gens);

/// Second exterior power of a square matrix in the basis e_i ^ e_j (i < j),
/// pairs ordered lexicographically. Throws NotSquare.
FpMatrix exterior_square(const FpMatrix& m);

}  // namespace fermat
