#pragma once

// Integer matrices and their Smith normal form. Used where the coefficient
// ring Z/n is not a field: ranks and complements over Z/n follow from the
// invariant factors of an integer lift.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fermat {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// left * A * right = diag(invariants, 0, ...) with left/right unimodular.
/// `left_inverse` is left^{-1}, tracked alongside so complements can be read
/// off without a second inversion.
struct SmithForm {
  std::vector<std::int64_t> invariants;  // positive, each dividing the next
  IntMatrix left;
  IntMatrix left_inverse;
  IntMatrix right;
  IntMatrix diagonal;
};

/// Throws fermat::Error on 64-bit overflow.
SmithForm smith_normal_form(const IntMatrix& a);

/// Size data for x -> Ax over Z/n, derived from the invariant factors.
struct ZnMapShape {
  std::size_t domain_rank = 0;
  /// Number of invariant factors that are units mod n.
  std::size_t unit_invariants = 0;
  /// True iff image and kernel are both free Z/n-modules.
  bool free = false;
  /// Valid when free: rank of image / rank of kernel.
  std::size_t image_rank = 0;
  std::size_t kernel_rank = 0;
};

ZnMapShape zn_map_shape(const IntMatrix& a, std::uint32_t n);

}  // namespace fermat
