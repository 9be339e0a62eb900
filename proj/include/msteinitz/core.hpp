// Value types shared by every module: vectors, k x n matrices of vectors,
// row permutations, prefix column sums and the linear-dependence solver.
//
// Indices are zero-based throughout. Column i of row j is entry (j, i).

#ifndef MSTEINITZ_CORE_HPP
#define MSTEINITZ_CORE_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace msteinitz {

using Vector = std::vector<double>;

/// Malformed input: wrong shape, non-finite value, norm or zero-sum violation.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive search was asked to enumerate more cases than allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VectorMatrix {
 public:
  VectorMatrix() = default;

  /// k x n matrix of zero vectors in R^d.
  VectorMatrix(std::size_t d, std::size_t k, std::size_t n);

  /// rows[j][i] is the entry in row j, column i. Every entry must have
  /// length d and finite coordinates; rows must be of equal length.
  static VectorMatrix from_rows(std::size_t d,
                                const std::vector<std::vector<Vector>>& rows);

  std::size_t dim() const { return d_; }
  std::size_t rows() const { return k_; }
  std::size_t cols() const { return n_; }

  std::span<const double> at(std::size_t row, std::size_t col) const {
    return {data_.data() + offset(row, col), d_};
  }
  std::span<double> at(std::size_t row, std::size_t col) {
    return {data_.data() + offset(row, col), d_};
  }
  void set(std::size_t row, std::size_t col, std::span<const double> v);

  Vector entry(std::size_t row, std::size_t col) const {
    auto s = at(row, col);
    return {s.begin(), s.end()};
  }

  /// Flat storage, row-major over (row, column, coordinate).
  const std::vector<double>& data() const { return data_; }

  bool operator==(const VectorMatrix&) const = default;

 private:
  std::size_t offset(std::size_t row, std::size_t col) const {
    return (row * n_ + col) * d_;
  }

  std::size_t d_ = 0;
  std::size_t k_ = 0;
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// perms[j][p] is the original column of row j that is placed at position p.
class RowPermutations {
 public:
  RowPermutations() = default;
  explicit RowPermutations(std::vector<std::vector<std::size_t>> perms)
      : perms_(std::move(perms)) {}

  static RowPermutations identity(std::size_t k, std::size_t n);

  /// Every row receives the same column order.
  static RowPermutations uniform(std::size_t k, std::vector<std::size_t> order);

  std::size_t rows() const { return perms_.size(); }
  std::size_t cols() const { return perms_.empty() ? 0 : perms_.front().size(); }
  const std::vector<std::size_t>& row(std::size_t j) const { return perms_[j]; }
  const std::vector<std::vector<std::size_t>>& perms() const { return perms_; }

  /// True iff every row is a bijection of {0, ..., n-1}.
  bool is_valid(std::size_t k, std::size_t n) const;

  /// Row-wise inverse. Requires a valid permutation.
  RowPermutations inverse() const;

  bool operator==(const RowPermutations&) const = default;

 private:
  std::vector<std::vector<std::size_t>> perms_;
};

/// Composition: applying `first` and then `second` equals applying the result.
RowPermutations compose(const RowPermutations& first,
                        const RowPermutations& second);

/// sigma_m(A): the sum of all entries in the first m columns.
///
/// Each row's first m entries are accumulated left to right, and the row
/// totals are then added top to bottom. prefix_column_sums uses the same
/// order, so both agree bit for bit.
Vector prefix_column_sum(const VectorMatrix& a, std::size_t m);

/// sigma_0, ..., sigma_n.
std::vector<Vector> prefix_column_sums(const VectorMatrix& a);

VectorMatrix apply_permutations(const VectorMatrix& a, const RowPermutations& p);

bool verify_row_permuted(const VectorMatrix& a, const RowPermutations& p);

/// Nonzero alpha with sum_i alpha_i v_i = 0, scaled so max |alpha_i| = 1.
///
/// Gaussian elimination with partial pivoting on the d x m coefficient
/// matrix; the first non-pivot column fixes the free variable. Pivots below
/// 1e-10 times the largest entry count as zero. Throws ValidationError when
/// the vectors are independent (only possible for m <= d).
Vector dependence_vector(const std::vector<Vector>& vectors, std::size_t d);

}  // namespace msteinitz

#endif  // MSTEINITZ_CORE_HPP
