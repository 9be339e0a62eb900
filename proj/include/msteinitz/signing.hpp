// Prefix-bounded sign assignment for vector sequences and its lift to
// matrices through column-major serialization.

#ifndef MSTEINITZ_SIGNING_HPP
#define MSTEINITZ_SIGNING_HPP

#include <cstdint>
#include <vector>

#include "msteinitz/core.hpp"
#include "msteinitz/norms.hpp"

namespace msteinitz {

class SignMatrix {
 public:
  SignMatrix() = default;
  /// All +1.
  SignMatrix(std::size_t k, std::size_t n) : k_(k), n_(n), signs_(k * n, 1) {}

  /// Values must be exactly -1 or +1.
  static SignMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return k_; }
  std::size_t cols() const { return n_; }
  int at(std::size_t row, std::size_t col) const { return signs_[row * n_ + col]; }
  void set(std::size_t row, std::size_t col, int sign);

  std::vector<std::vector<int>> to_rows() const;

  bool operator==(const SignMatrix&) const = default;

 private:
  std::size_t k_ = 0;
  std::size_t n_ = 0;
  std::vector<std::int8_t> signs_;
};

/// B^eps: entry (j, i) multiplied by eps(j, i).
VectorMatrix apply_signs(const VectorMatrix& b, const SignMatrix& eps);

/// Signs eps_1..eps_N with ||eps_1 a_1 + ... + eps_m a_m|| <= 2d - 1 for
/// every m, for a_i of norm at most 1 under a symmetric norm.
///
/// Keeps a window of at most d undecided indices with fractional
/// coefficients in (-1, 1), maintaining sum_i lambda_i a_i = 0 over the
/// processed prefix. A new vector enters with coefficient 0; whenever the
/// window holds d + 1 vectors the coefficients move along their linear
/// dependence until one reaches +-1 and is fixed. One window member, the
/// anchor, only ever moves away from zero, so its final sign agrees with
/// every coefficient it held while undecided. At each prefix the sum equals
/// sum over the window of (eps_i - lambda_i) a_i, where the anchor
/// contributes at most 1 and every other member less than 2.
///
/// Zero vectors get +1 without entering the window. Leftover window members
/// are rounded to the sign of their coefficient (0 rounds to +1).
std::vector<int> bg_signs(const std::vector<Vector>& seq, std::size_t d,
                          const NormSpec& spec);

/// Column-major serialization of b (column 0 top to bottom, then column 1,
/// ...), signed with bg_signs and reshaped to k x n. Every sigma_m(B^eps) is
/// one of the serialized prefix sums.
SignMatrix sign_assign_matrix(const VectorMatrix& b, const NormSpec& spec);

/// Benchmark baseline: each sign minimizes the running prefix norm, ties +1.
std::vector<int> greedy_signs(const std::vector<Vector>& seq, const NormSpec& spec);

/// Column-major serialization used by sign_assign_matrix.
std::vector<Vector> serialize_column_major(const VectorMatrix& b);

}  // namespace msteinitz

#endif  // MSTEINITZ_SIGNING_HPP
