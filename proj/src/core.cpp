#include "msteinitz/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace msteinitz {

VectorMatrix::VectorMatrix(std::size_t d, std::size_t k, std::size_t n)
    : d_(d), k_(k), n_(n), data_(d * k * n, 0.0) {}

VectorMatrix VectorMatrix::from_rows(std::size_t d,
                                     const std::vector<std::vector<Vector>>& rows) {
  const std::size_t k = rows.size();
  const std::size_t n = k == 0 ? 0 : rows.front().size();
  VectorMatrix out(d, k, n);
  for (std::size_t j = 0; j < k; ++j) {
    if (rows[j].size() != n) {
      throw ValidationError("row " + std::to_string(j) + " has " +
                            std::to_string(rows[j].size()) + " entries, expected " +
                            std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) out.set(j, i, rows[j][i]);
  }
  return out;
}

void VectorMatrix::set(std::size_t row, std::size_t col, std::span<const double> v) {
  if (v.size() != d_) {
    throw ValidationError("entry (" + std::to_string(row) + "," + std::to_string(col) +
                          ") has length " + std::to_string(v.size()) + ", expected " +
                          std::to_string(d_));
  }
  for (double x : v) {
    if (!std::isfinite(x)) {
      throw ValidationError("entry (" + std::to_string(row) + "," +
                            std::to_string(col) + ") is not finite");
    }
  }
  std::copy(v.begin(), v.end(), at(row, col).begin());
}

RowPermutations RowPermutations::identity(std::size_t k, std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return uniform(k, std::move(order));
}

RowPermutations RowPermutations::uniform(std::size_t k, std::vector<std::size_t> order) {
  return RowPermutations(std::vector<std::vector<std::size_t>>(k, order));
}

bool RowPermutations::is_valid(std::size_t k, std::size_t n) const {
  if (perms_.size() != k) return false;
  std::vector<char> seen(n);
  for (const auto& row : perms_) {
    if (row.size() != n) return false;
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t idx : row) {
      if (idx >= n || seen[idx]) return false;
      seen[idx] = 1;
    }
  }
  return true;
}

RowPermutations RowPermutations::inverse() const {
  std::vector<std::vector<std::size_t>> inv(perms_.size());
  for (std::size_t j = 0; j < perms_.size(); ++j) {
    inv[j].resize(perms_[j].size());
    for (std::size_t p = 0; p < perms_[j].size(); ++p) inv[j][perms_[j][p]] = p;
  }
  return RowPermutations(std::move(inv));
}

RowPermutations compose(const RowPermutations& first, const RowPermutations& second) {
  if (first.rows() != second.rows() || first.cols() != second.cols()) {
    throw ValidationError("cannot compose permutations of different shapes");
  }
  std::vector<std::vector<std::size_t>> out(first.rows());
  for (std::size_t j = 0; j < first.rows(); ++j) {
    out[j].resize(first.cols());
    for (std::size_t p = 0; p < first.cols(); ++p) {
      out[j][p] = first.row(j)[second.row(j)[p]];
    }
  }
  return RowPermutations(std::move(out));
}

Vector prefix_column_sum(const VectorMatrix& a, std::size_t m) {
  if (m > a.cols()) {
    throw ValidationError("prefix length " + std::to_string(m) + " exceeds n = " +
                          std::to_string(a.cols()));
  }
  const std::size_t d = a.dim();
  Vector total(d, 0.0);
  Vector row_sum(d);
  for (std::size_t j = 0; j < a.rows(); ++j) {
    std::fill(row_sum.begin(), row_sum.end(), 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      auto e = a.at(j, i);
      for (std::size_t c = 0; c < d; ++c) row_sum[c] += e[c];
    }
    for (std::size_t c = 0; c < d; ++c) total[c] += row_sum[c];
  }
  return total;
}

std::vector<Vector> prefix_column_sums(const VectorMatrix& a) {
  const std::size_t d = a.dim();
  const std::size_t n = a.cols();
  // running[j] holds row j's sum of its first m entries.
  std::vector<Vector> running(a.rows(), Vector(d, 0.0));
  std::vector<Vector> out;
  out.reserve(n + 1);
  out.emplace_back(d, 0.0);
  for (std::size_t m = 1; m <= n; ++m) {
    Vector total(d, 0.0);
    for (std::size_t j = 0; j < a.rows(); ++j) {
      auto e = a.at(j, m - 1);
      for (std::size_t c = 0; c < d; ++c) {
        running[j][c] += e[c];
        total[c] += running[j][c];
      }
    }
    out.push_back(std::move(total));
  }
  return out;
}

VectorMatrix apply_permutations(const VectorMatrix& a, const RowPermutations& p) {
  if (p.rows() != a.rows() || (a.rows() > 0 && p.cols() != a.cols())) {
    throw ValidationError("permutation shape does not match the matrix");
  }
  if (!p.is_valid(a.rows(), a.cols())) {
    throw ValidationError("rows of the permutation are not bijections");
  }
  VectorMatrix out(a.dim(), a.rows(), a.cols());
  for (std::size_t j = 0; j < a.rows(); ++j) {
    for (std::size_t pos = 0; pos < a.cols(); ++pos) {
      out.set(j, pos, a.at(j, p.row(j)[pos]));
    }
  }
  return out;
}

bool verify_row_permuted(const VectorMatrix& a, const RowPermutations& p) {
  return p.is_valid(a.rows(), a.cols());
}

Vector dependence_vector(const std::vector<Vector>& vectors, std::size_t d) {
  const std::size_t m = vectors.size();
  if (m == 0) throw ValidationError("dependence_vector needs at least one vector");
  for (const auto& v : vectors) {
    if (v.size() != d) throw ValidationError("dependence_vector: dimension mismatch");
  }

  // d x m coefficient matrix, column c is vectors[c].
  std::vector<Vector> mat(d, Vector(m));
  double scale = 0.0;
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      mat[r][c] = vectors[c][r];
      scale = std::max(scale, std::abs(mat[r][c]));
    }
  }
  const double threshold = 1e-10 * scale;

  std::vector<std::size_t> pivot_col;
  std::size_t free_col = m;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m; ++c) {
    if (row == d) {
      free_col = c;
      break;
    }
    std::size_t best = row;
    for (std::size_t r = row + 1; r < d; ++r) {
      if (std::abs(mat[r][c]) > std::abs(mat[best][c])) best = r;
    }
    if (std::abs(mat[best][c]) <= threshold) {
      free_col = c;
      break;
    }
    std::swap(mat[row], mat[best]);
    const double piv = mat[row][c];
    for (std::size_t cc = c; cc < m; ++cc) mat[row][cc] /= piv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == row || mat[r][c] == 0.0) continue;
      const double f = mat[r][c];
      for (std::size_t cc = c; cc < m; ++cc) mat[r][cc] -= f * mat[row][cc];
    }
    pivot_col.push_back(c);
    ++row;
  }
  if (free_col == m) {
    throw ValidationError("vectors are linearly independent");
  }

  Vector alpha(m, 0.0);
  alpha[free_col] = 1.0;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) {
    alpha[pivot_col[r]] = -mat[r][free_col];
  }
  double big = 0.0;
  for (double x : alpha) big = std::max(big, std::abs(x));
  for (double& x : alpha) x /= big;
  return alpha;
}

}  // namespace msteinitz
